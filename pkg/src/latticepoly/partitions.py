"""Integer partitions, multiplicity sequences and the enumerations used by the lattices.

A partition is a tuple of positive integers in weakly decreasing order; the
empty partition is ``()``.  Inputs padded with zeros, such as ``(2, 0)``, are
accepted by :func:`partition` and normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from .errors import InvalidPartition, NotHorizontalStrip, WidthTooSmall

Partition = Tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a weakly decreasing sequence of nonnegative integers."""
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 0:
            raise InvalidPartition(f"parts must be nonnegative integers, got {parts!r}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise InvalidPartition(f"parts must be weakly decreasing, got {parts!r}")
    return tuple(p for p in parts if p > 0)


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"``; ``"0"``, ``""`` and ``"∅"`` denote the empty partition."""
    text = text.strip()
    if text in ("", "0", "∅", "()"):
        return ()
    try:
        parts = [int(t) for t in text.strip("()").split(",") if t.strip()]
    except ValueError as exc:
        raise InvalidPartition(f"cannot parse partition {text!r}") from exc
    return partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """lam_i with 1-based index, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def multiplicity(lam: Partition, i: int) -> int:
    """m_i(lam), the number of parts equal to i (i >= 1)."""
    return sum(1 for p in lam if p == i)


def multiplicities(lam: Partition, width: int) -> Tuple[int, ...]:
    """(m_1(lam), ..., m_width(lam)); entry k is the occupation of column k+1."""
    if lam and lam[0] > width:
        raise WidthTooSmall(f"partition {lam} needs {lam[0]} columns, lattice has {width}")
    out = [0] * width
    for p in lam:
        out[p - 1] += 1
    return tuple(out)


def conjugate_multiplicities(lam: Partition, width: int) -> Tuple[int, ...]:
    """(m_1(lam'), ..., m_width(lam')) with m_i(lam') = lam_i - lam_{i+1}."""
    if len(lam) > width:
        raise WidthTooSmall(f"partition {lam} needs {len(lam)} columns, lattice has {width}")
    return tuple(part(lam, i) - part(lam, i + 1) for i in range(1, width + 1))


def from_multiplicities(m: Sequence[int]) -> Partition:
    """Inverse of :func:`multiplicities`."""
    out = []
    for i in range(len(m), 0, -1):
        out.extend([i] * m[i - 1])
    return tuple(out)


def from_conjugate_multiplicities(m: Sequence[int]) -> Partition:
    """Inverse of :func:`conjugate_multiplicities`: lam_i = m_i + m_{i+1} + ..."""
    out = []
    acc = 0
    for k in reversed(m):
        acc += k
        out.append(acc)
    return partition(reversed(out))


def contains(lam: Partition, mu: Partition) -> bool:
    """mu is contained in lam."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def interlaces(lam: Partition, mu: Partition) -> bool:
    """mu ≺ lam: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... (lam/mu is a horizontal strip)."""
    if len(lam) > len(mu) + 1 or len(mu) > len(lam):
        return False
    for i in range(1, len(lam) + 1):
        if not part(lam, i) >= part(mu, i) >= part(lam, i + 1):
            return False
    return True


def is_vertical_strip(lam: Partition, mu: Partition) -> bool:
    return contains(lam, mu) and all(0 <= l - m <= 1 for l, m in zip(conjugate(lam), conjugate(mu) + (0,) * len(lam)))


def union(lam: Partition, mu: Partition) -> Partition:
    n = max(len(lam), len(mu))
    return tuple(max(part(lam, i), part(mu, i)) for i in range(1, n + 1))


def intersection(lam: Partition, mu: Partition) -> Partition:
    n = min(len(lam), len(mu))
    return partition(min(part(lam, i), part(mu, i)) for i in range(1, n + 1))


def skew_rows(lam: Partition, mu: Partition) -> int:
    """Number of nonempty rows of lam/mu."""
    return sum(1 for i in range(1, len(lam) + 1) if part(lam, i) > part(mu, i))


def skew_columns(lam: Partition, mu: Partition) -> int:
    """Number of nonempty columns of lam/mu."""
    return skew_rows(conjugate(lam), conjugate(mu))


@dataclass(frozen=True)
class SkewColumnStats:
    """Columns i in 1..lam_1 classified by whether skew columns i and i+1 are empty.

    ``pp``: both nonempty; ``pm``: i nonempty, i+1 empty; ``mp``: i empty,
    i+1 nonempty; ``mm``: both empty and m_i(lam) != 0.
    """

    pp: FrozenSet[int]
    pm: FrozenSet[int]
    mp: FrozenSet[int]
    mm: FrozenSet[int]


def skew_column_sizes(lam: Partition, mu: Partition) -> Tuple[int, ...]:
    """Number of boxes of lam/mu in each column 1..lam_1."""
    lc, mc = conjugate(lam), conjugate(mu)
    return tuple(part(lc, i) - part(mc, i) for i in range(1, part(lam, 1) + 1))


def column_stats(lam: Partition, mu: Partition) -> SkewColumnStats:
    if not interlaces(lam, mu):
        raise NotHorizontalStrip(f"{mu} does not interlace {lam}")
    sizes = skew_column_sizes(lam, mu)
    full = [s > 0 for s in sizes] + [False]  # column lam_1 + 1 is empty
    sets = {"pp": set(), "pm": set(), "mp": set(), "mm": set()}
    for i in range(1, len(sizes) + 1):
        here, nxt = full[i - 1], full[i]
        if here and nxt:
            sets["pp"].add(i)
        elif here:
            sets["pm"].add(i)
        elif nxt:
            sets["mp"].add(i)
        elif multiplicity(lam, i):
            sets["mm"].add(i)
    return SkewColumnStats(**{k: frozenset(v) for k, v in sets.items()})


def drop_first(lam: Partition) -> Partition:
    """(lam_2, lam_3, ...)."""
    return lam[1:]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, max_len: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if max_len == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: Optional[int] = None, max_length: Optional[int] = None) -> Tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order, optionally inside a box."""
    return _partitions(n, n if max_part is None else max_part, n if max_length is None else max_length)


def partitions_up_to(n: int, max_part: Optional[int] = None, max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of size 0..n, by size."""
    for k in range(n + 1):
        yield from partitions_of(k, max_part, max_length)


def partitions_in_box(rows: int, cols: int) -> Tuple[Partition, ...]:
    """Partitions with at most ``rows`` parts, each at most ``cols``, ordered by size then reverse lex."""
    return tuple(p for k in range(rows * cols + 1) for p in partitions_of(k, cols, rows))


def sub_partitions(lam: Partition) -> Iterator[Partition]:
    """All mu contained in lam."""

    def rec(i: int, bound: int):
        if i > len(lam):
            yield ()
            return
        for v in range(min(bound, lam[i - 1]), -1, -1):
            if v == 0:
                yield ()
            else:
                for rest in rec(i + 1, v):
                    yield (v,) + rest

    yield from rec(1, lam[0] if lam else 0)


def super_partitions(base: Partition, max_extra: int) -> Iterator[Partition]:
    """All kappa containing ``base`` with |kappa| - |base| <= max_extra."""
    target = size(base) + max_extra

    def rec(i: int, bound: int, used: int):
        need_here = part(base, i)
        if need_here == 0:
            # remaining rows are free, each at most bound, total capped
            for rest in partitions_up_to(target - used, bound):
                yield rest
            return
        for v in range(need_here, min(bound, need_here + target - used - _tail(base, i)) + 1):
            for rest in rec(i + 1, v, used + v):
                yield (v,) + rest

    def _tail(b, i):
        return sum(b[i:])

    yield from rec(1, target, 0)


def interlacing_below(lam: Partition) -> Iterator[Partition]:
    """All mu with mu ≺ lam."""

    def rec(i: int):
        if i > len(lam):
            yield ()
            return
        for v in range(part(lam, i), part(lam, i + 1) - 1, -1):
            for rest in rec(i + 1):
                yield partition((v,) + rest) if v else ()

    seen = set()
    for mu in rec(1):
        mu = partition(mu)
        if mu not in seen:
            seen.add(mu)
            yield mu
