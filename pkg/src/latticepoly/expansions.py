"""Change-of-basis coefficients between the fused-lattice families.

Two independent routes:

* :func:`coeff` reads one coefficient off an n x n grid: column i (counted
  from the right) enters from the bottom with m_i(lam') particles, row i
  (counted from the bottom) exits on the right with m_i(mu') particles, and
  the top and left boundaries are empty.
* :func:`expand` computes the source polynomial and peels off target basis
  elements by their leading monomials.

Kinds: A expands q-Whittaker into inhomogeneous F (u = 1); B is the inverse;
C expands the dual family (u = 0, v = 1) into q-Whittaker; D is the general
grid whose specializations give A, B and C.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

from . import partitions as pt
from .algebra import ONE, ZERO, RingElem, Scalar, var
from .errors import GridTooSmall, NotTriangular
from .lattice import Columns, skew_g
from .partitions import Partition
from .weights import evaluate, expansion


class ExpansionKind(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


def default_grid_size(lam: Partition, mu: Partition) -> int:
    return max(len(lam), pt.part(lam, 1), len(mu), pt.part(mu, 1), 1)


def coeff(kind: ExpansionKind, lam: Partition, mu: Partition, n: Optional[int] = None,
          columns: Columns = Columns(), ys: Optional[Sequence[Scalar]] = None) -> RingElem:
    """Grid partition function giving the (lam, mu) expansion coefficient.

    For kind D, row i uses spectral parameter ``ys[i-1]`` (default y_i) and
    column i uses (u_i, v_i) from ``columns``.
    """
    kind = ExpansionKind(kind) if not isinstance(kind, ExpansionKind) else kind
    if n is None:
        n = default_grid_size(lam, mu)
    if n < max(len(lam), len(mu)):
        raise GridTooSmall(f"grid of size {n} cannot hold {lam} and {mu}")
    if pt.part(lam, 1) != pt.part(mu, 1):
        # particle conservation: bottom and right boundaries carry lam_1 and mu_1 particles
        return ZERO
    bottom = pt.conjugate_multiplicities(lam, n)
    right = pt.conjugate_multiplicities(mu, n)
    if kind is ExpansionKind.D:
        ys = [RingElem.of(y) for y in ys] if ys is not None else [var(f"y{i}") for i in range(1, n + 1)]
        fams = [[expansion("D", ys[r], *columns.pair(i + 1)) for i in range(n)] for r in range(n)]
    else:
        fam = expansion(kind.value)
        fams = [[fam] * n for _ in range(n)]
    state: Dict[Tuple[int, ...], RingElem] = {bottom: ONE}
    for r in range(n):
        nxt: Dict[Tuple[int, ...], RingElem] = {}
        for occ, w0 in state.items():
            for new, w in _grid_row(occ, fams[r], right[r]).items():
                term = w0 * w
                nxt[new] = nxt[new] + term if new in nxt else term
        state = {k: w for k, w in nxt.items() if not w.is_zero()}
    return state.get((0,) * n, ZERO)


def _grid_row(occ, fams, exit_label: int) -> Dict[Tuple[int, ...], RingElem]:
    n = len(occ)
    partial = {((), 0): ONE}
    for i in range(n - 1, -1, -1):
        a = occ[i]
        nxt = {}
        for (prefix, b), w in partial.items():
            for d in range(a + b + 1):
                c = a + b - d
                wt = evaluate(fams[i], (a, b, c, d))
                if wt.is_zero():
                    continue
                key = (prefix + (c,), d)
                nxt[key] = nxt[key] + w * wt if key in nxt else w * wt
        partial = nxt
    out = {}
    for (prefix, d), w in partial.items():
        if d == exit_label:
            out[tuple(reversed(prefix))] = w
    return out


# polynomial families used as bases


SOURCES: Dict[str, Columns] = {
    "qwhittaker": Columns.make(0, 0),
    "inhom-f": Columns.make(1, 0),
    "dual-inhom-g": Columns.make(0, 1),
}

KIND_BASES = {
    ExpansionKind.A: ("qwhittaker", "inhom-f"),
    ExpansionKind.B: ("inhom-f", "qwhittaker"),
    ExpansionKind.C: ("dual-inhom-g", "qwhittaker"),
}


def basis_polynomial(name: str, lam: Partition, n: int) -> RingElem:
    xs = [var(f"x{i}") for i in range(1, n + 1)]
    if name == "schur":
        return skew_g(lam, (), xs, Columns.make(0, 0)).substitute({"q": 0})
    if name not in SOURCES:
        raise ValueError(f"unknown basis {name!r}")
    return skew_g(lam, (), xs, SOURCES[name])


@dataclass
class ExpansionTable:
    source: str
    target: str
    lam: Partition
    n: int
    entries: Dict[Partition, RingElem] = field(default_factory=dict)

    def get(self, mu: Partition) -> RingElem:
        return self.entries.get(tuple(mu), ZERO)


def _leading(poly_coeffs: Dict[Tuple[int, ...], RingElem]) -> Tuple[int, ...]:
    """Lowest total degree first, then the lexicographically largest exponent."""
    low = min(sum(e) for e in poly_coeffs)
    return max(e for e in poly_coeffs if sum(e) == low)


def expand(source: str, target: str, lam: Partition, n: int, box: Optional[Tuple[int, int]] = None,
           provider: Callable[[str, Partition, int], RingElem] = basis_polynomial) -> ExpansionTable:
    """Write source_lam(x_1..x_n) in the target basis by triangular elimination.

    Each target element must have leading monomial x^mu with coefficient 1
    under the order "lowest degree, then lexicographically largest".
    ``box = (rows, cols)`` restricts the allowed mu.
    """
    lam = pt.partition(lam)
    xs = [f"x{i}" for i in range(1, n + 1)]
    remainder = provider(source, lam, n)
    table = ExpansionTable(source, target, lam, n)
    cache: Dict[Partition, Dict] = {}
    steps = 0
    while not remainder.is_zero():
        coeffs = remainder.coefficients_in(xs)
        lead = _leading(coeffs)
        mu = tuple(p for p in lead if p)
        if list(lead) != sorted(lead, reverse=True):
            raise NotTriangular(f"leading exponent {lead} is not a partition")
        if box is not None and (len(mu) > box[0] or pt.part(mu, 1) > box[1]):
            raise NotTriangular(f"{mu} lies outside the {box[0]}x{box[1]} box")
        if mu not in cache:
            tpoly = provider(target, mu, n)
            tco = tpoly.coefficients_in(xs)
            if _leading(tco) != lead or tco[lead] != ONE:
                raise NotTriangular(f"target element {mu} does not lead with x^{lead}")
            cache[mu] = tpoly
        c = coeffs[lead]
        table.entries[mu] = table.entries.get(mu, ZERO) + c
        remainder = remainder - c * cache[mu]
        steps += 1
        if steps > 10_000:
            raise NotTriangular("elimination did not terminate")
    table.entries = {k: v for k, v in table.entries.items() if not v.is_zero()}
    return table


def expand_kind(kind: ExpansionKind, lam: Partition, n: int, box: Optional[Tuple[int, int]] = None) -> ExpansionTable:
    src, tgt = KIND_BASES[ExpansionKind(kind)]
    return expand(src, tgt, lam, n, box)


# positivity certificates


class Law(enum.Enum):
    POSITIVE = "positive"
    SIGN_ALTERNATING = "alternating"


@dataclass
class CertReport:
    law: Law
    checked: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


def _in_nq(value: RingElem) -> bool:
    if not value.is_polynomial():
        return False
    for mono, c in value.terms():
        if any(v.kind != "q" for v in mono) or c < 0 or c.denominator != 1:
            return False
    return True


def certify(entries: Dict[Tuple[Partition, Partition], RingElem], law: Law) -> CertReport:
    """Check every entry (keyed by (lam, mu)) lies in N[q], after the sign (-1)^(|lam|-|mu|) for alternation."""
    law = Law(law)
    failures = []
    for (lam, mu), value in sorted(entries.items()):
        v = value
        if law is Law.SIGN_ALTERNATING and (pt.size(lam) - pt.size(mu)) % 2:
            v = -v
        if not v.is_zero() and not _in_nq(v):
            failures.append((lam, mu, value))
    return CertReport(law, len(entries), failures)


def box_matrix(kind: ExpansionKind, n: int, box: Tuple[int, int], route: str = "grid") -> Dict[Tuple[Partition, Partition], RingElem]:
    """All nonzero coefficients for lam, mu in the box, by grid or by elimination."""
    parts = [p for p in pt.partitions_in_box(*box) if len(p) <= n]
    out = {}
    for lam in parts:
        if route == "grid":
            for mu in parts:
                c = coeff(kind, lam, mu, n)
                if not c.is_zero():
                    out[(lam, mu)] = c
        else:
            table = expand_kind(kind, lam, n, box)
            for mu, c in table.entries.items():
                out[(lam, mu)] = c
    return out
