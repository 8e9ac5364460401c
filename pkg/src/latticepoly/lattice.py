"""Row transfer operators and partition functions on a strip of columns.

Columns are numbered 1, 2, ... from the right; column i carries parameters
(u_i, v_i) and its vertical edges carry occupation numbers.  A state is an
occupation tuple whose entry k belongs to column k+1.

Ordinary rows (spin-1 ``SPIN1`` or fused ``FUSED``) enter with label 0 at
the left and leave with a free label on the right.  Reversed rows
(``SPIN1_DUAL``, ``FUSED_DUAL``) take a free label on the right and must
leave 0 at the left.

The named partition functions follow one convention throughout:

* ``skew_j(lam, mu)``: bottom m(lam), top m(mu), rows x_n (bottom) ... x_1 (top).
* ``skew_j_dual(lam, mu)``: bottom m(mu), top m(lam), reversed spin-1 rows.
* ``skew_g(lam, mu)``: bottom m(lam'), top m(mu'), fused rows.
* ``skew_g_dual(lam, mu)``: bottom m(mu'), top m(lam'), reversed fused rows.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from . import partitions as pt
from .algebra import ONE, ZERO, RingElem, Scalar, q_factorial, q_pochhammer, var
from .errors import WidthTooSmall
from .partitions import Partition
from .weights import WeightFamily, evaluate, evaluate_scaled, fused, fused_dual, row_denominator, spin1, spin1_dual

State = Tuple[int, ...]
StateVector = Dict[State, RingElem]


class RowKind(enum.Enum):
    SPIN1 = "spin1"
    SPIN1_DUAL = "spin1-dual"
    FUSED = "fused"
    FUSED_DUAL = "fused-dual"

    @property
    def reversed(self) -> bool:
        return self in (RowKind.SPIN1_DUAL, RowKind.FUSED_DUAL)

    @property
    def thin(self) -> bool:
        return self in (RowKind.SPIN1, RowKind.SPIN1_DUAL)


_FAMILY = {
    RowKind.SPIN1: spin1,
    RowKind.SPIN1_DUAL: spin1_dual,
    RowKind.FUSED: fused,
    RowKind.FUSED_DUAL: fused_dual,
}


@dataclass(frozen=True)
class Row:
    kind: RowKind
    x: RingElem
    perturbation: Tuple = ()

    def family(self, u: RingElem, v: RingElem) -> WeightFamily:
        fam = _FAMILY[self.kind](self.x, u, v)
        for labels, delta in self.perturbation:
            fam = fam.perturbed(labels, delta)
        return fam


ParamSpec = Union[str, Scalar, Sequence[Scalar]]


@dataclass(frozen=True)
class Columns:
    """Column parameters.

    ``u`` and ``v`` are each a variable kind such as ``"u"`` (meaning the
    variables u_1, u_2, ...), a single value shared by every column, or an
    explicit sequence indexed from column 1.  ``overrides`` pins individual columns, e.g. ``{("u", 3): 1/2}``.
    """

    u: ParamSpec = "u"
    v: ParamSpec = "v"
    overrides: Tuple[Tuple[Tuple[str, int], RingElem], ...] = field(default=())

    @classmethod
    def make(cls, u: ParamSpec = "u", v: ParamSpec = "v",
             overrides: Optional[Mapping[Tuple[str, int], Scalar]] = None) -> "Columns":
        def norm(spec):
            if isinstance(spec, str):
                if spec in ("u", "v", "w", "x", "y"):
                    return spec
                return RingElem.of(spec)
            if isinstance(spec, (list, tuple)):
                return tuple(RingElem.of(s) for s in spec)
            return RingElem.of(spec)

        ov = tuple(sorted(((k, RingElem.of(val)) for k, val in (overrides or {}).items()), key=lambda t: t[0]))
        return cls(norm(u), norm(v), ov)

    def param(self, kind: str, i: int) -> RingElem:
        for key, val in self.overrides:
            if key == (kind, i):
                return val
        spec = self.u if kind == "u" else self.v
        if isinstance(spec, str):
            return var(f"{spec}{i}")
        if isinstance(spec, tuple):
            if i > len(spec):
                raise WidthTooSmall(f"column {i} has no {kind} parameter (only {len(spec)} given)")
            return spec[i - 1]
        return spec

    def pair(self, i: int) -> Tuple[RingElem, RingElem]:
        return self.param("u", i), self.param("v", i)

    def swapped(self) -> "Columns":
        """Exchange the roles of u and v in every column."""
        ov = tuple(sorted(((("v" if k == "u" else "u"), i), val) for (k, i), val in self.overrides))
        return Columns(self.v, self.u, ov)


SYMBOLIC = Columns()


def row_transitions(occ: State, row: Row, columns: Columns,
                    max_input: Optional[int] = None) -> Dict[Tuple[State, int], RingElem]:
    """All ways one row can sit on top of ``occ``.

    Returns ``{(new_occ, boundary_label): weight}`` where the boundary label is
    the free one: the right exit of an ordinary row or the right input of a
    reversed row.  ``max_input`` bounds the right input of a reversed fused row.
    """
    out, scale = _row_transitions_scaled(occ, row, columns, max_input)
    if scale == ONE:
        return out
    inv = scale.inverse()
    return {k: w * inv for k, w in out.items()}


def _row_scale(row: Row, columns: Columns, width: int):
    fams = [row.family(*columns.pair(i + 1)) for i in range(width)]
    dens = [row_denominator(f) for f in fams]
    if any(d is None for d in dens):
        return fams, [ONE] * width, ONE
    total = ONE
    for d in dens:
        total = total * d
    return fams, dens, total


def _row_transitions_scaled(occ: State, row: Row, columns: Columns, max_input: Optional[int] = None):
    """Like :func:`row_transitions`, but weights are multiplied by a common
    label-independent factor (returned second) so they stay polynomial."""
    width = len(occ)
    fams, dens, scale = _row_scale(row, columns, width)
    thin = row.kind.thin
    if not row.kind.reversed:
        partial = {((), 0, 0): ONE}
        for i in range(width - 1, -1, -1):
            a = occ[i]
            nxt: Dict = {}
            for (prefix, h, start), w in partial.items():
                total = a + h
                for d in range(0, (min(1, total) if thin else total) + 1):
                    c = total - d
                    wt = evaluate_scaled(fams[i], (a, h, c, d), dens[i])
                    if wt.is_zero():
                        continue
                    key = (prefix + (c,), d, start)
                    nxt[key] = nxt[key] + w * wt if key in nxt else w * wt
            partial = nxt
        return _collect(partial, reverse=True, exit_is_end=True), scale
    top_in = 1 if thin else (max_input if max_input is not None else 0)
    partial = {((), d, d): ONE for d in range(top_in + 1)}
    for i in range(width):
        a = occ[i]
        nxt = {}
        for (prefix, d, start), w in partial.items():
            total = a + d
            for b in range(0, (min(1, total) if thin else total) + 1):
                c = total - b
                wt = evaluate_scaled(fams[i], (a, b, c, d), dens[i])
                if wt.is_zero():
                    continue
                key = (prefix + (c,), b, start)
                nxt[key] = nxt[key] + w * wt if key in nxt else w * wt
        partial = nxt
    # the left boundary of a reversed row is empty
    partial = {k: w for k, w in partial.items() if k[1] == 0}
    return _collect(partial, reverse=False, exit_is_end=False), scale


def _collect(partial, reverse: bool, exit_is_end: bool):
    out: Dict[Tuple[State, int], RingElem] = {}
    for (prefix, end, start), w in partial.items():
        occ = tuple(reversed(prefix)) if reverse else prefix
        key = (occ, end if exit_is_end else start)
        out[key] = out[key] + w if key in out else w
    return {k: w for k, w in out.items() if not w.is_zero()}


def apply_row(state: StateVector, row: Row, columns: Columns, max_particles: Optional[int] = None) -> StateVector:
    """Apply one row (free boundary label) to a state vector.

    ``max_particles`` caps the particle count of the result; it is required
    for reversed fused rows, where any number of particles may enter.
    """
    out, scale = _apply_row_scaled(state, row, columns, max_particles)
    if scale == ONE:
        return out
    inv = scale.inverse()
    return {k: w * inv for k, w in out.items()}


def _apply_row_scaled(state: StateVector, row: Row, columns: Columns, max_particles: Optional[int] = None):
    if row.kind is RowKind.FUSED_DUAL and max_particles is None:
        raise ValueError("reversed fused rows need max_particles")
    out: StateVector = {}
    scale = ONE
    for occ, coeff in state.items():
        cap = None if max_particles is None else max_particles - sum(occ)
        if cap is not None and cap < 0:
            continue
        trans, scale = _row_transitions_scaled(occ, row, columns, max_input=cap)
        for (new, _), w in trans.items():
            if max_particles is not None and sum(new) > max_particles:
                continue
            term = coeff * w
            out[new] = out[new] + term if new in out else term
    return {k: w for k, w in out.items() if not w.is_zero()}, scale


def partition_function(bottom: State, top: State, rows: Sequence[Row], columns: Columns = SYMBOLIC) -> RingElem:
    """Sum over configurations with fixed bottom and top and rows listed bottom to top."""
    if len(bottom) != len(top):
        raise ValueError("bottom and top must have the same width")
    state: StateVector = {tuple(bottom): ONE}
    target = sum(top)
    factors = []
    for row in rows:
        cap = target if row.kind.reversed else None
        state, _ = _apply_row_scaled(state, row, columns, max_particles=cap)
        factors.extend(_row_scale(row, columns, len(bottom))[1])
        if not row.kind.reversed:
            # ordinary rows never add particles
            state = {k: w for k, w in state.items() if sum(k) >= target}
        if not state:
            return ZERO
    return _divide_out(state.get(tuple(top), ZERO), factors)


def _divide_out(value: RingElem, factors: Sequence[RingElem]) -> RingElem:
    """value / prod(factors), cancelling exact factors one at a time.

    Dividing by the expanded product would need one large gcd; most row
    factors divide the numerator exactly, so only the rest reach the gcd.
    """
    if value.is_zero():
        return ZERO
    num = value.num
    rest = ONE
    for f in factors:
        if f.is_constant() and f == ONE:
            continue
        if value.is_polynomial() and f.is_polynomial():
            quo, rem = divmod(num, f.num)
            if rem.is_zero():
                num = quo
                continue
        rest = rest * f
    return RingElem(num, value.den, reduced=True) / rest if rest != ONE else RingElem(num, value.den)


def brute_force_partition_function(bottom: State, top: State, rows: Sequence[Row],
                                   columns: Columns = SYMBOLIC) -> RingElem:
    """Same quantity as :func:`partition_function`, by listing every edge configuration.

    All internal vertical labels are enumerated independently; horizontal
    labels then follow from conservation starting at the left boundary.
    """
    width = len(bottom)
    bound = max(sum(bottom), sum(top))
    n = len(rows)
    scaled = [_row_scale(row, columns, width) for row in rows]
    total = ZERO
    for internal in itertools.product(range(bound + 1), repeat=width * max(n - 1, 0)):
        levels = [tuple(bottom)]
        for r in range(n - 1):
            levels.append(internal[r * width:(r + 1) * width])
        levels.append(tuple(top))
        weight = ONE
        for r, row in enumerate(rows):
            fams, dens, _ = scaled[r]
            weight = weight * _row_weight(levels[r], levels[r + 1], row, fams, dens)
            if weight.is_zero():
                break
        total = total + weight
    return _divide_out(total, [d for _, dens, _ in scaled for d in dens])


def _row_weight(below: State, above: State, row: Row, fams, dens) -> RingElem:
    width = len(below)
    h = 0
    weight = ONE
    for i in range(width - 1, -1, -1):
        a, c = below[i], above[i]
        if row.kind.reversed:
            b = h
            d = b + c - a
            labels = (a, b, c, d)
        else:
            b = h
            d = a + b - c
            labels = (a, b, c, d)
        if d < 0 or (row.kind.thin and d > 1):
            return ZERO
        weight = weight * evaluate_scaled(fams[i], labels, dens[i])
        if weight.is_zero():
            return ZERO
        h = d
    return weight


# named partition functions


def _rows(kind: RowKind, xs: Sequence[Scalar], bottom_first_is_last: bool) -> list:
    xs = [RingElem.of(x) for x in xs]
    order = list(reversed(xs)) if bottom_first_is_last else xs
    return [Row(kind, x) for x in order]


def j_width(lam: Partition, mu: Partition, width: Optional[int]) -> int:
    need = max(pt.part(lam, 1), pt.part(mu, 1))
    if width is None:
        return need + 1
    if width < need:
        raise WidthTooSmall(f"width {width} < {need} needed for {lam}, {mu}")
    return width


def g_width(lam: Partition, mu: Partition, width: Optional[int]) -> int:
    need = max(len(lam), len(mu))
    if width is None:
        return need + 1
    if width < need:
        raise WidthTooSmall(f"width {width} < {need} needed for {lam}, {mu}")
    return width


def skew_j(lam: Partition, mu: Partition, xs: Sequence[Scalar], columns: Columns = SYMBOLIC,
           width: Optional[int] = None, brute_force: bool = False) -> RingElem:
    """J_{lam/mu}(x_1..x_n) from the spin-1 lattice."""
    w = j_width(lam, mu, width)
    fn = brute_force_partition_function if brute_force else partition_function
    return fn(pt.multiplicities(lam, w), pt.multiplicities(mu, w), _rows(RowKind.SPIN1, xs, True), columns)


def skew_j_dual(lam: Partition, mu: Partition, xs: Sequence[Scalar], columns: Columns = SYMBOLIC,
                width: Optional[int] = None, brute_force: bool = False) -> RingElem:
    """<mu| T*(x_1) ... T*(x_n) |lam>: bottom m(mu), top m(lam), reversed spin-1 rows."""
    w = j_width(lam, mu, width)
    fn = brute_force_partition_function if brute_force else partition_function
    return fn(pt.multiplicities(mu, w), pt.multiplicities(lam, w), _rows(RowKind.SPIN1_DUAL, xs, False), columns)


def skew_g(lam: Partition, mu: Partition, xs: Sequence[Scalar], columns: Columns = SYMBOLIC,
           width: Optional[int] = None, brute_force: bool = False, perturbation: Tuple = ()) -> RingElem:
    """G_{lam/mu}(x_1..x_n) from the fused lattice."""
    w = g_width(lam, mu, width)
    rows = [Row(RowKind.FUSED, r.x, perturbation) for r in _rows(RowKind.FUSED, xs, True)]
    fn = brute_force_partition_function if brute_force else partition_function
    return fn(pt.conjugate_multiplicities(lam, w), pt.conjugate_multiplicities(mu, w), rows, columns)


def skew_g_dual(lam: Partition, mu: Partition, xs: Sequence[Scalar], columns: Columns = SYMBOLIC,
                width: Optional[int] = None, brute_force: bool = False, perturbation: Tuple = ()) -> RingElem:
    """<mu'| T*(x_1) ... T*(x_n) |lam'> with reversed fused rows."""
    w = g_width(lam, mu, width)
    rows = [Row(RowKind.FUSED_DUAL, r.x, perturbation) for r in _rows(RowKind.FUSED_DUAL, xs, False)]
    fn = brute_force_partition_function if brute_force else partition_function
    return fn(pt.conjugate_multiplicities(mu, w), pt.conjugate_multiplicities(lam, w), rows, columns)


def normalization(multiplicities: Iterable[int], columns: Columns = SYMBOLIC) -> RingElem:
    """prod_i (u_i v_i; q)_{m_i} / (q; q)_{m_i} over all columns i (1-based)."""
    out = ONE
    for i, m in enumerate(multiplicities, start=1):
        if m:
            u, v = columns.pair(i)
            out = out * q_pochhammer(u * v, m) / q_factorial(m)
    return out


def c_lambda(lam: Partition, columns: Columns = SYMBOLIC) -> RingElem:
    """Normalization attached to m(lam)."""
    return normalization(pt.multiplicities(lam, pt.part(lam, 1)), columns)


def c_conjugate(lam: Partition, columns: Columns = SYMBOLIC) -> RingElem:
    """Normalization attached to m(lam')."""
    return normalization(pt.conjugate_multiplicities(lam, len(lam)), columns)
