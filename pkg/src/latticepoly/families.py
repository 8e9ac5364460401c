"""Classical families as specializations of the two lattices, with independent oracles.

Each family is computed two ways:

* ``lattice_degeneration``: the spin-1 or fused lattice with the family's
  parameter substitution;
* ``multivar_oracle``: a sum over chains of partitions of products of the
  family's closed-form one-variable branching rule.

Specializations (q symbolic unless noted, alpha/beta the family parameter):

=========================  ========  =========================
family                     lattice   substitution
=========================  ========  =========================
SCHUR                      spin-1    u = v = 0, q = 0
HALL_LITTLEWOOD_Q          spin-1    u = v = 0
WEAK_GROTHENDIECK_J        spin-1    u = alpha, v = 0, q = 0
WEAK_DUAL_j                spin-1    u = 0, v = alpha, q = 0
Q_WHITTAKER                fused     u = v = 0
INHOM_Q_WHITTAKER_F        fused     u_i free, v = 0
DUAL_INHOM_G               fused     u = 0, v_i free (default 1)
GROTHENDIECK_G             fused     u = beta, v = 0, q = 0
DUAL_GROTHENDIECK_g        fused     u = 0, v = beta, q = 0
=========================  ========  =========================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import flint

from . import partitions as pt
from .algebra import ONE, Q, ZERO, RingElem, Scalar, q_binomial, q_factorial, q_pochhammer, var
from .lattice import Columns, ParamSpec, skew_g, skew_j
from .partitions import Partition


class FamilyTag(enum.Enum):
    SCHUR = "schur"
    HALL_LITTLEWOOD_Q = "hall-littlewood-q"
    Q_WHITTAKER = "q-whittaker"
    INHOM_Q_WHITTAKER_F = "inhom-f"
    DUAL_INHOM_G = "dual-inhom-g"
    GROTHENDIECK_G = "grothendieck"
    DUAL_GROTHENDIECK_g = "dual-grothendieck"
    WEAK_GROTHENDIECK_J = "weak-grothendieck"
    WEAK_DUAL_j = "weak-dual-grothendieck"


SPIN1_FAMILIES = {FamilyTag.SCHUR, FamilyTag.HALL_LITTLEWOOD_Q, FamilyTag.WEAK_GROTHENDIECK_J, FamilyTag.WEAK_DUAL_j}
Q_ZERO = {FamilyTag.SCHUR, FamilyTag.WEAK_GROTHENDIECK_J, FamilyTag.WEAK_DUAL_j,
          FamilyTag.GROTHENDIECK_G, FamilyTag.DUAL_GROTHENDIECK_g}
# families whose one-variable branching is supported on general mu ⊆ lam
GENERAL_SKEW = {FamilyTag.DUAL_GROTHENDIECK_g, FamilyTag.DUAL_INHOM_G}


@dataclass(frozen=True)
class FamilyParams:
    """``param`` is alpha or beta; ``u``/``v`` are column specs for the two inhomogeneous families."""

    param: Scalar = None
    u: ParamSpec = "u"
    v: ParamSpec = 1

    def alpha(self) -> RingElem:
        return var("w1") if self.param is None else RingElem.of(self.param)

    def columns(self) -> Columns:
        return Columns.make(self.u, self.v)


DEFAULT_PARAMS = FamilyParams()


def lattice_columns(tag: FamilyTag, params: FamilyParams = DEFAULT_PARAMS) -> Columns:
    a = params.alpha()
    if tag in (FamilyTag.SCHUR, FamilyTag.HALL_LITTLEWOOD_Q, FamilyTag.Q_WHITTAKER):
        return Columns.make(0, 0)
    if tag is FamilyTag.INHOM_Q_WHITTAKER_F:
        return Columns.make(params.u, 0)
    if tag is FamilyTag.DUAL_INHOM_G:
        return Columns.make(0, params.v)
    if tag in (FamilyTag.GROTHENDIECK_G, FamilyTag.WEAK_GROTHENDIECK_J):
        return Columns.make(a, 0)
    return Columns.make(0, a)


def lattice_degeneration(tag: FamilyTag, lam: Partition, mu: Partition, xs: Sequence[Scalar],
                         params: FamilyParams = DEFAULT_PARAMS) -> RingElem:
    cols = lattice_columns(tag, params)
    fn = skew_j if tag in SPIN1_FAMILIES else skew_g
    out = fn(lam, mu, xs, cols)
    if tag in Q_ZERO:
        out = out.substitute({"q": 0})
    return out


# one-variable branching rules


def _qw_coefficient(lam: Partition, mu: Partition) -> RingElem:
    out = ONE
    for i in range(1, len(lam) + 1):
        li, li1, mi = pt.part(lam, i), pt.part(lam, i + 1), pt.part(mu, i)
        out = out * q_factorial(li - li1) / (q_factorial(li - mi) * q_factorial(mi - li1))
    return out


def _hl_phi(lam: Partition, mu: Partition) -> RingElem:
    out = ONE
    for i in range(1, (lam[0] if lam else 0) + 1):
        m = pt.multiplicity(lam, i)
        if m == pt.multiplicity(mu, i) + 1:
            out = out * (1 - Q ** m)
    return out


def _dual_inhom_vertex(x: RingElem, v: RingElem, a: int, b: int, c: int, d: int) -> RingElem:
    # fused vertex with u = 0, written out directly
    total = ZERO
    for p in range(min(b, c) + 1):
        term = v ** (b - p) * q_binomial(c + d - p, c - p) * q_binomial(b, p)
        for j in range(p):
            term = term * (x - v * Q ** j)
        total = total + term
    return total * x ** (d - b)


def branching_one_var(tag: FamilyTag, lam: Partition, mu: Partition, x: Scalar,
                      params: FamilyParams = DEFAULT_PARAMS) -> RingElem:
    """The family's one-variable skew function from its closed-form branching rule."""
    x = RingElem.of(x)
    if tag in GENERAL_SKEW:
        if not pt.contains(lam, mu):
            return ZERO
    elif not pt.interlaces(lam, mu):
        return ZERO
    boxes = pt.size(lam) - pt.size(mu)
    a = params.alpha()
    if tag is FamilyTag.SCHUR:
        return x ** boxes
    if tag is FamilyTag.HALL_LITTLEWOOD_Q:
        return _hl_phi(lam, mu) * x ** boxes
    if tag is FamilyTag.Q_WHITTAKER:
        return _qw_coefficient(lam, mu) * x ** boxes
    if tag is FamilyTag.INHOM_Q_WHITTAKER_F:
        cols = params.columns()
        out = _qw_coefficient(lam, mu) * x ** boxes
        for i in range(1, len(lam) + 1):
            out = out * q_pochhammer(cols.param("u", i) * x, pt.part(mu, i) - pt.part(lam, i + 1))
        return out
    if tag is FamilyTag.DUAL_INHOM_G:
        cols = params.columns()
        out = ONE
        for i in range(1, len(lam) + 1):
            li, li1, mi, mi1 = pt.part(lam, i), pt.part(lam, i + 1), pt.part(mu, i), pt.part(mu, i + 1)
            out = out * _dual_inhom_vertex(x, cols.param("v", i), li - li1, li1 - mi1, mi - mi1, li - mi)
        return out
    if tag is FamilyTag.GROTHENDIECK_G:
        r = sum(1 for i in range(1, len(mu) + 1) if pt.part(mu, i) > pt.part(lam, i + 1))
        return x ** boxes * (1 - a * x) ** r
    if tag is FamilyTag.DUAL_GROTHENDIECK_g:
        c = pt.skew_columns(lam, mu)
        return a ** (boxes - c) * x ** c
    if tag is FamilyTag.WEAK_GROTHENDIECK_J:
        r = sum(1 for i in range(1, len(mu) + 1) if pt.part(mu, i) > pt.part(lam, i + 1))
        return (1 + a * x) ** (-r) * (x / (1 + a * x)) ** boxes
    if tag is FamilyTag.WEAK_DUAL_j:
        r = pt.skew_rows(lam, mu)
        return x ** r * (x + a) ** (boxes - r)
    raise ValueError(f"unknown family {tag}")


def spin1_branching(lam: Partition, mu: Partition, x: Scalar, columns: Columns = Columns()) -> RingElem:
    """One-variable J_{lam/mu}(x) from the column classification of the strip."""
    if not pt.interlaces(lam, mu):
        return ZERO
    x = RingElem.of(x)
    stats = pt.column_stats(lam, mu)
    out = ONE
    for i in range(1, pt.part(lam, 1) + 1):
        u, v = columns.pair(i)
        qm = Q ** pt.multiplicity(lam, i)
        if i in stats.mm:
            num = 1 + u * x * qm
        elif i in stats.pm:
            num = (1 - qm) * x
        elif i in stats.mp:
            num = 1 - u * v * qm
        elif i in stats.pp:
            num = x + v * qm
        else:
            continue
        out = out * num / (1 + u * x)
    return out


def _predecessors(tag: FamilyTag, nu: Partition, mu: Partition) -> Iterator[Partition]:
    source = pt.sub_partitions(nu) if tag in GENERAL_SKEW else pt.interlacing_below(nu)
    for kappa in source:
        if pt.contains(kappa, mu):
            yield kappa


def multivar_oracle(tag: FamilyTag, lam: Partition, mu: Partition, xs: Sequence[Scalar],
                    params: FamilyParams = DEFAULT_PARAMS) -> RingElem:
    """Sum over chains mu = nu^0 ⊆ ... ⊆ nu^n = lam of prod_k branching(nu^k / nu^(k-1), x_k)."""
    xs = tuple(RingElem.of(x) for x in xs)
    if not pt.contains(lam, mu):
        return ZERO

    @lru_cache(maxsize=None)
    def rec(nu: Partition, k: int) -> RingElem:
        if k == 0:
            return ONE if nu == mu else ZERO
        total = ZERO
        for kappa in _predecessors(tag, nu, mu):
            inner = rec(kappa, k - 1)
            if inner.is_zero():
                continue
            total = total + inner * branching_one_var(tag, nu, kappa, xs[k - 1], params)
        return total

    out = rec(tuple(lam), len(xs))
    if tag in Q_ZERO:
        out = out.substitute({"q": 0})
    return out


def schur_bialternant(lam: Partition, points: Sequence[Fraction]) -> Fraction:
    """s_lam at distinct rational points as a ratio of alternants."""
    n = len(points)
    if len(lam) > n:
        return Fraction(0)
    parts = list(lam) + [0] * (n - len(lam))
    pts = [flint.fmpq(Fraction(p).numerator, Fraction(p).denominator) for p in points]
    num = flint.fmpq_mat([[p ** (parts[j] + n - 1 - j) for j in range(n)] for p in pts]).det()
    den = flint.fmpq_mat([[p ** (n - 1 - j) for j in range(n)] for p in pts]).det()
    v = num / den
    return Fraction(int(v.p), int(v.q))
