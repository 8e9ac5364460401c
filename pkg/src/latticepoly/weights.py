"""Vertex and cross weights.

Labels are ``(a, b, c, d)`` = (bottom, left, top, right) edge occupations.
For ordinary lines particles travel up and to the right, so a weight is
nonzero only when ``a + b == c + d``.  For reversed lines (the ``*_DUAL``
row families and the two cross weights that involve a reversed line)
horizontal labels are complemented and particles travel right to left,
giving the rule ``a + d == b + c``.

Spin-1 horizontal labels are 0 or 1; fused and column labels are any
nonnegative integer.  Every family is a pure function of its parameters;
a ``perturbation`` adds a fixed amount to chosen label tuples and exists so
the identity checkers can be shown to reject wrong weights.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Tuple

from .algebra import ONE, Q, ZERO, RingElem, Scalar, q_binomial, q_factorial, q_pochhammer, var

Labels = Tuple[int, int, int, int]


class Tag(enum.Enum):
    GENERAL = "general"
    SPIN1_UV = "spin1"
    SPIN1_UV_DUAL = "spin1-dual"
    FUSED_UV = "fused"
    FUSED_UV_DUAL = "fused-dual"
    R_SPIN1 = "r-spin1"
    R_SPIN1_DUAL = "r-spin1-dual"
    R_FUSED = "r-fused"
    R_MIXED = "r-mixed"
    EXPANSION_A = "expansion-a"
    EXPANSION_B = "expansion-b"
    EXPANSION_C = "expansion-c"
    EXPANSION_D = "expansion-d"


REVERSED = {Tag.SPIN1_UV_DUAL, Tag.FUSED_UV_DUAL, Tag.R_SPIN1_DUAL, Tag.R_MIXED}
THIN_HORIZONTAL = {Tag.SPIN1_UV, Tag.SPIN1_UV_DUAL, Tag.R_SPIN1, Tag.R_SPIN1_DUAL, Tag.R_MIXED}
THIN_VERTICAL = {Tag.R_SPIN1, Tag.R_SPIN1_DUAL}


@dataclass(frozen=True)
class WeightFamily:
    """A weight family together with its parameters.

    ``x`` and ``y`` are spectral parameters (for cross weights the horizontal
    and vertical line), ``u`` and ``v`` the column parameters, ``L`` and
    ``M`` the horizontal and vertical spins of the general family.  When
    ``L`` or ``M`` is None the family is evaluated with ``q_neg_L`` /
    ``q_neg_M`` standing for q^-L / q^-M and no label bound.
    """

    tag: Tag
    x: Optional[RingElem] = None
    y: Optional[RingElem] = None
    u: Optional[RingElem] = None
    v: Optional[RingElem] = None
    L: Optional[int] = None
    M: Optional[int] = None
    q_neg_L: Optional[RingElem] = None
    q_neg_M: Optional[RingElem] = None
    perturbation: Tuple[Tuple[Labels, RingElem], ...] = ()

    def perturbed(self, labels: Labels, delta: Scalar) -> "WeightFamily":
        return replace(self, perturbation=self.perturbation + ((tuple(labels), RingElem.of(delta)),))

    @property
    def reversed(self) -> bool:
        return self.tag in REVERSED


def _r(v):
    return None if v is None else RingElem.of(v)


def general(z: Scalar, L: Optional[int], M: Optional[int], q_neg_L: Scalar = None, q_neg_M: Scalar = None) -> WeightFamily:
    if q_neg_L is None:
        if L is None:
            raise ValueError("symbolic L needs a value for q^-L")
        q_neg_L = Q ** (-L)
    if q_neg_M is None:
        if M is None:
            raise ValueError("symbolic M needs a value for q^-M")
        q_neg_M = Q ** (-M)
    return WeightFamily(Tag.GENERAL, x=_r(z), L=L, M=M, q_neg_L=_r(q_neg_L), q_neg_M=_r(q_neg_M))


def spin1(x: Scalar, u: Scalar, v: Scalar) -> WeightFamily:
    return WeightFamily(Tag.SPIN1_UV, x=_r(x), u=_r(u), v=_r(v))


def spin1_dual(x: Scalar, u: Scalar, v: Scalar) -> WeightFamily:
    return WeightFamily(Tag.SPIN1_UV_DUAL, x=_r(x), u=_r(u), v=_r(v))


def fused(x: Scalar, u: Scalar, v: Scalar) -> WeightFamily:
    return WeightFamily(Tag.FUSED_UV, x=_r(x), u=_r(u), v=_r(v))


def fused_dual(x: Scalar, u: Scalar, v: Scalar) -> WeightFamily:
    return WeightFamily(Tag.FUSED_UV_DUAL, x=_r(x), u=_r(u), v=_r(v))


def r_spin1(x: Scalar, y: Scalar) -> WeightFamily:
    return WeightFamily(Tag.R_SPIN1, x=_r(x), y=_r(y))


def r_spin1_dual(x: Scalar, y: Scalar) -> WeightFamily:
    return WeightFamily(Tag.R_SPIN1_DUAL, x=_r(x), y=_r(y))


def r_fused(x: Scalar, y: Scalar) -> WeightFamily:
    return WeightFamily(Tag.R_FUSED, x=_r(x), y=_r(y))


def r_mixed(x: Scalar, y: Scalar) -> WeightFamily:
    return WeightFamily(Tag.R_MIXED, x=_r(x), y=_r(y))


def expansion(kind: str, y: Scalar = None, u: Scalar = None, v: Scalar = None) -> WeightFamily:
    tag = Tag["EXPANSION_" + kind.upper()]
    return WeightFamily(tag, y=_r(y), u=_r(u), v=_r(v))


def conserves(family: WeightFamily, labels: Labels) -> bool:
    a, b, c, d = labels
    if family.reversed:
        return a + d == b + c
    return a + b == c + d


def in_range(family: WeightFamily, labels: Labels) -> bool:
    a, b, c, d = labels
    if min(labels) < 0:
        return False
    if family.tag in THIN_HORIZONTAL and (b > 1 or d > 1):
        return False
    if family.tag in THIN_VERTICAL and (a > 1 or c > 1):
        return False
    if family.tag is Tag.GENERAL:
        if family.M is not None and (a > family.M or c > family.M):
            return False
        if family.L is not None and (b > family.L or d > family.L):
            return False
    return True


def evaluate(family: WeightFamily, labels: Labels) -> RingElem:
    """Weight of one vertex; zero off the support of the family."""
    labels = tuple(labels)
    w = _evaluate(family.tag, family.x, family.y, family.u, family.v, family.L, family.M,
                  family.q_neg_L, family.q_neg_M, labels)
    for lab, delta in family.perturbation:
        if lab == labels:
            w = w + delta
    return w


def row_denominator(family: WeightFamily) -> Optional[RingElem]:
    """A label-independent denominator D with D * weight polynomial, when one exists."""
    if family.tag is Tag.SPIN1_UV:
        return 1 + family.u * family.x
    if family.tag is Tag.SPIN1_UV_DUAL:
        return 1 + family.v * family.x
    if family.tag in (Tag.FUSED_UV, Tag.EXPANSION_A, Tag.EXPANSION_B, Tag.EXPANSION_C, Tag.EXPANSION_D):
        return ONE
    return None


def evaluate_scaled(family: WeightFamily, labels: Labels, scale: RingElem) -> RingElem:
    """``scale * evaluate(family, labels)``, cached."""
    if family.perturbation:
        return scale * evaluate(family, labels)
    return _evaluate_scaled(family.tag, family.x, family.y, family.u, family.v, scale, tuple(labels))


@lru_cache(maxsize=200_000)
def _evaluate_scaled(tag, x, y, u, v, scale, labels):
    return scale * _evaluate(tag, x, y, u, v, None, None, None, None, labels)


@lru_cache(maxsize=200_000)
def _evaluate(tag, x, y, u, v, L, M, qL, qM, labels) -> RingElem:
    fam = WeightFamily(tag, x, y, u, v, L, M, qL, qM)
    if not in_range(fam, labels) or not conserves(fam, labels):
        return ZERO
    return _FORMULAS[tag](fam, *labels)


# general two-spin weights


def phi(lam: int, mu: int, x: RingElem, y: RingElem) -> RingElem:
    """(x;q)_lam (y/x;q)_{mu-lam} / (y;q)_mu * (y/x)^lam * binom(mu, lam)_q."""
    if lam < 0 or lam > mu:
        return ZERO
    r = y / x
    return (q_pochhammer(x, lam) * q_pochhammer(r, mu - lam) / q_pochhammer(y, mu)
            * r ** lam * q_binomial(mu, lam))


def _general(f: WeightFamily, a, b, c, d) -> RingElem:
    z, P, QM = f.x, f.q_neg_L, f.q_neg_M
    pref = z ** (d - b) * P ** (-a) * QM ** d
    total = ZERO
    for p in range(min(b, c) + 1):
        total = total + phi(c - p, c + d - p, QM * z / P, QM * z) * phi(p, b, P / z, P)
    return pref * total


# spin-1 rows with column parameters (u, v)


def _spin1(f: WeightFamily, a, b, c, d) -> RingElem:
    x, u, v = f.x, f.u, f.v
    qm = Q ** a
    den = 1 + u * x
    if (b, d) == (0, 0):
        return (1 + u * x * qm) / den
    if (b, d) == (0, 1):
        return (1 - qm) * x / den
    if (b, d) == (1, 0):
        return (1 - u * v * qm) / den
    return (x + v * qm) / den


def _spin1_dual(f: WeightFamily, a, b, c, d) -> RingElem:
    # reversed line: particles enter on the right and leave on the left
    x, u, v = f.x, f.u, f.v
    qm = Q ** a
    den = 1 + v * x
    if (b, d) == (1, 1):
        return (x + u * qm) / den
    if (b, d) == (1, 0):
        return (1 - qm) / den
    if (b, d) == (0, 1):
        return (1 - u * v * qm) * x / den
    return (1 + v * x * qm) / den


# fused rows


_X, _U, _V = var("w12"), var("w11"), var("w10")


@lru_cache(maxsize=None)
def _fused_universal(a, b, c, d) -> RingElem:
    """Fused weight in placeholder variables, so that x = 0 can be substituted afterwards."""
    total = ZERO
    for p in range(min(b, c) + 1):
        # x^d (v/x;q)_p (v/x)^(b-p) = x^(d-b) v^(b-p) prod_{j<p} (x - v q^j)
        term = _V ** (b - p) * q_binomial(c + d - p, c - p) * q_binomial(b, p) * q_pochhammer(_U * _X, c - p)
        for j in range(p):
            term = term * (_X - _V * Q ** j)
        total = total + term
    return total * _X ** (d - b)


def _fused(f: WeightFamily, a, b, c, d) -> RingElem:
    return _fused_universal(a, b, c, d).substitute({"w12": f.x, "w11": f.u, "w10": f.v})


def gauge_factor(a: int, c: int, u: Scalar, v: Scalar) -> RingElem:
    """(uv;q)_c/(uv;q)_a * (q;q)_a/(q;q)_c."""
    uv = RingElem.of(u) * RingElem.of(v)
    return q_pochhammer(uv, c) / q_pochhammer(uv, a) * q_factorial(a) / q_factorial(c)


def _fused_dual(f: WeightFamily, a, b, c, d) -> RingElem:
    return gauge_factor(a, c, f.u, f.v) * evaluate(fused(f.x, f.v, f.u), (c, b, a, d))


# cross weights


def _r_spin1(f: WeightFamily, a, b, c, d) -> RingElem:
    t = f.y / f.x
    den = 1 - Q * t
    table = {
        (0, 0, 0, 0): ONE,
        (1, 1, 1, 1): ONE,
        (1, 0, 1, 0): Q * (1 - t) / den,
        (1, 0, 0, 1): (1 - Q) / den,
        (0, 1, 0, 1): (1 - t) / den,
        (0, 1, 1, 0): (1 - Q) * t / den,
    }
    return table.get((a, b, c, d), ZERO)


def _r_spin1_dual(f: WeightFamily, a, b, c, d) -> RingElem:
    t = f.x * f.y
    den = 1 - Q * t
    table = {
        (0, 1, 0, 1): ONE,
        (1, 0, 1, 0): ONE,
        (1, 1, 1, 1): Q * (1 - t) / den,
        (1, 1, 0, 0): (1 - Q) / den,
        (0, 0, 0, 0): (1 - t) / den,
        (0, 0, 1, 1): (1 - Q) * t / den,
    }
    return table.get((a, b, c, d), ZERO)


def _r_fused(f: WeightFamily, a, b, c, d) -> RingElem:
    t = f.x / f.y
    return t ** d * q_pochhammer(t, c - b) * q_binomial(a, c - b)


def _r_mixed(f: WeightFamily, a, b, c, d) -> RingElem:
    # fused vertical line of spectral y against a reversed spin-1 line of spectral x
    t = f.x * f.y
    den = 1 + t
    qm = Q ** a
    if (b, d) == (1, 1):
        return (t + qm) / den
    if (b, d) == (1, 0):
        return (1 - qm) / den
    if (b, d) == (0, 1):
        return t / den
    return ONE / den


# expansion grids


def _expansion_a(f, a, b, c, d) -> RingElem:
    return q_binomial(a, c - b) if b <= c else ZERO


def _expansion_b(f, a, b, c, d) -> RingElem:
    if b > c:
        return ZERO
    k = c - b
    return (-1) ** k * Q ** (k * (k - 1) // 2) * q_binomial(a, k)


def _expansion_c(f, a, b, c, d) -> RingElem:
    return q_binomial(b, c) if c <= b else ZERO


def _expansion_d(f, a, b, c, d) -> RingElem:
    y, u, v = f.y, f.u, f.v
    total = ZERO
    for p in range(min(b, c) + 1):
        # y^(a-d) (u/y;q)_{c-p} (vy)^(b-p) = v^(b-p) prod_{j<c-p} (y - u q^j), using a-d = c-b
        term = v ** (b - p) * q_pochhammer(v * y, p) * q_binomial(c + d - p, c - p) * q_binomial(b, p)
        for j in range(c - p):
            term = term * (y - u * Q ** j)
        total = total + term
    return total


_FORMULAS = {
    Tag.GENERAL: _general,
    Tag.SPIN1_UV: _spin1,
    Tag.SPIN1_UV_DUAL: _spin1_dual,
    Tag.FUSED_UV: _fused,
    Tag.FUSED_UV_DUAL: _fused_dual,
    Tag.R_SPIN1: _r_spin1,
    Tag.R_SPIN1_DUAL: _r_spin1_dual,
    Tag.R_FUSED: _r_fused,
    Tag.R_MIXED: _r_mixed,
    Tag.EXPANSION_A: _expansion_a,
    Tag.EXPANSION_B: _expansion_b,
    Tag.EXPANSION_C: _expansion_c,
    Tag.EXPANSION_D: _expansion_d,
}


def spin1_table(z: Scalar, M: Optional[int], a: int, b: int, c: int, d: int, q_neg_M: Scalar = None) -> RingElem:
    """The L = 1 general weights written out case by case (independent of :func:`phi`)."""
    z = RingElem.of(z)
    QM = Q ** (-M) if q_neg_M is None else RingElem.of(q_neg_M)
    if a + b != c + d or min(a, b, c, d) < 0 or b > 1 or d > 1:
        return ZERO
    if M is not None and (a > M or c > M):
        return ZERO
    qm = Q ** a
    den = 1 - z * QM
    if (b, d) == (0, 0):
        return (1 - z * qm * QM) / den
    if (b, d) == (0, 1):
        return (qm - 1) * z * QM / den
    if (b, d) == (1, 0):
        return (1 - qm * QM) / den
    return (qm * QM - z * QM) / den
