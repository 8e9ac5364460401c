"""Exact rational functions in a fixed set of commuting variables.

Every quantity in the package lives in one field of rational functions over
Q in the variables ``q, x1..x12, y1..y12, u1..u12, v1..v12, w1..w12``.
Polynomial arithmetic and gcds are delegated to FLINT's multivariate
polynomials over Q; this module adds the fraction layer with a canonical
form, substitution, truncated series expansion and the q-series helpers.

Canonical form of ``num/den``: gcd(num, den) = 1 and the leading coefficient
of ``den`` (lex order, variable order as listed above) equals 1.  Two
elements are equal iff their canonical forms coincide.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

import flint

from .errors import NotSeriesExpandable, UnknownVariable, ZeroDenominator

MAX_INDEX = 12
KINDS = ("x", "y", "u", "v", "w")

_NAMES = ["q"] + [f"{k}{i}" for k in KINDS for i in range(1, MAX_INDEX + 1)]
_POSITION = {name: pos for pos, name in enumerate(_NAMES)}
_CTX = flint.fmpq_mpoly_ctx.get(_NAMES, "lex")
_GENS = _CTX.gens()
_NVARS = len(_NAMES)
_ONE = _CTX.from_dict({(0,) * _NVARS: 1})
_ZERO = _CTX.from_dict({})


@dataclass(frozen=True, order=True)
class VarId:
    """A variable: ``q`` (index 0) or one of x, y, u, v, w with index 1..12."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind == "q":
            if self.index != 0:
                raise UnknownVariable(f"q takes no index, got {self.index}")
        elif self.kind in KINDS:
            if not 1 <= self.index <= MAX_INDEX:
                raise UnknownVariable(f"{self.kind}{self.index}: index out of range 1..{MAX_INDEX}")
        else:
            raise UnknownVariable(f"unknown variable kind {self.kind!r}")

    @property
    def name(self) -> str:
        return "q" if self.kind == "q" else f"{self.kind}{self.index}"

    @property
    def position(self) -> int:
        return _POSITION[self.name]

    @classmethod
    def parse(cls, name: str) -> "VarId":
        name = name.strip()
        if name == "q":
            return cls("q")
        if len(name) >= 2 and name[0] in KINDS and name[1:].isdigit():
            return cls(name[0], int(name[1:]))
        raise UnknownVariable(f"cannot parse variable name {name!r}")

    def __str__(self) -> str:
        return self.name


Scalar = Union[int, Fraction, "RingElem"]


def _as_fmpq(c) -> flint.fmpq:
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


def _constant(c) -> flint.fmpq_mpoly:
    c = _as_fmpq(c)
    if c == 0:
        return _ZERO
    return _CTX.from_dict({(0,) * _NVARS: c})


class RingElem:
    """An element of Q(q, x_i, y_i, u_i, v_i, w_i), kept in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: flint.fmpq_mpoly, den: flint.fmpq_mpoly | None = None, *, reduced: bool = False):
        if den is None:
            den = _ONE
        if den.is_zero():
            raise ZeroDenominator("denominator is zero")
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction

    @classmethod
    def of(cls, value: Scalar) -> "RingElem":
        if isinstance(value, RingElem):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(_constant(value), reduced=True)
        if isinstance(value, VarId):
            return cls.var(value)
        if isinstance(value, str):
            return parse_expression(value)
        raise TypeError(f"cannot convert {type(value).__name__} to RingElem")

    @classmethod
    def var(cls, v: Union[VarId, str]) -> "RingElem":
        if isinstance(v, str):
            v = VarId.parse(v)
        return cls(_GENS[v.position], reduced=True)

    # predicates and views

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        n = self.num.leading_coefficient() if not self.num.is_zero() else flint.fmpq(0)
        d = self.den.leading_coefficient()
        v = n / d
        return Fraction(int(v.p), int(v.q))

    def variables(self) -> Tuple[VarId, ...]:
        used = set()
        for poly in (self.num, self.den):
            for exps in poly.monoms():
                for pos, e in enumerate(exps):
                    if e:
                        used.add(pos)
        return tuple(VarId.parse(_NAMES[p]) for p in sorted(used))

    def numerator(self) -> "RingElem":
        return RingElem(self.num, reduced=True)

    def denominator(self) -> "RingElem":
        return RingElem(self.den, reduced=True)

    def terms(self, which: str = "num") -> list:
        """Terms of numerator or denominator as ``({VarId: exp}, Fraction)`` pairs."""
        poly = self.num if which == "num" else self.den
        out = []
        for exps, c in poly.to_dict().items():
            mono = {VarId.parse(_NAMES[p]): int(e) for p, e in enumerate(exps) if e}
            out.append((mono, Fraction(int(c.p), int(c.q))))
        return out

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RingElem(self.num + other.num, reduced=True)
        if self.den == other.den:
            return RingElem(self.num + other.num, self.den)
        return RingElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RingElem(self.num * other.num, reduced=True)
        # cross-cancel before multiplying to keep the pieces small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n = (self.num / g1) * (other.num / g2)
        d = (self.den / g2) * (other.den / g1)
        return RingElem(*_normalize_lc(n, d), reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RingElem":
        if self.num.is_zero():
            raise ZeroDenominator("division by zero")
        return RingElem(*_normalize_lc(self.den, self.num), reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RingElem(self.num ** k, self.den ** k, reduced=True)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num.str(), self.den.str()))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RingElem({self})"

    def __str__(self):
        n = self.num.str()
        if self.den.is_one():
            return n
        return f"({n})/({self.den.str()})"

    # substitution and expansion

    def substitute(self, bindings: Mapping[Union[VarId, str], Scalar]) -> "RingElem":
        """Replace variables by field elements; raises ZeroDenominator if the result is undefined."""
        if not bindings:
            return self
        values = {}
        for k, v in bindings.items():
            key = VarId.parse(k) if isinstance(k, str) else k
            values[key.position] = RingElem.of(v)
        num = _evaluate(self.num, values)
        den = _evaluate(self.den, values)
        if den.is_zero():
            raise ZeroDenominator(f"substitution {_fmt_bindings(bindings)} makes the denominator vanish")
        return num / den

    def truncate(self, variables: Iterable[Union[VarId, str]], degree: int) -> "RingElem":
        """Taylor expansion at ``variables = 0``, keeping total degree <= ``degree``.

        The result is a polynomial in ``variables`` whose coefficients are
        rational functions of the remaining variables.
        """
        positions = _positions(variables)
        n0 = _truncate_poly(self.num, positions, degree)
        if self.den.is_one() or _degree_in(self.den, positions) == 0:
            return RingElem(n0, self.den)
        d0 = _truncate_poly(self.den, positions, 0)
        if d0.is_zero():
            raise NotSeriesExpandable(f"denominator {self.den.str()} vanishes at the origin")
        rest = self.den - d0
        # 1/den = sum_k (-rest)^k / d0^(k+1), truncated term by term
        acc = n0
        total = acc * d0 ** degree
        for k in range(1, degree + 1):
            acc = _truncate_poly(-rest * acc, positions, degree)
            if acc.is_zero():
                break
            total += acc * d0 ** (degree - k)
        return RingElem(total, d0 ** (degree + 1))

    def coefficients_in(self, variables: Iterable[Union[VarId, str]]) -> Dict[Tuple[int, ...], "RingElem"]:
        """Split a polynomial in ``variables`` into its coefficients.

        Keys are exponent tuples in the order the variables were given.
        """
        positions = _positions(variables)
        if _degree_in(self.den, positions) != 0:
            raise ValueError("denominator depends on the splitting variables")
        buckets: Dict[Tuple[int, ...], dict] = {}
        for exps, c in self.num.to_dict().items():
            key = tuple(int(exps[p]) for p in positions)
            rest = list(exps)
            for p in positions:
                rest[p] = 0
            buckets.setdefault(key, {})[tuple(rest)] = c
        return {k: RingElem(_CTX.from_dict(v), self.den) for k, v in buckets.items()}

    def degree_in(self, variables: Iterable[Union[VarId, str]]) -> int:
        """Total degree of the numerator in ``variables`` (-1 for zero)."""
        if self.num.is_zero():
            return -1
        return _degree_in(self.num, _positions(variables))

    def low_degree_in(self, variables: Iterable[Union[VarId, str]]) -> int:
        """Smallest total degree in ``variables`` among the numerator terms (-1 for zero)."""
        if self.num.is_zero():
            return -1
        positions = _positions(variables)
        return min(sum(e[p] for p in positions) for e in self.num.monoms())


def _fmt_bindings(bindings) -> str:
    return ", ".join(f"{k}={v}" for k, v in bindings.items())


def _normalize_lc(n, d):
    lc = d.leading_coefficient()
    if lc != 1:
        inv = 1 / lc
        n = n * inv
        d = d * inv
    return n, d


def _reduce(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    return _normalize_lc(num, den)


def _coerce(x):
    if isinstance(x, RingElem):
        return x
    if isinstance(x, (int, Fraction)):
        return RingElem(_constant(x), reduced=True)
    return NotImplemented


def _positions(variables) -> Tuple[int, ...]:
    out = []
    for v in variables:
        if isinstance(v, str):
            v = VarId.parse(v)
        out.append(v.position)
    return tuple(out)


def _degree_in(poly, positions) -> int:
    if poly.is_zero():
        return -1
    return max(sum(e[p] for p in positions) for e in poly.monoms())


def _truncate_poly(poly, positions, degree):
    d = poly.to_dict()
    keep = {e: c for e, c in d.items() if sum(e[p] for p in positions) <= degree}
    if len(keep) == len(d):
        return poly
    return _CTX.from_dict(keep)


def _evaluate(poly, values: Dict[int, RingElem]) -> RingElem:
    if all(v.den.is_one() for v in values.values()):
        args = list(_GENS)
        for pos, v in values.items():
            args[pos] = v.num
        return RingElem(poly.compose(*args), reduced=True)
    # clear denominators: P(a/b) = sum c prod a^e b^(D-e) / prod b^D
    degs = poly.degrees()
    pows: Dict[Tuple[int, int], flint.fmpq_mpoly] = {}

    def power(pos, base, k):
        key = (pos, base, k)
        if key not in pows:
            pows[key] = (values[pos].num if base == 0 else values[pos].den) ** k
        return pows[key]

    total = _ZERO
    for exps, c in poly.to_dict().items():
        rest = list(exps)
        term = _constant(c)
        for pos in values:
            e = exps[pos]
            rest[pos] = 0
            term = term * power(pos, 0, e) * power(pos, 1, degs[pos] - e)
        total += term * _CTX.from_dict({tuple(rest): 1})
    den = _ONE
    for pos in values:
        den = den * power(pos, 1, degs[pos])
    return RingElem(total, den)


ZERO = RingElem(_ZERO, reduced=True)
ONE = RingElem(_ONE, reduced=True)


def var(name: Union[str, VarId]) -> RingElem:
    return RingElem.var(name)


def q_var() -> RingElem:
    return RingElem.var(VarId("q"))


Q = RingElem.var(VarId("q"))


def q_pochhammer(a: Scalar, k: int, q: Scalar = None) -> RingElem:
    """(a; q)_k = prod_{j<k} (1 - a q^j), extended to k < 0 by 1/(a q^k; q)_{-k}."""
    a = RingElem.of(a)
    q = Q if q is None else RingElem.of(q)
    if k < 0:
        return q_pochhammer(a * q ** k, -k, q).inverse()
    out = ONE
    t = a
    for _ in range(k):
        out = out * (1 - t)
        t = t * q
    return out


def q_binomial(a: int, b: int, q: Scalar = None) -> RingElem:
    """Gaussian binomial (q;q)_a / ((q;q)_b (q;q)_{a-b}); zero outside 0 <= b <= a."""
    if b < 0 or b > a or a < 0:
        return ZERO
    q = Q if q is None else RingElem.of(q)
    b = min(b, a - b)
    num = ONE
    den = ONE
    for j in range(b):
        num = num * (1 - q ** (a - j))
        den = den * (1 - q ** (j + 1))
    return num / den


def q_factorial(k: int, q: Scalar = None) -> RingElem:
    """(q; q)_k."""
    q = Q if q is None else RingElem.of(q)
    return q_pochhammer(q, k, q)


def inverse_q_pochhammer_infinite(z: Scalar, degree: int) -> RingElem:
    """1/(z; q)_oo as the q-binomial series sum_{k <= degree} z^k / (q; q)_k."""
    z = RingElem.of(z)
    total = ZERO
    for k in range(degree + 1):
        total = total + z ** k / q_factorial(k)
    return total


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_expression(text: str) -> RingElem:
    """Parse an arithmetic expression such as ``1/2``, ``-q``, ``(1+q)*x1^2``."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return RingElem.of(node.value)
        if isinstance(node, ast.Name):
            return RingElem.var(VarId.parse(node.id))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                sign = 1
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    sign, exp = -1, exp.operand
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ValueError("exponents must be integer literals")
                return walk(node.left) ** (sign * exp.value)
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(walk(node.left), walk(node.right))
        raise ValueError(f"unsupported syntax in expression {text!r}")

    return walk(tree)
