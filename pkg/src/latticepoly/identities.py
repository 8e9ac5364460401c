"""Exact checkers for the structural identities of the lattice models.

Every suite expands into a list of small instances described by plain
tuples, so they can be shipped to worker processes.  An instance is checked
by computing both sides independently and comparing canonical forms.

Cauchy identities are compared as power series at the origin in the joint
grading where every x_i, y_j, u_i and v_i has degree 1.  With u and v
symbolic, grading only the spectral variables is not enough: for instance
J_{(k)}(x) with swapped parameters has x-degree 1 for every k, so no finite
set of kappa would account for a given x-degree.  In the joint grading each
box of kappa/lam and kappa/mu costs at least one degree, so terms with
2|kappa| - |lam| - |mu| > D vanish after truncation.
"""

from __future__ import annotations

import itertools
import time
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import partitions as pt
from . import weights as wt
from .algebra import ONE, Q, ZERO, RingElem, inverse_q_pochhammer_infinite, q_binomial, var
from .errors import UnknownIdentity
from .families import FamilyTag, lattice_degeneration, multivar_oracle, schur_bialternant
from .lattice import (Columns, c_conjugate, c_lambda, normalization, skew_g, skew_g_dual, skew_j,
                      skew_j_dual)
from .partitions import Partition


@dataclass
class Failure:
    instance: str
    lhs: str
    rhs: str


@dataclass
class VerificationReport:
    identity: str
    instances_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.identity, self.instances_checked + other.instances_checked,
                                  self.failures + other.failures, self.elapsed + other.elapsed)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "failures": [{"instance": f.instance, "lhs": f.lhs, "rhs": f.rhs} for f in self.failures],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


# generic runner

Check = Callable[[tuple], Tuple[bool, RingElem, RingElem]]
_CHECKS: Dict[str, Check] = {}


def _register(name):
    def deco(fn):
        _CHECKS[name] = fn
        return fn
    return deco


def _run_one(instance: tuple) -> Tuple[str, bool, str, str]:
    ok, lhs, rhs = _CHECKS[instance[0]](instance)
    return repr(instance), ok, ("" if ok else str(lhs)), ("" if ok else str(rhs))


def run_instances(identity: str, instances: Sequence[tuple], jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, instances, chunksize=max(1, len(instances) // (4 * jobs))))
    else:
        results = [_run_one(i) for i in instances]
    failures = [Failure(name, lhs, rhs) for name, ok, lhs, rhs in results if not ok]
    return VerificationReport(identity, len(results), failures, time.perf_counter() - start)


# Yang-Baxter and RLL relations


def _ybe_sides(R, Wx, Wy, boundary, x_range, y_range) -> Tuple[RingElem, RingElem]:
    """Both sides of sum R(a1,a2,c1,c2) Wx(a3,c2,c3,b2) Wy(c3,c1,b3,b1) = sum Wy(a3,a1,c3,c1) Wx(c3,a2,b3,c2) R(c1,c2,b1,b2).

    a1, b1 sit on the y line, a2, b2 on the x line, a3, b3 on the column.
    ``x_range``/``y_range`` bound the internal labels of the two lines.
    """
    a1, a2, a3, b1, b2, b3 = boundary
    lhs = ZERO
    rhs = ZERO
    for c1 in y_range:
        for c2 in x_range:
            # column label fixed by conservation at the x-line vertex
            c3 = (a3 + b2 - c2) if Wx.reversed else (a3 + c2 - b2)
            if c3 >= 0:
                lhs = lhs + wt.evaluate(R, (a1, a2, c1, c2)) * wt.evaluate(Wx, (a3, c2, c3, b2)) \
                    * wt.evaluate(Wy, (c3, c1, b3, b1))
            c3 = a3 + a1 - c1
            if c3 >= 0:
                rhs = rhs + wt.evaluate(Wy, (a3, a1, c3, c1)) * wt.evaluate(Wx, (c3, a2, b3, c2)) \
                    * wt.evaluate(R, (c1, c2, b1, b2))
    return lhs, rhs


def _general_ybe_sides(L, M, N, boundary):
    x, y, z = var("x1"), var("x2"), var("x3")
    a1, a2, a3, b1, b2, b3 = boundary
    W_LM, W_LN, W_MN = wt.general(x / y, L, M), wt.general(x / z, L, N), wt.general(y / z, M, N)
    lhs = ZERO
    rhs = ZERO
    for c1 in range(M + 1):
        for c2 in range(L + 1):
            for c3 in range(N + 1):
                lhs = lhs + wt.evaluate(W_LM, (a1, a2, c1, c2)) * wt.evaluate(W_LN, (a3, c2, c3, b2)) \
                    * wt.evaluate(W_MN, (c3, c1, b3, b1))
                rhs = rhs + wt.evaluate(W_MN, (a3, a1, c3, c1)) * wt.evaluate(W_LN, (c3, a2, b3, c2)) \
                    * wt.evaluate(W_LM, (c1, c2, b1, b2))
    return lhs, rhs


@_register("ybe")
def _check_ybe(inst):
    _, L, M, N, boundary = inst
    lhs, rhs = _general_ybe_sides(L, M, N, boundary)
    return lhs == rhs, lhs, rhs


def ybe_instances(L: int = 1, M: int = 1, N: int = 1) -> List[tuple]:
    out = []
    for a1, a2, a3, b1, b2, b3 in itertools.product(range(M + 1), range(L + 1), range(N + 1),
                                                    range(M + 1), range(L + 1), range(N + 1)):
        out.append(("ybe", L, M, N, (a1, a2, a3, b1, b2, b3)))
    return out


RLL_KINDS = ("spin1", "spin1-dual", "fused", "mixed")


def rll_families(kind: str, perturbation: tuple = ()):
    """(R, W_x, W_y, x-line thin, y-line thin) for one of the row-row-column relations."""
    x, y, u, v = var("x1"), var("x2"), var("u1"), var("v1")
    if kind == "spin1":
        fams = (wt.r_spin1(x, y), wt.spin1(x, u, v), wt.spin1(y, u, v), True, True)
    elif kind == "spin1-dual":
        fams = (wt.r_spin1_dual(x, y), wt.spin1_dual(x, u, v), wt.spin1(y, u, v), True, True)
    elif kind == "fused":
        fams = (wt.r_fused(x, y), wt.fused(x, u, v), wt.fused(y, u, v), False, False)
    elif kind == "mixed":
        fams = (wt.r_mixed(x, y), wt.spin1_dual(x, u, v), wt.fused(y, u, v), True, False)
    else:
        raise UnknownIdentity(f"unknown RLL relation {kind!r}")
    R = fams[0]
    for labels, delta in perturbation:
        R = R.perturbed(labels, delta)
    return (R,) + fams[1:]


@_register("rll")
def _check_rll(inst):
    _, kind, boundary, perturbation = inst
    R, Wx, Wy, x_thin, y_thin = rll_families(kind, perturbation)
    total = sum(boundary)
    x_range = range(2) if x_thin else range(total + 1)
    y_range = range(2) if y_thin else range(total + 1)
    lhs, rhs = _ybe_sides(R, Wx, Wy, boundary, x_range, y_range)
    return lhs == rhs, lhs, rhs


def rll_instances(kind: str, max_label: int = 3, perturbation: tuple = ()) -> List[tuple]:
    _, Wx, _, x_thin, y_thin = rll_families(kind)
    xr = range(2) if x_thin else range(max_label + 1)
    yr = range(2) if y_thin else range(max_label + 1)
    cr = range(max_label + 1)
    out = []
    for a1, a2, a3, b1, b2, b3 in itertools.product(yr, xr, cr, yr, xr, cr):
        # the x line runs right to left when reversed
        if Wx.reversed:
            balanced = a1 + a3 + b2 == b1 + b3 + a2
        else:
            balanced = a1 + a2 + a3 == b1 + b2 + b3
        if balanced:
            out.append(("rll", kind, (a1, a2, a3, b1, b2, b3), perturbation))
    return out


# stochasticity and gauge


@_register("stochastic")
def _check_stochastic(inst):
    _, family, a, b = inst
    fam = _stochastic_family(family)
    total = ZERO
    for c in range(a + b + 2):
        d = (b + c - a) if fam.reversed else (a + b - c)
        if d >= 0:
            total = total + wt.evaluate(fam, (a, b, c, d))
    return total == ONE, total, ONE


def _stochastic_family(family):
    x, y = var("x1"), var("x2")
    if family[0] == "general":
        return wt.general(x, family[1], family[2])
    return {
        "r-spin1": wt.r_spin1(x, y),
        "r-spin1-dual": wt.r_spin1_dual(x, y),
        "r-fused": wt.r_fused(x, y),
        "r-mixed": wt.r_mixed(x, y),
    }[family[0]]


def stochastic_instances(max_spin: int = 3, max_label: int = 3) -> List[tuple]:
    out = []
    for L in range(1, max_spin + 1):
        for M in range(1, max_spin + 1):
            for a in range(M + 1):
                for b in range(L + 1):
                    out.append(("stochastic", ("general", L, M), a, b))
    for name, thin_v, thin_h in (("r-spin1", True, True), ("r-spin1-dual", True, True),
                                 ("r-fused", False, False), ("r-mixed", False, True)):
        for a in range(2 if thin_v else max_label + 1):
            for b in range(2 if thin_h else max_label + 1):
                out.append(("stochastic", (name,), a, b))
    return out


@_register("gauge")
def _check_gauge(inst):
    _, kind, labels = inst
    x, u, v = var("x1"), var("u1"), var("v1")
    a, b, c, d = labels
    if kind == "spin1":
        lhs = wt.evaluate(wt.spin1(x, u, v), labels)
        rhs = wt.gauge_factor(a, c, u, v) * wt.evaluate(wt.spin1_dual(x, v, u), (c, b, a, d))
    else:
        # the reversed fused family is defined by the gauge; check the inverse direction
        lhs = wt.evaluate(wt.fused(x, u, v), labels)
        rhs = wt.gauge_factor(a, c, u, v) * wt.evaluate(wt.fused_dual(x, v, u), (c, b, a, d))
    return lhs == rhs, lhs, rhs


def gauge_instances(max_label: int = 4) -> List[tuple]:
    out = []
    for a in range(max_label + 1):
        for b in range(2):
            for c in range(max_label + 1):
                d = a + b - c
                if 0 <= d <= 1:
                    out.append(("gauge", "spin1", (a, b, c, d)))
    for a in range(max_label + 1):
        for b in range(max_label + 1):
            for c in range(max_label + 1):
                d = a + b - c
                if 0 <= d <= max_label:
                    out.append(("gauge", "fused", (a, b, c, d)))
    return out


@_register("dual-lattice")
def _check_dual_lattice(inst):
    _, which, lam, mu, n = inst
    xs = [var(f"x{i}") for i in range(1, n + 1)]
    cols = Columns()
    if which == "j":
        lhs = skew_j_dual(lam, mu, xs, cols)
        rhs = c_lambda(lam, cols) / c_lambda(mu, cols) * skew_j(lam, mu, xs, cols.swapped())
    else:
        lhs = skew_g_dual(lam, mu, xs, cols)
        rhs = c_conjugate(lam, cols) / c_conjugate(mu, cols) * skew_g(lam, mu, xs, cols.swapped())
    return lhs == rhs, lhs, rhs


def dual_lattice_instances(max_size: int = 3, max_n: int = 2) -> List[tuple]:
    out = []
    for which in ("j", "g"):
        for lam in pt.partitions_up_to(max_size):
            for mu in pt.sub_partitions(lam):
                for n in range(1, max_n + 1):
                    out.append(("dual-lattice", which, lam, mu, n))
    return out


# Cauchy identities


def _graded(n: int, m: int, columns: Columns, width: int) -> List[str]:
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, m + 1)]
    for i in range(1, width + 1):
        for p in columns.pair(i):
            names.extend(v.name for v in p.variables() if v.kind in "uv")
    return sorted(set(names))


def _tmul(a: RingElem, b: RingElem, graded, D) -> RingElem:
    return (a.truncate(graded, D) * b.truncate(graded, D)).truncate(graded, D)


def _kernel(kind: str, n: int, m: int, graded, D) -> RingElem:
    out = ONE
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            z = var(f"x{i}") * var(f"y{j}")
            if kind == "j":
                f = (1 - Q * z) / (1 - z)
            elif kind == "g":
                # z has degree 2 in the grading
                f = inverse_q_pochhammer_infinite(z, D // 2)
            else:
                f = 1 + z
            out = _tmul(out, f, graded, D)
    return out


def cauchy_columns(mode: str = "uniform") -> Columns:
    if mode == "uniform":
        return Columns.make(var("u1"), var("v1"))
    if mode == "columns":
        return Columns()
    raise ValueError(f"unknown column mode {mode!r}")


def _kappa_up(lam, mu, D):
    base = pt.union(lam, mu)
    extra_max = (pt.size(lam) + pt.size(mu) + D) // 2 - pt.size(base)
    if extra_max < 0:
        return []
    return [k for k in pt.super_partitions(base, extra_max)
            if 2 * pt.size(k) - pt.size(lam) - pt.size(mu) <= D]


def cauchy_sides(kind: str, lam: Partition, mu: Partition, n: int, m: int, D: int,
                 columns: Columns, norm: str = "columns", perturbation: tuple = ()) -> Tuple[RingElem, RingElem]:
    """Truncated left and right sides of one Cauchy identity."""
    xs = [var(f"x{i}") for i in range(1, n + 1)]
    ys = [var(f"y{j}") for j in range(1, m + 1)]
    sw = columns.swapped()
    kappas = _kappa_up(lam, mu, D)
    width = max([pt.part(k, 1) for k in kappas] + [len(k) for k in kappas] + [pt.part(lam, 1), pt.part(mu, 1), len(lam), len(mu), 1]) + 1
    graded = _graded(n, m, columns, width)
    down = [k for k in pt.sub_partitions(pt.intersection(lam, mu))]

    def c(part, conj):
        if norm == "global":
            u, v = columns.pair(1)
            mults = pt.conjugate_multiplicities(part, len(part)) if conj else pt.multiplicities(part, pt.part(part, 1))
            return normalization(mults, Columns.make(u, v))
        return c_conjugate(part, columns) if conj else c_lambda(part, columns)

    lhs = ZERO
    rhs_sum = ZERO
    if kind == "j":
        for k in kappas:
            term = _tmul(c(k, False) / c(lam, False) * skew_j(k, lam, xs, sw), skew_j(k, mu, ys, columns), graded, D)
            lhs = lhs + term
        for k in down:
            rhs_sum = rhs_sum + _tmul(c(mu, False) / c(k, False) * skew_j(mu, k, xs, sw), skew_j(lam, k, ys, columns), graded, D)
    elif kind == "g":
        for k in kappas:
            gx = skew_g(k, lam, xs, sw, perturbation=perturbation)
            gy = skew_g(k, mu, ys, columns, perturbation=perturbation)
            lhs = lhs + _tmul(c(k, True) / c(lam, True) * gx, gy, graded, D)
        for k in down:
            gx = skew_g(mu, k, xs, sw, perturbation=perturbation)
            gy = skew_g(lam, k, ys, columns, perturbation=perturbation)
            rhs_sum = rhs_sum + _tmul(c(mu, True) / c(k, True) * gx, gy, graded, D)
    elif kind == "mixed":
        conj = pt.conjugate
        for k in kappas:
            gx = skew_g(k, lam, xs, columns, perturbation=perturbation)
            jy = skew_j(conj(k), conj(mu), ys, sw)
            lhs = lhs + _tmul(c(k, True) / c(mu, True) * gx, jy, graded, D)
        for k in down:
            gx = skew_g(mu, k, xs, columns, perturbation=perturbation)
            jy = skew_j(conj(lam), conj(k), ys, sw)
            rhs_sum = rhs_sum + _tmul(c(lam, True) / c(k, True) * gx, jy, graded, D)
    else:
        raise UnknownIdentity(f"unknown Cauchy identity {kind!r}")
    rhs = _tmul(_kernel(kind, n, m, graded, D), rhs_sum, graded, D)
    return lhs, rhs


@_register("cauchy")
def _check_cauchy(inst):
    _, kind, lam, mu, n, m, D, mode, norm, perturbation = inst
    lhs, rhs = cauchy_sides(kind, lam, mu, n, m, D, cauchy_columns(mode), norm, perturbation)
    return lhs == rhs, lhs, rhs


CAUCHY_PARTITIONS = ((), (1,), (2,), (1, 1))


def cauchy_instances(kind: str, degree: int = 3, nm: Iterable[int] = (1, 2),
                     partitions: Sequence[Partition] = CAUCHY_PARTITIONS, mode: str = "uniform",
                     norm: str = "columns", perturbation: tuple = ()) -> List[tuple]:
    out = []
    for k in nm:
        for lam in partitions:
            for mu in partitions:
                out.append(("cauchy", kind, lam, mu, k, k, degree, mode, norm, perturbation))
    return out


# fusion


def _fusion_normalizer(j: int, L: int) -> RingElem:
    return Q ** (j * (j - 1) // 2) * q_binomial(L, j)


def _left_weight(a: Sequence[int]) -> RingElem:
    return Q ** sum(m * am for m, am in enumerate(a))


def _binary_words(L: int, ones: int):
    for pos in itertools.combinations(range(L), ones):
        yield tuple(1 if i in pos else 0 for i in range(L))


def fused_row_from_spin1(L: int, M: int, x: RingElem, ys: Sequence[RingElem],
                         bottom: Sequence[int], top: Sequence[int], left: int, right: int) -> RingElem:
    """L spin-1 rows with spectral parameters x, xq, ..., xq^(L-1) (bottom to top) over
    columns of spin M, weighted by q^(sum (m-1) a_m) / Z over the left labels a."""
    ncols = len(ys)
    total = ZERO
    for a in _binary_words(L, left):
        for b in _binary_words(L, right):
            state = {tuple(bottom): ONE}
            for r in range(L):
                fams = [wt.general(x * Q ** r / ys[k], 1, M) for k in range(ncols)]
                nxt = {}
                for occ, w0 in state.items():
                    partial = {((), a[r]): w0}
                    for k in range(ncols):
                        nn = {}
                        for (prefix, h), w in partial.items():
                            for d in range(2):
                                c = occ[k] + h - d
                                if c < 0 or c > M:
                                    continue
                                wv = wt.evaluate(fams[k], (occ[k], h, c, d))
                                if wv.is_zero():
                                    continue
                                key = (prefix + (c,), d)
                                nn[key] = nn[key] + w * wv if key in nn else w * wv
                        partial = nn
                    for (prefix, h), w in partial.items():
                        if h == b[r]:
                            nxt[prefix] = nxt[prefix] + w if prefix in nxt else w
                state = nxt
            total = total + _left_weight(a) * state.get(tuple(top), ZERO)
    return total / _fusion_normalizer(left, L)


def fused_row_direct(L: int, M: int, x: RingElem, ys: Sequence[RingElem],
                     bottom: Sequence[int], top: Sequence[int], left: int, right: int) -> RingElem:
    partial = {left: ONE}
    for k, y in enumerate(ys):
        fam = wt.general(x / y, L, M)
        nxt = {}
        for h, w in partial.items():
            d = bottom[k] + h - top[k]
            if 0 <= d <= L:
                wv = wt.evaluate(fam, (bottom[k], h, top[k], d))
                if not wv.is_zero():
                    nxt[d] = nxt.get(d, ZERO) + w * wv
        partial = nxt
    return partial.get(right, ZERO)


@_register("fusion")
def _check_fusion(inst):
    _, L, M, bottom, top, left, right = inst
    x = var("x1")
    ys = [var(f"y{k + 1}") for k in range(len(bottom))]
    lhs = fused_row_direct(L, M, x, ys, bottom, top, left, right)
    rhs = fused_row_from_spin1(L, M, x, ys, bottom, top, left, right)
    return lhs == rhs, lhs, rhs


def fusion_instances(L: int = 2, M: int = 2, columns: Iterable[int] = (1, 2)) -> List[tuple]:
    out = []
    for ncols in columns:
        for bottom in itertools.product(range(M + 1), repeat=ncols):
            for top in itertools.product(range(M + 1), repeat=ncols):
                for left in range(L + 1):
                    right = sum(bottom) + left - sum(top)
                    if 0 <= right <= L:
                        out.append(("fusion", L, M, bottom, top, left, right))
    return out


# symmetry, stability, brute force, degenerations


def _lattice_fn(which):
    return {"j": skew_j, "g": skew_g, "j-dual": skew_j_dual, "g-dual": skew_g_dual}[which]


def _structural_columns(mode: str) -> Columns:
    return Columns() if mode == "columns" else Columns.make(var("u1"), var("v1"))


@lru_cache(maxsize=4096)
def _structural_value(which: str, lam: Partition, mu: Partition, xs: Tuple, mode: str) -> RingElem:
    """Lattice value with spectral parameters given as variable names or 0; shared by two suites."""
    spectral = [var(x) if isinstance(x, str) else x for x in xs]
    return _lattice_fn(which)(lam, mu, spectral, _structural_columns(mode))


@_register("symmetry")
def _check_symmetry(inst):
    _, which, lam, mu, n, i, mode = inst
    xs = [f"x{k}" for k in range(1, n + 1)]
    swapped = list(xs)
    swapped[i - 1], swapped[i] = xs[i], xs[i - 1]
    lhs = _structural_value(which, lam, mu, tuple(xs), mode)
    rhs = _structural_value(which, lam, mu, tuple(swapped), mode)
    return lhs == rhs, lhs, rhs


def _skew_pairs(max_size: int, skew: bool):
    for lam in pt.partitions_up_to(max_size):
        for mu in (pt.sub_partitions(lam) if skew else [()]):
            yield lam, mu


def symmetry_instances(max_size: int = 5, ns: Iterable[int] = (2, 3), skew: bool = True,
                       mode: str = "columns") -> List[tuple]:
    out = []
    for which in ("j", "g"):
        for n in ns:
            for lam, mu in _skew_pairs(max_size, skew):
                for i in range(1, n):
                    out.append(("symmetry", which, lam, mu, n, i, mode))
    return out


@_register("stability")
def _check_stability(inst):
    _, which, lam, mu, n, mode = inst
    xs = tuple(f"x{k}" for k in range(1, n + 1))
    lhs = _structural_value(which, lam, mu, xs + (0,), mode)
    rhs = _structural_value(which, lam, mu, xs, mode)
    return lhs == rhs, lhs, rhs


def stability_instances(max_size: int = 5, ns: Iterable[int] = (2, 3), skew: bool = True,
                        mode: str = "columns") -> List[tuple]:
    out = []
    for which in ("j", "g"):
        for n in ns:
            for lam, mu in _skew_pairs(max_size, skew):
                out.append(("stability", which, lam, mu, n, mode))
    return out


@_register("brute-force")
def _check_brute_force(inst):
    _, which, lam, mu, n = inst
    xs = [var(f"x{k}") for k in range(1, n + 1)]
    fn = _lattice_fn(which)
    lhs = fn(lam, mu, xs, Columns())
    rhs = fn(lam, mu, xs, Columns(), brute_force=True)
    return lhs == rhs, lhs, rhs


def brute_force_instances(max_size: int = 4, max_n: int = 2) -> List[tuple]:
    out = []
    for which in ("j", "g", "j-dual", "g-dual"):
        for n in range(1, max_n + 1):
            for lam in pt.partitions_up_to(max_size):
                for mu in pt.sub_partitions(lam):
                    out.append(("brute-force", which, lam, mu, n))
    return out


@_register("degeneration")
def _check_degeneration(inst):
    _, tag_value, lam, mu, n = inst
    tag = FamilyTag(tag_value)
    xs = [var(f"x{k}") for k in range(1, n + 1)]
    lhs = lattice_degeneration(tag, lam, mu, xs)
    rhs = multivar_oracle(tag, lam, mu, xs)
    return lhs == rhs, lhs, rhs


SCHUR_POINTS = ((2, 3, 5), (-1, 4, 7), (1, -3, 11))


@_register("schur-points")
def _check_schur_points(inst):
    _, lam, n = inst
    xs = [var(f"x{k}") for k in range(1, n + 1)]
    poly = lattice_degeneration(FamilyTag.SCHUR, lam, (), xs)
    ok = True
    lhs_all, rhs_all = [], []
    for pts in SCHUR_POINTS:
        pts = pts[:n]
        lhs = poly.substitute({f"x{k + 1}": p for k, p in enumerate(pts)})
        rhs = RingElem.of(schur_bialternant(lam, pts))
        ok = ok and lhs == rhs
        lhs_all.append(str(lhs))
        rhs_all.append(str(rhs))
    return ok, "; ".join(lhs_all), "; ".join(rhs_all)


def degeneration_instances(max_size: int = 5, ns: Iterable[int] = (1, 2, 3),
                           tags: Iterable[FamilyTag] = tuple(FamilyTag)) -> List[tuple]:
    out = []
    for tag in tags:
        for n in ns:
            for lam in pt.partitions_up_to(max_size):
                out.append(("degeneration", tag.value, lam, (), n))
    for n in ns:
        for lam in pt.partitions_up_to(max_size):
            out.append(("schur-points", lam, n))
    return out


# suite registry


def _suite_instances(name: str, **opts) -> List[tuple]:
    if name == "ybe":
        L, M, N = opts.get("L", 1), opts.get("M", 1), opts.get("N", 1)
        out = ybe_instances(L, M, N)
        for kind in RLL_KINDS:
            out += rll_instances(kind, opts.get("max_label", 3))
        return out
    if name == "stochastic":
        return stochastic_instances(opts.get("max_spin", 3), opts.get("max_label", 3))
    if name == "gauge":
        return gauge_instances(opts.get("max_label", 4)) + dual_lattice_instances(3, 2)
    if name in ("cauchy-j", "cauchy-g", "cauchy-mixed"):
        kind = name.split("-", 1)[1]
        return cauchy_instances(kind, opts.get("degree", 3), opts.get("nm", (1, 2)),
                                opts.get("partitions", CAUCHY_PARTITIONS), mode=opts.get("mode", "uniform"))
    if name == "fusion":
        out = []
        for L, M in opts.get("spins", ((2, 2), (2, 3))):
            out += fusion_instances(L, M, (1, 2))
        return out
    if name == "degenerations":
        return degeneration_instances(opts.get("max_size", 5), opts.get("ns", (1, 2, 3)))
    if name == "symmetry":
        return symmetry_instances(opts.get("max_size", 5), opts.get("ns", (2, 3)), mode=opts.get("mode", "columns"))
    if name == "stability":
        return stability_instances(opts.get("max_size", 5), opts.get("ns", (2, 3)), mode=opts.get("mode", "columns"))
    if name == "brute-force":
        return brute_force_instances(opts.get("max_size", 4), opts.get("max_n", 2))
    raise UnknownIdentity(f"no suite named {name!r}")


SUITES = ("ybe", "stochastic", "gauge", "cauchy-j", "cauchy-g", "cauchy-mixed", "fusion",
          "degenerations", "symmetry", "stability", "brute-force")


def run_suite(name: str, jobs: int = 1, **opts) -> VerificationReport:
    if name not in SUITES:
        raise UnknownIdentity(f"no suite named {name!r}; choose from {', '.join(SUITES)} or all")
    return run_instances(name, _suite_instances(name, **opts), jobs)


# convenience wrappers with the natural signatures


def verify_ybe(L: int, M: int, N: int, jobs: int = 1) -> VerificationReport:
    return run_instances("ybe", ybe_instances(L, M, N), jobs)


def verify_rll(kind: str, max_label: int = 3, jobs: int = 1, perturbation: tuple = ()) -> VerificationReport:
    return run_instances(f"rll-{kind}", rll_instances(kind, max_label, perturbation), jobs)


def verify_stochastic(max_spin: int = 3, max_label: int = 3, jobs: int = 1) -> VerificationReport:
    return run_instances("stochastic", stochastic_instances(max_spin, max_label), jobs)


def verify_gauge(max_label: int = 4, jobs: int = 1) -> VerificationReport:
    return run_instances("gauge", gauge_instances(max_label), jobs)


def verify_cauchy(kind: str, lam: Partition, mu: Partition, n: int, m: int, degree: int = 3,
                  mode: str = "uniform", norm: str = "columns", perturbation: tuple = ()) -> VerificationReport:
    inst = ("cauchy", kind, pt.partition(lam), pt.partition(mu), n, m, degree, mode, norm, perturbation)
    return run_instances(f"cauchy-{kind}", [inst])


def verify_cauchy_j(lam, mu, n, m, degree=3, **kw) -> VerificationReport:
    return verify_cauchy("j", lam, mu, n, m, degree, **kw)


def verify_cauchy_g(lam, mu, n, m, degree=3, **kw) -> VerificationReport:
    return verify_cauchy("g", lam, mu, n, m, degree, **kw)


def verify_cauchy_mixed(lam, mu, n, m, degree=3, **kw) -> VerificationReport:
    return verify_cauchy("mixed", lam, mu, n, m, degree, **kw)


def verify_fusion(L: int, M: int, columns: Iterable[int] = (1, 2), jobs: int = 1) -> VerificationReport:
    return run_instances(f"fusion-{L}-{M}", fusion_instances(L, M, columns), jobs)


def verify_symmetry(which: str, lam: Partition, mu: Partition, n: int, mode: str = "columns") -> VerificationReport:
    return run_instances("symmetry", [("symmetry", which, pt.partition(lam), pt.partition(mu), n, i, mode)
                                      for i in range(1, n)])


def verify_stability(which: str, lam: Partition, mu: Partition, n: int, mode: str = "columns") -> VerificationReport:
    return run_instances("stability", [("stability", which, pt.partition(lam), pt.partition(mu), n, mode)])
