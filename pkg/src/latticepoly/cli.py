"""Command-line front end.

Verbs:

* ``compute``: a lattice partition function (J, G and their duals) or a
  named family via its lattice specialization;
* ``oracle``: a named family via its independent chain-sum oracle;
* ``expand``: an expansion table, optionally certified;
* ``verify``: one identity suite, or all of them.

Exit codes: 0 success, 1 a verification or certification failed, 2 the
input could not be parsed, 3 the computation is undefined for the given
input (width too small, a vanishing denominator, a non-triangular basis).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import identities
from . import partitions as pt
from .algebra import RingElem, VarId, var
from .errors import (GridTooSmall, InvalidPartition, NotSeriesExpandable, NotTriangular, UnknownIdentity,
                     UnknownVariable, WidthTooSmall, ZeroDenominator)
from .expansions import KIND_BASES, SOURCES, ExpansionKind, Law, certify, coeff, expand
from .families import FamilyParams, FamilyTag, lattice_degeneration, multivar_oracle
from .lattice import Columns, skew_g, skew_g_dual, skew_j, skew_j_dual

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNDEFINED = 0, 1, 2, 3

LATTICES = {"J": skew_j, "G": skew_g, "J-dual": skew_j_dual, "G-dual": skew_g_dual}


class ParseError(Exception):
    pass


# serialization


def poly_to_json(value: RingElem) -> dict:
    names = sorted({v for which in ("num", "den") for mono, _ in value.terms(which) for v in mono},
                   key=lambda v: v.position)

    def encode(which):
        return [{"exp": {v.name: e for v, e in sorted(mono.items(), key=lambda t: t[0].position)},
                 "coef": f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)}
                for mono, c in value.terms(which)]

    return {"vars": [v.name for v in names], "num": encode("num"), "den": encode("den")}


def poly_from_json(data: dict) -> RingElem:
    def decode(terms):
        total = RingElem.of(0)
        for t in terms:
            term = RingElem.of(_fraction(t["coef"]))
            for name, e in t["exp"].items():
                term = term * var(name) ** int(e)
            total = total + term
        return total

    return decode(data["num"]) / decode(data["den"])


def _fraction(text: str):
    from fractions import Fraction
    return Fraction(text)


# parameter bindings


def parse_bindings(items: Sequence[str]) -> Tuple[Dict[str, RingElem], Dict[Tuple[str, int], RingElem], Dict[str, RingElem]]:
    """Split ``--set`` items into whole-sequence column bindings, single-column
    bindings and plain variable bindings (q, x_i, y_i, alpha)."""
    seq: Dict[str, RingElem] = {}
    single: Dict[Tuple[str, int], RingElem] = {}
    plain: Dict[str, RingElem] = {}
    for item in items:
        if "=" not in item:
            raise ParseError(f"binding {item!r} is not of the form name=value")
        name, value = (s.strip() for s in item.split("=", 1))
        try:
            val = RingElem.of(value)
        except Exception as exc:
            raise ParseError(f"cannot parse value in binding {item!r}") from exc
        if name in ("u", "v"):
            seq[name] = val
        elif name in ("alpha", "beta"):
            plain["w1"] = val
        elif name == "q":
            plain["q"] = val
        else:
            try:
                vid = VarId.parse(name)
            except (UnknownVariable, ValueError) as exc:
                raise ParseError(f"unknown parameter in binding {item!r}") from exc
            if vid.kind in ("u", "v"):
                single[(vid.kind, vid.index)] = val
            else:
                plain[vid.name] = val
    return seq, single, plain


def _substitute(value: RingElem, plain: Dict[str, RingElem]) -> RingElem:
    # one binding at a time so an undefined result names its cause
    for name, val in plain.items():
        try:
            value = value.substitute({name: val})
        except ZeroDenominator as exc:
            raise ZeroDenominator(f"binding {name}={val} makes a denominator vanish") from exc
    return value


def _emit(payload, fmt: str, text: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _partition(text: str):
    try:
        return pt.parse_partition(text)
    except InvalidPartition as exc:
        raise ParseError(str(exc)) from exc


# verbs


def _family_tag(name: str) -> Optional[FamilyTag]:
    for tag in FamilyTag:
        if name in (tag.value, tag.name):
            return tag
    return None


def run_compute(args) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if args.n < 0:
        raise ParseError("--n must be nonnegative")
    xs = [var(f"x{i}") for i in range(1, args.n + 1)]
    seq, single, plain = parse_bindings(args.set)
    if args.family in LATTICES:
        cols = Columns.make(seq.get("u", "u"), seq.get("v", "v"), single)
        value = LATTICES[args.family](lam, mu, xs, cols, width=args.width, brute_force=args.brute_force)
    else:
        tag = _family_tag(args.family)
        if tag is None:
            raise ParseError(f"unknown family {args.family!r}")
        params = FamilyParams(param=plain.pop("w1", None), u=seq.get("u", "u"), v=seq.get("v", 1))
        value = lattice_degeneration(tag, lam, mu, xs, params)
    value = _substitute(value, plain)
    _emit({"family": args.family, "lambda": pt.format_partition(lam), "mu": pt.format_partition(mu),
           "n": args.n, "value": poly_to_json(value)}, args.format, str(value))
    return EXIT_OK


def run_oracle(args) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    tag = _family_tag(args.family)
    if tag is None:
        raise ParseError(f"unknown family {args.family!r}; choose from {', '.join(t.value for t in FamilyTag)}")
    xs = [var(f"x{i}") for i in range(1, args.n + 1)]
    seq, _, plain = parse_bindings(args.set)
    params = FamilyParams(param=plain.pop("w1", None), u=seq.get("u", "u"), v=seq.get("v", 1))
    value = multivar_oracle(tag, lam, mu, xs, params)
    payload = {"family": tag.value, "lambda": pt.format_partition(lam), "mu": pt.format_partition(mu),
               "n": args.n, "value": poly_to_json(_substitute(value, plain))}
    text = str(_substitute(value, plain))
    code = EXIT_OK
    if args.compare:
        agree = lattice_degeneration(tag, lam, mu, xs, params) == value
        payload["lattice_agrees"] = agree
        text += f"\nlattice agrees: {agree}"
        code = EXIT_OK if agree else EXIT_FAIL
    _emit(payload, args.format, text)
    return code


def _parse_box(text: Optional[str]) -> Optional[Tuple[int, int]]:
    if text is None:
        return None
    try:
        r, c = text.lower().split("x")
        return int(r), int(c)
    except ValueError as exc:
        raise ParseError(f"box must look like 3x3, got {text!r}") from exc


def run_expand(args) -> int:
    lam = _partition(args.lam)
    box = _parse_box(args.box)
    if args.route == "grid":
        kind = next((k for k, st in KIND_BASES.items() if st == (args.source, args.target)), None)
        if kind is None:
            raise ParseError(f"no grid for {args.source} -> {args.target}")
        rows, cols = box if box else (args.n, max(pt.part(lam, 1), 1))
        entries = {}
        for mu in pt.partitions_in_box(rows, cols):
            if len(mu) <= args.n:
                c = coeff(kind, lam, mu, args.n)
                if not c.is_zero():
                    entries[mu] = c
    else:
        entries = expand(args.source, args.target, lam, args.n, box).entries
    ordered = sorted(entries.items(), key=lambda t: (-pt.size(t[0]), tuple(-p for p in t[0])))
    payload = {"source": args.source, "target": args.target, "lambda": pt.format_partition(lam), "n": args.n,
               "entries": [{"mu": pt.format_partition(mu), "coef": poly_to_json(c)} for mu, c in ordered]}
    lines = [f"{pt.format_partition(mu)}: {c}" for mu, c in ordered]
    code = EXIT_OK
    if args.certify:
        report = certify({(lam, mu): c for mu, c in entries.items()}, Law(args.certify))
        payload["certificate"] = {"law": report.law.value, "checked": report.checked, "passed": report.passed,
                                  "failures": [pt.format_partition(f[1]) for f in report.failures]}
        lines.append(f"certificate ({report.law.value}): {'pass' if report.passed else 'FAIL'}")
        code = EXIT_OK if report.passed else EXIT_FAIL
    _emit(payload, args.format, "\n".join(lines))
    return code


def run_verify(args) -> int:
    opts = {}
    for key in ("L", "M", "N", "degree", "max_label", "max_size"):
        val = getattr(args, key)
        if val is not None:
            opts[key] = val
    if args.L is not None or args.M is not None:
        opts["spins"] = ((args.L or 2, args.M or 2),)
    if args.n is not None:
        opts["nm"] = tuple(range(1, args.n + 1))
        opts["ns"] = tuple(range(2, args.n + 1)) if args.suite in ("symmetry", "stability") else tuple(range(1, args.n + 1))
        opts["max_n"] = args.n
    box = _parse_box(args.box)
    if box is not None:
        opts["partitions"] = tuple(pt.partitions_in_box(*box))
    if args.mode:
        opts["mode"] = args.mode
    suites = identities.SUITES if args.suite == "all" else (args.suite,)
    reports = [identities.run_suite(s, jobs=args.jobs, **opts) for s in suites]
    passed = all(r.passed for r in reports)
    payload = {"passed": passed, "reports": [r.to_dict(timing=args.timing) for r in reports]}
    text = "\n".join(f"{r.identity}: {'pass' if r.passed else 'FAIL'} ({r.instances_checked} instances)"
                     + "".join(f"\n  {f.instance}" for f in r.failures[:5]) for r in reports)
    _emit(payload, args.format, text)
    return EXIT_OK if passed else EXIT_FAIL


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latticepoly", description="Exact lattice-model symmetric functions.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="text")

    c = sub.add_parser("compute", help="partition function of a lattice or a named family")
    c.add_argument("--family", required=True,
                   help=f"one of {', '.join(LATTICES)} or a family name ({', '.join(t.value for t in FamilyTag)})")
    c.add_argument("--lambda", dest="lam", required=True)
    c.add_argument("--mu", default="0")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--set", action="append", default=[], metavar="NAME=VALUE")
    c.add_argument("--width", type=int)
    c.add_argument("--brute-force", action="store_true")
    common(c)

    o = sub.add_parser("oracle", help="a named family from its closed-form branching rule")
    o.add_argument("--family", required=True)
    o.add_argument("--lambda", dest="lam", required=True)
    o.add_argument("--mu", default="0")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--set", action="append", default=[], metavar="NAME=VALUE")
    o.add_argument("--compare", action="store_true", help="also compare with the lattice specialization")
    common(o)

    e = sub.add_parser("expand", help="expansion coefficients between two bases")
    e.add_argument("--source", required=True, choices=sorted(list(SOURCES) + ["schur"]))
    e.add_argument("--target", required=True, choices=sorted(list(SOURCES) + ["schur"]))
    e.add_argument("--lambda", dest="lam", required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--box")
    e.add_argument("--route", choices=("solve", "grid"), default="solve")
    e.add_argument("--certify", choices=[law.value for law in Law])
    common(e)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--suite", required=True, choices=identities.SUITES + ("all",))
    for flag in ("L", "M", "N", "degree", "n"):
        v.add_argument(f"--{flag}", type=int)
    v.add_argument("--max-label", dest="max_label", type=int)
    v.add_argument("--max-size", dest="max_size", type=int)
    v.add_argument("--box")
    v.add_argument("--mode", choices=("uniform", "columns"))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include elapsed seconds in the JSON report")
    v.set_defaults(format="json")
    v.add_argument("--format", choices=("json", "text"), default="json")
    return p


VERBS = {"compute": run_compute, "oracle": run_oracle, "expand": run_expand, "verify": run_verify}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return VERBS[args.verb](args)
    except (ParseError, InvalidPartition, UnknownVariable, UnknownIdentity) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (WidthTooSmall, GridTooSmall, ZeroDenominator, NotTriangular, NotSeriesExpandable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED


if __name__ == "__main__":
    sys.exit(main())
