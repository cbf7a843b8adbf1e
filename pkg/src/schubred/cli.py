"""Command line front end.  Every command prints one JSON document.

Exit codes: 0 on success, 1 when the input violates a hypothesis (the JSON
then carries an ``error`` object), 2 on malformed command lines.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import lr
from .branch import NotDivisibleError, PreconditionError, branch_class, face_functional, gl_lifts, theta
from .reduce import (
    LR2Triple,
    UnsupportedError,
    alternating_multiplicity,
    lr2_orbit,
    multiplicity,
    theta_stretch_check,
    verify_main_theo,
)
from .rootsys import ParabolicData, RootSystem, Weight, parse_group, parse_weight
from .schubert import BACKENDS, bk_intersection_number, intersection_number, richmond_bk_twostep
from .tensor import dimension, tensor_decompose, triple_invariants
from .weyl import WeylElt, flag_to_weyl, min_rep, parse_weyl, subset_to_weyl

SAFE = 2 ** 53


class UsageError(Exception):
    pass


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    raise TypeError(f"cannot encode {type(x).__name__}")


def _big_ints(x):
    # integers beyond the double-precision range go out as strings
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= SAFE else x
    if isinstance(x, dict):
        return {k: _big_ints(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_big_ints(v) for v in x]
    return x


def dumps(obj) -> str:
    return json.dumps(_big_ints(obj), sort_keys=True, default=_json_default)


# argument parsing -----------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def _partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("p:"):
        text = text[2:]
    try:
        return lr.as_partition(_ints(text))
    except ValueError as e:
        raise UsageError(str(e)) from None


def parse_target(spec: Sequence[str], omit: Optional[str]) -> tuple[RootSystem, Optional[ParabolicData]]:
    """``A5``, ``A5 gr 3`` or ``B4`` with ``--omit 1``."""
    if not spec:
        raise UsageError("missing group, e.g. A5")
    try:
        s = parse_group(spec[0])
    except ValueError as e:
        raise UsageError(str(e)) from None
    rest = list(spec[1:])
    nodes: Optional[tuple[int, ...]] = None
    if rest:
        if len(rest) != 2 or rest[0] != "gr":
            raise UsageError(f"expected 'gr r' after the group, got {' '.join(rest)!r}")
        nodes = _ints(rest[1])
    if omit is not None:
        if nodes is not None:
            raise UsageError("give either 'gr r' or --omit, not both")
        nodes = _ints(omit)
    if nodes is None:
        return s, None
    try:
        return s, ParabolicData.of(s, nodes)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _element(text: str, s: RootSystem, P: Optional[ParabolicData]) -> tuple[WeylElt, ParabolicData]:
    text = text.strip()
    if text.startswith("["):
        w = parse_weyl(s, text)
        if P is None:
            raise UsageError("one-line elements need 'gr r' or --omit")
        return w, P
    if "/" in text:
        chain = [_ints(x) for x in text.split("/")]
        Q = P or ParabolicData.of(s, sorted(len(c) for c in chain))
        return flag_to_weyl(chain, Q), Q
    I = _ints(text)
    if P is None:
        raise UsageError("subsets need 'gr r' or --omit")
    return subset_to_weyl(I, P), P


def parse_elements(args, s: RootSystem, P: Optional[ParabolicData]) -> tuple[list[WeylElt], ParabolicData]:
    texts = []
    for name in ("I", "J", "K"):
        v = getattr(args, name, None)
        if v is not None:
            texts.append(v)
    texts += list(getattr(args, "v", None) or [])
    if len(texts) < 2:
        raise UsageError("give the Schubert classes with --I --J --K or repeated --v")
    vs = []
    for t in texts:
        try:
            w, P = _element(t, s, P)
        except ValueError as e:
            raise PreconditionError(str(e)) from None
        vs.append(w)
    return vs, P


def parse_weights(texts: Sequence[str], s: RootSystem) -> list[Weight]:
    """``w:[a,b,...]`` (fundamental coordinates) or, in type A, ``p:...`` GL parts."""
    out = []
    for t in texts:
        t = t.strip()
        try:
            if t.startswith("w:"):
                out.append(parse_weight(s, t))
                continue
            if t.startswith("p:"):
                if s.kind != "A":
                    raise UsageError("p: weights are GL weights, type A only")
                parts = _ints(t[2:])
                if len(parts) > s.N:
                    raise UsageError(f"{parts} is longer than {s.N}")
                parts = parts + (0,) * (s.N - len(parts))
                out.append(s.weight_from_eps2(tuple(2 * x for x in parts)))
                continue
        except ValueError as e:
            raise UsageError(str(e)) from None
        raise UsageError(f"bad weight {t!r}; use w:[...] or p:...")
    return out


# commands -------------------------------------------------------------------


def cmd_coeff(args) -> dict:
    if args.n is not None and args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.lr:
        lam, mu, nu = (_partition(x) for x in args.lr)
        return {"lr": lr.lr_coefficient(lam, mu, nu)}
    if args.flag:
        if args.sizes is None:
            raise UsageError("--flag needs --sizes p,q,n")
        p, q, n = _ints(args.sizes)
        flags = []
        for f in args.flag:
            if "/" not in f:
                raise UsageError(f"flag {f!r} must look like 3,6,9/2,3,5,6,8,9")
            a, b = f.split("/", 1)
            flags.append((_ints(a), _ints(b)))
        try:
            return {"c_bk": richmond_bk_twostep(flags, p, q, n)}
        except ValueError as e:
            raise PreconditionError(str(e)) from None
    s, P = parse_target(args.target, args.omit)
    vs, P = parse_elements(args, s, P)
    if args.n is not None and args.n != len(vs):
        raise UsageError(f"--n {args.n} but {len(vs)} classes given")
    return {"c": intersection_number(vs, P, args.backend), "c_bk": bk_intersection_number(vs, P, args.backend)}


def _report(args):
    s, P = parse_target(args.target, args.omit)
    vs, P = parse_elements(args, s, P)
    return branch_class(vs, P, args.backend)


def cmd_branch_class(args) -> dict:
    return _report(args).to_json()


def cmd_theta(args) -> dict:
    rep = _report(args)
    th = theta(rep)
    out = {"theta": [str(t) for t in th], "on_face": rep.flags["theta_on_face"]}
    if rep.P.system.kind == "A":
        gl = gl_lifts(th)
        if gl is not None:
            out["theta_gl"] = [list(p) for p in gl]
    else:
        out["theta_eps"] = [[str(x) if x.denominator != 1 else int(x) for x in t.eps] for t in th]
    return out


def _theta_from(args, vs, P):
    if args.theta_omit is None:
        return None
    Q = ParabolicData.of(P.system, _ints(args.theta_omit))
    if not set(Q.omitted) <= set(P.omitted):
        raise UsageError("--theta-omit must be a subset of the omitted nodes")
    rep = branch_class([min_rep(v, Q) for v in vs], Q, args.backend)
    return theta(rep)


def cmd_reduce_verify(args) -> dict:
    s, P = parse_target(args.target, args.omit)
    vs, P = parse_elements(args, s, P)
    if args.stretch is not None:
        return {"rows": theta_stretch_check(vs, P, args.stretch)}
    zetas = parse_weights(args.zeta or [], s)
    if len(zetas) != len(vs):
        raise UsageError("give one --zeta per class")
    return verify_main_theo(zetas, vs, P, _theta_from(args, vs, P)).to_json()


def cmd_alt_sum(args) -> dict:
    s, P = parse_target(args.target, args.omit)
    vs, P = parse_elements(args, s, P)
    zetas = parse_weights(args.zeta or [], s)
    if len(zetas) != len(vs):
        raise UsageError("give one --zeta per class")
    th = _theta_from(args, vs, P)
    res = alternating_multiplicity(zetas, vs, P, theta=th, k_max=args.k_max)
    out = res.to_json()
    if args.direct:
        out["direct"] = multiplicity(zetas)
    return out


def cmd_lr2_orbit(args) -> dict:
    lam, mu, nu = (_partition(x) for x in (args.lam, args.mu, args.nu))
    try:
        t = LR2Triple(lam, mu, nu, args.r)
    except ValueError as e:
        raise PreconditionError(str(e)) from None
    return lr2_orbit(t, args.max_steps).to_json()


def cmd_tensor(args) -> dict:
    s, _ = parse_target(args.target, None)
    ws = parse_weights(args.zeta or [], s)
    if args.dim:
        if len(ws) != 1:
            raise UsageError("--dim takes exactly one weight")
        return {"dim": dimension(ws[0])}
    if args.decompose:
        if len(ws) != 2:
            raise UsageError("--decompose takes exactly two weights")
        dec = tensor_decompose(*ws)
        return {"decomposition": {w.encode(): m for w, m in sorted(dec.items(), key=lambda x: x[0].coords)}}
    if len(ws) < 1:
        raise UsageError("give weights with --zeta")
    return {"m": triple_invariants(*ws)}


def cmd_horn(args) -> dict:
    s, P = parse_target(args.target, args.omit)
    vs, P = parse_elements(args, s, P)
    c = intersection_number(vs, P, args.backend)
    if c == 0:
        raise PreconditionError("c(v) = 0, there is no inequality")
    funcs = face_functional(vs, P)
    return {"c": c, "functional": {str(node): rows for node, rows in funcs.items()},
            "reading": "sum over factors of <coefficients, zeta_i in epsilon coordinates> <= 0"}


def cmd_puzzle(args) -> dict:
    sides = args.sides
    if len(sides) != 3:
        raise UsageError("give three boundary strings")
    if all(set(x) <= {"1", "2"} for x in sides):
        n = len(sides[0])
        subsets = [lr.paper_string_to_subset(x) for x in sides]
        if any(len(x) != n for x in sides):
            raise UsageError("the three sides must have the same length")
        try:
            return {"puzzles": lr.grassmannian_puzzle_count(*subsets, n)}
        except ValueError as e:
            raise PreconditionError(str(e)) from None
    try:
        return {"puzzles": lr.puzzle_count(*sides)}
    except ValueError as e:
        raise PreconditionError(str(e)) from None


def cmd_paper_suite(args) -> dict:
    from . import _golden
    rows = _golden.run_all(args.jobs, args.timings)
    return {"checks": rows, "passed": sum(r["ok"] for r in rows), "total": len(rows),
            "ok": all(r["ok"] for r in rows)}


# parser ---------------------------------------------------------------------


def _add_classes(p: argparse.ArgumentParser) -> None:
    p.add_argument("target", nargs="*", help="group and optional 'gr r', e.g. A5 gr 3")
    p.add_argument("--omit", help="omitted simple roots, e.g. 2,6")
    p.add_argument("--I", help="subset, chain a/b of subsets, or one-line element")
    p.add_argument("--J")
    p.add_argument("--K")
    p.add_argument("--v", action="append", help="further classes (repeatable)")
    p.add_argument("--backend", choices=BACKENDS, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubred", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="intersection, BK and LR numbers")
    _add_classes(p)
    p.add_argument("--n", type=int, help="number of classes (at least 2)")
    p.add_argument("--lr", nargs=3, metavar=("LAM", "MU", "NU"), help="c_{lam,mu}^nu of partitions")
    p.add_argument("--flag", action="append", help="two-step flag a/b (repeat three times)")
    p.add_argument("--sizes", help="p,q,n for --flag")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("branch-class", help="coefficients of the branch divisor")
    _add_classes(p)
    p.set_defaults(func=cmd_branch_class)

    p = sub.add_parser("theta", help="half the branch divisor as weights")
    _add_classes(p)
    p.set_defaults(func=cmd_theta)

    for name, func, help_ in (("reduce-verify", cmd_reduce_verify, "m(zeta) + m(zeta - theta) = m_L"),
                              ("alt-sum", cmd_alt_sum, "alternating sum of Levi multiplicities")):
        p = sub.add_parser(name, help=help_)
        _add_classes(p)
        p.add_argument("--zeta", action="append", help="weight w:[...] or p:... (repeatable)")
        p.add_argument("--theta-omit", help="take theta from the coarser parabolic omitting these nodes")
        if name == "reduce-verify":
            p.add_argument("--stretch", type=int, metavar="K_MAX", help="tabulate m(k theta) for k <= K_MAX")
        else:
            p.add_argument("--k-max", type=int, default=10_000)
            p.add_argument("--direct", action="store_true", help="also compute m_G directly")
        p.set_defaults(func=func)

    p = sub.add_parser("lr2-orbit", help="orbit of a triple with LR coefficient 2")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-steps", type=int, default=10)
    p.set_defaults(func=cmd_lr2_orbit)

    p = sub.add_parser("tensor", help="invariants, dimensions and decompositions")
    p.add_argument("target", nargs=1, help="group, e.g. B4")
    p.add_argument("--zeta", action="append")
    p.add_argument("--dim", action="store_true")
    p.add_argument("--decompose", action="store_true")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("horn", help="linear form of the face of a triple")
    _add_classes(p)
    p.set_defaults(func=cmd_horn)

    p = sub.add_parser("puzzle", help="count Grassmannian puzzles")
    p.add_argument("sides", nargs="+", help="three 0/1 strings, or three 1/2 strings")
    p.set_defaults(func=cmd_puzzle)

    p = sub.add_parser("paper-suite", help="re-run the golden examples")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true", help="add wall-clock seconds per check")
    p.set_defaults(func=cmd_paper_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    func: Callable = args.func
    try:
        out = func(args)
    except UsageError as e:
        parser.error(str(e))
    except (PreconditionError, UnsupportedError, NotDivisibleError) as e:
        kind = {PreconditionError: "precondition", UnsupportedError: "unsupported",
                NotDivisibleError: "not-divisible"}[type(e)]
        err = {"error": {"kind": kind, "message": str(e)}}
        if isinstance(e, NotDivisibleError):
            err["error"]["coefficients"] = [
                {"factor": m + 1, "node": a, "value": v} for (m, a), v in sorted(e.coefficients.items()) if v]
        print(dumps(err))
        return 1
    except ValueError as e:
        print(dumps({"error": {"kind": "invalid-argument", "message": str(e)}}))
        return 1
    print(dumps(out))
    if args.command == "paper-suite" and not out["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
