"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 no closed form for the requested case.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import abacus, block_theory, decomposition, diagram_algebra, verify
from .errors import PartDecompError, UnsupportedCase
from .fields import FieldSpec
from .labeled import LabeledMatrix
from .oracle import DEFAULT_BOUND, decomposition_matrix_oracle
from .partition_core import Partition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_delta(token: str, p: Optional[int]):
    """``x`` (outside F_p), ``ss`` (non-integral, characteristic 0) or an integer."""
    token = token.strip()
    if token == "x":
        if not p:
            raise UsageError("delta 'x' needs --p")
        return "x"
    if token == "ss":
        if p:
            raise UsageError("delta 'ss' is only meaningful in characteristic 0")
        return None
    try:
        value = int(token)
    except ValueError:
        raise UsageError(f"cannot parse delta {token!r}; expected an integer, 'x' or 'ss'") from None
    return value % p if p else value


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True)
    return str(obj)


def cmd_abacus(args) -> int:
    lam = Partition.parse(args.partition)
    seq = abacus.beta_sequence(lam, args.beads)
    core = abacus.p_core(lam, args.p, args.beads)
    gam = abacus.gamma(lam, args.beads, args.p)
    out = {"partition": lam.to_json(), "beta": list(seq.values), "gamma": list(gam), "core": core.to_json()}
    if args.delta is not None:
        m = abacus.marked_abacus(lam, args.beads, args.delta, args.p)
        out["beta_delta"] = list(abacus.beta_delta(lam, args.beads, args.delta))
        out["gamma_delta"] = list(abacus.gamma_delta(lam, args.beads, args.delta, args.p))
        out["abacus"] = m.to_json()
        picture = abacus.render_abacus(m)
    else:
        m = abacus.MarkedAbacus(args.p, args.beads, frozenset(seq.values), -1)
        picture = "\n".join(abacus.render_abacus(m).splitlines()[1:])
    if args.format == "json":
        print(_emit(out, "json"))
        return EXIT_OK
    print(picture)
    print(f"beta   = {tuple(seq.values)}")
    if args.delta is not None:
        print(f"beta_d = {tuple(out['beta_delta'])}  marker runner {m.marker}")
        print(f"Gamma_d = {tuple(out['gamma_delta'])}")
    print(f"Gamma  = {tuple(gam)}")
    print(f"{args.p}-core = {core.pretty()}")
    return EXIT_OK


def _infer_n(text: str) -> int:
    points = [abs(int(tok)) for tok in text.replace("|", " ").split()]
    return max(points, default=0)


def cmd_multiply(args) -> int:
    na = args.n if args.n is not None else _infer_n(args.a)
    nb = args.n if args.n is not None else _infer_n(args.b)
    x = diagram_algebra.parse_diagram(args.a, na)
    y = diagram_algebra.parse_diagram(args.b, nb)
    prod, loops = diagram_algebra.multiply(x, y)
    if args.format == "json":
        print(_emit({"n": prod.n, "blocks": prod.to_json()["blocks"], "delta_power": loops}, "json"))
    elif args.delta is not None and not args.symbolic:
        print(f"{Fraction(args.delta) ** loops} * {prod}")
    else:
        print(f"δ^{loops} * {prod}")
    return EXIT_OK


def cmd_blocks(args) -> int:
    if args.char0:
        delta = parse_delta(args.delta, None)
        dec = block_theory.blocks_char0(args.n, delta)
    else:
        if not args.p:
            raise UsageError("give --p or --char0")
        delta = parse_delta(args.delta, args.p)
        if delta == "x":
            dec = block_theory.blocks_outside_prime_field(args.n, args.p)
        else:
            dec = block_theory.blocks_charp(args.n, args.p, delta)
    print(_emit(dec.to_json(), "json") if args.format == "json" else dec.render())
    return EXIT_OK


def _format_matrix(mat: LabeledMatrix, fmt: str) -> str:
    if fmt == "json":
        return mat.dumps()
    if fmt == "csv":
        return mat.to_csv().rstrip("\n")
    return mat.render()


def _field_for(p: Optional[int], delta) -> FieldSpec:
    if not p:
        return FieldSpec.rationals(Fraction(1, 2) if delta is None else delta)
    if delta == "x":
        return FieldSpec.quadratic(p, "x")
    return FieldSpec.prime(p, delta)


def cmd_decomp(args) -> int:
    p = None if args.char0 else args.p
    if not args.char0 and not p:
        raise UsageError("give --p or --char0")
    delta = parse_delta(args.delta, p)
    want_theorem = args.method in ("theorem", "both")
    want_oracle = args.method in ("oracle", "both")
    theorem = None
    unsupported = None
    if want_theorem:
        try:
            if p:
                theorem = decomposition.decomp_charp_theorem(decomposition.DecompRequest(args.n, p, delta))
            else:
                theorem = decomposition.decomp_char0(args.n, delta)
        except UnsupportedCase as exc:
            unsupported = exc
    oracle = None
    if want_oracle:
        oracle = decomposition_matrix_oracle(args.n, _field_for(p, delta), seed=args.seed, bound=args.bound, jobs=args.jobs)

    if unsupported is not None:
        print(f"unsupported case: {unsupported}", file=sys.stderr)
        if oracle is not None:
            print("only the oracle result is available", file=sys.stderr)
            print(_format_matrix(oracle, args.format))
        return EXIT_UNSUPPORTED

    if args.method != "both":
        print(_format_matrix(theorem if theorem is not None else oracle, args.format))
        return EXIT_OK

    diff = theorem.diff(oracle)
    if args.format == "json":
        payload = {
            "theorem": theorem.to_json(),
            "oracle": oracle.to_json(),
            "diff": [[str(r), str(c), a, b] for r, c, a, b in diff],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print("== theorem ==")
        print(_format_matrix(theorem, args.format))
        print("== oracle ==")
        print(_format_matrix(oracle, args.format))
        print("== diff ==")
        for r, c, a, b in diff:
            print(f"{r} -> {c}: theorem {a}, oracle {b}")
        if not diff:
            print("(none)")
    return EXIT_MISMATCH if diff else EXIT_OK


def cmd_verify(args) -> int:
    results = []
    for number in verify.SUITES[args.suite]:
        res = verify.run_criterion(number, args.seed)
        results.append(res)
        if args.format != "json":
            print(res.line(), flush=True)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in results], sort_keys=True))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partdecomp", description="Blocks and decomposition matrices of partition algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    ab = sub.add_parser("abacus", help="beta-numbers, abacus picture, bead counts and p-core")
    ab.add_argument("partition", help="comma separated parts, '-' for the empty partition")
    ab.add_argument("--beads", type=int, required=True)
    ab.add_argument("--p", type=int, required=True)
    ab.add_argument("--delta", type=int)
    ab.add_argument("--format", choices=("text", "json"), default="text")
    ab.set_defaults(func=cmd_abacus)

    mu = sub.add_parser("multiply", help="concatenate two set-partition diagrams")
    mu.add_argument("a")
    mu.add_argument("b")
    mu.add_argument("--n", type=int)
    mu.add_argument("--symbolic", action="store_true", help="keep delta symbolic (default unless --delta)")
    mu.add_argument("--delta", type=str)
    mu.add_argument("--format", choices=("text", "json"), default="text")
    mu.set_defaults(func=cmd_multiply)

    bl = sub.add_parser("blocks", help="block decomposition of the cell module labels")
    bl.add_argument("--n", type=int, required=True)
    bl.add_argument("--p", type=int)
    bl.add_argument("--char0", action="store_true")
    bl.add_argument("--delta", required=True)
    bl.add_argument("--format", choices=("text", "json"), default="text")
    bl.set_defaults(func=cmd_blocks)

    de = sub.add_parser("decomp", help="decomposition matrix by theorem, oracle or both")
    de.add_argument("--n", type=int, required=True)
    de.add_argument("--p", type=int)
    de.add_argument("--char0", action="store_true")
    de.add_argument("--delta", required=True)
    de.add_argument("--method", choices=("theorem", "oracle", "both"), default="theorem")
    de.add_argument("--format", choices=("text", "json", "csv"), default="text")
    de.add_argument("--seed", type=int, default=0)
    de.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    de.add_argument("--jobs", type=int, default=1)
    de.set_defaults(func=cmd_decomp)

    ve = sub.add_parser("verify", help="run the acceptance checks")
    ve.add_argument("--suite", choices=tuple(verify.SUITES), default="core")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--format", choices=("text", "json"), default="text")
    ve.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) < 0:
        parser.error("--seed must be non-negative")
    try:
        return args.func(args)
    except UnsupportedCase as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (UsageError, PartDecompError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
