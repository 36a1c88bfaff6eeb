"""Command-line front end.

Subcommands: ``sqrt`` (solve), ``verify`` (residual of a candidate),
``sample`` (draw points from the parametric families), ``oracle`` (numeric
multistart search plus cross-check) and ``demo-matrix`` (the Pauli-matrix
square-root mismatch report).  Output is text or JSON; errors go to stderr
and a "no roots" answer is a result, not a failure (exit 0).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .algebra import AlgebraError, Multivector, Signature
from .oracle import OracleConfig, compare_root_sets, numeric_root_search, residual
from .parsing import MultivectorParseError, format_mv, parse_mv
from .pauli import demonstrate_mismatch
from .roots import DEFAULT_TOL, ParametricFamily, RootSet, sqrt

_PROBE_POINTS = 10_000


def _default_tol() -> float:
    env = os.environ.get("MV_ROOT_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            print(f"warning: ignoring malformed MV_ROOT_TOL={env!r}", file=sys.stderr)
    return DEFAULT_TOL


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", required=True, metavar="p,q",
                        help="Clifford algebra signature, e.g. 3,0")
    parser.add_argument("mv_text", metavar="MULTIVECTOR",
                        help="multivector literal, e.g. 'e1 - 2 e23'")
    parser.add_argument("--tol", type=float, default=None,
                        help="tolerance (default 1e-9, or MV_ROOT_TOL)")
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument("--samples", type=int, default=10, metavar="N",
                        help="samples per family for the sample command")
    parser.add_argument("--format", choices=("text", "json"), default="text")


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _family_dict(fam: ParametricFamily) -> dict:
    return {
        "case": fam.case_tag,
        "dimension": fam.dimension,
        "params": list(fam.free_params),
        "branch_signs": list(fam.branch_signs),
        "feasible_probe": {"points": fam.probe_points, "feasible": fam.probe_feasible},
    }


def _rootset_dict(args, b: Multivector, rs: RootSet) -> dict:
    diag = rs.diagnostics
    return {
        "algebra": args.algebra,
        "input": list(b.coeffs),
        "bS": diag.bS,
        "bI": diag.bI,
        "D": diag.D,
        "isolated": [
            {"coeffs": list(root.coeffs), "residual": residual(root, b)}
            for root in rs.isolated
        ],
        "families": [_family_dict(f) for f in rs.families],
        "diagnostics": diag.cases + diag.rejected + diag.notes,
    }


def _print_rootset(b: Multivector, rs: RootSet) -> None:
    diag = rs.diagnostics
    if diag.bS is not None:
        print(f"b_S = {_fmt(diag.bS)}   b_I = {_fmt(diag.bI)}   det = {_fmt(diag.D)}")
    else:
        print(f"det = {_fmt(diag.D)}")
    if not rs.isolated and not any(f.probe_feasible for f in rs.families):
        print("no real square roots")
    if rs.isolated:
        print(f"{len(rs.isolated)} isolated root(s):")
        for root in rs.isolated:
            print(f"  {format_mv(root)}   (residual {residual(root, b):.3g})")
    for fam in rs.families:
        print(f"family {fam.case_tag} branch {fam.branch_signs}: "
              f"{fam.dimension} free parameters ({', '.join(fam.free_params)}), "
              f"feasible {fam.probe_feasible}/{fam.probe_points} probe points")
    for line in diag.cases + diag.rejected + diag.notes:
        print(f"  note: {line}")


def _parse_input(args) -> tuple[Signature, Multivector, float]:
    sig = Signature.parse(args.algebra)
    b = parse_mv(args.mv_text, sig)
    tol = args.tol if args.tol is not None else _default_tol()
    return sig, b, tol


def _cmd_sqrt(args) -> int:
    _, b, tol = _parse_input(args)
    rs = sqrt(b, tol, probe_points=_PROBE_POINTS)
    if args.format == "json":
        print(json.dumps(_rootset_dict(args, b, rs)))
    else:
        _print_rootset(b, rs)
    return 0


def _cmd_verify(args) -> int:
    sig, b, tol = _parse_input(args)
    candidate = parse_mv(args.candidate, sig)
    res = residual(candidate, b)
    if args.format == "json":
        print(json.dumps({"algebra": args.algebra, "input": list(b.coeffs),
                          "candidate": list(candidate.coeffs), "residual": res,
                          "is_root": res <= tol}))
    else:
        verdict = "a square root" if res <= tol else "NOT a square root"
        print(f"residual {res:.3g}: candidate is {verdict} at tol {tol:g}")
    return 0


def _cmd_sample(args) -> int:
    _, b, tol = _parse_input(args)
    rs = sqrt(b, tol, probe_points=_PROBE_POINTS)
    rng = np.random.default_rng(args.seed)
    out = []
    for fam in rs.families:
        samples = []
        attempts = 0
        while len(samples) < args.samples and attempts < 200 * args.samples:
            attempts += 1
            p = rng.uniform(-3.0, 3.0, size=fam.dimension)
            if fam.is_valid(p):
                root = fam.evaluate(p)
                samples.append({"params": list(p), "coeffs": list(root.coeffs),
                                "residual": residual(root, b)})
        out.append({"case": fam.case_tag, "branch_signs": list(fam.branch_signs),
                    "samples": samples})
    if args.format == "json":
        print(json.dumps({"algebra": args.algebra, "input": list(b.coeffs),
                          "families": out}))
    else:
        if not rs.families:
            print("no parametric families")
        for fam in out:
            print(f"family {fam['case']} branch {fam['branch_signs']}:")
            if not fam["samples"]:
                print("  no feasible samples found")
            for item in fam["samples"]:
                params = ", ".join(_fmt(x) for x in item["params"])
                root = format_mv(Multivector(b.sig, item["coeffs"]))
                print(f"  [{params}] -> {root}   (residual {item['residual']:.3g})")
    return 0


def _cmd_oracle(args) -> int:
    _, b, tol = _parse_input(args)
    rs = sqrt(b, tol, probe_points=_PROBE_POINTS)
    numeric = numeric_root_search(b, OracleConfig(seed=args.seed))
    report = compare_root_sets(rs, numeric, max(tol, 1e-6))
    if args.format == "json":
        print(json.dumps({
            "algebra": args.algebra, "input": list(b.coeffs),
            "numeric_clusters": [list(r.coeffs) for r in numeric],
            "symbolic_isolated": [list(r.coeffs) for r in rs.isolated],
            "matched_numeric": report.matched_numeric,
            "unmatched_numeric": [list(r.coeffs) for r in report.unmatched_numeric],
            "unmatched_isolated": [list(r.coeffs) for r in report.unmatched_isolated],
            "continuum_suspected": report.continuum_suspected,
            "notes": report.notes,
        }))
    else:
        print(f"numeric clusters: {len(numeric)}   symbolic isolated: {len(rs.isolated)}")
        print(f"matched numeric: {report.matched_numeric}   "
              f"unmatched numeric: {len(report.unmatched_numeric)}   "
              f"unmatched isolated: {len(report.unmatched_isolated)}")
        for note in report.notes:
            print(f"  note: {note}")
        for r in report.unmatched_numeric:
            print(f"  MISSED by solver: {format_mv(r)}")
    return 0


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _cmd_demo_matrix(args) -> int:
    _, b, _ = _parse_input(args)
    report = demonstrate_mismatch(b)
    if args.format == "json":
        branches = []
        for br in report.branches:
            entry: dict = {"eps1": br.eps1, "eps2": br.eps2, "valid": br.valid}
            if br.valid:
                entry.update({
                    "matrix_root": [[_complex_pair(z) for z in row] for row in br.matrix_root],
                    "matrix_residual": br.matrix_residual,
                    "naive_root": [_complex_pair(z) for z in br.naive_root.coeffs],
                    "naive_square": [_complex_pair(z) for z in br.naive_square.coeffs],
                    "naive_max_imag": br.naive_max_imag,
                    "square_deviation": br.square_deviation,
                    "real_preimage": list(br.real_preimage.coeffs),
                    "real_preimage_residual": br.real_preimage_residual,
                })
            else:
                entry["note"] = br.note
            branches.append(entry)
        print(json.dumps({"algebra": args.algebra, "input": list(b.coeffs),
                          "branches": branches}))
    else:
        for br in report.branches:
            head = f"branch (eps1={br.eps1:+d}, eps2={br.eps2:+d})"
            if not br.valid:
                print(f"{head}: invalid ({br.note})")
                continue
            print(f"{head}:")
            print(f"  matrix root residual (matrix side): {br.matrix_residual:.3g}")
            print(f"  naive complex multivector, max |imag|: {br.naive_max_imag:.6g}")
            sq = ", ".join(
                f"{name}: {z.real:.6g}{z.imag:+.6g}i"
                for name, z in zip(b.blade_names, br.naive_square.coeffs) if abs(z) > 1e-12)
            print(f"  naive square: {sq}")
            print(f"  deviation of naive square from input: {br.square_deviation:.6g}")
            print(f"  true real preimage: {format_mv(br.real_preimage)} "
                  f"(residual {br.real_preimage_residual:.3g})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvsqrt",
        description="Square roots of multivectors in real Clifford algebras Cl(p,q), p+q <= 3.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sqrt = sub.add_parser("sqrt", help="all square roots of a multivector")
    _add_common(p_sqrt)
    p_sqrt.set_defaults(func=_cmd_sqrt)

    p_verify = sub.add_parser("verify", help="residual of a candidate root")
    _add_common(p_verify)
    p_verify.add_argument("--candidate", required=True, metavar="MULTIVECTOR",
                          help="candidate square root to check")
    p_verify.set_defaults(func=_cmd_verify)

    p_sample = sub.add_parser("sample", help="draw sample roots from each family")
    _add_common(p_sample)
    p_sample.set_defaults(func=_cmd_sample)

    p_oracle = sub.add_parser("oracle", help="numeric multistart search and cross-check")
    _add_common(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_demo = sub.add_parser("demo-matrix", help="Pauli matrix square-root mismatch report")
    _add_common(p_demo)
    p_demo.set_defaults(func=_cmd_demo_matrix)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MultivectorParseError, AlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
