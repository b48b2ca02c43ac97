"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 computation error (for instance unresolved zeros).
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from ..arith import InexactDivision, PolyInX, linalg
from ..cover import CoverError, eigenspace_report, finite_monodromy_check, genus, make_cover
from ..expr import ExprSyntaxError, parse_polyx, print_canonical
from ..flags import derived_flag, multi_direction_span, nonlinearity_certificate
from ..forms import (
    BranchPoint,
    DivisorDegreeMismatch,
    Eigenform,
    ExtraRationalPoint,
    InfinityPoint,
    ParameterDependentVanishing,
    UnresolvedZeros,
    divisor,
    holomorphic_basis,
    stratum_signature,
)
from ..gauss_manin import DegenerateBranch, connection_matrix, curvature
from .verify import CHECKS, verify_paper

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_COMPUTATION = 0, 1, 2, 3

_COMPUTATION_ERRORS = (
    UnresolvedZeros,
    ParameterDependentVanishing,
    DivisorDegreeMismatch,
    DegenerateBranch,
    InexactDivision,
    ZeroDivisionError,
)


class UsageError(Exception):
    pass


def _split_list(text: str) -> list:
    return [t.strip() for t in text.split(",") if t.strip()]


def _cover(args):
    if args.branch is not None:
        branch = _split_list(args.branch)
        if args.n is not None and args.n != len(branch):
            raise UsageError(f"--n {args.n} disagrees with {len(branch)} branch values")
        return make_cover(args.d, None, branch)
    if args.n is None:
        raise UsageError("give --branch or --n")
    return make_cover(args.d, args.n, [f"t{i}" for i in range(1, args.n + 1)])


def _header(cover) -> dict:
    return {"d": cover.d, "n": cover.n, "branch": [str(t) for t in cover.branch]}


def _section(cover, args) -> Eigenform:
    l = cover.d - 1 if getattr(args, "l", None) is None else args.l
    return Eigenform(cover, l, parse_polyx(args.section, cover.vars))


def _matrix_strings(rows) -> list:
    return [[print_canonical(e) for e in row] for row in rows]


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _format_matrix(rows) -> list:
    return ["  [" + ", ".join(row) + "]" for row in rows]


# --- subcommands -------------------------------------------------------------------


def cmd_genus(args) -> int:
    if args.n is None and args.branch is None:
        raise UsageError("genus needs --n or --branch")
    n = args.n if args.n is not None else len(_split_list(args.branch))
    if args.branch is not None and n != len(_split_list(args.branch)):
        raise UsageError(f"--n {n} disagrees with {len(_split_list(args.branch))} branch values")
    g = genus(args.d, n)
    _emit(args, {"d": args.d, "n": n, "genus": g}, [str(g)])
    return EXIT_OK


def cmd_basis(args) -> int:
    cover = _cover(args)
    forms = holomorphic_basis(cover, args.j)
    report = eigenspace_report(cover, args.j)
    basis = [f"{print_canonical(f.U.to_ratfunc())} dx/y^{f.l}" for f in forms]
    payload = dict(_header(cover), j=args.j, basis=basis, h10=report.h10, h01=report.h01,
                   outside_proved_regime=report.outside_proved_regime)
    lines = basis or ["(empty)"]
    _emit(args, payload, lines)
    return EXIT_OK


def _point_name(point) -> str:
    if isinstance(point, BranchPoint):
        return f"branch {point.index}"
    if isinstance(point, InfinityPoint):
        return f"infinity {point.index}"
    if isinstance(point, ExtraRationalPoint):
        return f"x = {print_canonical(point.value)} (x{point.sheets})"
    return str(point)


def cmd_divisor(args) -> int:
    cover = _cover(args)
    form = _section(cover, args)
    div = divisor(form)
    sig = stratum_signature(form)
    entries = [{"point": _point_name(p), "order": k} for p, k in div.entries]
    payload = dict(_header(cover), divisor=entries, degree=div.degree, stratum=list(sig))
    lines = [f"{e['point']}: {e['order']}" for e in entries]
    lines.append(f"degree {div.degree} = 2g - 2 with g = {cover.genus}")
    lines.append("H(" + ", ".join(map(str, sig)) + ")")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_connection(args) -> int:
    cover = _cover(args)
    B = connection_matrix(cover, args.wrt)
    rows = _matrix_strings(B.rows())
    payload = dict(_header(cover), wrt=B.wrt, matrix=rows,
                   basis=[f"{print_canonical(PolyInX.monomial(cover.vars, i))} dx/y^{cover.d - 1}" for i in range(cover.n - 1)])
    _emit(args, payload, [f"nabla_{B.wrt} = d + B with B ="] + _format_matrix(rows))
    return EXIT_OK


def cmd_curvature(args) -> int:
    cover = _cover(args)
    if args.wrt:
        pairs = [tuple(_split_list(args.wrt))]
        if len(pairs[0]) != 2:
            raise UsageError("--wrt takes exactly two directions")
    else:
        pairs = list(combinations(cover.params, 2))
    results = []
    flat = True
    for k1, k2 in pairs:
        K = curvature(cover, k1, k2)
        zero = linalg.is_zero_matrix(K)
        flat = flat and zero
        results.append({"directions": [k1, k2], "flat": zero, "matrix": _matrix_strings(K)})
    payload = dict(_header(cover), checks=results, flat=flat)
    lines = [f"({r['directions'][0]}, {r['directions'][1]}): {'flat' if r['flat'] else 'NOT flat'}" for r in results]
    if not results:
        lines = ["no pair of symbolic directions: nothing to check"]
    _emit(args, payload, lines)
    return EXIT_OK if flat else EXIT_FAILED


def _flag_payload(cover, report) -> tuple:
    cert = nonlinearity_certificate(report)
    payload = dict(
        _header(cover),
        section=str(report.section),
        directions=list(report.directions),
        vectors=[[print_canonical(e) for e in v] for v in report.vectors],
        ranks=list(report.ranks),
        det=print_canonical(report.determinant) if report.determinant is not None else None,
        verdict=report.verdict,
        certified=cert.certified,
        excluded=[print_canonical(p) for p in report.excluded],
    )
    lines = [f"ranks {list(report.ranks)}", f"verdict {report.verdict}"]
    if report.determinant is not None:
        lines.append(f"det {payload['det']}")
    lines.append("non-linearity certified" if cert.certified else "not certified (no linearity claim)")
    if payload["excluded"]:
        lines.append("excluded where: " + "; ".join(f"{p} = 0" for p in payload["excluded"]))
    return payload, lines


def cmd_flag_rank(args) -> int:
    cover = _cover(args)
    report = derived_flag(cover, _section(cover, args), args.wrt, args.order)
    payload, lines = _flag_payload(cover, report)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_span(args) -> int:
    cover = _cover(args)
    dirs = _split_list(args.dirs) if args.dirs else []
    report = multi_direction_span(cover, _section(cover, args), dirs, scale_by_Pprime=args.scaled)
    payload, lines = _flag_payload(cover, report)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_monodromy(args) -> int:
    cover = _cover(args)
    report = finite_monodromy_check(cover, args.j)
    orbit = [{"j": r.j, "h10": r.h10, "h01": r.h01, "pure": r.pure} for r in report.orbit]
    payload = dict(_header(cover), j=args.j, finite=report.finite, verdict=report.verdict, orbit=orbit)
    lines = [f"j={r['j']}: h10={r['h10']} h01={r['h01']} {'pure' if r['pure'] else 'mixed'}" for r in orbit]
    lines.append(f"monodromy: {report.verdict}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    only = _split_list(",".join(args.only)) if args.only else None
    try:
        results = verify_paper(only=only, fail_fast=args.fail_fast)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ok = all(r.ok for r in results)
    payload = {"checks": [r.as_dict() for r in results], "verified": ok}
    lines = []
    for r in results:
        lines.append(f"{r.status.upper():5} {r.name}")
        if not r.ok:
            lines.append(f"      expected: {r.expected}")
            lines.append(f"      actual:   {r.actual}")
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAILED


# --- argument parsing ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclicgm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family(p, need_branch=False):
        p.add_argument("--d", type=int, required=True, help="degree of the cyclic cover")
        p.add_argument("--n", type=int, help="number of branch values (symbolic t1..tn if --branch is absent)")
        p.add_argument("--branch", required=need_branch, help="comma-separated rationals or parameter names")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("genus", help="Riemann-Hurwitz genus")
    family(p)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("basis", help="holomorphic eigenform basis")
    family(p)
    p.add_argument("--j", type=int, default=1, help="eigenvalue exponent (default 1)")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("divisor", help="zero divisor and stratum of an eigenform")
    family(p, need_branch=True)
    p.add_argument("--section", required=True, help="the polynomial U")
    p.add_argument("--l", type=int, help="power of y in the denominator (default d-1)")
    p.set_defaults(func=cmd_divisor)

    p = sub.add_parser("connection", help="Gauss-Manin connection matrix")
    family(p, need_branch=True)
    p.add_argument("--wrt", required=True, help="branch parameter to differentiate along")
    p.set_defaults(func=cmd_connection)

    p = sub.add_parser("curvature", help="flatness check")
    family(p, need_branch=True)
    p.add_argument("--wrt", help="two directions, comma-separated (default: all pairs)")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("flag-rank", help="derived flag along one parameter")
    family(p, need_branch=True)
    p.add_argument("--section", required=True)
    p.add_argument("--wrt", required=True)
    p.add_argument("--order", type=int, default=2)
    p.set_defaults(func=cmd_flag_rank)

    p = sub.add_parser("span", help="span of a section and its derivatives along several parameters")
    family(p, need_branch=True)
    p.add_argument("--section", required=True)
    p.add_argument("--dirs", default="", help="comma-separated branch parameters")
    p.add_argument("--scaled", action="store_true", help="scale each derivative by P'(t_k)")
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("monodromy", help="finite-monodromy purity criterion")
    family(p)
    p.add_argument("--j", type=int, default=1)
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("verify-paper", help="replay the published computations")
    p.add_argument("--only", action="append", help=f"check name(s); known: {', '.join(CHECKS)}")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first failing check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CoverError, ExprSyntaxError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _COMPUTATION_ERRORS as exc:
        print(f"computation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
