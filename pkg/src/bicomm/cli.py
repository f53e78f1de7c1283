"""Command-line surface: group files in, exact canonical results out.

Subcommands:

  hilbert     closed-form series of a group (classical, trace analogue,
              bicommutative analogue) with exact expansions
  invariants  degree-wise invariant bases and dimensions
  nonfg       dimension-gap report between invariants and the subalgebra
              generated by low-degree invariants
  symmetric   module generators and saturation report for the symmetric group
  verify      cross-check every closed formula against the brute-force
              linear-algebra oracles; nonzero exit on any mismatch

Output is plain text by default, or one self-describing JSON document with
`--format structured`.  All numbers are exact rationals rendered as "p/q".

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments,
3 unreadable or invalid group file, 4 group closure cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .algebra_core import BicommElement, basis_component, random_element, term_sort_key
from .group_action import (
    DEFAULT_CLOSURE_CAP,
    CapExceededError,
    FiniteGroup,
    GroupFileError,
    RationalMatrix,
    act,
    diagonal_matrix,
    format_rational,
    group_closure,
    load_group,
    permutation_matrix,
    reynolds,
    symmetric_group,
    trivial_group,
)
from .hilbert import (
    RationalFunction,
    TruncatedSeries,
    dicks_formanek,
    expand,
    hilbert_free_bicomm,
    molien_bicomm,
    molien_classic,
)
from .invariants import (
    EchelonBasis,
    commutative_invariant_dimension,
    element_to_row,
    invariant_basis,
    invariant_dimension,
    nonfg_witness,
)
from .symmetric import symmetric_module_generators, verify_d2_identity

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GROUP_FILE = 3
EXIT_CAP = 4

_VERIFY_SEED = 20_240_601


def _rational_function_payload(f: RationalFunction) -> dict:
    return {
        "numerator": [format_rational(c) for c in f.numerator.coeffs],
        "denominator": [format_rational(c) for c in f.denominator.coeffs],
    }


def _series_payload(series: TruncatedSeries) -> list[str]:
    return [format_rational(c) for c in series.coefficients]


def _element_payload(element: BicommElement) -> dict:
    ordered = sorted(element.bulk.terms, key=term_sort_key)
    return {
        "linear": [format_rational(c) for c in element.linear],
        "terms": [
            {
                "alpha": list(alpha),
                "beta": list(beta),
                "coeff": format_rational(element.bulk.terms[(alpha, beta)]),
            }
            for alpha, beta in ordered
        ],
        "text": str(element),
    }


def _group_payload(group: FiniteGroup, path: str | None) -> dict:
    payload = {"d": group.rank, "group_order": group.order}
    if path is not None:
        payload["group_file"] = path
    return payload


def _emit(args, plain_lines: list[str], document: dict) -> None:
    if args.format == "structured":
        print(json.dumps(document, indent=2))
    else:
        for line in plain_lines:
            print(line)


def catalogued_groups(d: int) -> list[tuple[str, FiniteGroup]]:
    """The desk-scale catalogue of test groups available at rank d."""
    groups: list[tuple[str, FiniteGroup]] = [("trivial", trivial_group(d))]
    if d in (1, 2):
        groups.append(("negation", group_closure([diagonal_matrix([-1] * d)])))
    if d == 2:
        swap = permutation_matrix((1, 0))
        groups.append(("symmetric S_2", group_closure([swap])))
        rotation = RationalMatrix.from_rows([[0, -1], [1, 0]])
        groups.append(("cyclic C_4", group_closure([rotation])))
        groups.append(
            ("signed permutations", group_closure([swap, diagonal_matrix([-1, 1])]))
        )
    if d == 3:
        groups.append(("symmetric S_3", symmetric_group(3)))
    return groups


def _cmd_hilbert(args) -> int:
    group = load_group(args.group, cap=args.cap)
    order = args.order
    results = {
        "molien_classic": molien_classic(group),
        "dicks_formanek": dicks_formanek(group),
        "molien_bicomm": molien_bicomm(group),
    }
    lines = [
        f"group file: {args.group}",
        f"rank d: {group.rank}",
        f"group order: {group.order}",
        "",
    ]
    payload_results = {}
    for name, f in results.items():
        series = expand(f, order)
        lines.append(f"{name}: {f}")
        lines.append(f"  series to t^{order}: {series}")
        payload_results[name] = dict(
            _rational_function_payload(f), series=_series_payload(series)
        )
    document = {
        "command": "hilbert",
        "input": dict(_group_payload(group, args.group), order=order, cap=args.cap),
        "results": payload_results,
    }
    _emit(args, lines, document)
    return EXIT_OK


def _cmd_invariants(args) -> int:
    group = load_group(args.group, cap=args.cap)
    lines = [
        f"group file: {args.group}",
        f"rank d: {group.rank}",
        f"group order: {group.order}",
        "",
    ]
    degrees = []
    for n in range(1, args.max_degree + 1):
        basis = invariant_basis(group, n)
        lines.append(f"degree {n}: dimension {basis.dimension}")
        for element in basis.elements:
            lines.append(f"  {element}")
        degrees.append(
            {
                "degree": n,
                "dimension": basis.dimension,
                "basis": [_element_payload(e) for e in basis.elements],
            }
        )
    document = {
        "command": "invariants",
        "input": dict(_group_payload(group, args.group), max_degree=args.max_degree),
        "results": {"degrees": degrees},
    }
    _emit(args, lines, document)
    return EXIT_OK


def _cmd_nonfg(args) -> int:
    group = load_group(args.group, cap=args.cap)
    report = nonfg_witness(group, args.cutoff, args.max_degree)
    lines = [
        f"group file: {args.group}",
        f"rank d: {group.rank}",
        f"group order: {group.order}",
        f"searched degrees up to {args.max_degree}",
        "",
    ]
    entries = []
    for gap in report.gaps:
        if gap.gap_degree is None:
            lines.append(
                f"cutoff {gap.cutoff}: no gap found up to degree {args.max_degree}"
            )
        else:
            lines.append(
                f"cutoff {gap.cutoff}: gap at degree {gap.gap_degree} "
                f"(subalgebra span {gap.span_dimension} < invariants "
                f"{gap.invariant_dimension})"
            )
        entries.append(
            {
                "cutoff": gap.cutoff,
                "gap_degree": gap.gap_degree,
                "span_dimension": gap.span_dimension,
                "invariant_dimension": gap.invariant_dimension,
            }
        )
    document = {
        "command": "nonfg",
        "input": dict(
            _group_payload(group, args.group),
            cutoff=args.cutoff,
            max_degree=args.max_degree,
        ),
        "results": {"gaps": entries},
    }
    _emit(args, lines, document)
    return EXIT_OK


def _cmd_symmetric(args) -> int:
    result = symmetric_module_generators(args.d, args.max_degree)
    lines = [
        f"rank d: {args.d}",
        f"degree bound: {args.max_degree}",
        "",
        "selected module generators:",
    ]
    for generator in result.generators:
        lines.append(f"  {generator.label()}  (degree {generator.degree})")
    bounds_text = ", ".join(
        f"n_{{{p},{q}}} = {bound}" for (p, q), bound in sorted(result.exponent_bounds.items())
    )
    lines.append(f"polarization exponent bounds: {bounds_text or 'none'}")
    lines.append("")
    lines.append("saturation against the symmetric invariants:")
    for entry in result.saturation:
        status = "ok" if entry.saturated else "GAP"
        lines.append(
            f"  degree {entry.degree}: span {entry.span_dimension} "
            f"vs invariants {entry.invariant_dimension}  {status}"
        )
    document = {
        "command": "symmetric",
        "input": {"d": args.d, "max_degree": args.max_degree},
        "results": {
            "generators": [
                {"label": g.label(), "degree": g.degree} for g in result.generators
            ],
            "exponent_bounds": [
                {"p": p, "q": q, "bound": bound}
                for (p, q), bound in sorted(result.exponent_bounds.items())
            ],
            "saturation": [
                {
                    "degree": e.degree,
                    "span_dimension": e.span_dimension,
                    "invariant_dimension": e.invariant_dimension,
                    "saturated": e.saturated,
                }
                for e in result.saturation
            ],
            "saturated_everywhere": result.saturated_everywhere(),
        },
    }
    _emit(args, lines, document)
    return EXIT_OK if result.saturated_everywhere() else EXIT_MISMATCH


def _verify_checks(d: int, order: int):
    """Yield (check name, passed) pairs for the whole cross-validation suite."""
    rng = random.Random(_VERIFY_SEED)
    yield (
        f"trivial group series equals free-algebra series (d={d})",
        molien_bicomm(trivial_group(d)) == hilbert_free_bicomm(d),
    )
    for name, group in catalogued_groups(d):
        series = expand(molien_bicomm(group), order)
        dims_ok = series.coefficient(0) == 0 and all(
            series.coefficient(n) == invariant_dimension(group, n)
            for n in range(1, order + 1)
        )
        yield (f"{name}: bicommutative series matches Reynolds dimensions", dims_ok)
        classic = expand(molien_classic(group), order)
        classic_ok = all(
            classic.coefficient(n) == commutative_invariant_dimension(group, n)
            for n in range(0, order + 1)
        )
        yield (f"{name}: classical series matches commutative dimensions", classic_ok)
        reynolds_ok = True
        for _ in range(3):
            element = random_element(rng, d)
            averaged = reynolds(group, element)
            if reynolds(group, averaged) != averaged:
                reynolds_ok = False
            if any(act(g, averaged) != averaged for g in group.elements):
                reynolds_ok = False
        linear_rank = EchelonBasis()
        for generator in basis_component(d, 1):
            linear_rank.add(element_to_row(reynolds(group, generator), 1))
        trace_average = sum(
            (g.trace() for g in group.elements), Fraction(0)
        ) / group.order
        reynolds_ok = reynolds_ok and linear_rank.dimension == trace_average
        yield (f"{name}: Reynolds operator suite", reynolds_ok)
    identities_ok = True
    for _ in range(100):
        a, b, c = (random_element(rng, d) for _ in range(3))
        if ((a * b) * c != (a * c) * b) or (a * (b * c) != b * (a * c)):
            identities_ok = False
            break
    yield ("bicommutative identities on random triples", identities_ok)
    if d >= 2:
        x1 = BicommElement.generator(d, 1)
        x2 = BicommElement.generator(d, 2)
        yield (
            "one-sided products differ (noncommutativity witness)",
            x1 * (x2 * x2) != (x2 * x2) * x1,
        )
    report = verify_d2_identity()
    yield ("two-alphabet symmetric identity at rank 2", report.holds)


def _cmd_verify(args) -> int:
    checks = []
    all_ok = True
    lines = [f"verification suite: d={args.d}, order={args.order}", ""]
    for name, ok in _verify_checks(args.d, args.order):
        status = "PASS" if ok else "FAIL"
        lines.append(f"{status}  {name}")
        checks.append({"check": name, "pass": ok})
        all_ok = all_ok and ok
    lines.append("")
    lines.append("all checks passed" if all_ok else "MISMATCH DETECTED")
    document = {
        "command": "verify",
        "input": {"d": args.d, "order": args.order},
        "results": {"checks": checks, "all_passed": all_ok},
    }
    _emit(args, lines, document)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicomm",
        description="Exact invariants of finite matrix groups acting on the "
        "free bicommutative algebra.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("plain", "structured"),
            default="plain",
            help="plain text or one JSON document (default: plain)",
        )

    def add_group(p):
        p.add_argument("--group", required=True, help="path to a JSON group file")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_CLOSURE_CAP,
            help=f"closure size cap (default: {DEFAULT_CLOSURE_CAP})",
        )

    p = sub.add_parser("hilbert", help="closed-form series and expansions")
    add_group(p)
    p.add_argument("--order", type=int, default=10, help="expansion order (default: 10)")
    add_format(p)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("invariants", help="degree-wise invariant bases")
    add_group(p)
    p.add_argument(
        "--max-degree", type=int, default=6, help="largest degree to compute (default: 6)"
    )
    add_format(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("nonfg", help="finite-generation dimension gaps")
    add_group(p)
    p.add_argument(
        "--cutoff", type=int, default=2, help="largest generator-degree cutoff (default: 2)"
    )
    p.add_argument(
        "--max-degree", type=int, default=8, help="largest degree searched (default: 8)"
    )
    add_format(p)
    p.set_defaults(func=_cmd_nonfg)

    p = sub.add_parser("symmetric", help="module generators for the symmetric group")
    p.add_argument("--d", type=int, default=2, help="rank (default: 2)")
    p.add_argument(
        "--max-degree", type=int, default=6, help="degree bound (default: 6)"
    )
    add_format(p)
    p.set_defaults(func=_cmd_symmetric)

    p = sub.add_parser("verify", help="run the full cross-validation suite")
    p.add_argument("--d", type=int, default=2, help="rank of the catalogue (default: 2)")
    p.add_argument("--order", type=int, default=10, help="expansion order (default: 10)")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except GroupFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GROUP_FILE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
