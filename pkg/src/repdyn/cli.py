"""Command-line interface for the replacement-dynamics toolkit.

Every numeric argument is parsed as an exact rational (``3``, ``-7/2``,
``0.25`` are all accepted; decimals convert exactly).  Subcommands map
onto the library layers:

* ``classes`` / ``phi`` / ``table1`` — period-type combinatorics and the
  symbolic fixed-point polynomials;
* ``classify`` — periodic vectors of a given period at one form (C, D);
* ``pell`` — fundamental solution of X² − E·Y² = 1;
* ``sweep`` — height-bounded nonexistence searches with checkpointing;
* ``quartic-analysis`` — the quartic-formula study of the four-letter
  word's family: depressed form, branch obstructions, the rational
  resolvent root, and the surface scan;
* ``verify-examples`` — the worked-example battery;
* ``graph`` — DOT export of one vector's iteration graph.
"""

from __future__ import annotations

import argparse
import re
import sys

from .classify import (
    DegenerateCycleError,
    llrlr_analyze,
    lrlr_vectors,
    pell_fundamental,
    period1_integral,
    period1_point,
    period3_family,
    r_poly,
    s_poly,
)
from .dynamics import Form, graph_to_dot, is_periodic_of_type, orbit_graph
from .harness import SweepConfig, _squarefree_shape, sweep, verify_examples
from .modpoly import degree_table_csv, phi, specialize_phi
from .polyring import rational_roots
from .quartic import (
    EqualityCurveError,
    b2_curve_check,
    depressed_identity_holds,
    equality_curve_check,
    resolvent_rational_root,
    split_invariants,
    surface_search,
)
from .rationals import Rational, format_rational, parse_rational, sqrt_exact
from .typeclasses import enumerate_classes, word_from_string, word_to_string

__all__ = ["main", "build_parser"]


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _print_witness(w, out):
    mod = w.modulus
    if mod.degree == 1:
        x, y = w.vector
        out.write(f"  rational vector ({x}, {y})  [verified]\n")
    else:
        out.write(f"  modulus {mod}\n")
        out.write(f"  vector ({w.vector[0]}, {w.vector[1]})  [verified]\n")


# -- subcommand handlers -------------------------------------------------


def _cmd_classes(args, out):
    for word in enumerate_classes(args.N, args.m):
        out.write(word_to_string(word) + "\n")
    return 0


def _cmd_phi(args, out):
    word = word_from_string(args.type)
    if args.spec is not None:
        C, D = args.spec
        out.write(str(specialize_phi(word, args.side, C, D)) + "\n")
    else:
        out.write(str(phi(word, args.side)) + "\n")
    return 0


def _cmd_table1(args, out):
    out.write(degree_table_csv(args.max_period))
    return 0


def _search_period2(C, D, bound):
    """First (m, n) with CD = -(n²+3)/(4m²) and a genuine 2-cycle, or None."""
    CD = C * D
    form = Form(C, D)
    for m in _positive_rationals(bound):
        n_sq = -4 * CD * m * m - 3
        if n_sq < 0:
            continue
        n = sqrt_exact(n_sq)
        if n is None:
            continue
        vectors = [((-1 + n) / (2 * C), m), ((-1 - n) / (2 * C), m)]
        good = [v for v in vectors if is_periodic_of_type(form, v, ("L", "L"))]
        if good:
            return m, n, good
    return None


def _search_period3(C, D, bound):
    """First (τ, n) realizing CD for the three-cycle family, or None."""
    CD = C * D
    form = Form(C, D)
    for tau in _signed_rationals(bound):
        if tau == -1:
            continue
        num = (
            tau**6 + 2 * tau**5 + 4 * tau**4 + 8 * tau**3
            + 9 * tau**2 + 4 * tau + 1
        )
        den = 4 * CD * tau * tau * (tau + 1) ** 2
        n_sq = -num / den
        if n_sq <= 0:
            continue
        n = sqrt_exact(n_sq)
        if n is None:
            continue
        try:
            got_cd, y0, cycle = period3_family(tau, n, C=C)
        except (ValueError, DegenerateCycleError):
            continue
        if got_cd != CD:
            continue
        vectors = [(x, y0) for x in cycle]
        if all(is_periodic_of_type(form, v, ("L", "L", "L")) for v in vectors):
            return tau, n, vectors
    return None


def _positive_rationals(bound):
    from .rationals import enumerate_rationals

    return (q for q in enumerate_rationals(bound) if q > 0)


def _signed_rationals(bound):
    from .rationals import enumerate_rationals

    return enumerate_rationals(bound)


def _cmd_classify(args, out):
    C, D = args.C, args.D
    if C == 0 or D == 0:
        raise ValueError("C and D must be nonzero")
    form = Form(C, D)
    period = args.period
    if period == 1:
        out.write("trivial fixed vector: (0, 0)\n")
        out.write(
            "parametrized family: t -> (1/(C+D*t^2), t/(C+D*t^2)) "
            "on C*x^2 - x + D*y^2 = 0\n"
        )
        for t in (Rational(0), Rational(1), Rational(-1), Rational(1, 2)):
            if C + D * t * t == 0:
                continue
            x, y = period1_point(C, D, t)
            out.write(f"  t={format_rational(t)}: ({x}, {y})\n")
        if C.denominator == 1 and D.denominator == 1:
            pts = period1_integral(int(C), int(D), count=3)
            out.write(f"integral fixed vectors (sample): {pts}\n")
        return 0
    if period in (2, 3):
        word = ("L",) * period
        search = _search_period2 if period == 2 else _search_period3
        hit = search(C, D, args.param_height)
        if hit is None:
            out.write(
                f"no rational {word_to_string(word)} witness found "
                f"(parameter heights <= {args.param_height})\n"
            )
            return 0
        param, n, vectors = hit
        out.write(
            f"witness parameters: {format_rational(param)}, "
            f"{format_rational(n)}\n"
        )
        for v in vectors:
            out.write(f"  vector ({v[0]}, {v[1]})  [verified {word_to_string(word)}]\n")
        return 0
    if period == 4:
        poly = r_poly(C, D)
        out.write(f"quartic: {poly}\n")
        roots = sorted(rational_roots(poly))
        out.write(f"rational roots: {[format_rational(r) for r in roots]}\n")
        if not poly.is_constant():
            shape, _ = _squarefree_shape(poly)
            out.write(f"factor shape: {shape}\n")
        for w in lrlr_vectors(C, D):
            _print_witness(w, out)
        return 0
    if period == 5:
        report = llrlr_analyze(C, D)
        out.write(f"decic: {s_poly(C, D)}\n")
        out.write(f"degree: {report.degree}")
        out.write(f" ({report.degree_note})\n" if report.degree_note else "\n")
        out.write(
            f"rational roots: {[format_rational(r) for r in report.roots]}\n"
        )
        for w in report.witnesses:
            _print_witness(w, out)
        return 0
    raise ValueError("supported periods are 1 through 5")


def _cmd_pell(args, out):
    sol = pell_fundamental(args.E)
    out.write(f"X={sol.X} Y={sol.Y}\n")
    return 0


def _cmd_sweep(args, out):
    config = SweepConfig(
        target=args.target,
        height_bound=args.height,
        workers=args.workers,
        output_path=args.output,
        checkpoint_path=args.checkpoint,
        checkpoint_every=args.checkpoint_every,
    )
    summary = sweep(config)
    if args.output is None:
        for line in summary.records:
            out.write(line + "\n")
        sys.stderr.write(summary.to_json() + "\n")
    else:
        out.write(summary.to_json() + "\n")
    return 0


def _cmd_quartic_analysis(args, out):
    ok = True

    out.write("== depressed form ==\n")
    identity = depressed_identity_holds()
    ok &= identity
    out.write(f"reduction identity (u = y + shift): {'ok' if identity else 'FAILED'}\n")

    out.write("== odd-coefficient obstruction ==\n")
    b2rep = b2_curve_check()
    ok &= b2rep.scaling_identity and b2rep.product_matches
    out.write(
        f"scaled numerator factors into two conics: "
        f"{'ok' if b2rep.product_matches else 'FAILED'}\n"
    )
    for verdict in b2rep.verdicts:
        ok &= verdict.outcome == "NoPoints"
        out.write(
            f"  conic factor: {verdict.outcome} over Q_{verdict.prime}\n"
        )
    out.write(
        "consequence: the depressed quartic's odd coefficient never vanishes\n"
        "at valid cells, so repeated quadratic factors cannot occur.\n"
    )

    out.write("== equality curve ==\n")
    try:
        equality_curve_check()
        out.write("check returned without error (unexpected)\n")
        ok = False
    except EqualityCurveError as exc:
        rep = exc.report
        ok &= rep.resultant_closed_form_ok and rep.equality_case_closed
        ok &= not rep.divisibility
        out.write(
            f"stored degree-{rep.homogeneous_degree} curve: "
            f"{rep.verdict.outcome} over Q_{rep.verdict.prime}\n"
        )
        out.write(
            "branch-point resultant closed form verified: "
            f"{'ok' if rep.resultant_closed_form_ok else 'FAILED'}\n"
        )
        out.write(
            f"stored curve divides the resultant: {rep.divisibility}\n"
            "  (the resultant factors into the leading coefficient and the\n"
            "   two branch numerators only; the stored irreducible curve is\n"
            "   coprime to each factor, so divisibility cannot hold)\n"
        )
        out.write(
            "true equality locus (constant-coefficient factor): "
            f"rational roots {list(rep.true_locus_rational_roots)}, "
            f"{rep.true_locus_verdict.outcome} over "
            f"Q_{rep.true_locus_verdict.prime}\n"
        )
        out.write(
            f"equality case closed: {'yes' if rep.equality_case_closed else 'NO'}\n"
        )

    out.write("== resolvent cubic ==\n")
    num, den = resolvent_rational_root()
    out.write(f"rational root: ({num}) / ({den})\n")
    sigma, delta2 = split_invariants()
    out.write(
        "split criterion for a rootless specialization: shape (2,2) iff\n"
        f"  {sigma} is a rational square, or\n"
        f"  {delta2} is a rational square and a branch radicand is too;\n"
        "otherwise the quartic is irreducible.\n"
    )

    out.write("== surface scan ==\n")
    hits = surface_search(args.surface_height)
    out.write(
        f"rational (C, D, z, n) hits up to height {args.surface_height}: "
        f"{hits if hits else 'none'}\n"
    )
    ok &= not hits

    return 0 if ok else 1


def _cmd_verify_examples(args, out):
    checks = verify_examples()
    failed = 0
    for check in checks:
        status = "PASS" if check.ok else "FAIL"
        if not check.ok:
            failed += 1
        out.write(f"{status} {check.name}: {check.detail}\n")
    out.write(f"{len(checks) - failed}/{len(checks)} examples verified\n")
    return 0 if failed == 0 else 1


def _cmd_graph(args, out):
    form = Form(args.C, args.D)
    graph = orbit_graph(form, (args.x, args.y), max_vertices=args.max)
    dot = graph_to_dot(graph)
    with open(args.dot, "w") as fh:
        fh.write(dot)
    out.write(
        f"vertices={len(graph.vertices)} edges={len(graph.edges)} "
        f"truncated={graph.truncated} -> {args.dot}\n"
    )
    return 0


# -- parser --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that accepts negative rationals as option values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+([./]\d+)?$")


def build_parser():
    parser = _Parser(
        prog="repdyn",
        description="Replacement dynamics of diagonal binary quadratic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="canonical period-type classes")
    p.add_argument("N", type=_positive_int, help="period (word length)")
    p.add_argument("--m", type=_positive_int, default=2, help="alphabet size")
    p.set_defaults(handler=_cmd_classes)

    p = sub.add_parser("phi", help="fixed-point polynomial of a word")
    p.add_argument("type", help='word over {L,R}, e.g. "LLRLR"')
    p.add_argument("--side", choices=("L", "R"), default="L")
    p.add_argument(
        "--spec",
        nargs=2,
        type=_rational,
        metavar=("C", "D"),
        help="specialize the coefficients at (C, D)",
    )
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("table1", help="per-class polynomial degree table (CSV)")
    p.add_argument("--max-period", type=_positive_int, default=5)
    p.set_defaults(handler=_cmd_table1)

    p = sub.add_parser("classify", help="periodic vectors at one form")
    p.add_argument("--period", type=_positive_int, required=True)
    p.add_argument("--C", type=_rational, required=True)
    p.add_argument("--D", type=_rational, required=True)
    p.add_argument(
        "--param-height",
        type=_positive_int,
        default=30,
        help="search bound for the period-2/3 family parameters",
    )
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("pell", help="fundamental solution of X^2 - E*Y^2 = 1")
    p.add_argument("E", type=_positive_int)
    p.set_defaults(handler=_cmd_pell)

    p = sub.add_parser("sweep", help="height-bounded search sweep")
    p.add_argument(
        "--target",
        required=True,
        help="lrlr-integer | lrlr-rational | llrlr-rational | surface",
    )
    p.add_argument("--height", type=_positive_int, required=True)
    p.add_argument("--workers", type=int, default=0)
    p.add_argument("--output", help="record stream file (JSON lines)")
    p.add_argument("--checkpoint", help="checkpoint file (enables resume)")
    p.add_argument("--checkpoint-every", type=_positive_int, default=64)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser(
        "quartic-analysis",
        help="quartic-formula analysis of the four-letter family",
    )
    p.add_argument("--surface-height", type=_positive_int, default=12)
    p.set_defaults(handler=_cmd_quartic_analysis)

    p = sub.add_parser("verify-examples", help="run the worked-example battery")
    p.set_defaults(handler=_cmd_verify_examples)

    p = sub.add_parser("graph", help="DOT export of one iteration graph")
    p.add_argument("--C", type=_rational, required=True)
    p.add_argument("--D", type=_rational, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--y", type=_rational, required=True)
    p.add_argument("--max", type=_positive_int, default=256)
    p.add_argument("--dot", required=True, help="output DOT file")
    p.set_defaults(handler=_cmd_graph)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except (ValueError, ArithmeticError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
