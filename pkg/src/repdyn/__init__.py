"""Replacement dynamics of diagonal binary quadratic forms over Q.

A vector in Q² evolves by replacing one coordinate with the value
f(x, y) = C·x² + D·y²; a word over {L, R} prescribes which coordinate at
each step.  This package provides exact tools for the arithmetic of the
resulting periodic vectors:

* :mod:`repdyn.dynamics` — the replacement step, orbits, and the exact
  period-type test;
* :mod:`repdyn.typeclasses` — period-type words up to the symmetries
  that preserve the dynamics;
* :mod:`repdyn.modpoly` — symbolic fixed-point polynomials per word,
  with lower-period factors removed;
* :mod:`repdyn.classify` — periodic vectors by period: parametrized
  families (periods 1–3), the quartic (period 4) and decic (period 5)
  resolvent polynomials, Pell correspondence, number-field witnesses;
* :mod:`repdyn.quartic` — quartic-formula analysis of the period-4
  family: local solvability, branch obstructions, the rational
  resolvent root, and the two-square surface scan;
* :mod:`repdyn.harness` — height-bounded search sweeps (checkpointed,
  deterministic) and the worked-example battery;
* :mod:`repdyn.cli` — the ``repdyn`` command-line interface.

All arithmetic is exact: rationals are :class:`fractions.Fraction`,
number fields are explicit quotient rings Q[y]/(m(y)), and every claimed
periodic vector is re-verified through the dynamics before it is
reported.
"""

from .classify import (
    PellSolution,
    PeriodicWitness,
    llrlr_analyze,
    lrlr_vectors,
    pell_fundamental,
    period1_integral,
    period1_point,
    period2_family,
    period3_family,
    r_poly,
    r_poly_via_elimination,
    s_poly,
)
from .dynamics import (
    Form,
    apply_type,
    graph_to_dot,
    is_periodic_of_type,
    orbit_graph,
    replace_step,
)
from .harness import (
    SweepConfig,
    SweepRecord,
    SweepSummary,
    sweep,
    verify_examples,
)
from .modpoly import degree_table, degree_table_csv, phi, phi_pair
from .numberfield import NFElem, NFModulus, ZeroDivisorError
from .polyring import MPoly, rational_roots, resultant, split_quartic
from .quartic import (
    EqualityCurveError,
    b2_curve_check,
    depressed_coeffs,
    equality_curve_check,
    qp_solvable,
    split_via_resolvent,
    surface_search,
)
from .rationals import Rational, height, parse_rational, sqrt_exact
from .typeclasses import (
    canonical,
    count_classes_binary,
    enumerate_classes,
    word_from_string,
    word_to_string,
)

__version__ = "0.1.0"

__all__ = [
    "EqualityCurveError",
    "Form",
    "MPoly",
    "NFElem",
    "NFModulus",
    "PellSolution",
    "PeriodicWitness",
    "Rational",
    "SweepConfig",
    "SweepRecord",
    "SweepSummary",
    "ZeroDivisorError",
    "apply_type",
    "b2_curve_check",
    "canonical",
    "count_classes_binary",
    "degree_table",
    "degree_table_csv",
    "depressed_coeffs",
    "enumerate_classes",
    "equality_curve_check",
    "graph_to_dot",
    "height",
    "is_periodic_of_type",
    "llrlr_analyze",
    "lrlr_vectors",
    "orbit_graph",
    "parse_rational",
    "pell_fundamental",
    "period1_integral",
    "period1_point",
    "period2_family",
    "period3_family",
    "phi",
    "phi_pair",
    "qp_solvable",
    "r_poly",
    "r_poly_via_elimination",
    "rational_roots",
    "replace_step",
    "resultant",
    "s_poly",
    "split_quartic",
    "split_via_resolvent",
    "sqrt_exact",
    "surface_search",
    "sweep",
    "verify_examples",
    "word_from_string",
    "word_to_string",
]
