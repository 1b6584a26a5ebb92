"""Exact parabolic Chern characters for weighted sums of line bundles.

The package computes the rational Chern character of a locally abelian
parabolic bundle -- a direct sum of line summands, each carrying a jump
position on every boundary divisor -- inside a degree-truncated rational
intersection ring, by several independent routes that must agree to the
last coefficient.

Layout: ``chow`` is the truncated ring, ``ladders`` the weighted step
combinatorics, ``bundles`` the parabolic data and its graded pieces,
``engine`` the three closed-form evaluation routes plus reporting,
``lowdeg`` the expanded degree <= 3 formulas, ``oracle`` the
independent brute-force integrator and instance generator, and
``serialize``/``cli`` the file format and command-line front end.
"""

from __future__ import annotations

from .bundles import (GradedPiece, LineSummand, ParabolicBundle, ch_of_pushforward, ch_vb,
                      ch_vb_sigma, graded_piece, quotient_class, twist_vector)
from .chow import GradedClass, IntersectionModel, eab_factor, integrate_exp, rational_text
from .engine import (ChernReport, Discrepancy, build_report, ch_par_general, ch_par_integral,
                     ch_par_rr, koszul_ch_sigma, verify_grothendieck_relation)
from .ladders import ExtendedIndex, Ladder, UndefinedRiserError, WeightFunction
from .lowdeg import ch0, ch1, ch2, ch2_symmetrized, ch3, low_degree
from .oracle import (InstanceLimits, cross_check, oracle_integral, random_instance,
                     random_instance_pair)
from .serialize import (BadRiserIndexError, BundleSpecError, MalformedDocumentError,
                        MalformedRationalError, SpecShapeError, UnknownGeneratorError,
                        WeightOrderError, WeightRangeError, bundle_from_dict, bundle_from_json,
                        bundle_from_toml, bundle_to_dict, load_bundle, parse_rational)

__version__ = "0.1.0"

__all__ = [
    # ring
    "GradedClass", "IntersectionModel", "eab_factor", "integrate_exp", "rational_text",
    # ladders and weights
    "ExtendedIndex", "Ladder", "UndefinedRiserError", "WeightFunction",
    # parabolic data
    "GradedPiece", "LineSummand", "ParabolicBundle", "ch_of_pushforward", "ch_vb",
    "ch_vb_sigma", "graded_piece", "quotient_class", "twist_vector",
    # evaluation routes and reports
    "ChernReport", "Discrepancy", "build_report", "ch_par_general", "ch_par_integral",
    "ch_par_rr", "koszul_ch_sigma", "verify_grothendieck_relation",
    # low-degree closed forms
    "ch0", "ch1", "ch2", "ch2_symmetrized", "ch3", "low_degree",
    # oracle and instance generation
    "InstanceLimits", "cross_check", "oracle_integral", "random_instance",
    "random_instance_pair",
    # bundle descriptions on disk
    "BadRiserIndexError", "BundleSpecError", "MalformedDocumentError",
    "MalformedRationalError", "SpecShapeError", "UnknownGeneratorError",
    "WeightOrderError", "WeightRangeError", "bundle_from_dict", "bundle_from_json",
    "bundle_from_toml", "bundle_to_dict", "load_bundle", "parse_rational",
    "__version__",
]
