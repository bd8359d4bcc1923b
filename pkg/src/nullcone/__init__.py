"""Null curves on the lightlike cone of signature-(2,2) space.

Natural frames and curvatures of canonical null curves, the seven
Smarandache families built from those frames, and numerical audits of
their closed-form curvature tables.
"""

__version__ = "0.1.0"

from .curve import ConeCurve, GeneratorPair, canonical_curve, fixture, omega, validate_null  # noqa: E402
from .expr import fd_derivative, jet_eval, parse  # noqa: E402
from .frame import CurvatureTriple, NaturalFrame, build_frame, curvatures, frenet_residuals  # noqa: E402
from .kinds import FormulaMode, SmarandacheKind  # noqa: E402
from .metric import CausalCharacter, PerpVariant, Vec4, causal_character, inner, perp  # noqa: E402

__all__ = [
    "CausalCharacter",
    "ConeCurve",
    "CurvatureTriple",
    "FormulaMode",
    "GeneratorPair",
    "NaturalFrame",
    "PerpVariant",
    "SmarandacheKind",
    "Vec4",
    "build_frame",
    "canonical_curve",
    "causal_character",
    "curvatures",
    "fd_derivative",
    "fixture",
    "frenet_residuals",
    "inner",
    "jet_eval",
    "omega",
    "parse",
    "perp",
    "validate_null",
]
