"""Exact computations for the partial order on 2-bridge knots.

Knots are handled through even continued fractions: every 2-bridge knot
corresponds to a class of words over {-2, 0, 2}, and one knot lies above
another when its word parses into signed copies of the other's word joined
by connectors.
"""
from .bridge import UNKNOT, TwoBridgeClass, knot_class, knot_word, phi, phi_inverse_knot, phi_inverse_link
from .errors import (
    BridgeOrderError,
    BudgetExhausted,
    DivisionByZero,
    LinkNotOrdered,
    NoUpperBound,
    NotADoubleParsing,
    NotAKnot,
    NotALink,
    NotExpandedError,
    NotReducedError,
    PathNotRepresentable,
    UnsupportedFormat,
)
from .order import (
    StdForm,
    compare,
    construct_upper_bound,
    incomparable_partners,
    lower_bounds,
    shortest_lubs,
    std_forms,
    upper_bound_exists,
)
from .parsing import Parsing, parse, parse_class, seams
from .rational import eval_cf, even_expansion, parse_fraction, parse_word
from .words import WordClass, class_of, contract, expand

__version__ = "0.1.0"

__all__ = [
    "BridgeOrderError",
    "BudgetExhausted",
    "class_of",
    "compare",
    "construct_upper_bound",
    "contract",
    "DivisionByZero",
    "eval_cf",
    "even_expansion",
    "expand",
    "incomparable_partners",
    "knot_class",
    "knot_word",
    "LinkNotOrdered",
    "lower_bounds",
    "NotADoubleParsing",
    "NotAKnot",
    "NotALink",
    "NotExpandedError",
    "NotReducedError",
    "NoUpperBound",
    "parse",
    "parse_class",
    "parse_fraction",
    "parse_word",
    "Parsing",
    "PathNotRepresentable",
    "phi",
    "phi_inverse_knot",
    "phi_inverse_link",
    "seams",
    "shortest_lubs",
    "std_forms",
    "StdForm",
    "TwoBridgeClass",
    "UNKNOT",
    "UnsupportedFormat",
    "upper_bound_exists",
    "WordClass",
]
