"""chromakh package initialization."""

__version__ = "0.1.0"
__author__ = "chromakh developers"

from .config import Config
from .algebra import BettiTable, ChainComplex, FieldTag, LaurentPoly
from .diagram import LinkDiagram, load_knot, parse_pd
from .oracle import colored_jones, jones, reduced_colored_jones
from .khovanov import khovanov_homology
from .colored import Variant, colored_complex, colored_homology
from .reduced import reduced_complex, reduced_homology
from .sl2res import verify_resolution

__all__ = [
    "Config",
    "BettiTable",
    "ChainComplex",
    "FieldTag",
    "LaurentPoly",
    "LinkDiagram",
    "load_knot",
    "parse_pd",
    "jones",
    "colored_jones",
    "reduced_colored_jones",
    "khovanov_homology",
    "Variant",
    "colored_complex",
    "colored_homology",
    "reduced_complex",
    "reduced_homology",
    "verify_resolution",
]
