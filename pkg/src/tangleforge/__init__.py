"""Bounding homomorphisms, their curve diagrams, and splitting tuples."""

from .diagram import Diagram, component_census, is_cut_system, read_off
from .equiv import SplittingTuple, verify_membership
from .folding import fold_to_core, generates_full
from .presentation import Presentation, abelianization, simplify
from .realize import NotBounding, realize
from .surface import FreeTargetHom, IllDefinedHom, SurfaceSignature, verify_bounding
from .words import Word, reduce

__version__ = "0.1.0"

__all__ = [
    "Diagram", "FreeTargetHom", "IllDefinedHom", "NotBounding", "Presentation",
    "SplittingTuple", "SurfaceSignature", "Word", "abelianization", "component_census",
    "fold_to_core", "generates_full", "is_cut_system", "read_off", "realize", "reduce",
    "simplify", "verify_bounding", "verify_membership",
]
