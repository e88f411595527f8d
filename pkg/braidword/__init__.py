"""BraidWord: solving the braid word problem through the action on a g-base."""

__version__ = "0.0.1"
__author__ = "BraidWord Team"
__description__ = "Braid word problem solver via the action on a g-base of the punctured disk."

from .braids import (
    BraidLetter,
    BraidWord,
    SyntacticGBase,
    braid_move,
    multiply,
    process_word_geometric,
    process_word_syntactic,
    unprocess,
    words_equal,
)
from .paths import GBase, Link, PathList, path_to_syntactic, standard_gbase, syntactic_to_path
from .words import FGLetter, FGWord, free_reduce

__all__ = [
    "__version__",
    "__author__",
    "__description__",
    "BraidLetter",
    "BraidWord",
    "FGLetter",
    "FGWord",
    "GBase",
    "Link",
    "PathList",
    "SyntacticGBase",
    "braid_move",
    "free_reduce",
    "multiply",
    "path_to_syntactic",
    "process_word_geometric",
    "process_word_syntactic",
    "standard_gbase",
    "syntactic_to_path",
    "unprocess",
    "words_equal",
]
