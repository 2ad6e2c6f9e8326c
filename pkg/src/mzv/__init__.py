"""Multiple zeta values: dimension bounds, relations, high-precision
evaluation by independent backends, and loop-pairing verification."""

__version__ = "0.1.0"

from .dims import d_sequence
from .evaluator import MzvValue, eval_chen, eval_holder, eval_series
from .precision import PrecComplex, PrecReal
from .relations import RelationVector, upper_bound
from .words import (dual, enumerate_admissible, index_to_word,
                    is_admissible_index, shuffle, stuffle, word_to_index)

__all__ = [
    "MzvValue", "PrecComplex", "PrecReal", "RelationVector", "__version__",
    "d_sequence", "dual", "enumerate_admissible", "eval_chen",
    "eval_holder", "eval_series", "index_to_word", "is_admissible_index",
    "shuffle", "stuffle", "upper_bound", "word_to_index",
]
