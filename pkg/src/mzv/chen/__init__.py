"""Numerical iterated integrals on the punctured line.

Submodules: series (truncated noncommutative series), paths (segments,
arcs, loops), transport (the stepping engine and regularized limits),
groupring (loops modulo relations with rational coefficients), verify
(the pairing checks and the extension-class check).
"""

from .series import NCSeries
from .paths import (Segment, Arc, Path, PathThroughSingularity, rho0, rho1,
                    segment_path)
from .transport import (transport, transport_regularized,
                        RegularizedTransport, PrecisionNotReached,
                        regularization_ladder, compose)
from .groupring import GroupRingElement, h
from .verify import (pair, sandwich_value, verify_vanishing_on_I,
                     verify_product_formula, verify_half_integrality,
                     extension_class_check)

__all__ = [
    "NCSeries", "Segment", "Arc", "Path", "PathThroughSingularity",
    "rho0", "rho1", "segment_path",
    "transport", "transport_regularized", "RegularizedTransport",
    "PrecisionNotReached", "regularization_ladder", "compose",
    "GroupRingElement", "h", "pair", "sandwich_value",
    "verify_vanishing_on_I", "verify_product_formula",
    "verify_half_integrality", "extension_class_check",
]
