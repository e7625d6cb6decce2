"""Exact tools for matroid intersection colorability.

Element sets are Python ints used as bitmasks: bit ``i`` set means element
``i`` is present.  Everything here is exact (integers and fractions only).
"""

from .bitset import elements, mask_of
from .complex import SimplicialComplex
from .errors import (
    ClaimViolation,
    DomainError,
    InvalidCircuitsError,
    LoopNotSupportedError,
    MatroidcolorError,
    NoColoringError,
    NotAMatroidError,
    NotFoundError,
    ResourceError,
    TheoremViolation,
)
from .homology import INF, Field
from .hypergraph import Hypergraph
from .matroid import Matroid

__all__ = [
    "INF",
    "ClaimViolation",
    "DomainError",
    "Field",
    "Hypergraph",
    "InvalidCircuitsError",
    "LoopNotSupportedError",
    "Matroid",
    "MatroidcolorError",
    "NoColoringError",
    "NotAMatroidError",
    "NotFoundError",
    "ResourceError",
    "SimplicialComplex",
    "TheoremViolation",
    "elements",
    "mask_of",
]
