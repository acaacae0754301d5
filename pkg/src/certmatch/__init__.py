"""Certifying maximum-cardinality matching for general graphs.

Blossom-shrinking search structured as driver -> recursive quotient search
-> blossom assembly -> alternating-tree search, producing an odd-set cover
witness verified by an independent checker.
"""

from .blossom import (
    AugmentingPath,
    Blossom,
    BlossomFound,
    NothingFound,
    compute_blossom,
)
from .checker import Verdict, check_max_card_matching
from .contraction import ContractionMap, find_aug_path
from .debug import set_debug
from .errors import (
    CapacityError,
    CertificationError,
    ContractError,
    InputError,
)
from .graph import (
    Graph,
    Matching,
    augment,
    edge,
    is_alternating,
    is_augmenting_path,
    is_path,
    is_simple,
)
from .alt_search import compute_alt_path, final_state
from .matcher import CertifiedMatching, build_odd_set_cover, find_max_matching
from .oracle import brute_augmenting_path, brute_max_matching

__all__ = [
    "AugmentingPath",
    "Blossom",
    "BlossomFound",
    "CapacityError",
    "CertificationError",
    "CertifiedMatching",
    "ContractError",
    "ContractionMap",
    "Graph",
    "InputError",
    "Matching",
    "NothingFound",
    "Verdict",
    "augment",
    "brute_augmenting_path",
    "brute_max_matching",
    "build_odd_set_cover",
    "check_max_card_matching",
    "compute_alt_path",
    "compute_blossom",
    "edge",
    "final_state",
    "find_aug_path",
    "find_max_matching",
    "is_alternating",
    "is_augmenting_path",
    "is_path",
    "is_simple",
    "set_debug",
]

__version__ = "0.1.0"
