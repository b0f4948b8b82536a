"""Exact incidence-Hopf-algebra computations on hypertree and partition posets."""

from .character import (
    Character,
    convolve_on_h,
    convolve_on_p,
    counit_character,
    hypertree_family,
    left_identity_sum,
    moebius_by_recurrence,
    moebius_closed,
    mu_character,
    weighted_series_coefficient,
    zeta_character,
)
from .coproduct import coefficient_bruteforce, coefficient_closed, coproduct_h, coproduct_p
from .errors import HyperhopfError, SizeLimitExceeded
from .hooked import HookedPartition, decode, encode, fibre, phi, word_count
from .hypertree import (
    Hypertree,
    RootedHypertree,
    build_hypertree_poset,
    enumerate_hypertrees,
    profile_of,
)
from .partition import SetPartition, build_partition_poset, enumerate_partitions
from .poset import FinitePoset, are_isomorphic, moebius, moebius_number, sum_function
from .profile import Profile, enumerate_profiles, is_feasible

__version__ = "0.1.0"

__all__ = [
    "Character",
    "FinitePoset",
    "HookedPartition",
    "HyperhopfError",
    "Hypertree",
    "Profile",
    "RootedHypertree",
    "SetPartition",
    "SizeLimitExceeded",
    "are_isomorphic",
    "build_hypertree_poset",
    "build_partition_poset",
    "coefficient_bruteforce",
    "coefficient_closed",
    "convolve_on_h",
    "convolve_on_p",
    "coproduct_h",
    "coproduct_p",
    "counit_character",
    "decode",
    "encode",
    "enumerate_hypertrees",
    "enumerate_partitions",
    "enumerate_profiles",
    "fibre",
    "hypertree_family",
    "is_feasible",
    "left_identity_sum",
    "moebius",
    "moebius_by_recurrence",
    "moebius_closed",
    "moebius_number",
    "mu_character",
    "phi",
    "profile_of",
    "sum_function",
    "weighted_series_coefficient",
    "word_count",
    "zeta_character",
]
