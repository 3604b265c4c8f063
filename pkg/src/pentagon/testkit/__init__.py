"""Brute-force oracles and seeded generators used to check the constructive code."""

from .generators import C5_FREE_FAMILIES, FAMILIES, GenSpec, generate, make_rng
from .oracles import (
    alpha_omega_exact,
    alpha_omega_naive,
    count_induced_c5,
    find_induced_c5,
    find_p4,
    is_p4_free_bruteforce,
    max_cograph,
    verify_induced_c5,
)

__all__ = [
    "C5_FREE_FAMILIES",
    "FAMILIES",
    "GenSpec",
    "generate",
    "make_rng",
    "alpha_omega_exact",
    "alpha_omega_naive",
    "count_induced_c5",
    "find_induced_c5",
    "find_p4",
    "is_p4_free_bruteforce",
    "max_cograph",
    "verify_induced_c5",
]
