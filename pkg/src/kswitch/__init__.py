"""Exact computations for vector-valued switching in signed graphs."""

from .errors import CapacityError, InputError, KSwitchError, ValidationError
from .graph import (BalanceCertificate, SignedGraph, apply_1_switching, clique_number,
                    connected_components, is_antibalanced, is_balanced, negate)
from .incidence import build_incidence, injective_mu, mu_from_incidence
from .nip import NIPReport, lambda_inverse, lambda_lines, nu, nu_bar
from .solver import (BoundTrace, DimensionResult, bdim, brute_force_oracle, find_k_positive,
                     lower_bounds, sbdim)
from .switching import (SwitchingAssignment, apply_k_switching, compose, is_positive_switching,
                        validate)

__all__ = [
    "BalanceCertificate", "BoundTrace", "CapacityError", "DimensionResult", "InputError",
    "KSwitchError", "NIPReport", "SignedGraph", "SwitchingAssignment", "ValidationError",
    "apply_1_switching", "apply_k_switching", "bdim", "brute_force_oracle", "build_incidence",
    "clique_number", "compose", "connected_components", "find_k_positive", "injective_mu",
    "is_antibalanced", "is_balanced", "is_positive_switching", "lambda_inverse", "lambda_lines",
    "lower_bounds", "mu_from_incidence", "negate", "nu", "nu_bar", "sbdim", "validate",
]
