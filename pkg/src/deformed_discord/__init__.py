"""Quantum discord and entanglement of f-deformed cat-state Werner mixtures.

Submodules
----------
deformation
    Deformation functions, deformed coherent states, cat-state overlap.
states
    Cat basis, Bell-type state, quasi-Werner density matrix, partial traces.
correlations
    Closed-form concurrence, entanglement of formation and discord.
oracle
    Eigensolver, entropies, spin-flip concurrence and measurement-minimized discord.
sweep, verify, plotscript, cli
    Grid evaluation, cross-checks and the command-line front end.
"""
from .correlations import (CorrelationRecord, binary_entropy, concurrence_closed,
                           concurrence_paper, discord_analytic, eof, q_of_p, z_pm)
from .deformation import (Deformation, DeformationSpec, FockVector, TruncationPolicy,
                          coeffs_A, coeffs_D, overlap_D)
from .oracle import discord_numeric, mutual_information, von_neumann_entropy, wootters_concurrence
from .states import (CatBasis, QuasiWernerParams, cat_basis, partial_trace, pure_concurrence,
                     werner_density, werner_from_basis)

__all__ = [
    "CatBasis", "CorrelationRecord", "Deformation", "DeformationSpec", "FockVector",
    "QuasiWernerParams", "TruncationPolicy", "binary_entropy", "cat_basis", "coeffs_A",
    "coeffs_D", "concurrence_closed", "concurrence_paper", "discord_analytic", "discord_numeric",
    "eof", "mutual_information", "overlap_D", "partial_trace", "pure_concurrence", "q_of_p",
    "von_neumann_entropy", "werner_density", "werner_from_basis", "wootters_concurrence", "z_pm",
]
__version__ = "0.1.0"
