"""
Cat-basis qubits and the quasi-Werner two-qubit family built on them.

All matrices use the fixed product basis ``{|++>, |+->, |-+>, |-->}`` (index
``2*i_A + i_B`` with ``+ -> 0``, ``- -> 1``), or ``{|+>, |->}`` for one qubit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .deformation import DeformationSpec, overlap_D
from .errors import DegenerateBasis

__all__ = [
    "CatBasis",
    "BellCoeffs",
    "QuasiWernerParams",
    "cat_basis",
    "bell_coeffs",
    "pure_concurrence",
    "bell_state",
    "werner_density",
    "werner_from_basis",
    "partial_trace",
    "swap_subsystems",
    "check_density",
]


@dataclass(frozen=True)
class CatBasis:
    """Normalization data of the even/odd cat basis for overlap ``s``.

    ``N_plus, N_minus`` normalize ``|alpha> +- |-alpha>``; ``n_plus``
    normalizes ``|alpha,alpha> + |-alpha,-alpha>``.
    """

    s: float
    N_plus: float
    N_minus: float
    n_plus: float

    @classmethod
    def from_overlap(cls, s: float) -> "CatBasis":
        s = float(s)
        if not 0.0 <= s <= 1.0:
            raise ValueError(f"overlap must lie in [0, 1], got {s}")
        if s >= 1.0:
            raise DegenerateBasis("s = 1 (alpha = 0): the odd cat state |-> does not exist")
        return cls(
            s=s,
            N_plus=(2.0 + 2.0 * s) ** -0.5,
            N_minus=(2.0 - 2.0 * s) ** -0.5,
            n_plus=(2.0 + 2.0 * s * s) ** -0.5,
        )


@dataclass(frozen=True)
class BellCoeffs:
    a: float  # amplitude of |+,+>
    b: float  # amplitude of |-,->


@dataclass(frozen=True)
class QuasiWernerParams:
    alpha: complex
    spec: DeformationSpec
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"mixing probability p must lie in [0, 1], got {self.p}")

    def basis(self) -> CatBasis:
        return cat_basis(self.spec, self.alpha)


def cat_basis(spec: DeformationSpec, alpha: complex) -> CatBasis:
    if alpha == 0:
        raise DegenerateBasis("alpha = 0 makes the cat basis degenerate")
    return CatBasis.from_overlap(overlap_D(spec, alpha))


def bell_coeffs(basis: CatBasis) -> BellCoeffs:
    # n_+ / (2 N_+^2) = n_+ (1 + s), n_+ / (2 N_-^2) = n_+ (1 - s)
    return BellCoeffs(
        a=basis.n_plus / (2.0 * basis.N_plus ** 2),
        b=basis.n_plus / (2.0 * basis.N_minus ** 2),
    )


def pure_concurrence(basis: CatBasis) -> float:
    """Concurrence of the pure Bell-type state, ``n_+^2 / (2 N_+^2 N_-^2)``.

    Equals ``(1 - s^2) / (1 + s^2)``.
    """
    return basis.n_plus ** 2 / (2.0 * basis.N_plus ** 2 * basis.N_minus ** 2)


def bell_state(basis: CatBasis) -> np.ndarray:
    c = bell_coeffs(basis)
    return np.array([c.a, 0.0, 0.0, c.b])


def werner_from_basis(p: float, basis: CatBasis) -> np.ndarray:
    """``(1-p)/4 I_4 + p |psi+><psi+|`` as a real 4x4 X-shaped matrix."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing probability p must lie in [0, 1], got {p}")
    psi = bell_state(basis)
    return (1.0 - p) / 4.0 * np.eye(4) + p * np.outer(psi, psi)


def werner_density(params: QuasiWernerParams) -> np.ndarray:
    return werner_from_basis(params.p, params.basis())


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced state of qubit ``keep`` ("A" or "B") from a 4x4 density matrix."""
    t = np.asarray(rho).reshape(2, 2, 2, 2)  # (iA, iB, jA, jB)
    if keep == "A":
        return np.einsum("ikjk->ij", t)
    if keep == "B":
        return np.einsum("kikj->ij", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


_SWAP = [0, 2, 1, 3]


def swap_subsystems(rho: np.ndarray) -> np.ndarray:
    """Exchange the roles of A and B."""
    rho = np.asarray(rho)
    return rho[np.ix_(_SWAP, _SWAP)]


def check_density(rho: np.ndarray, tol: float = 1e-12) -> None:
    """Raise ValueError unless ``rho`` is Hermitian, unit-trace and PSD within ``tol``."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"not a square matrix: shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise ValueError(f"trace {tr} != 1")
    lo = float(np.linalg.eigvalsh(rho).min())
    if lo < -tol:
        raise ValueError(f"negative eigenvalue {lo:.3g}")

