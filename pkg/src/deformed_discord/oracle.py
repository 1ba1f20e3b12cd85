"""
Numerical ground truth for two-qubit correlations.

Nothing here uses the closed forms of :mod:`correlations`: entropies come from
explicit eigensolves, concurrence from the spin-flipped matrix, and discord
from a direct search over all projective measurements on qubit B.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NonConvergence, NotHermitian, UnsupportedStructure
from .states import check_density, partial_trace

__all__ = [
    "MeasurementAngles",
    "DiscordResult",
    "eig_hermitian",
    "von_neumann_entropy",
    "spin_flip",
    "wootters_concurrence",
    "measure_B",
    "conditional_entropy",
    "discord_numeric",
    "mutual_information",
]

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-13
P_MIN = 1e-14

_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SYSY = np.kron(_SY, _SY)
_X_MASK = np.array([
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [0, 1, 1, 0],
    [1, 0, 0, 1],
], dtype=bool)


@dataclass(frozen=True)
class MeasurementAngles:
    """Bloch angles of the projector ``|b> = cos(theta/2)|+> + e^{i phi} sin(theta/2)|->``."""

    theta: float
    phi: float

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        c = math.cos(self.theta / 2)
        s = math.sin(self.theta / 2)
        e = cmath.exp(1j * self.phi)
        return np.array([c, e * s]), np.array([-s / e, c])


@dataclass(frozen=True)
class DiscordResult:
    value: float
    argmin: MeasurementAngles
    iterations: int
    converged: bool


def _as_hermitian(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise NotHermitian("matrix is not Hermitian within 1e-10")
    return 0.5 * (a + a.conj().T)


def _eig2(a: np.ndarray) -> np.ndarray:
    p, d = a[0, 0].real, a[1, 1].real
    b2 = abs(a[0, 1]) ** 2
    tr = p + d
    disc = math.sqrt((p - d) ** 2 + 4.0 * b2)
    hi = 0.5 * (tr + disc)
    # product form for the small root avoids cancellation
    lo = (p * d - b2) / hi if hi != 0.0 else 0.5 * (tr - disc)
    return np.array([hi, lo])


def _jacobi(a: np.ndarray, max_sweeps: int = 64) -> np.ndarray:
    """Cyclic complex Jacobi rotations until the off-diagonal norm is below tolerance."""
    a = a.copy()
    n = a.shape[0]
    tol = JACOBI_TOL * max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tol:
            return np.sort(np.diag(a).real)[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                ph = apq / mag
                theta = 0.5 * math.atan2(2.0 * mag, a[q, q].real - a[p, p].real)
                c, s = math.cos(theta), math.sin(theta)
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * ph.conjugate()
                g[q, q] = c * ph.conjugate()
                a = g.conj().T @ a @ g
                a[p, q] = a[q, p] = 0.0
    raise NonConvergence("Jacobi eigensolver did not converge")


def eig_hermitian(m) -> np.ndarray:
    """Eigenvalues of a 2x2 or 4x4 Hermitian matrix, in descending order.

    2x2 matrices use the closed form; larger ones use complex Jacobi
    rotations.
    """
    a = _as_hermitian(m)
    if a.shape == (2, 2):
        return _eig2(a)
    if a.shape == (1, 1):
        return np.array([a[0, 0].real])
    return _jacobi(a)


def von_neumann_entropy(rho) -> float:
    lam = eig_hermitian(rho)
    return float(-sum(x * math.log2(x) for x in lam if x > 0.0))


def spin_flip(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    return _SYSY @ rho.conj() @ _SYSY


def _det2(m: np.ndarray) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def _eig_block(m: np.ndarray, det: complex) -> list[float]:
    # small root as det / large avoids cancellation when the block is near rank 1
    tr = m[0, 0] + m[1, 1]
    big = (tr + cmath.sqrt(tr * tr - 4.0 * det)) / 2
    small = det / big if abs(big) > 0 else 0.0
    return [big.real, small.real]


def wootters_concurrence(rho) -> float:
    """Concurrence of an X-shaped two-qubit state via the spin-flip construction.

    The product ``rho @ spin_flip(rho)`` splits into the index blocks
    ``{0, 3}`` and ``{1, 2}``; each block is diagonalized in closed form.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("wootters_concurrence needs a 4x4 matrix")
    if np.max(np.abs(rho[~_X_MASK]), initial=0.0) > 1e-10:
        raise UnsupportedStructure("input is not an X-state; general case not supported")
    tilde = spin_flip(rho)
    r = rho @ tilde
    lam = []
    for idx in ([0, 3], [1, 2]):
        blk = np.ix_(idx, idx)
        lam += _eig_block(r[blk], _det2(rho[blk]) * _det2(tilde[blk]))
    if min(lam) < -1e-12:
        raise ValueError(f"rho * rho_tilde has eigenvalue {min(lam):.3g} < 0; not a state")
    roots = sorted((math.sqrt(max(x, 0.0)) for x in lam), reverse=True)
    return max(0.0, roots[0] - roots[1] - roots[2] - roots[3])


def measure_B(rho, angles: MeasurementAngles):
    """Outcome probabilities and conditional states of A for a projective measurement on B.

    Returns a list ``[(p_0, rho_A|0), (p_1, rho_A|1)]``.  Outcomes with
    ``p_j < 1e-14`` carry ``I/2`` as a placeholder state.
    """
    rho = np.asarray(rho, dtype=complex)
    out = []
    for v in angles.vectors():
        proj = np.kron(np.eye(2), np.outer(v, v.conj()))
        post = proj @ rho @ proj
        pj = float(np.trace(post).real)
        if pj < P_MIN:
            out.append((pj, np.eye(2) / 2))
        else:
            out.append((pj, partial_trace(post, "A") / pj))
    return out


def conditional_entropy(rho, angles: MeasurementAngles) -> float:
    return sum(pj * von_neumann_entropy(ra) for pj, ra in measure_B(rho, angles) if pj >= P_MIN)


def mutual_information(rho) -> float:
    return (von_neumann_entropy(partial_trace(rho, "A"))
            + von_neumann_entropy(partial_trace(rho, "B"))
            - von_neumann_entropy(rho))


def discord_numeric(rho, *, n_theta: int = 33, n_phi: int = 33, tol: float = 1e-7,
                    max_evals: int = 10_000, backend: str | None = None) -> DiscordResult:
    """Quantum discord (bits) with measurement on B, by direct minimization.

    The conditional entropy is scanned on an ``n_theta x n_phi`` grid over the
    Bloch sphere, then polished by a compass search started at the best grid
    point whose step is halved until it drops below ``tol``.

    Raises
    ------
    NonConvergence
        If the compass search needs more than ``max_evals`` evaluations.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("discord_numeric needs a 4x4 density matrix")
    check_density(rho, tol=HERMITIAN_TOL)
    k = kernels.get_backend(backend)
    rr, ri = kernels.split_matrix(rho, k)
    _, t0, p0 = k.grid_search(rr, ri, n_theta, n_phi)
    step = math.pi / (n_theta - 1)
    best, t, p, evals, ok = k.refine(rr, ri, t0, p0, step, tol, max_evals)
    if not ok:
        raise NonConvergence(f"measurement search exceeded {max_evals} evaluations")
    value = (von_neumann_entropy(partial_trace(rho, "B")) - von_neumann_entropy(rho) + best)
    if -1e-9 <= value < 0.0:
        value = 0.0
    return DiscordResult(value, MeasurementAngles(t, p), n_theta * n_phi + evals, ok)
