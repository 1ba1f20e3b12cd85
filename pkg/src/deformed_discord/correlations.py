"""
Closed-form correlation measures for the quasi-Werner family.

Entropic quantities are in bits.  ``0 log 0`` is taken as 0 throughout.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from .errors import FormulaDomainError, OutOfDomain
from .states import CatBasis, pure_concurrence

__all__ = [
    "CorrelationRecord",
    "binary_entropy",
    "q_of_p",
    "concurrence_paper",
    "concurrence_closed",
    "eof",
    "z_pm",
    "z_pm_simplified",
    "F_of_z",
    "entropy_rho_B",
    "entropy_rho_AB",
    "discord_analytic",
]

_SLACK = 1e-12


@dataclass
class CorrelationRecord:
    """One ``(alpha, kappa, p)`` point of a sweep."""

    alpha: float
    kappa: float
    p: float
    s: float = math.nan
    C_psi: float = math.nan
    C: float = math.nan
    EoF: float = math.nan
    DC: float = math.nan
    DC_numeric: Optional[float] = None
    I_mutual: Optional[float] = None
    error: Optional[str] = None

    @property
    def DC_absdiff(self) -> Optional[float]:
        if self.DC_numeric is None:
            return None
        return abs(self.DC - self.DC_numeric)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["DC_absdiff"] = self.DC_absdiff
        return d


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def binary_entropy(x: float) -> float:
    if x < -_SLACK or x > 1.0 + _SLACK:
        raise OutOfDomain(f"binary entropy argument {x} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    return -_xlog2x(x) - _xlog2x(1.0 - x)


def q_of_p(p: float) -> float:
    return (1.0 + 3.0 * p) / 4.0


def concurrence_paper(q: float, C_psi: float, *, radicand: str = "printed",
                      clamp: bool = True) -> float:
    """Concurrence of the quasi-Werner state from the published piecewise formula.

    Reference implementation of the formula as printed; it is known to be
    wrong (negative eigenvalues near ``q = 1``, a negative value at
    ``q = 1/4``).  Use :func:`concurrence_closed` for actual numbers.

    Parameters
    ----------
    q : float
        ``(1 + 3p) / 4``.
    C_psi : float
        Concurrence of the pure Bell-type state.
    radicand : {"printed", "squared"}
        Whether the inner square root holds ``(1-4q)^2 C_psi`` as printed
        or the dimensionally consistent ``(1-4q)^2 C_psi^2``.
    clamp : bool
        Clamp the final value at 0.

    Raises
    ------
    FormulaDomainError
        If any of the three eigenvalues, or the inner radicand, is negative.
    """
    if radicand == "printed":
        c_in = C_psi
    elif radicand == "squared":
        c_in = C_psi * C_psi
    else:
        raise ValueError(f"unknown radicand reading {radicand!r}")
    inner = (1.0 - 4.0 * q) ** 2 * c_in + 12.0 * q * (1.0 - q)
    if inner < 0.0:
        raise FormulaDomainError(f"inner radicand {inner:.3g} < 0")
    lam0 = ((1.0 - q) / 3.0) ** 2
    base = q * (1.0 - q) / 3.0
    pref = (1.0 - 4.0 * q) / 18.0 * C_psi
    lam_p = base + pref * (C_psi + math.sqrt(inner))
    lam_m = base + pref * (C_psi - math.sqrt(inner))
    for name, lam in (("lambda_0", lam0), ("lambda_+", lam_p), ("lambda_-", lam_m)):
        if lam < 0.0:
            raise FormulaDomainError(f"{name} = {lam:.3g} < 0 at q={q:g}, C_psi={C_psi:g}")
    r0, rp, rm = math.sqrt(lam0), math.sqrt(lam_p), math.sqrt(lam_m)
    if q < 0.25:
        c = rp - 2.0 * r0 - rm
    elif q == 0.25:
        c = r0 - 2.0 * rp
    else:
        c = rm - 2.0 * r0 - rp
    return max(0.0, c) if clamp else c


def concurrence_closed(p: float, C_psi: float) -> float:
    """Wootters concurrence of the quasi-Werner state, ``max(0, p C_psi - (1-p)/2)``."""
    return max(0.0, p * C_psi - (1.0 - p) / 2.0)


def eof(C: float) -> float:
    """Entanglement of formation (bits) from the concurrence."""
    if C < -_SLACK or C > 1.0 + _SLACK:
        raise OutOfDomain(f"concurrence {C} outside [0, 1]")
    C = min(max(C, 0.0), 1.0)
    return binary_entropy((1.0 + math.sqrt(1.0 - C * C)) / 2.0)


def z_pm(p: float, basis: CatBasis) -> tuple[float, float]:
    """Eigenvalues of the reduced state, evaluated from the cat-basis constants."""
    q = q_of_p(p)
    Np4 = basis.N_plus ** 4
    Nm4 = basis.N_minus ** 4
    d = (4.0 * q - 1.0) / 24.0 * basis.n_plus ** 2 * (Nm4 - Np4) / (Np4 * Nm4)
    return 0.5 + d, 0.5 - d


def z_pm_simplified(p: float, s: float) -> tuple[float, float]:
    d = p * s / (1.0 + s * s)
    return 0.5 + d, 0.5 - d


def F_of_z(z: float, q: float, *, base: float = 2.0) -> float:
    """Conditional-entropy term contributed by one outcome of the optimal measurement.

    ``F(z) = r log(z/r - 1) - z log(1 - r/z)`` with ``r = (1-q)/3``.
    ``base`` exists only so that the natural-log variant can be evaluated
    as a deliberate fault.
    """
    r = (1.0 - q) / 3.0
    if r <= 0.0:
        return 0.0
    if z <= r:
        raise OutOfDomain(f"F(z) needs z > (1-q)/3; got z={z:g}, (1-q)/3={r:g}")
    ln_b = math.log(base)
    return (r * math.log(3.0 * z / (1.0 - q) - 1.0) - z * math.log1p(-r / z)) / ln_b


def entropy_rho_B(p: float, C_psi: float) -> float:
    return binary_entropy(0.5 - 0.5 * p * math.sqrt(max(0.0, 1.0 - C_psi * C_psi)))


def entropy_rho_AB(p: float) -> float:
    # spectrum {(1-p)/4 (x3), (1+3p)/4}
    return -3.0 * _xlog2x((1.0 - p) / 4.0) - _xlog2x((1.0 + 3.0 * p) / 4.0)


def discord_analytic(p: float, basis: CatBasis, *, log_base: float = 2.0) -> float:
    """Quantum discord (bits) of the quasi-Werner state, measurement on B."""
    if not 0.0 <= p <= 1.0:
        raise OutOfDomain(f"p = {p} outside [0, 1]")
    q = q_of_p(p)
    zp, zm = z_pm(p, basis)
    s_b = entropy_rho_B(p, pure_concurrence(basis))
    return s_b + F_of_z(zp, q, base=log_base) + F_of_z(zm, q, base=log_base) - entropy_rho_AB(p)
