"""
Nonlinear (f-deformed) oscillator algebra on a truncated Fock space.

The deformation function ``f(n)`` modifies the bosonic ladder operators,
``A = a f(n)`` and ``A^dag = f(n) a^dag``.  Two families of coherent states
follow from it: eigenstates of ``A`` ("A-type") and displaced-vacuum states
("D-type").  For the Barut-Girardello function ``f(n) = sqrt(n + 2k - 1)`` the
D-type normalization and the overlap ``<alpha|-alpha>_D`` have closed forms,

    N_D = (1 - |alpha|^2)^k,
    s   = ((1 - |alpha|^2) / (1 + |alpha|^2))^(2k),

which are used as the primary route; the defining power series are kept as
an independent verification route.

Every quantity here depends on ``alpha`` only through ``|alpha|`` except the
phases of the Fock amplitudes themselves.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DivergentSeries, OutOfDomain, TruncationTooSmall

__all__ = [
    "Deformation",
    "DeformationSpec",
    "TruncationPolicy",
    "FockVector",
    "f_value",
    "f_squared",
    "f_factorial",
    "phi",
    "norm_D",
    "norm_A",
    "coeffs_D",
    "coeffs_A",
    "basis_vector",
    "apply_A",
    "apply_Adag",
    "overlap_D",
]

# relative tail target for full (untruncated) series summation
SERIES_RTOL = 1e-17
SERIES_MAX_TERMS = 200_000


class Deformation(enum.Enum):
    IDENTITY = "identity"
    BARUT_GIRARDELLO = "bg"


@dataclass(frozen=True)
class DeformationSpec:
    """Selects the deformation function ``f(n)``.

    ``kappa`` is the Bargmann index of the SU(1,1) representation and must be
    a positive half-integer (1/2, 1, 3/2, ...).  It is ignored for the
    identity deformation.
    """

    kind: Deformation = Deformation.IDENTITY
    kappa: float | None = None

    def __post_init__(self):
        if self.kind is Deformation.BARUT_GIRARDELLO:
            if self.kappa is None:
                raise ValueError("Barut-Girardello deformation needs kappa")
            twice = 2.0 * float(self.kappa)
            if twice < 1.0 - 1e-12 or abs(twice - round(twice)) > 1e-12:
                raise ValueError(f"kappa must be a positive half-integer, got {self.kappa}")
            object.__setattr__(self, "kappa", round(twice) / 2.0)
        elif self.kappa is not None:
            object.__setattr__(self, "kappa", None)

    @classmethod
    def identity(cls) -> "DeformationSpec":
        return cls(Deformation.IDENTITY)

    @classmethod
    def barut_girardello(cls, kappa: float) -> "DeformationSpec":
        return cls(Deformation.BARUT_GIRARDELLO, kappa)

    @property
    def is_bg(self) -> bool:
        return self.kind is Deformation.BARUT_GIRARDELLO

    def __str__(self):
        if self.is_bg:
            return f"BG(kappa={self.kappa:g})"
        return "identity"


@dataclass(frozen=True)
class TruncationPolicy:
    """Fock cutoff: vectors hold levels ``0 .. max_dim - 1``."""

    max_dim: int = 64
    tail_tol: float = 1e-12

    def __post_init__(self):
        if int(self.max_dim) < 1:
            raise ValueError("max_dim must be >= 1")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True, eq=False)
class FockVector:
    """Truncated amplitude vector over number states.

    ``tail`` is the estimated probability mass above the cutoff that the
    vector does not carry.
    """

    coeffs: np.ndarray
    truncation: TruncationPolicy = field(default=DEFAULT_POLICY)
    tail: float = 0.0

    @property
    def norm_deficit(self) -> float:
        return abs(1.0 - float(np.vdot(self.coeffs, self.coeffs).real))

    def __len__(self):
        return len(self.coeffs)


def f_value(spec: DeformationSpec, n: int) -> float:
    if n < 0:
        raise ValueError("n must be non-negative")
    if spec.is_bg:
        return math.sqrt(n + 2.0 * spec.kappa - 1.0)
    return 1.0


def f_squared(spec: DeformationSpec, n: int) -> float:
    """``f(n)^2`` without the square-root round trip (exact for Barut-Girardello)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if spec.is_bg:
        return n + 2.0 * spec.kappa - 1.0
    return 1.0


def f_factorial(spec: DeformationSpec, n: int) -> float:
    """Deformed factorial ``f(1) f(2) ... f(n)``, with the empty product 1 at ``n = 0``.

    ``f(0)`` is deliberately left out: for Barut-Girardello it equals
    ``sqrt(2k - 1)``, which vanishes at ``k = 1/2``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1.0
    for k in range(1, n + 1):
        out *= f_value(spec, k)
    return out


def phi(spec: DeformationSpec, n: int) -> float:
    """Deviation of ``[A, A^dag]`` from the identity on ``|n>``."""
    return (n + 1) * f_squared(spec, n + 1) - n * f_squared(spec, n) - 1.0


# ---------------------------------------------------------------------------
# series machinery
# ---------------------------------------------------------------------------

def _d_ratio(spec: DeformationSpec, x: float) -> Callable[[int], float]:
    # t_{n+1}/t_n for t_n = x^n f(n)!^2 / n!
    return lambda n: x * f_squared(spec, n + 1) / (n + 1)


def _a_ratio(spec: DeformationSpec, x: float) -> Callable[[int], float]:
    # t_{n+1}/t_n for t_n = x^n / (n! f(n)!^2)
    return lambda n: x / ((n + 1) * f_squared(spec, n + 1))


def _sum_series(ratio: Callable[[int], float], alternating: bool = False,
                rtol: float = SERIES_RTOL, max_terms: int = SERIES_MAX_TERMS):
    """Sum ``t_0 = 1, t_{n+1} = t_n ratio(n)`` for a non-increasing ratio sequence.

    Returns ``(positive_sum, signed_sum)``; the signed sum uses ``(-1)^n t_n``.
    Stops once the geometric tail bound ``t_n r_n / (1 - r_n)`` falls below
    ``rtol`` times the running positive sum.
    """
    t = 1.0
    pos = 1.0
    alt = 1.0
    sign = 1.0
    for n in range(max_terms):
        r = ratio(n)
        if r < 1.0 and t * r / (1.0 - r) <= rtol * pos:
            return pos, alt
        t *= r
        sign = -sign
        pos += t
        if alternating:
            alt += sign * t
        if not math.isfinite(pos):
            break
    raise DivergentSeries(f"series did not converge within {max_terms} terms")


def _check_bg_disc(spec: DeformationSpec, x: float):
    if spec.is_bg and x >= 1.0:
        raise DivergentSeries(
            f"D-type Barut-Girardello series diverges for |alpha| >= 1 (|alpha|^2 = {x:g})")


def norm_D(spec: DeformationSpec, alpha: complex, *, method: str = "auto") -> float:
    """Normalization constant of the D-type deformed coherent state.

    Parameters
    ----------
    spec : DeformationSpec
    alpha : complex
        Coherent amplitude; only ``|alpha|`` matters.
    method : {"auto", "closed", "series"}
        ``"auto"`` uses the Barut-Girardello closed form when available and
        the series otherwise.

    Raises
    ------
    DivergentSeries
        For Barut-Girardello with ``|alpha| >= 1``.
    """
    x = abs(alpha) ** 2
    _check_bg_disc(spec, x)
    if method not in ("auto", "closed", "series"):
        raise ValueError(f"unknown method {method!r}")
    if spec.is_bg and method != "series":
        return (1.0 - x) ** spec.kappa
    if method == "closed":
        raise ValueError("no closed form for the identity deformation; use the series")
    pos, _ = _sum_series(_d_ratio(spec, x))
    return pos ** -0.5


def norm_A(spec: DeformationSpec, alpha: complex) -> float:
    x = abs(alpha) ** 2
    pos, _ = _sum_series(_a_ratio(spec, x))
    return pos ** -0.5


def _truncated_vector(first: complex, step: Callable[[int], complex],
                      sq_ratio: Callable[[int], float],
                      policy: TruncationPolicy) -> FockVector:
    dim = int(policy.max_dim)
    c = np.empty(dim, dtype=complex)
    c[0] = first
    for n in range(dim - 1):
        c[n + 1] = c[n] * step(n)
    # tail bound from the last retained term and the (non-increasing) ratio there
    last = abs(c[-1]) ** 2
    r = sq_ratio(dim - 1)
    if last == 0.0:
        tail = 0.0
    elif r >= 1.0:
        tail = math.inf
    else:
        tail = last * r / (1.0 - r)
    if tail > policy.tail_tol:
        raise TruncationTooSmall(
            f"tail mass {tail:.3g} exceeds tail_tol={policy.tail_tol:g} at max_dim={dim}")
    return FockVector(c, policy, tail)


def coeffs_D(spec: DeformationSpec, alpha: complex,
             policy: TruncationPolicy = DEFAULT_POLICY) -> FockVector:
    """Amplitudes ``N_D alpha^n f(n)! / sqrt(n!)`` of the D-type state."""
    alpha = complex(alpha)
    nd = norm_D(spec, alpha)
    x = abs(alpha) ** 2
    return _truncated_vector(
        nd,
        lambda n: alpha * f_value(spec, n + 1) / math.sqrt(n + 1),
        _d_ratio(spec, x),
        policy,
    )


def coeffs_A(spec: DeformationSpec, alpha: complex,
             policy: TruncationPolicy = DEFAULT_POLICY) -> FockVector:
    """Amplitudes ``N_A alpha^n / (sqrt(n!) f(n)!)`` of the eigenstate of ``A``."""
    alpha = complex(alpha)
    na = norm_A(spec, alpha)
    x = abs(alpha) ** 2
    return _truncated_vector(
        na,
        lambda n: alpha / (math.sqrt(n + 1) * f_value(spec, n + 1)),
        _a_ratio(spec, x),
        policy,
    )


def basis_vector(n: int, policy: TruncationPolicy = DEFAULT_POLICY) -> FockVector:
    if not 0 <= n < policy.max_dim:
        raise TruncationTooSmall(f"|{n}> lies outside max_dim={policy.max_dim}")
    c = np.zeros(policy.max_dim, dtype=complex)
    c[n] = 1.0
    return FockVector(c, policy, 0.0)


def _ladder(spec: DeformationSpec, dim: int) -> np.ndarray:
    # sqrt(n) f(n) for n = 1 .. dim - 1
    return np.sqrt([n * f_squared(spec, n) for n in range(1, dim)])


def apply_A(spec: DeformationSpec, v: FockVector) -> FockVector:
    """Deformed annihilation, ``A|n> = sqrt(n) f(n) |n-1>``; not renormalized."""
    c = np.asarray(v.coeffs)
    out = np.zeros_like(c)
    out[:-1] = _ladder(spec, len(c)) * c[1:]
    return FockVector(out, v.truncation, v.tail)


def apply_Adag(spec: DeformationSpec, v: FockVector) -> FockVector:
    """Deformed creation, ``A^dag|n> = sqrt(n+1) f(n+1) |n+1>``.

    Raises TruncationTooSmall when the weight pushed past the cutoff exceeds
    ``tail_tol``.
    """
    c = np.asarray(v.coeffs)
    dim = len(c)
    overflow = dim * f_squared(spec, dim) * abs(c[-1]) ** 2
    if overflow > v.truncation.tail_tol:
        raise TruncationTooSmall(
            f"A^dag pushes weight {overflow:.3g} beyond max_dim={dim}")
    out = np.zeros_like(c)
    out[1:] = _ladder(spec, dim) * c[:-1]
    return FockVector(out, v.truncation, v.tail + overflow)


def overlap_D(spec: DeformationSpec, alpha: complex, *, method: str = "auto") -> float:
    """Overlap ``s = <alpha|-alpha>_D`` of opposite D-type states.

    Real and in ``[0, 1]``.  For Barut-Girardello the closed form is used
    (``method="auto"``), which extends continuously to ``s = 0`` at
    ``|alpha| = 1``; ``method="series"`` sums the defining series instead and
    is only available for ``|alpha| < 1``.

    Raises
    ------
    OutOfDomain
        Barut-Girardello with ``|alpha| > 1``.
    """
    x = abs(alpha) ** 2
    if method not in ("auto", "closed", "series"):
        raise ValueError(f"unknown method {method!r}")
    if spec.is_bg:
        if x > 1.0:
            raise OutOfDomain(f"|alpha| = {math.sqrt(x):g} > 1 is outside the BG domain")
        if method != "series":
            return ((1.0 - x) / (1.0 + x)) ** (2.0 * spec.kappa)
        _check_bg_disc(spec, x)
    elif method == "closed":
        raise ValueError("no closed form for the identity deformation; use the series")
    pos, alt = _sum_series(_d_ratio(spec, x), alternating=True)
    return alt / pos
