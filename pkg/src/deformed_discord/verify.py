"""Cross-checks of the closed forms against the numerical oracle on a parameter grid."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .correlations import (binary_entropy, concurrence_closed, discord_analytic, entropy_rho_B,
                           eof, z_pm, z_pm_simplified)
from .deformation import DeformationSpec, overlap_D
from .oracle import discord_numeric, eig_hermitian, wootters_concurrence
from .states import cat_basis, partial_trace, pure_concurrence, werner_from_basis

TOLERANCES = {
    "zero_discord_baseline": 1e-9,
    "pure_state_coincidence": 1e-9,
    "discord_analytic_vs_numeric": 1e-5,
    "concurrence_closed_vs_wootters": 1e-10,
    "z_identities": 1e-12,
    "overlap_series_vs_closed": 1e-12,
}


@dataclass
class CheckResult:
    name: str
    max_dev: float
    tol: float
    n: int = 0

    @property
    def passed(self) -> bool:
        return self.max_dev <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:32s} max_dev={self.max_dev:.3e}  tol={self.tol:.0e}  n={self.n}"


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def text(self) -> str:
        return "\n".join(c.line() for c in self.checks)


class _Acc:
    def __init__(self, name):
        self.name = name
        self.worst = 0.0
        self.n = 0

    def add(self, dev):
        self.worst = max(self.worst, float(dev))
        self.n += 1

    def result(self):
        return CheckResult(self.name, self.worst, TOLERANCES[self.name], self.n)


def run_verification(alphas: Sequence[float], kappas: Sequence[float], p_steps: int, *,
                     log_base: float = 2.0) -> VerificationReport:
    """Evaluate every consistency check over the grid.

    ``log_base`` is forwarded to the analytic discord; anything other than 2
    is a deliberate fault used to confirm the checks have teeth.
    """
    acc = {name: _Acc(name) for name in TOLERANCES}
    ps = [i / (p_steps - 1) for i in range(p_steps)]
    for kappa in kappas:
        spec = DeformationSpec.barut_girardello(kappa)
        for alpha in alphas:
            if abs(alpha) <= 0.9:
                acc["overlap_series_vs_closed"].add(
                    abs(overlap_D(spec, alpha, method="series") - overlap_D(spec, alpha)))
            basis = cat_basis(spec, alpha)
            c_psi = pure_concurrence(basis)
            for p in ps:
                rho = werner_from_basis(p, basis)
                dc = discord_analytic(p, basis, log_base=log_base)
                dcn = discord_numeric(rho).value
                c = concurrence_closed(p, c_psi)
                if p == 0.0:
                    acc["zero_discord_baseline"].add(max(abs(dc), abs(dcn)))
                if p == 1.0:
                    acc["pure_state_coincidence"].add(abs(dc - eof(c)))
                acc["discord_analytic_vs_numeric"].add(abs(dc - dcn))
                acc["concurrence_closed_vs_wootters"].add(abs(c - wootters_concurrence(rho)))

                zp, zm = z_pm(p, basis)
                sp, sm = z_pm_simplified(p, basis.s)
                ev = eig_hermitian(partial_trace(rho, "B"))
                acc["z_identities"].add(max(
                    abs(zp - sp), abs(zm - sm),
                    abs(zp - ev[0]), abs(zm - ev[1]),
                    abs(entropy_rho_B(p, c_psi) - binary_entropy(zp)),
                ))
    return VerificationReport([acc[name].result() for name in TOLERANCES])

