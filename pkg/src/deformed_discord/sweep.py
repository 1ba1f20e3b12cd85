"""Parameter sweeps over (kappa, alpha, p) and their CSV/JSON serialization."""
from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .correlations import (CorrelationRecord, concurrence_closed, discord_analytic, eof)
from .deformation import Deformation, DeformationSpec
from .errors import DeformedDiscordError
from .oracle import discord_numeric, mutual_information
from .states import cat_basis, pure_concurrence, werner_from_basis

DEFAULT_ALPHAS = (0.1, 0.5, 1.0)
DEFAULT_KAPPAS = (0.5, 1.0, 1.5)
DEFAULT_P_STEPS = 101

BASE_COLUMNS = ("kappa", "alpha", "p", "s", "C_psi", "C", "EoF", "DC")
ORACLE_COLUMNS = ("DC_numeric", "DC_absdiff")


@dataclass
class SweepConfig:
    alphas: Sequence[float] = DEFAULT_ALPHAS
    kappas: Sequence[float] = DEFAULT_KAPPAS
    p_steps: int = DEFAULT_P_STEPS
    deformation: Deformation = Deformation.BARUT_GIRARDELLO
    output_format: str = "csv"
    compare_oracle: bool = False
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.p_steps < 2:
            raise ValueError("p_steps must be at least 2")
        for a in self.alphas:
            if not 0.0 < a <= 1.0:
                raise ValueError(f"alpha must lie in (0, 1], got {a}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        # validates kappa values
        for k in self.kappas:
            DeformationSpec.barut_girardello(k)

    def p_grid(self) -> list[float]:
        n = self.p_steps - 1
        return [i / n for i in range(n + 1)]

    def specs(self) -> list[tuple[Optional[float], DeformationSpec]]:
        if self.deformation is Deformation.IDENTITY:
            return [(None, DeformationSpec.identity())]
        return [(float(k), DeformationSpec.barut_girardello(k)) for k in self.kappas]


def evaluate_point(alpha: float, spec: DeformationSpec, p: float,
                   compare_oracle: bool = False) -> CorrelationRecord:
    basis = cat_basis(spec, alpha)
    c_psi = pure_concurrence(basis)
    c = concurrence_closed(p, c_psi)
    rec = CorrelationRecord(
        alpha=float(abs(alpha)),
        kappa=spec.kappa,
        p=p,
        s=basis.s,
        C_psi=c_psi,
        C=c,
        EoF=eof(c),
        DC=discord_analytic(p, basis),
    )
    if compare_oracle:
        rho = werner_from_basis(p, basis)
        rec.DC_numeric = discord_numeric(rho).value
        rec.I_mutual = mutual_information(rho)
    return rec


def run_sweep(config: SweepConfig) -> Iterator[CorrelationRecord]:
    """Yield records with kappa outermost, then alpha, then ascending p.

    A failing point yields a record whose ``error`` field is set instead of
    aborting the sweep.
    """
    ps = config.p_grid()
    for kappa, spec in config.specs():
        for alpha in config.alphas:
            for p in ps:
                try:
                    yield evaluate_point(alpha, spec, p, config.compare_oracle)
                except (DeformedDiscordError, ValueError) as exc:
                    yield CorrelationRecord(alpha=alpha, kappa=kappa, p=p,
                                            error=f"{type(exc).__name__}: {exc}")


def fmt(x) -> str:
    """12-significant-digit shortest representation; blank for missing values."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    x = float(x)
    if x == 0.0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".12g")


def _json_value(x):
    s = fmt(x)
    return None if s == "" else float(s)


def columns(compare_oracle: bool) -> tuple[str, ...]:
    return BASE_COLUMNS + (ORACLE_COLUMNS if compare_oracle else ())


def _row(rec: CorrelationRecord, cols) -> dict:
    d = rec.as_dict()
    if rec.error is not None:
        return {c: (d[c] if c in ("kappa", "alpha", "p") else None) for c in cols}
    return {c: d[c] for c in cols}


def to_csv(records: Iterable[CorrelationRecord], compare_oracle: bool) -> str:
    cols = columns(compare_oracle)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for rec in records:
        row = _row(rec, cols)
        w.writerow([fmt(row[c]) for c in cols])
    return buf.getvalue()


def to_json(records: Iterable[CorrelationRecord], compare_oracle: bool) -> str:
    cols = columns(compare_oracle)
    out = [{c: _json_value(v) for c, v in _row(rec, cols).items()} for rec in records]
    return json.dumps(out, indent=1) + "\n"


def render(config: SweepConfig, stderr=sys.stderr) -> tuple[str, int]:
    """Run the sweep and return ``(text, n_errors)``."""
    records = []
    n_err = 0
    for rec in run_sweep(config):
        if rec.error is not None:
            n_err += 1
            print(f"warning: kappa={rec.kappa} alpha={rec.alpha} p={rec.p}: {rec.error}",
                  file=stderr)
        records.append(rec)
    if config.output_format == "json":
        return to_json(records, config.compare_oracle), n_err
    return to_csv(records, config.compare_oracle), n_err
