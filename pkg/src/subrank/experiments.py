"""Experiment harness: seeded encode/corrupt/decode sweeps over a channel
grid, producing per-trial records and per-cell summaries.

Trial RNG streams are derived from the master seed and the (rho, t, trial)
coordinates, so records are independent of execution order and a rerun
with the same config and seed is byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .channels import operator_channel, rank_error_channel
from .folded_gabidulin import (FoldedParams, fg_encode, fg_list_decode,
                               fg_max_errors)
from .gf import ExtensionField, field_create
from .interpolation import DegenerateReceivedSpaceError
from .subspace_code import (SubspaceCodeParams, encode, guarantee_holds,
                            list_decode)

CSV_HEADER = "rho,t,trial,success,list_dim,guaranteed,micros"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    family: str                      # "subspace" | "folded"
    field: ExtensionField
    code: dict
    rho_values: Tuple[int, ...]
    t_values: Tuple[int, ...]
    trials: int
    seed: int
    out: Optional[str] = None
    format: str = "csv"

    @classmethod
    def from_dict(cls, rec: dict) -> "ExperimentConfig":
        try:
            family = rec["family"]
            if family not in ("subspace", "folded"):
                raise ConfigError(f"unknown family {family!r}")
            fld = rec["field"]
            field = field_create(fld["p"], fld.get("e", 1), fld["m"],
                                 fld.get("modulus"))
            code = dict(rec["code"])
            channel = rec.get("channel", {})
            rho = channel.get("rho", [0])
            t = channel.get("t", [0])
            rho = [rho] if isinstance(rho, int) else list(rho)
            t = [t] if isinstance(t, int) else list(t)
            return cls(family=family, field=field, code=code,
                       rho_values=tuple(rho), t_values=tuple(t),
                       trials=int(rec.get("trials", 100)),
                       seed=int(rec.get("seed", 0)),
                       out=rec.get("out"), format=rec.get("format", "csv"))
        except ConfigError:
            raise
        except Exception as exc:
            raise ConfigError(f"bad experiment config: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        try:
            rec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
        return cls.from_dict(rec)

    def build_params(self):
        try:
            if self.family == "subspace":
                return SubspaceCodeParams.default(
                    self.field, n=self.code["n"], k=self.code["k"],
                    s=self.code["s"])
            return FoldedParams.default(
                self.field, n=self.code["n"], k=self.code["k"],
                h=self.code["h"], s=self.code["s"])
        except Exception as exc:
            raise ConfigError(f"bad code parameters: {exc}") from exc


@dataclass(frozen=True)
class TrialRecord:
    rho: int
    t: int
    trial: int
    success: bool
    list_dim: int
    guaranteed: bool
    micros: int

    def csv_row(self) -> str:
        return (f"{self.rho},{self.t},{self.trial},"
                f"{str(self.success).lower()},{self.list_dim},"
                f"{str(self.guaranteed).lower()},{self.micros}")


def _trial_rng(seed: int, rho: int, t: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{rho}:{t}:{trial}")


def _random_message(field: ExtensionField, k: int, rng: random.Random) -> tuple:
    return tuple(rng.randrange(field.size) for _ in range(k))


def run_trial(config: ExperimentConfig, params, rho: int, t: int, trial: int,
              measure_time: bool = False) -> TrialRecord:
    rng = _trial_rng(config.seed, rho, t, trial)
    u = _random_message(config.field, params.k, rng)
    start = time.perf_counter() if measure_time else 0.0
    if config.family == "subspace":
        received = operator_channel(encode(params, u), rho, t, rng)
        guaranteed = guarantee_holds(params, rho, t)
        try:
            space = list_decode(params, received)
            success = space.contains(u)
            list_dim = space.dimension
        except DegenerateReceivedSpaceError:
            success, list_dim = False, -1
    else:
        received = rank_error_channel(fg_encode(params, u), t, rng)
        guaranteed = t <= fg_max_errors(params)
        space = fg_list_decode(params, received)
        success = space.contains(u)
        list_dim = space.dimension
    micros = int((time.perf_counter() - start) * 1e6) if measure_time else 0
    return TrialRecord(rho, t, trial, success, list_dim, guaranteed, micros)


def validate_grid(config: ExperimentConfig, params) -> None:
    if config.family == "subspace":
        n = params.n
        N = params.ambient_dim
        for rho in config.rho_values:
            if not 0 <= rho <= n:
                raise ConfigError(f"rho={rho} outside [0, n={n}]")
        for t in config.t_values:
            if not 0 <= t <= N - n:
                raise ConfigError(f"t={t} outside [0, N-n={N - n}]")
    else:
        limit = min(params.g, params.h * config.field.m)
        for t in config.t_values:
            if not 0 <= t <= limit:
                raise ConfigError(f"t={t} outside [0, {limit}]")
        if any(r != 0 for r in config.rho_values):
            raise ConfigError("rank channel has no erasures; rho must be 0")


def run_sweep(config: ExperimentConfig,
              measure_time: bool = False) -> Tuple[List[TrialRecord], Dict]:
    params = config.build_params()
    validate_grid(config, params)
    records: List[TrialRecord] = []
    rho_values = config.rho_values if config.family == "subspace" else (0,)
    for rho in rho_values:
        for t in config.t_values:
            for trial in range(config.trials):
                records.append(run_trial(config, params, rho, t, trial,
                                         measure_time))
    summary = summarize(records)
    return records, summary


def summarize(records: List[TrialRecord]) -> Dict:
    cells: Dict[Tuple[int, int], Dict] = {}
    violations = 0
    for rec in records:
        cell = cells.setdefault((rec.rho, rec.t), {
            "rho": rec.rho, "t": rec.t, "trials": 0, "successes": 0,
            "guaranteed": rec.guaranteed})
        cell["trials"] += 1
        cell["successes"] += rec.success
        if rec.guaranteed and not rec.success:
            violations += 1
    return {"cells": [cells[key] for key in sorted(cells)],
            "guarantee_violations": violations}


def render_csv(records: List[TrialRecord]) -> str:
    lines = [CSV_HEADER] + [rec.csv_row() for rec in records]
    return "\n".join(lines) + "\n"


def render_json(records: List[TrialRecord], summary: Dict) -> str:
    return json.dumps({"records": [rec.__dict__ for rec in records],
                       "summary": summary}, indent=2) + "\n"
