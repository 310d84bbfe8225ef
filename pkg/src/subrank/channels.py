"""Corruption models for both code families.

Operator channel: delete rho random dimensions of the transmitted
subspace and adjoin t alien dimensions, so the received space has
dimension n - rho + t and meets the codeword in exactly n - rho
dimensions.  Rank error channel: add a uniform rank-t matrix (product of
full-rank factors) to a folded codeword.  Both are deterministic given
the caller-supplied RNG.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional

from .folded_gabidulin import FoldedCodeword
from .linalg import MatrixGF, rank
from .subspaces import (DimTooLargeError, Subspace, random_complement_error,
                        random_subspace_of)


class RankTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class ChannelSpec:
    mode: str                # "subspace" | "rank"
    rho: int = 0
    t: int = 0
    seed: Optional[int] = None

    def __post_init__(self):
        if self.mode not in ("subspace", "rank"):
            raise ValueError(f"unknown channel mode {self.mode!r}")
        if self.rho < 0 or self.t < 0:
            raise ValueError("rho and t must be nonnegative")

    def to_json(self) -> str:
        return json.dumps({"mode": self.mode, "rho": self.rho,
                           "t": self.t, "seed": self.seed})

    @classmethod
    def from_json(cls, text: str) -> "ChannelSpec":
        rec = json.loads(text)
        return cls(rec["mode"], rec.get("rho", 0), rec.get("t", 0),
                   rec.get("seed"))


def operator_channel(V: Subspace, rho: int, t: int,
                     rng: random.Random) -> Subspace:
    """U = V' + E with V' a random (dim V - rho)-dim subspace of V and E a
    random t-dim subspace meeting V trivially."""
    if rho > V.dim:
        raise DimTooLargeError(f"cannot erase {rho} of {V.dim} dimensions")
    kept = random_subspace_of(V, V.dim - rho, rng)
    if t == 0:
        return kept
    error = random_complement_error(V, t, rng)
    return kept + error


def rank_error_channel(X: FoldedCodeword, t: int,
                       rng: random.Random) -> FoldedCodeword:
    """Y = X + E where E expands to a uniform rank-t GF(q) matrix A B with
    full-rank factors A (g x t) and B (t x hm)."""
    f = X.field
    base = f.base
    g, hm = X.g, X.h * f.m
    if t > min(g, hm):
        raise RankTooLargeError(f"rank {t} impossible for a {g} x {hm} matrix")
    if t == 0:
        return X
    q = base.size

    def full_rank_sample(nr, nc):
        while True:
            rows = [[rng.randrange(q) for _ in range(nc)] for _ in range(nr)]
            M = MatrixGF.make(base, rows)
            if rank(M) == min(nr, nc):
                return rows

    A = full_rank_sample(g, t)
    B = full_rank_sample(t, hm)
    error_rows = []
    for i in range(g):
        row = [base.zero] * hm
        for l in range(t):
            if A[i][l]:
                row = [base.add(x, base.mul(A[i][l], y))
                       for x, y in zip(row, B[l])]
        error_rows.append(row)
    m = f.m
    entries = tuple(
        tuple(f.add(X.entries[i][j],
                    f.from_coords(error_rows[i][j * m:(j + 1) * m]))
              for j in range(X.h))
        for i in range(g))
    return FoldedCodeword(f, entries)
