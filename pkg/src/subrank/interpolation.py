"""Shared interpolation step for both list decoders.

Given interpolation points (x, y_1, ..., y_s) in GF(q^m)^{s+1}, find a
nonzero Q(X, Y_1, ..., Y_s) = Q_0(X) + Q_1(Y_1) + ... + Q_s(Y_s) where Q_0
has q-degree at most d-1 and each Q_i, i >= 1, q-degree at most d-k, such
that Q vanishes on every point.  The coefficients are the unknowns of a
homogeneous linear system over GF(q^m); d is always chosen so that the
system has more unknowns than equations, so a nonzero kernel vector
exists.  The first kernel basis vector is taken (deterministic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .gf import ExtensionField
from .linalg import MatrixGF, kernel_basis
from .linpoly import LinearizedPoly


class DegenerateReceivedSpaceError(ValueError):
    """The received space is too small to carry message information
    (decoder parameter d would drop below k)."""


@dataclass(frozen=True)
class InterpolationPolynomialSet:
    """Q_0, ..., Q_s together with the decoder degree parameter d."""
    polys: Tuple[LinearizedPoly, ...]   # Q_0 first
    d: int

    @property
    def s(self) -> int:
        return len(self.polys) - 1

    def evaluate(self, point: Sequence[int]) -> int:
        """Q at a point (x, y_1, ..., y_s); encoded field value."""
        field = self.polys[0].field
        acc = 0
        for poly, coord in zip(self.polys, point):
            acc = field.add(acc, poly(coord).val)
        return acc


def degree_parameter(r: int, k: int, s: int) -> int:
    """d = ceil((r + s(k-1) + 1) / (s+1)), with d >= k enforced.

    r counts interpolation constraints.  d(s+1) - s(k-1) unknowns then
    strictly exceed r, guaranteeing a nonzero interpolation polynomial.
    """
    if r < 1:
        raise DegenerateReceivedSpaceError("no interpolation constraints")
    d = math.ceil((r + s * (k - 1) + 1) / (s + 1))
    if d < k:
        raise DegenerateReceivedSpaceError(
            f"degree parameter d={d} < k={k}: received space too small")
    return d


def interpolate_at(field: ExtensionField, points: Sequence[Sequence[int]],
                   d: int, k: int, s: int) -> InterpolationPolynomialSet:
    """Solve the homogeneous interpolation system at the given points."""
    widths = [d] + [d - k + 1] * s
    rows: List[List[int]] = []
    for pt in points:
        row: List[int] = []
        for var, width in enumerate(widths):
            coord = pt[var]
            row.extend(field.frobenius(coord, j) for j in range(width))
        rows.append(row)
    ker = kernel_basis(MatrixGF.make(field, rows))
    if not ker.rows:
        raise RuntimeError("interpolation system has full rank; d too small")
    solution = ker.rows[0]
    polys = []
    offset = 0
    for width in widths:
        polys.append(LinearizedPoly(field, solution[offset:offset + width]))
        offset += width
    return InterpolationPolynomialSet(tuple(polys), d)
