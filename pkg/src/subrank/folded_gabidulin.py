"""Folded Gabidulin rank-metric codes and their list decoder.

A Gabidulin codeword (f(gamma^0), ..., f(gamma^{n-1})) is regrouped into
g = n/h rows of h consecutive evaluations; codewords are g x h matrices
over GF(q^m), equivalently g x hm over GF(q).  The decoder interpolates
Q_0(X) + Q_1(Y_1) + ... + Q_s(Y_s) through the g(h-s+1) sliding windows
of each row and solves the same recovery equation as the subspace
decoder.  The exact guarantee is the integer condition
d <= (g - t)(h - s + 1) on the error rank t, which approaches the
normalized radius (s/(s+1)) (1 - h R / (h - s + 1)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .gf import ExtensionField, FieldElement
from .interpolation import (InterpolationPolynomialSet, degree_parameter,
                            interpolate_at)
from .linalg import MatrixGF, rank
from .recovery import (AffineSolutionSpace, _unwrap_message, message_poly,
                       recover_messages, residual_poly)
from .subspace_code import BadParamsError


class DegenerateParamsError(ValueError):
    pass


class ShapeMismatchError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class FoldedParams:
    field: ExtensionField
    n: int
    k: int
    h: int
    s: int
    gamma: int

    def __post_init__(self):
        f = self.field
        if not 1 <= self.k <= self.n <= f.m:
            raise BadParamsError(f"need 1 <= k <= n <= m, got k={self.k} n={self.n} m={f.m}")
        if self.h < 1 or self.n % self.h:
            raise BadParamsError("h must be a positive divisor of n")
        if not 1 <= self.s <= self.h:
            raise BadParamsError("need 1 <= s <= h")
        if f.multiplicative_order(self.gamma) != f.size - 1:
            raise BadParamsError("gamma must be primitive")

    @classmethod
    def default(cls, field: ExtensionField, n: int, k: int, h: int, s: int) -> "FoldedParams":
        from .gf import primitive_element
        return cls(field, n, k, h, s, primitive_element(field).val)

    @property
    def g(self) -> int:
        return self.n // self.h

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)


@dataclass(frozen=True)
class FoldedCodeword:
    """g x h matrix over GF(q^m); rows of encoded values."""
    field: ExtensionField
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def g(self) -> int:
        return len(self.entries)

    @property
    def h(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def expand(self) -> MatrixGF:
        """The g x hm matrix over GF(q) (each entry in the polynomial basis)."""
        f = self.field
        rows = []
        for row in self.entries:
            out: List[int] = []
            for v in row:
                out.extend(f.coords_of_int(v))
            rows.append(out)
        return MatrixGF.make(f.base, rows)

    def __add__(self, other: "FoldedCodeword") -> "FoldedCodeword":
        _check_shape(self, other)
        f = self.field
        return FoldedCodeword(f, tuple(
            tuple(f.add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "FoldedCodeword") -> "FoldedCodeword":
        _check_shape(self, other)
        f = self.field
        return FoldedCodeword(f, tuple(
            tuple(f.sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def to_json(self) -> str:
        import json
        f = self.field
        return json.dumps({"g": self.g, "h": self.h,
                           "entries": [list(f.coords_of_int(v))
                                       for row in self.entries for v in row]})

    @classmethod
    def from_json(cls, field: ExtensionField, text: str) -> "FoldedCodeword":
        import json
        rec = json.loads(text)
        vals = [field.from_coords(c) for c in rec["entries"]]
        h = rec["h"]
        rows = tuple(tuple(vals[i * h:(i + 1) * h]) for i in range(rec["g"]))
        return cls(field, rows)


def _check_shape(a: FoldedCodeword, b: FoldedCodeword) -> None:
    if a.g != b.g or a.h != b.h or a.field != b.field:
        raise ShapeMismatchError("codeword shapes differ")


def evaluation_point(params: FoldedParams, i: int, j: int) -> int:
    """gamma^{ih+j}, the evaluation point behind row i, column j."""
    return params.field.pow(params.gamma, i * params.h + j)


def fg_encode(params: FoldedParams,
              u: Sequence[Union[int, FieldElement]]) -> FoldedCodeword:
    """Row i holds (f(gamma^{ih}), ..., f(gamma^{(i+1)h-1}))."""
    msg = _unwrap_message(u)
    if len(msg) != params.k:
        raise BadParamsError(f"expected {params.k} symbols, got {len(msg)}")
    f_u = message_poly(params.field, msg)
    rows = []
    for i in range(params.g):
        rows.append(tuple(f_u(evaluation_point(params, i, j)).val
                          for j in range(params.h)))
    return FoldedCodeword(params.field, tuple(rows))


def rank_distance(X: FoldedCodeword, Y: FoldedCodeword) -> int:
    """Rank over GF(q) of the g x hm expansion of X - Y."""
    _check_shape(X, Y)
    return rank((X - Y).expand())


def fg_decoder_d(params: FoldedParams) -> int:
    """d = ceil((g(h-s+1) + s(k-1) + 1) / (s+1)); raises when d < k."""
    try:
        return degree_parameter(params.g * (params.h - params.s + 1),
                                params.k, params.s)
    except Exception as exc:
        raise DegenerateParamsError(str(exc)) from exc


def fg_interpolate(params: FoldedParams, Y: FoldedCodeword) -> InterpolationPolynomialSet:
    """Constraints Q(gamma^{ih+j}, y_{i,j}, ..., y_{i,j+s-1}) = 0 for
    0 <= i < g and 0 <= j <= h-s."""
    if Y.g != params.g or Y.h != params.h:
        raise ShapeMismatchError("received word has wrong shape")
    d = fg_decoder_d(params)
    points = []
    for i in range(params.g):
        row = Y.entries[i]
        for j in range(params.h - params.s + 1):
            points.append((evaluation_point(params, i, j),
                           *row[j:j + params.s]))
    return interpolate_at(params.field, points, d, params.k, params.s)


def fg_list_decode(params: FoldedParams, Y: FoldedCodeword) -> AffineSolutionSpace:
    Q = fg_interpolate(params, Y)
    space = recover_messages(Q, params.gamma, params.k)
    _check_output(params, Q, space)
    return space


def _check_output(params: FoldedParams, Q: InterpolationPolynomialSet,
                  space: AffineSolutionSpace) -> None:
    bound = params.field.m * (params.s - 1)
    if space.dimension > bound:
        raise RuntimeError(
            f"solution space dimension {space.dimension} exceeds bound {bound}")
    if space.particular is None:
        return
    if not residual_poly(Q, params.gamma, space.particular).is_zero():
        raise RuntimeError("particular solution fails the recovery equation")
    for bvec in space.basis:
        if not residual_poly(Q, params.gamma, bvec, homogeneous=True).is_zero():
            raise RuntimeError("homogeneous basis vector fails the recovery equation")


def fg_max_errors(params: FoldedParams) -> int:
    """Largest t with d <= (g - t)(h - s + 1); -1 when even t = 0 fails."""
    d = fg_decoder_d(params)
    w = params.h - params.s + 1
    for t in range(params.g, -1, -1):
        if d <= (params.g - t) * w:
            return t
    return -1


def normalized_radius(s: int, h: int, rate: Fraction) -> Fraction:
    """(s/(s+1)) * (1 - h R / (h - s + 1)): the decoder's normalized radius."""
    return Fraction(s, s + 1) * (1 - Fraction(h, h - s + 1) * rate)


def gabidulin_min_distance_bruteforce(params: FoldedParams,
                                      cap: int = 1 << 16) -> int:
    """Exhaustive minimum pairwise rank distance; test oracle for h = 1.

    Enumerates all q^{mk} codewords, so only desk-scale parameters are
    accepted."""
    if params.h != 1:
        raise BadParamsError("oracle expects the unfolded code (h = 1)")
    f = params.field
    count = f.size ** params.k
    if count > cap:
        raise TooLargeError(f"{count} codewords exceed cap {cap}")
    words = [fg_encode(params, msg)
             for msg in itertools.product(range(f.size), repeat=params.k)]
    best = None
    for a, b in itertools.combinations(words, 2):
        dist = rank_distance(a, b)
        if best is None or dist < best:
            best = dist
    return best
