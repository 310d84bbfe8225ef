"""List-decodable subspace codes with s+1-variate interpolation.

A message u of length k over GF(q^m) is encoded as the GF(q)-span of the
n vectors (alpha_i, f(alpha_i), f(gamma alpha_i), ..., f(gamma^{s-1}
alpha_i)), an n-dimensional subspace of the (n + s m)-dimensional ambient
space.  The decoder interpolates a nonzero Q_0(X) + Q_1(Y_1) + ... +
Q_s(Y_s) through the received basis and returns the affine space of all
messages solving the recovery equation.  The transmitted message is
guaranteed to appear whenever s*rho + t < n*s - s*(k-1) for rho erasures
and t error dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .gf import ExtensionField, FieldElement, primitive_element
from .interpolation import (DegenerateReceivedSpaceError, InterpolationPolynomialSet,
                            degree_parameter, interpolate_at)
from .linalg import MatrixGF, rank
from .recovery import (AffineSolutionSpace, Message, _unwrap_message,
                       recover_messages, residual_poly)
from .subspaces import Subspace


class BadParamsError(ValueError):
    pass


class WrongMessageLengthError(ValueError):
    pass


@dataclass(frozen=True)
class SubspaceCodeParams:
    field: ExtensionField
    n: int
    k: int
    s: int
    alphas: Tuple[int, ...]
    gamma: int

    def __post_init__(self):
        f = self.field
        if not 1 <= self.k <= self.n <= f.m:
            raise BadParamsError(f"need 1 <= k <= n <= m, got k={self.k} n={self.n} m={f.m}")
        if self.s < 1:
            raise BadParamsError("s must be >= 1")
        if len(self.alphas) != self.n:
            raise BadParamsError("need exactly n evaluation points")
        coord_rows = [f.coords_of_int(a) for a in self.alphas]
        if rank(MatrixGF.make(f.base, coord_rows)) != self.n:
            raise BadParamsError("evaluation points are GF(q)-dependent")
        conjugates = {f.frobenius(self.gamma, i) for i in range(f.m)}
        if len(conjugates) != f.m:
            raise BadParamsError("gamma lies in a proper subfield")

    @classmethod
    def default(cls, field: ExtensionField, n: int, k: int, s: int) -> "SubspaceCodeParams":
        """Evaluation points 1, x, x^2, ... (the polynomial basis, always
        GF(q)-independent); gamma the smallest primitive element."""
        alphas = tuple(field.pow(field.x, i) if i else 1 for i in range(n))
        return cls(field, n, k, s, alphas, primitive_element(field).val)

    @property
    def ambient_dim(self) -> int:
        return self.n + self.s * self.field.m

    def gamma_elem(self) -> FieldElement:
        return FieldElement(self.field, self.gamma)


def encode(params: SubspaceCodeParams,
           u: Sequence[Union[int, FieldElement]]) -> Subspace:
    """Span of the n generators (e_i | coords f(a_i) | ... | coords f(g^{s-1} a_i))."""
    f = params.field
    msg = _unwrap_message(u)
    if len(msg) != params.k:
        raise WrongMessageLengthError(f"expected {params.k} symbols, got {len(msg)}")
    gens = []
    for i, alpha in enumerate(params.alphas):
        vec: List[int] = [0] * params.n
        vec[i] = 1
        point = alpha
        for _ in range(params.s):
            value = 0
            for l, ul in enumerate(msg):
                value = f.add(value, f.mul(ul, f.frobenius(point, l)))
            vec.extend(f.coords_of_int(value))
            point = f.mul(params.gamma, point)
        gens.append(vec)
    return Subspace(f.base, params.ambient_dim, gens)


def decoder_d(r: int, k: int, s: int) -> int:
    """Degree parameter for a received space of dimension r."""
    return degree_parameter(r, k, s)


def interpolation_points(params: SubspaceCodeParams,
                         U: Subspace) -> List[Tuple[int, ...]]:
    """Map each basis row of U back to (x, y_1, ..., y_s) over GF(q^m):
    the first n GF(q)-coordinates give x = sum c_j alpha_j, each following
    m-block is read in the polynomial basis."""
    f = params.field
    if U.ambient_dim != params.ambient_dim:
        raise BadParamsError("received space has wrong ambient dimension")
    m = f.m
    points = []
    for row in U.basis:
        x = 0
        for c, alpha in zip(row[:params.n], params.alphas):
            if c:
                x = f.add(x, f.mul(c, alpha))
        pt = [x]
        for b in range(params.s):
            block = row[params.n + b * m: params.n + (b + 1) * m]
            pt.append(f.from_coords(block))
        points.append(tuple(pt))
    return points


def interpolate(params: SubspaceCodeParams, U: Subspace) -> InterpolationPolynomialSet:
    points = interpolation_points(params, U)
    d = decoder_d(len(points), params.k, params.s)
    return interpolate_at(params.field, points, d, params.k, params.s)


def list_decode(params: SubspaceCodeParams, U: Subspace) -> AffineSolutionSpace:
    """Interpolate, recover, and re-check the output by substitution."""
    Q = interpolate(params, U)
    space = recover_messages(Q, params.gamma, params.k)
    _check_output(Q, params.gamma, params.field, space)
    return space


def _check_output(Q: InterpolationPolynomialSet, gamma: int,
                  field: ExtensionField, space: AffineSolutionSpace) -> None:
    bound = field.m * (Q.s - 1)
    if space.dimension > bound:
        raise RuntimeError(
            f"solution space dimension {space.dimension} exceeds bound {bound}")
    if space.particular is None:
        return
    if not residual_poly(Q, gamma, space.particular).is_zero():
        raise RuntimeError("particular solution fails the recovery equation")
    for bvec in space.basis:
        if not residual_poly(Q, gamma, bvec, homogeneous=True).is_zero():
            raise RuntimeError("homogeneous basis vector fails the recovery equation")


@dataclass(frozen=True)
class RadiusInfo:
    t_max: int
    symbol_rate: Fraction
    packet_rate: Fraction
    normalized_radius: Fraction


def guarantee_holds(params: SubspaceCodeParams, rho: int, t: int) -> bool:
    """Guarantee condition s*rho + t < n*s - s*(k-1)."""
    return params.s * rho + t < params.n * params.s - params.s * (params.k - 1)


def radius_info(params: SubspaceCodeParams, rho: int = 0) -> RadiusInfo:
    n, k, s, m = params.n, params.k, params.s, params.field.m
    if rho > n:
        raise BadParamsError("rho exceeds code dimension")
    t_max = n * s - s * (k - 1) - s * rho - 1
    return RadiusInfo(
        t_max=t_max,
        symbol_rate=Fraction(k * m, n * (n + s * m)),
        packet_rate=Fraction(k, n),
        normalized_radius=Fraction(s * (n - k + 1), n),
    )
