"""Message recovery: solve Q_0(X) + sum_i Q_i(f(gamma^{i-1} X)) = 0 for all
linearized f of q-degree at most k-1.

Every coefficient of the left-hand side is a GF(q)-linear function of the
km GF(q)-coordinates of the message u (Frobenius powers and fixed-element
multiplications are GF(q)-linear maps on coordinate vectors).  Stacking
all coefficient positions gives one affine system over GF(q) whose exact
solution set is the decoder's output list, an affine subspace of message
space of GF(q)-dimension at most m(s-1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .gf import ExtensionField, FieldElement
from .interpolation import InterpolationPolynomialSet
from .linalg import MatrixGF, rref, solve_affine
from .linpoly import LinearizedPoly


class ListCapExceededError(ValueError):
    def __init__(self, dimension: int, cap: int):
        super().__init__(f"solution space of dimension {dimension} exceeds cap {cap}")
        self.dimension = dimension


Message = Tuple[int, ...]


@dataclass(frozen=True)
class AffineSolutionSpace:
    """Decoder output: particular message plus homogeneous GF(q)-basis.

    `particular` is None when the recovery equation has no solution
    (a legal outcome outside the guarantee region).  Messages are tuples
    of k encoded GF(q^m) values.
    """
    field: ExtensionField
    k: int
    particular: Optional[Message]
    basis: Tuple[Message, ...]

    @property
    def is_infeasible(self) -> bool:
        return self.particular is None

    @property
    def dimension(self) -> int:
        """GF(q)-dimension; -1 marks the empty (infeasible) space."""
        return -1 if self.particular is None else len(self.basis)

    def contains(self, message: Sequence[Union[int, FieldElement]]) -> bool:
        if self.particular is None:
            return False
        msg = _unwrap_message(message)
        if len(msg) != self.k:
            return False
        f = self.field
        base = f.base
        target = []
        for a, b in zip(msg, self.particular):
            target.extend(f.coords_of_int(f.sub(a, b)))
        rows = []
        for bvec in self.basis:
            row: List[int] = []
            for a in bvec:
                row.extend(f.coords_of_int(a))
            rows.append(row)
        if not rows:
            return all(t == 0 for t in target)
        stacked = MatrixGF.make(base, rows)
        with_target = MatrixGF.make(base, rows + [target])
        return rref(stacked)[1] == rref(with_target)[1]

    def enumerate(self, cap: int = 4096) -> List[Message]:
        """All messages, GF(q)-coefficient vectors in lexicographic order."""
        if self.particular is None:
            return []
        f = self.field
        q = f.base.size
        dim = len(self.basis)
        if q ** dim > cap:
            raise ListCapExceededError(dim, cap)
        out = []
        for coeffs in itertools.product(range(q), repeat=dim):
            msg = list(self.particular)
            for c, bvec in zip(coeffs, self.basis):
                if c:
                    msg = [f.add(a, f.mul(c, b)) for a, b in zip(msg, bvec)]
            out.append(tuple(msg))
        return out


def _unwrap_message(u: Sequence[Union[int, FieldElement]]) -> Message:
    return tuple(x.val if isinstance(x, FieldElement) else int(x) for x in u)


def message_poly(field: ExtensionField, u: Sequence[Union[int, FieldElement]]) -> LinearizedPoly:
    """f_u(X) = sum u_i X^{q^i}; q-degree at most len(u) - 1."""
    return LinearizedPoly(field, _unwrap_message(u))


def residual_poly(Q: InterpolationPolynomialSet, gamma: Union[int, FieldElement],
                  u: Sequence[Union[int, FieldElement]],
                  homogeneous: bool = False) -> LinearizedPoly:
    """Q_0(X) + sum_i Q_i composed with f_u(gamma^{i-1} X); the message u is
    a recovery-equation solution iff this is the zero polynomial.  With
    homogeneous=True the Q_0 term is dropped."""
    field = Q.polys[0].field
    gv = gamma.val if isinstance(gamma, FieldElement) else int(gamma)
    f_u = message_poly(field, u)
    total = LinearizedPoly.zero(field) if homogeneous else Q.polys[0]
    shift = 1  # gamma^{i-1}, starting at gamma^0
    for qi in Q.polys[1:]:
        total = total + qi.compose(f_u.shift_argument(shift))
        shift = field.mul(shift, gv)
    return total


def _normalized_coefficients(Q: InterpolationPolynomialSet) -> List[List[int]]:
    """Coefficient lists of Q_0..Q_s with full Frobenius layers stripped.

    While every constant term q_{i,0} vanishes, Q_i(X) = Q'_i(X^q) for the
    left-shifted Q'_i, and replacing every Q_i by Q'_i preserves the
    solution set.  Afterwards some q_{i,0} is nonzero."""
    coeff_lists = [list(p.coeffs) for p in Q.polys]
    if all(not cl for cl in coeff_lists):
        raise ValueError("interpolation polynomial set is identically zero")
    while all(not cl or cl[0] == 0 for cl in coeff_lists):
        coeff_lists = [cl[1:] for cl in coeff_lists]
    return coeff_lists


def recover_messages(Q: InterpolationPolynomialSet,
                     gamma: Union[int, FieldElement], k: int) -> AffineSolutionSpace:
    """Exact affine solution set of the recovery equation for messages of
    length k, via one GF(q)-linear solve over all coefficient positions."""
    field: ExtensionField = Q.polys[0].field
    base = field.base
    m = field.m
    q = base.size
    gv = gamma.val if isinstance(gamma, FieldElement) else int(gamma)
    coeff_lists = _normalized_coefficients(Q)
    q0 = coeff_lists[0]
    side = coeff_lists[1:]
    s = len(side)

    n_coeffs = max([len(q0)] + [len(cl) + k - 1 for cl in side if cl] + [1])
    gamma_powers = [1]
    for _ in range(s - 1):
        gamma_powers.append(field.mul(gamma_powers[-1], gv))
    basis_elems = [q ** t for t in range(m)]  # encoded polynomial basis of GF(q^m)

    rows: List[List[int]] = []
    rhs: List[int] = []
    for c in range(n_coeffs):
        # constants K_{l} with term K * u_l^{q^{c-l}} for each message slot l
        block_cols: List[List[Tuple[int, ...]]] = []
        for l in range(k):
            j = c - l
            K = 0
            if j >= 0:
                for i, cl in enumerate(side):
                    if j < len(cl) and cl[j]:
                        K = field.add(K, field.mul(cl[j], field.frobenius(gamma_powers[i], c)))
            cols = []
            for e in basis_elems:
                img = field.mul(K, field.frobenius(e, j)) if K else 0
                cols.append(field.coords_of_int(img))
            block_cols.append(cols)
        neg_q0 = field.coords_of_int(field.neg(q0[c] if c < len(q0) else 0))
        for cc in range(m):
            row: List[int] = []
            for l in range(k):
                row.extend(block_cols[l][t][cc] for t in range(m))
            rows.append(row)
            rhs.append(neg_q0[cc])

    sol = solve_affine(MatrixGF.make(base, rows), rhs)
    if sol is None:
        return AffineSolutionSpace(field, k, None, ())
    particular = tuple(field.from_coords(sol.particular[l * m:(l + 1) * m])
                       for l in range(k))
    basis = tuple(tuple(field.from_coords(v[l * m:(l + 1) * m]) for l in range(k))
                  for v in sol.kernel)
    return AffineSolutionSpace(field, k, particular, basis)
