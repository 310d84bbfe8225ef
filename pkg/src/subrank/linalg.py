"""Dense linear algebra over a finite field: RREF, kernels, affine solves.

Matrices are stored row-major as lists of lists of encoded field values
(plain ints), together with the field object that interprets them.  The
same routines work over GF(q) and GF(q^m) since both field classes expose
the same arithmetic interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class ShapeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixGF:
    field: object
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ShapeMismatchError("ragged rows")

    @classmethod
    def make(cls, field, rows: Sequence[Sequence[int]]) -> "MatrixGF":
        return cls(field, tuple(tuple(r) for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def mul_vec(self, v: Sequence[int]) -> List[int]:
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, b in zip(row, v):
                acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out


def _rref_rows(field, rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """In-place row reduction; returns (rows, pivot_columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(M: MatrixGF) -> Tuple[MatrixGF, int, Tuple[int, ...]]:
    """Row-reduced echelon form with zero rows trailing."""
    rows = [list(r) for r in M.rows]
    rows, pivots = _rref_rows(M.field, rows)
    return MatrixGF.make(M.field, rows), len(pivots), tuple(pivots)


def rank(M: MatrixGF) -> int:
    return rref(M)[1]


def kernel_basis(M: MatrixGF) -> MatrixGF:
    """Basis of the right kernel, free variables set to unit vectors in
    column order (deterministic)."""
    f = M.field
    ncols = M.ncols
    reduced, _, pivots = rref(M)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [f.zero] * ncols
        vec[fc] = f.one
        for i, pc in enumerate(pivots):
            # pivot var = -sum over free columns of row entry * free value
            vec[pc] = f.neg(reduced.rows[i][fc])
        basis.append(vec)
    return MatrixGF.make(f, basis)


@dataclass(frozen=True)
class AffineSolution:
    """Particular solution plus a basis of the homogeneous kernel."""
    field: object
    particular: Tuple[int, ...]
    kernel: Tuple[Tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def solve_affine(A: MatrixGF, b: Sequence[int]) -> Optional[AffineSolution]:
    """All x with A x = b, or None if the system is infeasible."""
    if len(b) != A.nrows:
        raise ShapeMismatchError("rhs length does not match row count")
    f = A.field
    ncols = A.ncols
    aug = [list(row) + [bv] for row, bv in zip(A.rows, b)]
    if not aug:
        return AffineSolution(f, (f.zero,) * ncols,
                              kernel_basis(A).rows if ncols else ())
    aug, pivots = _rref_rows(f, aug)
    if ncols in pivots:
        return None  # a row reads 0 = 1
    particular = [f.zero] * ncols
    for i, pc in enumerate(pivots):
        particular[pc] = aug[i][ncols]
    return AffineSolution(f, tuple(particular), kernel_basis(A).rows)
