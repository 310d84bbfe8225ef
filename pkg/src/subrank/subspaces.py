"""Subspaces of GF(q)^N with canonical RREF bases.

The basis matrix in row-reduced echelon form (no zero rows) is a canonical
representative, so subspace equality is plain tuple equality.  Sum,
intersection and the subspace metric d(A,B) = dim(A+B) - dim(A^B) are
provided, plus the random sampling the channel simulator needs.
"""

from __future__ import annotations

import json
from typing import List, Optional, Sequence

from .linalg import MatrixGF, kernel_basis, rref


class AmbientMismatchError(ValueError):
    pass


class DimTooLargeError(ValueError):
    pass


class Subspace:
    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim: int, basis: Sequence[Sequence[int]],
                 _canonical: bool = False):
        self.field = field
        self.ambient_dim = ambient_dim
        if _canonical:
            self.basis = tuple(tuple(r) for r in basis)
        else:
            self.basis = _canonicalize(field, ambient_dim, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[int]) -> bool:
        if len(vector) != self.ambient_dim:
            raise AmbientMismatchError("vector length differs from ambient dim")
        stacked = Subspace(self.field, self.ambient_dim,
                           list(self.basis) + [list(vector)])
        return stacked.dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace(self.field, self.ambient_dim,
                        list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via the kernel of [A; B]."""
        _check_ambient(self, other)
        f = self.field
        if not self.basis or not other.basis:
            return Subspace(f, self.ambient_dim, ())
        # Solve c_A * A = c_B * B: kernel of the stacked transpose relation.
        a, b = len(self.basis), len(other.basis)
        columns = []
        for j in range(self.ambient_dim):
            col = [self.basis[i][j] for i in range(a)] + \
                  [f.neg(other.basis[i][j]) for i in range(b)]
            columns.append(col)
        ker = kernel_basis(MatrixGF.make(f, columns))
        vectors = []
        for kv in ker.rows:
            vec = [f.zero] * self.ambient_dim
            for i in range(a):
                if kv[i]:
                    vec = [f.add(x, f.mul(kv[i], y))
                           for x, y in zip(vec, self.basis[i])]
            vectors.append(vec)
        return Subspace(f, self.ambient_dim, vectors)

    def distance(self, other: "Subspace") -> int:
        _check_ambient(self, other)
        total = (self + other).dim
        common = self.intersect(other).dim
        return total - common

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and other.field == self.field
                and other.ambient_dim == self.ambient_dim
                and other.basis == self.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def to_json(self) -> str:
        return json.dumps({"ambient_dim": self.ambient_dim,
                           "basis": [list(r) for r in self.basis]})

    @classmethod
    def from_json(cls, field, text: str) -> "Subspace":
        rec = json.loads(text)
        return cls(field, rec["ambient_dim"], rec["basis"])


def _canonicalize(field, ambient_dim, vectors) -> tuple:
    rows = [list(v) for v in vectors]
    for r in rows:
        if len(r) != ambient_dim:
            raise AmbientMismatchError("vector length differs from ambient dim")
    if not rows:
        return ()
    reduced, rk, _ = rref(MatrixGF.make(field, rows))
    return reduced.rows[:rk]


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise AmbientMismatchError("subspaces live in different ambient spaces")


def span(field, ambient_dim: int, vectors: Sequence[Sequence[int]]) -> Subspace:
    return Subspace(field, ambient_dim, vectors)


def zero_subspace(field, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, ())


def random_subspace_of(V: Subspace, t: int, rng) -> Subspace:
    """Uniformly random t-dimensional subspace of V."""
    if t > V.dim:
        raise DimTooLargeError(f"requested dim {t} > dim(V) = {V.dim}")
    if t == 0:
        return zero_subspace(V.field, V.ambient_dim)
    f = V.field
    q = f.size
    while True:
        coeffs = [[rng.randrange(q) for _ in range(V.dim)] for _ in range(t)]
        vectors = []
        for row in coeffs:
            vec = [f.zero] * V.ambient_dim
            for c, bas in zip(row, V.basis):
                if c:
                    vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, bas)]
            vectors.append(vec)
        S = Subspace(f, V.ambient_dim, vectors)
        if S.dim == t:
            return S


def random_complement_error(V: Subspace, t: int, rng,
                            max_tries: int = 1000) -> Subspace:
    """Random t-dimensional E with E ^ V = {0} (rejection sampling)."""
    if t > V.ambient_dim - V.dim:
        raise DimTooLargeError(
            f"no {t}-dim complement inside ambient dim {V.ambient_dim}")
    if t == 0:
        return zero_subspace(V.field, V.ambient_dim)
    f = V.field
    q = f.size
    for _ in range(max_tries):
        vectors = [[rng.randrange(q) for _ in range(V.ambient_dim)]
                   for _ in range(t)]
        E = Subspace(f, V.ambient_dim, vectors)
        if E.dim == t and (V + E).dim == V.dim + t:
            return E
    raise DimTooLargeError("rejection sampling failed to find a complement")
