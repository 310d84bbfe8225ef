"""Linearized polynomials over GF(q^m): sums of a_i X^{q^i}.

These act as GF(q)-linear maps on every extension of GF(q) and form a
non-commutative ring under addition and composition.  Coefficients are
stored densely, constant (q-degree 0) term first, with trailing zeros
stripped so that equal maps of bounded degree compare equal.
"""

from __future__ import annotations

from typing import List, Sequence, Union

from .gf import ExtensionField, FieldElement


def _unwrap(field: ExtensionField, coeffs: Sequence) -> List[int]:
    out = []
    for c in coeffs:
        out.append(c.val if isinstance(c, FieldElement) else int(c))
    while out and out[-1] == 0:
        out.pop()
    return out


class LinearizedPoly:
    """f(X) = sum_i coeffs[i] * X^{q^i} over the given field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtensionField, coeffs: Sequence = ()):
        self.field = field
        self.coeffs = tuple(_unwrap(field, coeffs))

    @classmethod
    def zero(cls, field: ExtensionField) -> "LinearizedPoly":
        return cls(field, ())

    @classmethod
    def monomial(cls, field: ExtensionField, i: int, c: Union[int, FieldElement] = 1) -> "LinearizedPoly":
        """c * X^{q^i}."""
        cv = c.val if isinstance(c, FieldElement) else int(c)
        return cls(field, (0,) * i + (cv,))

    @classmethod
    def identity(cls, field: ExtensionField) -> "LinearizedPoly":
        return cls.monomial(field, 0, 1)

    @property
    def q_degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Union[int, FieldElement]) -> FieldElement:
        f = self.field
        xv = x.val if isinstance(x, FieldElement) else int(x)
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = f.add(acc, f.mul(c, f.frobenius(xv, i)))
        return FieldElement(f, acc)

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return LinearizedPoly(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return LinearizedPoly(f, [f.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "LinearizedPoly":
        f = self.field
        return LinearizedPoly(f, [f.neg(c) for c in self.coeffs])

    def scale(self, c: Union[int, FieldElement]) -> "LinearizedPoly":
        f = self.field
        cv = c.val if isinstance(c, FieldElement) else int(c)
        return LinearizedPoly(f, [f.mul(cv, a) for a in self.coeffs])

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """Symbolic composition self(other(X)); q-degrees add.

        (f o g)_k = sum over i+j = k of f_i * g_j^{q^i}.
        """
        f = self.field
        if self.is_zero() or other.is_zero():
            return LinearizedPoly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if not fi:
                continue
            for j, gj in enumerate(other.coeffs):
                if gj:
                    out[i + j] = f.add(out[i + j], f.mul(fi, f.frobenius(gj, i)))
        return LinearizedPoly(f, out)

    __matmul__ = compose

    def shift_argument(self, c: Union[int, FieldElement]) -> "LinearizedPoly":
        """The polynomial X -> f(cX), i.e. coefficients a_i * c^{q^i}."""
        f = self.field
        cv = c.val if isinstance(c, FieldElement) else int(c)
        return LinearizedPoly(f, [f.mul(a, f.frobenius(cv, i))
                                  for i, a in enumerate(self.coeffs)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearizedPoly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            coords = self.field.coords_of_int(c)
            term = f"[{','.join(map(str, coords))}]"
            parts.append(term if i == 0 else f"{term} X^[{i}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LinearizedPoly({self.field!r}, {self.coeffs})"
