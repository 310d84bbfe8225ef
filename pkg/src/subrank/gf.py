"""Finite field arithmetic: GF(p), GF(q) and GF(q^m) in a polynomial basis.

Elements of an extension field are encoded as plain integers whose base-q
digits are the coordinates with respect to the polynomial basis of the
chosen modulus.  Small fields (size <= TABLE_CAP) get discrete log/antilog
tables so that multiplication, inversion and Frobenius maps are table
lookups.  All values are immutable after construction.
"""

from __future__ import annotations

import json
from typing import Iterator, Optional, Sequence, Union

SIZE_CAP = 2**32
TABLE_CAP = 2**16


class NotPrimeError(ValueError):
    pass


class ReducibleModulusError(ValueError):
    pass


class SizeCapError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """GF(p) with elements represented as ints in range(p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.size = p
        self.zero = 0
        self.one = 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return pow(a, e % (self.p - 1), self.p) if e >= 0 else self.inv(pow(a, -e % (self.p - 1), self.p))

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def _poly_degree(c: Sequence[int]) -> int:
    for i in range(len(c) - 1, -1, -1):
        if c[i]:
            return i
    return -1


def _poly_mod(base, a: Sequence[int], b: Sequence[int]) -> list:
    """Remainder of a modulo b over `base`; b nonzero, need not be monic."""
    a = list(a)
    db = _poly_degree(b)
    lead_inv = base.inv(b[db])
    da = _poly_degree(a)
    while da >= db:
        factor = base.mul(a[da], lead_inv)
        shift = da - db
        for i in range(db + 1):
            a[shift + i] = base.sub(a[shift + i], base.mul(factor, b[i]))
        da = _poly_degree(a)
    out = a[: max(db, 1)]
    return out if out else [0]


def _poly_mulmod(base, a: Sequence[int], b: Sequence[int], mod: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = base.add(out[i + j], base.mul(ai, bj))
    return _poly_mod(base, out, mod)


def _poly_gcd(base, a: Sequence[int], b: Sequence[int]) -> list:
    a, b = list(a), list(b)
    while _poly_degree(b) >= 0:
        a, b = b, _poly_mod(base, a, b)
    return a


def _is_irreducible(base, modulus: Sequence[int]) -> bool:
    """Irreducibility of a monic polynomial over `base` of degree >= 1.

    Degree 1 is always irreducible.  In general we check that
    gcd(X^{q^i} - X, modulus) = 1 for 1 <= i <= deg/2, which rules out any
    irreducible factor of degree <= deg/2.
    """
    m = _poly_degree(modulus)
    if m <= 0:
        return False
    if m == 1:
        return True
    q = base.size
    x = [0, 1]
    power = list(x)
    for _ in range(m // 2):
        # power <- power^q mod modulus, via square-and-multiply on exponent q
        result = [1]
        sq = list(power)
        e = q
        while e:
            if e & 1:
                result = _poly_mulmod(base, result, sq, modulus)
            sq = _poly_mulmod(base, sq, sq, modulus)
            e >>= 1
        power = result
        diff = [base.sub(power[i] if i < len(power) else 0, x[i] if i < len(x) else 0) for i in range(m)]
        g = _poly_gcd(base, list(modulus), diff)
        if _poly_degree(g) != 0:
            return False
    return True


class ExtensionField:
    """GF(q^m) = GF(q)[X]/(modulus), q = base.size.

    Elements are ints < q^m whose base-q digits are the polynomial-basis
    coordinates (digit 0 is the constant term).  The subfield GF(q) embeds
    as the constants, i.e. a base element b < q encodes the same value in
    both fields.
    """

    def __init__(self, base: Union[PrimeField, "ExtensionField"], m: int,
                 modulus: Optional[Sequence[int]] = None):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.base = base
        self.q = base.size
        self.m = m
        self.characteristic = base.characteristic
        if self.q ** m > SIZE_CAP:
            raise SizeCapError(f"field size {self.q}^{m} exceeds cap {SIZE_CAP}")
        self.size = self.q ** m
        if modulus is None:
            modulus = self._first_irreducible()
        else:
            modulus = list(modulus)
            if _poly_degree(modulus) != m:
                raise ReducibleModulusError("modulus degree must equal extension degree")
            if modulus[m] != base.one:
                raise ReducibleModulusError("modulus must be monic")
            if not _is_irreducible(base, modulus):
                raise ReducibleModulusError("modulus is reducible")
        self.modulus = tuple(modulus)
        self.zero = 0
        self.one = 1
        # x = the class of X, the polynomial-basis generator
        self.x = self.q if m > 1 else self._reduce_x()
        self._exp = None
        self._log = None
        if self.size <= TABLE_CAP:
            self._build_tables()

    def _reduce_x(self) -> int:
        # m == 1: X reduces to -modulus[0]
        return self.base.neg(self.modulus[0])

    def _first_irreducible(self) -> list:
        """First monic irreducible of degree m over GF(q) in lexicographic
        order of the low-coefficient vector (c_0, ..., c_{m-1})."""
        base, q, m = self.base, self.q, self.m
        for code in range(q ** m):
            coeffs = self.coords_of_int(code) + (base.one,)
            if _is_irreducible(base, coeffs):
                return list(coeffs)
        raise ReducibleModulusError("no irreducible modulus found")  # unreachable

    # ---- encoding helpers -------------------------------------------------

    def coords_of_int(self, a: int) -> tuple:
        """Base-q digit vector of length m (constant term first)."""
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.q)
            out.append(r)
        return tuple(out)

    coords = coords_of_int

    def from_coords(self, c: Sequence[int]) -> int:
        v = 0
        for d in reversed(list(c)):
            v = v * self.q + d
        return v

    # ---- core arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coords_of_int(a), self.coords_of_int(b)
        return self.from_coords([self.base.add(x, y) for x, y in zip(ca, cb)])

    def sub(self, a: int, b: int) -> int:
        ca, cb = self.coords_of_int(a), self.coords_of_int(b)
        return self.from_coords([self.base.sub(x, y) for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self.from_coords([self.base.neg(x) for x in self.coords_of_int(a)])

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self.base, list(self.coords_of_int(a)),
                            list(self.coords_of_int(b)), self.modulus)
        prod += [0] * (self.m - len(prod))
        return self.from_coords(prod[: self.m])

    def _build_tables(self) -> None:
        n = self.size - 1
        for cand in range(1, self.size):
            if cand == 1 and n > 1:
                continue
            seen = 1
            acc = cand
            order = 1
            while acc != 1:
                acc = self._slow_mul(acc, cand)
                order += 1
                if order > n:
                    break
            if order == n:
                exp = [1] * (2 * n)
                v = 1
                for i in range(n):
                    exp[i] = v
                    v = self._slow_mul(v, cand)
                for i in range(n, 2 * n):
                    exp[i] = exp[i - n]
                log = [0] * self.size
                for i in range(n):
                    log[exp[i]] = i
                self._exp = exp
                self._log = log
                self.generator = cand
                return
        # size == 2: multiplicative group is trivial
        self._exp = [1, 1]
        self._log = [0, 0]
        self.generator = 1

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.size - 1) - self._log[a]]
        return self.pow(a, self.size - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        n = self.size - 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e else 1
        e %= n
        if self._exp is not None:
            return self._exp[self._log[a] * e % n]
        acc, sq = 1, a
        while e:
            if e & 1:
                acc = self._slow_mul(acc, sq)
            sq = self._slow_mul(sq, sq)
            e >>= 1
        return acc

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); frobenius(a, m) == a."""
        i %= self.m
        if a == 0 or i == 0:
            return a
        if self._exp is not None:
            return self._exp[self._log[a] * pow(self.q, i, self.size - 1) % (self.size - 1)]
        for _ in range(i):
            a = self.pow(a, self.q)
        return a

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of zero")
        acc, order = a, 1
        while acc != 1:
            acc = self.mul(acc, a)
            order += 1
        return order

    def elements(self) -> Iterator[int]:
        return iter(range(self.size))

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtensionField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self) -> int:
        return hash(("ExtensionField", self.base, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q}^{self.m})"

    # ---- element wrapper --------------------------------------------------

    def __call__(self, v) -> "FieldElement":
        if isinstance(v, FieldElement):
            if v.field is not self and v.field != self:
                raise ValueError("element from a different field")
            return v
        if isinstance(v, (list, tuple)):
            v = self.from_coords(v)
        if not 0 <= v < self.size:
            raise ValueError(f"encoded value {v} out of range for {self}")
        return FieldElement(self, v)

    def element_range(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.size))


class FieldElement:
    """A single element of an ExtensionField, with operator sugar."""

    __slots__ = ("field", "val")

    def __init__(self, field: ExtensionField, val: int):
        self.field = field
        self.val = val

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.val, other.val))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.val, other.val))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.val))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.val, other.val))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.val, other.val))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.val, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.val))

    def frob(self, i: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.val, i))

    @property
    def coords(self) -> tuple:
        return self.field.coords_of_int(self.val)

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.val == other.val and self.field == other.field
        if isinstance(other, int):
            return self.val == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.val)

    def __repr__(self) -> str:
        return f"<{self.val}:{self.field!r}>"


def field_create(p: int, e: int = 1, m: int = 1,
                 modulus: Optional[Sequence[int]] = None) -> ExtensionField:
    """Build GF(q^m) with q = p^e.

    The coefficient field GF(q) is GF(p) when e == 1, otherwise GF(p^e)
    constructed with its own lex-first irreducible modulus.  If `modulus`
    (degree-m coefficient sequence over GF(q), constant term first) is
    omitted, the lex-first monic irreducible of degree m is used.
    """
    if e < 1 or m < 1:
        raise ValueError("e and m must be >= 1")
    base = PrimeField(p) if e == 1 else ExtensionField(PrimeField(p), e)
    return ExtensionField(base, m, modulus)


def primitive_element(field: ExtensionField) -> FieldElement:
    """Smallest (in encoded-integer order) element of order size - 1."""
    if field._exp is not None:
        return FieldElement(field, field.generator)
    n = field.size - 1
    for v in range(1, field.size):
        if field.multiplicative_order(v) == n:
            return FieldElement(field, v)
    raise RuntimeError("no primitive element found")  # unreachable


def field_to_json(field: ExtensionField) -> str:
    base = field.base
    e = 1 if isinstance(base, PrimeField) else base.m
    return json.dumps({"p": field.characteristic, "e": e, "m": field.m,
                       "modulus": list(field.modulus)})


def field_from_json(text: str) -> ExtensionField:
    rec = json.loads(text)
    return field_create(rec["p"], rec["e"], rec["m"], rec["modulus"])
