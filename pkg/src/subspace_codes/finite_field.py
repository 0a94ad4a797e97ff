"""Exact arithmetic in GF(p) and GF(p^e).

An element of GF(p^e) is stored as an integer in ``[0, q)``: base-p digit i
is the coefficient of alpha^i, where alpha is a root of the field's modulus
polynomial.  Multiplication goes through exp/log tables built from a
primitive element, so every field operation is a table lookup or a few
integer operations.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- polynomials over GF(p): coefficient lists, lowest degree first ----------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """Remainder of f divided by g over GF(p); g must have nonzero leading term."""
    r = _trim([c % p for c in f])
    g = _trim(list(g))
    inv_lead = pow(g[-1], p - 2, p)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        factor = r[-1] * inv_lead % p
        for i, c in enumerate(g):
            r[shift + i] = (r[shift + i] - factor * c) % p
        _trim(r)
    return r


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for low in product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _trim([c % p for c in modulus])
    degree = len(f) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """The least monic irreducible of degree e, ordered by sum(c_i * p^i)."""
    for low in range(p**e):
        coeffs = [(low // p**i) % p for i in range(e)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


def _encode(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def _decode(value: int, p: int, e: int) -> list[int]:
    return [(value // p**i) % p for i in range(e)]


class Field:
    """The finite field GF(p^e) defined by a monic irreducible modulus.

    Two ``Field`` objects compare equal iff they share p, e and modulus.
    Elements are exposed either as raw ints (the fast path used by matrix
    code) or wrapped in :class:`FieldElement` via ``field(value)``.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | str | None = "default"):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if p**e > MAX_ORDER:
            raise ValueError(f"GF({p}^{e}) exceeds the supported order {MAX_ORDER}")
        if modulus is None or modulus == "default":
            modulus = default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {e}: {modulus}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus: tuple[int, ...] = tuple(modulus)
        self._build_tables()

    def _slow_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        fa, fb = _decode(a, p, e), _decode(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(fa):
            if x:
                for j, y in enumerate(fb):
                    prod[i + j] += x * y
        return _encode(_poly_mod(prod, self.modulus, p), p)

    def _build_tables(self) -> None:
        q = self.q
        if q == 2:
            self._exp = [1, 1]
            self._log = [0, 0]
            self.primitive = 1
            return
        for g in range(2 if q > 2 else 1, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(exp) == q - 1:
                break
        else:
            raise AssertionError("multiplicative group is not cyclic")
        self.primitive = g
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        # doubled so mul can index exp[log a + log b] without a modulo
        self._exp = exp + exp
        self._log = log

    # -- int-level arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return -a % self.p
        p = self.p
        out, scale = 0, 1
        while a:
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    # -- element views -------------------------------------------------------

    def __call__(self, value: int) -> FieldElement:
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element code of GF({self.q})")
        return FieldElement(self, value)

    def __iter__(self) -> Iterator[FieldElement]:
        for value in range(self.q):
            yield FieldElement(self, value)

    def __len__(self) -> int:
        return self.q

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _other(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise TypeError(f"cannot mix elements of {self.field} and {other.field}")
        return other.value

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


def field_make(p: int, e: int = 1, modulus: Sequence[int] | str = "default") -> Field:
    return Field(p, e, modulus)


def field_from_order(q: int) -> Field:
    """GF(q) with the default modulus, for q a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise ValueError(f"{q} is not a prime power")
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return Field(p, e)


def _check_embedding(base: Field, ext: Field) -> None:
    if base.e != 1 or base.p != ext.p:
        raise ValueError(f"cannot embed {ext} over {base}: base must be the prime field of {ext}")


def field_embed(base: Field, ext: Field, element: FieldElement | int) -> tuple[int, ...]:
    """Coordinates of an ext element in the polynomial basis 1, alpha, ..."""
    _check_embedding(base, ext)
    if isinstance(element, FieldElement):
        if element.field != ext:
            raise TypeError(f"element of {element.field} is not in {ext}")
        element = element.value
    return tuple(_decode(element, ext.p, ext.e))


def field_unembed(base: Field, ext: Field, column: Sequence[int]) -> int:
    _check_embedding(base, ext)
    if len(column) != ext.e:
        raise ValueError(f"expected {ext.e} coordinates, got {len(column)}")
    return _encode([c % base.p for c in column], base.p)
