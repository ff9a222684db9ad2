"""Prime fields F_p and extensions F_p[a]/(f(a)).

A field object does arithmetic on *raw* values (an ``int`` for F_p, a
length-s coefficient tuple for an extension, lowest degree first) so that
the elimination routines can stay allocation-light.  ``FieldElement`` wraps
a raw value with its field and supplies the operators.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from ..errors import FieldError
from . import poly
from .primes import is_prime


class PrimeField:
    __slots__ = ("p",)
    degree = 1

    def __init__(self, p: int, check: bool = True):
        if check and not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    # raw arithmetic
    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def power(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    @property
    def raw_zero(self):
        return 0

    @property
    def raw_one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot build an element of {self} from {value!r}")
        return value % self.p

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def raw_elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in self.raw_elements())

    def format_raw(self, a) -> str:
        return str(a)


class ExtensionField:
    """F_p[a]/(f(a)) for a monic irreducible f of degree s.

    The class of the indeterminate is exposed as ``alpha``.
    """

    __slots__ = ("p", "modulus", "degree", "base", "_tail")

    def __init__(self, p: int, modulus: Sequence[int], check: bool = True):
        base = PrimeField(p, check=check)
        f = poly.normalize(modulus, p)
        if len(f) < 2 or f[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 1")
        if check and not poly.is_irreducible(f, p):
            raise FieldError(f"modulus {poly.to_str(f)} is reducible over GF({p})")
        self.p = p
        self.base = base
        self.modulus = f
        self.degree = len(f) - 1
        # a^s = -(c_0 + ... + c_{s-1} a^{s-1}); keep only the nonzero terms
        self._tail = tuple((i, -c % p) for i, c in enumerate(f[:-1]) if c)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p**self.degree

    def __repr__(self):
        return f"GF({self.p}^{self.degree}, {poly.to_str(self.modulus)})"

    def __eq__(self, other):
        return type(other) is ExtensionField and other.p == self.p and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GFext", self.p, self.modulus))

    def _pad(self, f: Sequence[int]) -> tuple[int, ...]:
        return tuple(f) + (0,) * (self.degree - len(f))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        s, p = self.degree, self.p
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        tail = self._tail
        for k in range(2 * s - 2, s - 1, -1):
            c = prod[k] % p
            if c:
                shift = k - s
                for i, t in tail:
                    prod[shift + i] += c * t
        return tuple(v % p for v in prod[:s])

    def inv(self, a):
        f = poly.normalize(a, self.p)
        if not f:
            raise ZeroDivisionError("inverse of zero")
        _, u, _ = poly.ext_gcd(f, self.modulus, self.p)
        return self._pad(u)

    def power(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.raw_one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a) -> bool:
        return not any(a)

    @property
    def raw_zero(self):
        return (0,) * self.degree

    @property
    def raw_one(self):
        return (1,) + (0,) * (self.degree - 1)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.value
            if value.field == self.base:
                return self._pad((value.value,))
            raise FieldError(f"element of {value.field} used in {self}")
        if isinstance(value, bool):
            raise TypeError(f"cannot build an element of {self} from {value!r}")
        if isinstance(value, int):
            return self._pad((value % self.p,))
        coeffs = list(value)
        if not all(isinstance(c, int) for c in coeffs):
            raise TypeError(f"coefficients must be integers, got {value!r}")
        return self._pad(poly.mod(poly.normalize(coeffs, self.p), self.modulus, self.p))

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self.raw_zero)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.raw_one)

    @property
    def alpha(self) -> FieldElement:
        if self.degree == 1:
            return self((-self.modulus[0]) % self.p)
        return FieldElement(self, self._pad((0, 1)))

    def raw_elements(self) -> Iterator[tuple[int, ...]]:
        for digits in itertools.product(range(self.p), repeat=self.degree):
            yield tuple(reversed(digits))

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in self.raw_elements())

    def format_raw(self, a) -> str:
        return poly.to_str(poly.normalize(a, self.p))


Field = PrimeField | ExtensionField


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement) and other.field == self.field:
            return other.value
        try:
            return self.field.coerce(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(o)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coefficient vector, lowest degree first (length 1 in a prime field)."""
        v = self.value
        return (v,) if isinstance(v, int) else v

    def __repr__(self):
        return f"{self.field.format_raw(self.value)} in {self.field!r}"

    def __str__(self):
        return self.field.format_raw(self.value)
