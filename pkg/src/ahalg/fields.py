"""Exact scalars: arbitrary-precision rationals and prime fields GF(p).

A :class:`FieldSpec` names the field (``FieldSpec.rationals()`` or
``FieldSpec.gf(p)`` with p prime).  A :class:`FieldElem` wraps one scalar
together with its spec, so cross-field arithmetic raises instead of
silently coercing.  Rationals are ``fractions.Fraction`` values (always in
lowest terms with positive denominator); GF(p) values are reduced residues
in ``range(p)``.  There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, InfiniteFieldError

RATIONALS = "QQ"
PRIME_FIELD = "GF"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """An exact field: the rationals, or GF(p) for a prime p."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == PRIME_FIELD:
            if p is None or not _is_prime(p):
                raise ValueError(f"modulus {p!r} is not prime")
        elif kind == RATIONALS:
            p = None
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.p

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    def elem(self, value) -> "FieldElem":
        """Coerce an int, Fraction or FieldElem into this field."""
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        return FieldElem(self, value)

    def from_int(self, n: int) -> "FieldElem":
        """The image of the integer n under the canonical map Z -> F."""
        return FieldElem(self, n)

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elements(self):
        """Yield each field element exactly once (finite fields only)."""
        if self.kind == RATIONALS:
            raise InfiniteFieldError("cannot enumerate the rationals")
        for r in range(self.p):
            yield FieldElem(self, r)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == RATIONALS else f"GF({self.p})"


class FieldElem:
    """One scalar in a fixed :class:`FieldSpec`, kept in canonical form."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, value):
        if isinstance(value, FieldElem):
            if value.spec != spec:
                raise FieldMismatch("cannot re-wrap an element of another field")
            value = value.val
        if spec.kind == RATIONALS:
            self.val = value if isinstance(value, Fraction) else Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError("non-integer value in a prime field")
                value = value.numerator
            self.val = value % spec.p
        self.spec = spec

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.spec, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.val + other.val)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.val - other.val)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, other.val - self.val)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.spec, self.val * other.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FieldElem(self.spec, -self.val)

    def __pow__(self, n: int):
        if n >= 0:
            if self.spec.is_prime_field:
                return FieldElem(self.spec, pow(self.val, n, self.spec.p))
            return FieldElem(self.spec, self.val**n)
        return self.inverse() ** (-n)

    def inverse(self) -> "FieldElem":
        if not self.val:
            raise ZeroDivisionError("inverse of zero")
        if self.spec.is_prime_field:
            return FieldElem(self.spec, pow(self.val, -1, self.spec.p))
        return FieldElem(self.spec, 1 / self.val)

    def is_zero(self) -> bool:
        return not self.val

    def is_one(self) -> bool:
        return self.val == 1

    def sort_key(self):
        """A total order on the field, used only for deterministic output."""
        return self.val

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElem(self.spec, other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.spec == other.spec and self.val == other.val

    def __hash__(self):
        return hash((self.spec, self.val))

    def __bool__(self):
        return bool(self.val)

    def __str__(self):
        return str(self.val)

    def __repr__(self):
        return f"{self.val} in {self.spec!r}"


QQ = FieldSpec.rationals()
