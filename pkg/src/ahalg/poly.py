"""Dense univariate polynomials over an exact field.

A :class:`Poly` stores its coefficients by increasing degree with trailing
zeros stripped, so equality is structural and the zero polynomial is the
empty tuple (its ``degree`` is ``-inf``).  On top of the ring operations the
module provides the calculus and factorization support the rest of the
library leans on: formal derivatives, monic gcd, composition, squarefree
decomposition in both characteristics (with p-th-root descent when the
derivative vanishes), distinct-root counting, full factorization over GF(p)
(squarefree + distinct-degree + equal-degree splitting), and rational-root
based factor extraction over Q.

Factorization over Q is not a complete irreducibility decision procedure:
factors this module cannot certify carry ``verified=False`` and downstream
consumers degrade honestly instead of guessing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .errors import FieldMismatch, ZeroInputError
from .fields import FieldElem, FieldSpec

NEG_INF = float("-inf")


class Poly:
    """A dense univariate polynomial with exact field coefficients."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        cs = [spec.elem(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, spec) -> "Poly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec) -> "Poly":
        return cls(spec, (1,))

    @classmethod
    def x(cls, spec) -> "Poly":
        return cls(spec, (0, 1))

    @classmethod
    def constant(cls, c: FieldElem) -> "Poly":
        return cls(c.spec, (c,))

    @classmethod
    def monomial(cls, spec, c, k: int) -> "Poly":
        return cls(spec, (0,) * k + (c,))

    @classmethod
    def from_ints(cls, spec, ints) -> "Poly":
        return cls(spec, [spec.from_int(n) for n in ints])

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> FieldElem:
        if not self.coeffs:
            raise ZeroInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.spec.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = Poly(self.spec, (other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def _check(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, FieldElem)):
            return Poly(self.spec, (other,))
        if not isinstance(other, Poly):
            return NotImplemented
        if other.spec != self.spec:
            raise FieldMismatch("polynomials over different fields")
        return other

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.spec, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            self.spec, [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Poly(self.spec, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scaled(self.spec.elem(other))
        if not isinstance(other, Poly):
            return NotImplemented
        if other.spec != self.spec:
            raise FieldMismatch("polynomials over different fields")
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.spec)
        out = [self.spec.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = len(other.coeffs) - 1
        inv_lc = other.lc.inverse()
        quot = [self.spec.zero()] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = c * inv_lc
            quot[i - dn] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dn + j] = rem[i - dn + j] - q * b
        return Poly(self.spec, quot), Poly(self.spec, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> "Poly":
        """Formal derivative; in char p the derivative of x^p is 0."""
        return Poly(
            self.spec,
            [self.spec.from_int(i) * c for i, c in enumerate(self.coeffs)][1:],
        )

    def evaluate(self, point) -> FieldElem:
        point = self.spec.elem(point)
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Return self(inner(x)), computed exactly by Horner."""
        inner = self._check(inner)
        acc = Poly.zero(self.spec)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroInputError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self.scaled(self.lc.inverse())

    def scaled(self, c) -> "Poly":
        c = self.spec.elem(c)
        return Poly(self.spec, [a * c for a in self.coeffs])

    def shifted(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.spec, (0,) * k + self.coeffs)

    # -- printing -------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.spec!r}, {format_poly(self)!r})"


def format_poly(f: Poly, var: str = "x") -> str:
    """Canonical text form: terms in decreasing degree, e.g. ``x^2 - 2*x + 1``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c.is_zero():
            continue
        body = _term_str(c, var, i)
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(" - " + body[1:])
        else:
            parts.append(" + " + body)
    return "".join(parts)


def _term_str(c: FieldElem, var: str, i: int) -> str:
    if i == 0:
        return str(c)
    v = var if i == 1 else f"{var}^{i}"
    if c.is_one():
        return v
    if c == -c.spec.one() and not c.spec.is_prime_field:
        return f"-{v}"
    return f"{c}*{v}"


# -- gcd and modular arithmetic ----------------------------------------


def gcd_monic(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is rejected."""
    if a.is_zero() and b.is_zero():
        raise ZeroInputError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base: Poly, exp: int, mod: Poly) -> Poly:
    """base**exp reduced modulo mod, by square-and-multiply."""
    result = Poly.one(base.spec)
    base = base % mod
    while exp:
        if exp & 1:
            result = result * base % mod
        base = base * base % mod
        exp >>= 1
    return result


# -- squarefree structure ----------------------------------------------


def pth_root(f: Poly) -> Poly:
    """The p-th root of f in GF(p)[x], assuming f lies in GF(p)[x^p].

    Over the prime field a^p = a, so the root keeps the coefficients and
    divides every exponent by p.
    """
    p = f.spec.characteristic
    if p == 0:
        raise ZeroInputError("p-th root only exists in characteristic p")
    out = [f.spec.zero()] * (len(f.coeffs) // p + 1)
    for i, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        if i % p:
            raise ValueError("polynomial is not a p-th power")
        out[i // p] = c
    return Poly(f.spec, out)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Write monic(f) as a product of pairwise-coprime squarefree parts.

    Returns ``[(g, m), ...]`` with each g monic squarefree and
    ``prod g**m == monic(f)``.  Handles characteristic p via p-th-root
    descent when the derivative vanishes (GF(p) is perfect).
    """
    if f.is_zero():
        raise ZeroInputError("cannot decompose the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    if f.spec.characteristic == 0:
        return _squarefree_char0(f)
    return _squarefree_charp(f)


def _squarefree_char0(f: Poly) -> list[tuple[Poly, int]]:
    # Yun's algorithm
    out = []
    fp = f.derivative()
    a = gcd_monic(f, fp)
    b = f // a
    c = fp // a
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = gcd_monic(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        i += 1
    return out


def _squarefree_charp(f: Poly) -> list[tuple[Poly, int]]:
    p = f.spec.characteristic
    out = []
    n = 1
    while f.degree > 0:
        fp = f.derivative()
        if fp.is_zero():
            f = pth_root(f)
            n *= p
            continue
        g = gcd_monic(f, fp)
        w = f // g
        i = 1
        while w.degree > 0:
            y = gcd_monic(w, g)
            z = w // y
            if z.degree > 0:
                out.append((z, i * n))
            w = y
            g = g // y
            i += 1
        if g.degree > 0:
            f = pth_root(g)
            n *= p
        else:
            break
    return sorted(out, key=lambda t: (t[1], _poly_sort_key(t[0])))


def squarefree_part(f: Poly) -> Poly:
    """The radical of f: the product of its distinct monic prime factors."""
    parts = squarefree_decomposition(f)
    out = Poly.one(f.spec)
    for g, _ in parts:
        out = out * g
    return out


def distinct_root_count(f: Poly) -> int:
    """Number of distinct roots of f in the algebraic closure.

    Over a perfect field this is exactly the degree of the radical.
    """
    if f.is_zero():
        raise ZeroInputError("the zero polynomial has no root count")
    if f.degree == 0:
        return 0
    return squarefree_part(f).degree


# -- factorization ------------------------------------------------------


@dataclass(frozen=True)
class FactorTerm:
    poly: Poly
    multiplicity: int
    verified: bool

    def __iter__(self):
        # allows unpacking as (poly, multiplicity)
        return iter((self.poly, self.multiplicity))


@dataclass(frozen=True)
class FactoredPoly:
    unit: FieldElem
    factors: tuple[FactorTerm, ...]

    @property
    def fully_verified(self) -> bool:
        return all(t.verified for t in self.factors)

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for t in self.factors:
            out = out * t.poly**t.multiplicity
        return out


def _poly_sort_key(f: Poly):
    return (len(f.coeffs), tuple(c.sort_key() for c in f.coeffs))


def factor(f: Poly, seed: int = 0) -> FactoredPoly:
    """Factor f into monic parts times a unit.

    Over GF(p) the result is the complete prime factorization and every
    factor is verified irreducible.  Over Q the squarefree parts are split
    off and refined by rational-root extraction; what remains is certified
    only up to degree 3 (no rational root), and larger cofactors are
    flagged ``verified=False``.
    """
    if f.is_zero():
        raise ZeroInputError("cannot factor the zero polynomial")
    unit = f.lc
    terms: list[FactorTerm] = []
    for g, mult in squarefree_decomposition(f):
        if f.spec.is_prime_field:
            for q in _factor_squarefree_gfp(g, seed):
                terms.append(FactorTerm(q, mult, True))
        else:
            terms.extend(
                FactorTerm(q, mult, ok) for q, ok in _split_rational(g)
            )
    terms.sort(key=lambda t: (_poly_sort_key(t.poly), t.multiplicity))
    return FactoredPoly(unit, tuple(terms))


def _split_rational(g: Poly) -> list[tuple[Poly, bool]]:
    # g monic squarefree over Q
    out = []
    for root in rational_roots(g):
        lin = Poly(g.spec, (-root, 1))
        out.append((lin, True))
        g = g // lin
    if g.degree >= 1:
        # degree 2 or 3 with no rational root is irreducible over Q
        out.append((g, g.degree <= 3))
    return out


def rational_roots(f: Poly) -> list[FieldElem]:
    """All rational roots of f, via the rational-root theorem.

    Each candidate is verified by evaluation, so the returned list is exact.
    """
    if f.is_zero():
        raise ZeroInputError("the zero polynomial has every root")
    spec = f.spec
    if spec.is_prime_field:
        raise FieldMismatch("rational_roots is defined over QQ only")
    roots = []
    # strip x^k so the constant term becomes nonzero
    k = 0
    while f.coeff(k).is_zero():
        k += 1
    if k:
        roots.append(spec.zero())
        f = Poly(spec, f.coeffs[k:])
    if f.degree < 1:
        return roots
    denom_lcm = 1
    for c in f.coeffs:
        denom_lcm = denom_lcm * c.val.denominator // int_gcd(
            denom_lcm, c.val.denominator
        )
    ints = [int(c.val * denom_lcm) for c in f.coeffs]
    content = 0
    for n in ints:
        content = int_gcd(content, n)
    ints = [n // content for n in ints]
    seen = set()
    for s in _divisors(abs(ints[0])):
        for t in _divisors(abs(ints[-1])):
            for cand in (Fraction(s, t), Fraction(-s, t)):
                if cand in seen:
                    continue
                seen.add(cand)
                elem = spec.elem(cand)
                if f.evaluate(elem).is_zero():
                    roots.append(elem)
    roots.sort(key=lambda e: e.sort_key())
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _factor_squarefree_gfp(g: Poly, seed: int) -> list[Poly]:
    rng = random.Random(seed)
    out = []
    for prod, d in _distinct_degree(g):
        out.extend(_equal_degree(prod, d, rng))
    return out


def _distinct_degree(g: Poly) -> list[tuple[Poly, int]]:
    # g monic squarefree; returns (product of degree-d primes, d) pairs
    p = g.spec.characteristic
    x = Poly.x(g.spec)
    out = []
    xp = x
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        xp = pow_mod(xp, p, g)
        part = gcd_monic(g, xp - x)
        if part.degree > 0:
            out.append((part, d))
            g = g // part
            if g.degree > 0:
                xp = xp % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    # f = product of distinct monic primes, all of degree d
    if f.degree == d:
        return [f]
    p = f.spec.characteristic
    split = None
    for r in _splitter_candidates(f, rng):
        if p == 2:
            probe = _trace_map(r, d, f)
        else:
            probe = pow_mod(r, (p**d - 1) // 2, f) - Poly.one(f.spec)
        if probe.is_zero():
            continue
        cand = gcd_monic(f, probe)
        if 0 < cand.degree < f.degree:
            split = cand
            break
    assert split is not None, "equal-degree splitting exhausted its candidates"
    return sorted(
        _equal_degree(split, d, rng) + _equal_degree(f // split, d, rng),
        key=_poly_sort_key,
    )


def _splitter_candidates(f: Poly, rng: random.Random):
    # a bounded randomized phase, then a deterministic sweep of all small polys
    p = f.spec.characteristic
    n = f.degree
    for _ in range(64):
        coeffs = [rng.randrange(p) for _ in range(n)]
        r = Poly.from_ints(f.spec, coeffs)
        if r.degree >= 1:
            yield r
    for deg in range(1, n):
        for tail in itertools.product(range(p), repeat=deg):
            for lead in range(1, p):
                yield Poly.from_ints(f.spec, list(tail) + [lead])


def _trace_map(r: Poly, d: int, mod: Poly) -> Poly:
    # r + r^2 + r^4 + ... + r^(2^(d-1)) mod `mod`, for GF(2) splitting
    acc = r % mod
    term = r % mod
    for _ in range(d - 1):
        term = term * term % mod
        acc = (acc + term) % mod
    return acc


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over GF(p)."""
    if not f.spec.is_prime_field:
        raise FieldMismatch("irreducibility test implemented over GF(p) only")
    n = f.degree
    if n == NEG_INF or n == 0:
        return False
    if n == 1:
        return True
    p = f.spec.characteristic
    f = f.monic()
    x = Poly.x(f.spec)
    # x^(p^k) mod f, built one Frobenius step at a time
    frob = [x]
    for _ in range(n):
        frob.append(pow_mod(frob[-1], p, f))
    if frob[n] != x % f:
        return False
    for q in _prime_divisors(n):
        probe = frob[n // q] - x
        if probe.is_zero() or gcd_monic(f, probe).degree > 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
