"""The algebra generated by x and Y with relation Y*x - x*Y = h(x).

Every element has a unique normal form ``sum_i f_i(x) * Y^i`` with the
polynomial coefficients kept on the left; :class:`OreElement` stores that
coefficient list and :class:`AhContext` fixes the field and the commutation
polynomial h.  Multiplication reorders products with the closed-form rule

    Y^n * f  =  sum_{j=0..n}  C(n, j) * delta^j(f) * Y^(n-j)

where ``delta(f) = h * f'`` is the derivation that the relation induces on
the polynomial subring.  Binomial coefficients are taken in Z and mapped
into the field, so they vanish automatically in characteristic p.

Beyond the ring operations this module provides the commutator, the
involutive anti-automorphism fixing x and sending Y to -Y + h', substitution
of generator images (used for endomorphisms and basis changes), and exact
one-sided division by a fixed element (used as a complete decision procedure
for one-sided multiple membership).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import ContextMismatch, ZeroInputError
from .fields import FieldElem, FieldSpec
from .poly import NEG_INF, Poly, format_poly


class AhContext:
    """A fixed field and a fixed nonzero h; the home of its elements."""

    __slots__ = ("spec", "h", "h_prime", "gen_symbol")

    def __init__(self, spec: FieldSpec, h: Poly, gen_symbol: str = "Y"):
        if h.spec != spec:
            raise ContextMismatch("h is not a polynomial over the given field")
        if h.is_zero():
            raise ZeroInputError("h must be nonzero")
        self.spec = spec
        self.h = h
        self.h_prime = h.derivative()
        self.gen_symbol = gen_symbol

    @property
    def deg_h(self) -> int:
        return self.h.degree

    def __eq__(self, other):
        return (
            isinstance(other, AhContext)
            and self.spec == other.spec
            and self.h == other.h
        )

    def __hash__(self):
        return hash((self.spec, self.h))

    def __repr__(self):
        return f"A_h({self.spec!r}, h={self.h})"

    # -- element constructors -------------------------------------------

    def element(self, coeffs) -> "OreElement":
        return OreElement(self, coeffs)

    def zero(self) -> "OreElement":
        return OreElement(self, ())

    def one(self) -> "OreElement":
        return OreElement(self, (Poly.one(self.spec),))

    def x(self) -> "OreElement":
        return OreElement(self, (Poly.x(self.spec),))

    def gen(self) -> "OreElement":
        """The distinguished generator (printed as Y, or y in the Weyl view)."""
        return OreElement(self, (Poly.zero(self.spec), Poly.one(self.spec)))

    def from_poly(self, f: Poly) -> "OreElement":
        return OreElement(self, (f,))

    def from_scalar(self, c) -> "OreElement":
        return OreElement(self, (Poly.constant(self.spec.elem(c)),))

    def monomial(self, f: Poly, i: int) -> "OreElement":
        return OreElement(self, (Poly.zero(self.spec),) * i + (f,))

    # -- the derivation delta(f) = h f' ----------------------------------

    def delta(self, f: Poly) -> Poly:
        return f.derivative() * self.h

    def delta_power(self, f: Poly, j: int) -> Poly:
        if j < 0:
            raise ValueError("delta power must be nonnegative")
        for _ in range(j):
            f = f.derivative() * self.h
        return f


class OreElement:
    """An element in normal form: coefficient ``coeffs[i]`` multiplies Y^i."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: AhContext, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, Poly):
                if c.spec != ctx.spec:
                    raise ContextMismatch("coefficient over the wrong field")
            else:
                c = Poly(ctx.spec, (c,))
            cs.append(c)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- structure --------------------------------------------------------

    @property
    def ydeg(self):
        """Highest power of the generator, or -inf for zero."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly.zero(self.ctx.spec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_part(self) -> Poly:
        return self.coeff(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem, Poly)):
            other = _lift(self.ctx, other)
        if not isinstance(other, OreElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def _mate(self, other) -> "OreElement":
        if isinstance(other, (int, Fraction, FieldElem, Poly)):
            return _lift(self.ctx, other)
        if not isinstance(other, OreElement):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")
        return other

    # -- module operations --------------------------------------------------

    def __add__(self, other):
        other = self._mate(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return OreElement(
            self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._mate(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return OreElement(
            self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __rsub__(self, other):
        other = self._mate(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return OreElement(self.ctx, [-c for c in self.coeffs])

    # -- multiplication -------------------------------------------------------

    def __mul__(self, other):
        other = self._mate(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(self, other)

    def __rmul__(self, other):
        # only scalars/polynomials reach here; lift and multiply on the left
        lifted = _lift(self.ctx, other)
        if lifted is NotImplemented:
            return NotImplemented
        return _mul(lifted, self)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers do not exist in the algebra")
        result = self.ctx.one()
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{format_element(self)}>"


def _lift(ctx: AhContext, value):
    if isinstance(value, OreElement):
        return value
    if isinstance(value, Poly):
        return OreElement(ctx, (value,))
    if isinstance(value, (int, Fraction, FieldElem)):
        return OreElement(ctx, (Poly(ctx.spec, (value,)),))
    return NotImplemented


def _mul(a: OreElement, b: OreElement) -> OreElement:
    ctx = a.ctx
    if a.is_zero() or b.is_zero():
        return ctx.zero()
    na, nb = len(a.coeffs), len(b.coeffs)
    spec = ctx.spec
    out = [Poly.zero(spec)] * (na + nb - 1)
    for j, g in enumerate(b.coeffs):
        if g.is_zero():
            continue
        # delta-power table, shared across all left coefficients
        table = [g]
        for _ in range(na - 1):
            table.append(ctx.delta(table[-1]))
        for i, f in enumerate(a.coeffs):
            if f.is_zero():
                continue
            for m in range(i + 1):
                if table[m].is_zero():
                    break
                c = spec.from_int(comb(i, m))
                if c.is_zero():
                    continue
                term = f * table[m]
                if not c.is_one():
                    term = term.scaled(c)
                out[i - m + j] = out[i - m + j] + term
    return OreElement(ctx, out)


def commutator(a: OreElement, b: OreElement) -> OreElement:
    """The ring commutator a*b - b*a."""
    return a * b - b * a


def apply_poly_map(a: OreElement, x_image, y_image: OreElement) -> OreElement:
    """Substitute images for the generators: ``sum f_i(P) * Q^i``.

    ``x_image`` may be a polynomial or an element of the target context;
    ``y_image`` fixes the target.  Coefficients are evaluated by Horner and
    multiplied on the left of the powers of the Y-image, in that order.
    """
    target = y_image.ctx
    P = _lift(target, x_image)
    if P is NotImplemented or P.ctx != target:
        raise ContextMismatch("generator images live in different contexts")
    result = target.zero()
    q_power = target.one()
    for i, f in enumerate(a.coeffs):
        if i:
            q_power = q_power * y_image
        if f.is_zero():
            continue
        result = result + _eval_poly_at(f, P) * q_power
    return result


def _eval_poly_at(f: Poly, point: OreElement) -> OreElement:
    target = point.ctx
    acc = target.zero()
    for c in reversed(f.coeffs):
        acc = acc * point + target.from_scalar(c)
    return acc


def antiautomorphism(a: OreElement) -> OreElement:
    """The involutive anti-automorphism fixing x and sending Y to -Y + h'.

    It reverses products, so the image of ``f * Y^i`` is ``(-Y + h')^i * f``.
    """
    ctx = a.ctx
    flip = ctx.element((ctx.h_prime,)) - ctx.gen()
    result = ctx.zero()
    power = ctx.one()
    for i, f in enumerate(a.coeffs):
        if i:
            power = power * flip
        if f.is_zero():
            continue
        result = result + power * ctx.from_poly(f)
    return result


def div_left_exact(w: OreElement, v: OreElement) -> OreElement | None:
    """Solve ``w == v * q`` exactly; return q, or None when no such q exists.

    Works by leading-coefficient elimination: the top Y-coefficient of a
    product is the commutative product of the factors' top coefficients,
    so each quotient coefficient is forced by one exact polynomial division.
    """
    return _div_one_sided(w, v, left=True)


def div_right_exact(w: OreElement, v: OreElement) -> OreElement | None:
    """Solve ``w == q * v`` exactly; return q, or None when no such q exists."""
    return _div_one_sided(w, v, left=False)


def _div_one_sided(w, v, left):
    if v.is_zero():
        raise ZeroDivisionError("division by the zero element")
    ctx = w.ctx
    if v.ctx != ctx:
        raise ContextMismatch("divisor from a different context")
    kv = len(v.coeffs) - 1
    lead = v.coeffs[-1]
    quot: dict[int, Poly] = {}
    cur = w
    while not cur.is_zero():
        kw = len(cur.coeffs) - 1
        j = kw - kv
        if j < 0:
            return None
        qj, rem = divmod(cur.coeffs[-1], lead)
        if not rem.is_zero():
            return None
        mono = ctx.monomial(qj, j)
        cur = cur - (v * mono if left else mono * v)
        assert cur.is_zero() or len(cur.coeffs) - 1 < kw
        quot[j] = qj
    size = max(quot) + 1 if quot else 0
    return ctx.element([quot.get(i, Poly.zero(ctx.spec)) for i in range(size)])


def format_element(a: OreElement) -> str:
    """Canonical text form, highest Y-power first: ``Y^2 + 2*x*Y + x^3``."""
    if a.is_zero():
        return "0"
    sym = a.ctx.gen_symbol
    parts = []
    for i in range(len(a.coeffs) - 1, -1, -1):
        f = a.coeffs[i]
        if f.is_zero():
            continue
        body = _element_term(f, sym, i)
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(" - " + body[1:])
        else:
            parts.append(" + " + body)
    return "".join(parts)


def _element_term(f: Poly, sym: str, i: int) -> str:
    if i == 0:
        return format_poly(f)
    y = sym if i == 1 else f"{sym}^{i}"
    if f.is_one():
        return y
    if f == -Poly.one(f.spec):
        return f"-{y}"
    body = format_poly(f)
    if len([c for c in f.coeffs if not c.is_zero()]) > 1:
        return f"({body})*{y}"
    return f"{body}*{y}"
