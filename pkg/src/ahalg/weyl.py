"""The Weyl-algebra view of A_h and conversions between the two bases.

The Weyl algebra is the h = 1 instance of the same Ore machinery, so this
module creates contexts with ``h = 1`` (printed with generator ``y``) and
moves elements across the embedding ``Y = y*h``:

* ``to_weyl`` expands an element into Weyl normal form ``sum r_i(x) y^i``;
* ``from_weyl`` inverts it, which succeeds exactly when ``h^i`` divides the
  coefficient of ``y^i`` for every i;
* ``yh_product`` builds the telescoping products that express ``y^i h^i``
  and ``h^i y^i`` in terms of the subalgebra generator;
* ``embed`` maps one subalgebra into another along a divisor of its h;
* ``ore_witness`` produces common-denominator witnesses for the powers of a
  fixed polynomial, and ``localized_equal`` compares right fractions over
  the powers of h without building a localization type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AhContext, OreElement, antiautomorphism, apply_poly_map
from .errors import ContextMismatch, NotDivisibleError, NotInSubalgebraError, ZeroInputError
from .fields import FieldSpec
from .poly import Poly


def weyl_context(spec: FieldSpec) -> AhContext:
    """The Weyl algebra over the given field: relation y*x - x*y = 1."""
    return AhContext(spec, Poly.one(spec), gen_symbol="y")


def is_weyl_context(ctx: AhContext) -> bool:
    return ctx.h.is_one()


def to_weyl(a: OreElement) -> OreElement:
    """Expand a through Y = y*h into Weyl normal form."""
    wctx = weyl_context(a.ctx.spec)
    y_image = wctx.gen() * a.ctx.h
    return apply_poly_map(a, Poly.x(a.ctx.spec), y_image)


def from_weyl(w: OreElement, ctx: AhContext) -> OreElement:
    """The unique preimage of w under ``to_weyl``, if w lies in the subalgebra.

    Membership holds exactly when h^i divides the coefficient of y^i for
    every i; the preimage is peeled off top degree first.  Raises
    :class:`NotInSubalgebraError` (with the offending index) otherwise.
    """
    if not is_weyl_context(w.ctx):
        raise ContextMismatch("from_weyl expects an element of the Weyl algebra")
    if w.ctx.spec != ctx.spec:
        raise ContextMismatch("Weyl element over a different field")
    out: dict[int, Poly] = {}
    cur = w
    while not cur.is_zero():
        n = len(cur.coeffs) - 1
        q, rem = divmod(cur.coeffs[-1], ctx.h**n)
        if not rem.is_zero():
            raise NotInSubalgebraError(n)
        out[n] = q
        cur = cur - to_weyl(ctx.monomial(q, n))
    size = max(out) + 1 if out else 0
    return ctx.element([out.get(i, Poly.zero(ctx.spec)) for i in range(size)])


def yh_product(ctx: AhContext, i: int, side: str = "right") -> OreElement:
    """The product expressing a pure Weyl monomial inside the subalgebra.

    ``side="right"`` gives Y(Y + h')(Y + 2h')...(Y + (i-1)h'), which equals
    y^i h^i; ``side="left"`` gives (Y - ih')(Y - (i-1)h')...(Y - h'), which
    equals h^i y^i.  For i = 0 both are 1.
    """
    if i < 0:
        raise ValueError("power must be nonnegative")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    result = ctx.one()
    yhat = ctx.gen()
    for j in range(i):
        shift = j if side == "right" else -(i - j)
        factor = yhat + ctx.from_poly(ctx.h_prime.scaled(ctx.spec.from_int(shift)))
        result = result * factor
    return result


def embed(a: OreElement, f: Poly) -> OreElement:
    """Embed an element of A_g into A_f along f | g.

    The map sends the generator of A_g to (generator of A_f) * (g/f); inside
    the common Weyl algebra both expand to y*g, so the image is the pullback
    of the Weyl expansion into the target's normal form.  The result lives
    in ``AhContext(spec, f)``, and the Weyl expansion is the correctness
    anchor: the defining relation [image, x] = g is preserved automatically.
    """
    g = a.ctx.h
    if f.spec != a.ctx.spec:
        raise ContextMismatch("divisor over a different field")
    if f.is_zero():
        raise ZeroInputError("cannot embed along a zero divisor")
    _, rem = divmod(g, f)
    if not rem.is_zero():
        raise NotDivisibleError(f"{f} does not divide {g}")
    target = AhContext(a.ctx.spec, f, gen_symbol=a.ctx.gen_symbol)
    return from_weyl(to_weyl(a), target)


@dataclass(frozen=True)
class OreWitness:
    """A common-denominator witness against the powers of f.

    For ``side="right"`` the identity is ``a * s1 == f * a1``; for
    ``side="left"`` it is ``s1 * a == a1 * f``.
    """

    a1: OreElement
    s1: Poly
    side: str


def ore_witness(a: OreElement, f: Poly, side: str = "right") -> OreWitness:
    """Produce the witness showing {f^n} satisfies the Ore condition at a.

    Uses s1 = f^(k+1) with k the generator-degree of a; the right-side
    quotient is an exact coefficientwise division, and the left side is
    obtained from the right side of the anti-automorphic image.
    """
    if f.is_zero():
        raise ZeroDivisionError("Ore witnesses need a nonzero denominator")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    ctx = a.ctx
    k = len(a.coeffs) - 1 if a.coeffs else 0
    s1 = f ** (k + 1)
    if side == "right":
        prod = a * s1
        quot = []
        for c in prod.coeffs:
            q, rem = divmod(c, f)
            assert rem.is_zero(), "Ore divisibility must hold coefficientwise"
            quot.append(q)
        a1 = ctx.element(quot)
        assert a * ctx.from_poly(s1) == ctx.from_poly(f) * a1
        return OreWitness(a1, s1, "right")
    mirrored = ore_witness(antiautomorphism(a), f, "right")
    a1 = antiautomorphism(mirrored.a1)
    assert ctx.from_poly(s1) * a == a1 * ctx.from_poly(f)
    return OreWitness(a1, s1, "left")


def localized_equal(a: OreElement, m: int, b: OreElement, n: int) -> bool:
    """Compare ``a * h^-m`` and ``b * h^-n`` as right fractions over {h^k}.

    a lives in the subalgebra, b in the Weyl algebra; the fractions agree
    exactly when ``to_weyl(a) * h^n == b * h^m``.
    """
    if m < 0 or n < 0:
        raise ValueError("denominator exponents must be nonnegative")
    if not is_weyl_context(b.ctx):
        raise ContextMismatch("second operand must be a Weyl-algebra element")
    h = a.ctx.h
    return to_weyl(a) * h**n == b * h**m
