"""Shared test helpers: random generators and independent oracles."""

from fractions import Fraction

from ahalg import (
    AhContext,
    OreElement,
    Poly,
    commutator,
    div_left_exact,
    div_right_exact,
)

QQ_SPEC = None  # set lazily to avoid import order issues


def rand_scalar(rng, spec):
    if spec.is_prime_field:
        return spec.from_int(rng.randrange(spec.p))
    return spec.elem(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))


def rand_poly(rng, spec, max_deg, nonzero=False):
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = [rand_scalar(rng, spec) for _ in range(deg + 1)]
        f = Poly(spec, coeffs)
        if not nonzero or not f.is_zero():
            return f


def rand_elem(rng, ctx, max_ydeg, max_deg, nonzero=False):
    while True:
        ydeg = rng.randint(0, max_ydeg)
        coeffs = [rand_poly(rng, ctx.spec, max_deg) for _ in range(ydeg + 1)]
        a = ctx.element(coeffs)
        if not nonzero or not a.is_zero():
            return a


def naive_mul(a: OreElement, b: OreElement) -> OreElement:
    """One-step-rewriting multiplication oracle: Y*f -> f*Y + delta(f)."""
    ctx = a.ctx
    zero = Poly.zero(ctx.spec)
    total = ctx.zero()
    for i, f in enumerate(a.coeffs):
        if f.is_zero():
            continue
        for j, g in enumerate(b.coeffs):
            if g.is_zero():
                continue
            cur = {0: g}
            for _ in range(i):
                nxt = {}
                for k, poly in cur.items():
                    nxt[k + 1] = nxt.get(k + 1, zero) + poly
                    d = ctx.delta(poly)
                    if not d.is_zero():
                        nxt[k] = nxt.get(k, zero) + d
                cur = nxt
            for k, poly in cur.items():
                total = total + ctx.monomial(f * poly, k + j)
    return total


def normal_oracle(v: OreElement) -> bool:
    """Definition-based normality check: both generators stay in both
    one-sided multiples of v, decided by exact one-sided division."""
    ctx = v.ctx
    for g in (ctx.x(), ctx.gen()):
        if div_left_exact(g * v, v) is None:
            return False
        if div_right_exact(v * g, v) is None:
            return False
    return True


def central_oracle(a: OreElement, bound=None) -> bool:
    """Brute-force commutant check against the monomials x^i Y^j."""
    ctx = a.ctx
    p = ctx.spec.characteristic
    if bound is None:
        bound = 2 * p if p else 6
    for i in range(bound + 1):
        for j in range(bound + 1):
            mono = ctx.monomial(Poly.monomial(ctx.spec, ctx.spec.one(), i), j)
            if not commutator(a, mono).is_zero():
                return False
    return True


def all_polys(spec, max_deg):
    """Every polynomial over GF(p) of degree <= max_deg (including 0)."""
    assert spec.is_prime_field
    polys = [Poly.zero(spec)]
    stack = [[]]
    for _ in range(max_deg + 1):
        stack = [c + [r] for c in stack for r in range(spec.p)]
    for coeffs in stack:
        f = Poly.from_ints(spec, coeffs)
        if not f.is_zero():
            polys.append(f)
    unique = {}
    for f in polys:
        unique[f.coeffs] = f
    return list(unique.values())


def all_elements(ctx, max_ydeg, max_deg):
    """Every element over GF(p) with ydeg <= max_ydeg, coeff deg <= max_deg."""
    polys = all_polys(ctx.spec, max_deg)
    elems = []
    def build(prefix, k):
        if k == max_ydeg + 1:
            elems.append(ctx.element(list(prefix)))
            return
        for f in polys:
            build(prefix + [f], k + 1)
    build([], 0)
    unique = {}
    for e in elems:
        unique[e.coeffs] = e
    return list(unique.values())
