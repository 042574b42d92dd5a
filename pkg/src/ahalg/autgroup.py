"""The automorphism group of A_h: pairs, structure, invariants, endomorphisms.

Every automorphism acts by ``x -> alpha*x + beta`` and
``Y -> alpha^(deg h - 1) * Y + f(x)``, where the pair (alpha, beta) must
satisfy the compatibility identity

    h(alpha*x + beta) == alpha^(deg h) * h(x).                      (pair law)

The set of admissible pairs is either a finite list or, exactly when h is a
scalar times a power of a single linear factor (x - lambda), the
one-parameter family {(alpha, (1-alpha)*lambda)}.  Over a finite field the
pairs are found by exhaustive search; over the rationals beta is eliminated
through the x^(deg h - 1) coefficient and the remaining coefficient
conditions become univariate polynomials in alpha whose rational roots are
then verified directly.  The same elimination solves the affine-equivalence
problem behind the isomorphism test.

On top of the pair computations the module classifies the group (polynomial
shears only / semidirect with the scalar group / semidirect with a finite
cyclic part), produces the invariant polynomial t and the center-of-the-
automorphism-group generator q for each case, and implements the two
families of injective non-surjective endomorphisms together with extension
and restriction of automorphisms along an embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AhContext, OreElement, apply_poly_map, commutator
from .errors import (
    AhError,
    CharacteristicError,
    ConstantHError,
    ContextMismatch,
    InvalidPairError,
    NotDivisibleError,
    WrongHError,
)
from .fields import FieldElem, FieldSpec
from .poly import Poly, distinct_root_count, gcd_monic, rational_roots, squarefree_part


def _pair_key(pair):
    return (pair[0].sort_key(), pair[1].sort_key())


def _affine(spec: FieldSpec, alpha: FieldElem, beta: FieldElem) -> Poly:
    return Poly(spec, (beta, alpha))


def pair_is_valid(ctx: AhContext, alpha: FieldElem, beta: FieldElem) -> bool:
    """Check the pair law h(alpha*x + beta) == alpha^deg(h) * h(x)."""
    if alpha.is_zero():
        return False
    lhs = ctx.h.compose(_affine(ctx.spec, alpha, beta))
    return lhs == ctx.h.scaled(alpha**ctx.deg_h)


class Automorphism:
    """An automorphism x -> alpha*x + beta, Y -> alpha^(deg h - 1)*Y + f."""

    __slots__ = ("ctx", "alpha", "beta", "f")

    def __init__(self, ctx: AhContext, alpha, beta, f: Poly | None = None):
        alpha = ctx.spec.elem(alpha)
        beta = ctx.spec.elem(beta)
        if f is None:
            f = Poly.zero(ctx.spec)
        if f.spec != ctx.spec:
            raise ContextMismatch("shear polynomial over the wrong field")
        if not pair_is_valid(ctx, alpha, beta):
            raise InvalidPairError(
                f"({alpha}, {beta}) violates h(a*x+b) = a^deg(h) * h"
            )
        self.ctx = ctx
        self.alpha = alpha
        self.beta = beta
        self.f = f

    @property
    def x_image(self) -> Poly:
        return _affine(self.ctx.spec, self.alpha, self.beta)

    @property
    def y_image(self) -> OreElement:
        ctx = self.ctx
        scale = self.alpha ** (ctx.deg_h - 1)
        return ctx.monomial(Poly.constant(scale), 1) + ctx.from_poly(self.f)

    def apply(self, a: OreElement) -> OreElement:
        if a.ctx != self.ctx:
            raise ContextMismatch("element from a different context")
        return apply_poly_map(a, self.x_image, self.y_image)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """The automorphism ``a -> self(other(a))``."""
        if other.ctx != self.ctx:
            raise ContextMismatch("automorphisms of different algebras")
        ctx = self.ctx
        d = ctx.deg_h
        alpha = self.alpha * other.alpha
        beta = self.beta * other.alpha + other.beta
        f = self.f.scaled(other.alpha ** (d - 1)) + other.f.compose(self.x_image)
        return Automorphism(ctx, alpha, beta, f)

    def inverse(self) -> "Automorphism":
        ctx = self.ctx
        d = ctx.deg_h
        inv_a = self.alpha.inverse()
        inv_affine = _affine(ctx.spec, inv_a, -self.beta * inv_a)
        f = self.f.compose(inv_affine).scaled(-(inv_a ** (d - 1)))
        return Automorphism(ctx, inv_a, -self.beta * inv_a, f)

    @property
    def is_identity(self) -> bool:
        return (
            self.alpha.is_one() and self.beta.is_zero() and self.f.is_zero()
        )

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.f == other.f
        )

    def __hash__(self):
        return hash((self.ctx, self.alpha, self.beta, self.f))

    def __repr__(self):
        return f"Automorphism(alpha={self.alpha}, beta={self.beta}, f={self.f})"


def identity_automorphism(ctx: AhContext) -> Automorphism:
    return Automorphism(ctx, ctx.spec.one(), ctx.spec.zero())


def tau(ctx: AhContext, alpha, beta) -> Automorphism:
    """The affine automorphism with no shear part."""
    return Automorphism(ctx, alpha, beta)


def phi(ctx: AhContext, f: Poly) -> Automorphism:
    """The shear x -> x, Y -> Y + f."""
    return Automorphism(ctx, ctx.spec.one(), ctx.spec.zero(), f)


# -- the pair set -----------------------------------------------------------


@dataclass(frozen=True)
class PSet:
    """The admissible pairs: a finite list, or the family (alpha, (1-alpha)*lam)."""

    ctx: AhContext
    lam: FieldElem | None = None
    finite_pairs: tuple[tuple[FieldElem, FieldElem], ...] | None = None

    @property
    def shape(self) -> str:
        return "one_parameter_family" if self.lam is not None else "finite"

    def pairs(self) -> tuple[tuple[FieldElem, FieldElem], ...]:
        """Materialize the pair list (finite fields materialize the family)."""
        if self.finite_pairs is not None:
            return self.finite_pairs
        spec = self.ctx.spec
        if not spec.is_prime_field:
            raise AhError("the family over QQ cannot be materialized")
        one = spec.one()
        out = [
            (a, (one - a) * self.lam) for a in spec.elements() if not a.is_zero()
        ]
        return tuple(sorted(out, key=_pair_key))

    def contains(self, alpha, beta) -> bool:
        alpha = self.ctx.spec.elem(alpha)
        beta = self.ctx.spec.elem(beta)
        if self.lam is not None:
            return not alpha.is_zero() and beta == (
                self.ctx.spec.one() - alpha
            ) * self.lam
        return (alpha, beta) in self.finite_pairs


def compute_G(ctx: AhContext) -> tuple[FieldElem, ...]:
    """All translations fixing h: {nu : h(x + nu) == h(x)}.

    Trivial in characteristic 0; found by exhaustive search over GF(p).
    """
    if ctx.deg_h < 1:
        raise ConstantHError("G needs deg h >= 1")
    spec = ctx.spec
    if spec.characteristic == 0:
        return (spec.zero(),)
    x = Poly.x(spec)
    out = [
        nu
        for nu in spec.elements()
        if ctx.h.compose(x + Poly.constant(nu)) == ctx.h
    ]
    return tuple(sorted(out, key=lambda e: e.sort_key()))


def compute_P(ctx: AhContext) -> PSet:
    """All pairs satisfying the pair law.

    A single distinct root (necessarily in the field, since the radical is
    then linear) yields the one-parameter family; otherwise the finite list
    is produced by exhaustive search over GF(p) and by beta-elimination plus
    rational root extraction over QQ.
    """
    if ctx.deg_h < 1:
        raise ConstantHError("P needs deg h >= 1")
    spec = ctx.spec
    rad = squarefree_part(ctx.h)
    if rad.degree == 1:
        lam = -rad.coeff(0)
        assert ctx.h == Poly(spec, (-lam, 1)) ** ctx.deg_h * ctx.h.lc
        return PSet(ctx, lam=lam)
    if spec.is_prime_field:
        pairs = _pairs_exhaustive(ctx)
    else:
        pairs = tuple(
            (a, b) for a, b, _ in affine_equivalences(ctx.h, ctx.h)
        )
    return PSet(ctx, finite_pairs=pairs)


def _pairs_exhaustive(ctx: AhContext) -> tuple[tuple[FieldElem, FieldElem], ...]:
    spec = ctx.spec
    out = [
        (a, b)
        for a in spec.elements()
        if not a.is_zero()
        for b in spec.elements()
        if pair_is_valid(ctx, a, b)
    ]
    return tuple(sorted(out, key=_pair_key))


def affine_equivalences(h: Poly, g: Poly):
    """Solve h(alpha*x + beta) == nu * g(x) by coefficient elimination.

    Requires deg h == deg g == d >= 1 and d * lc(h) nonzero in the field.
    nu is pinned by the leading coefficients, beta is linear in alpha by the
    x^(d-1) coefficient, and the remaining coefficient identities become
    polynomials in alpha; their common roots are verified by composition.
    Returns a sorted list of verified (alpha, beta, nu) triples.
    """
    spec = h.spec
    d = h.degree
    if d != g.degree or d < 1:
        raise AhError("affine elimination needs equal degrees >= 1")
    d_scalar = spec.from_int(d) * h.lc
    if d_scalar.is_zero():
        raise AhError("elimination unavailable: d * lc(h) vanishes in the field")
    ratio = h.lc / g.lc
    # beta(alpha) = B1 * alpha + B0, from the x^(d-1) coefficient identity
    b1 = g.coeff(d - 1) * ratio / d_scalar
    b0 = -h.coeff(d - 1) / (spec.from_int(d) * h.lc)
    alpha_poly = Poly.x(spec)
    beta_poly = Poly(spec, (b0, b1))
    # coefficients of (alpha*x + beta(alpha))^j as polynomials in alpha
    powers = [Poly.one(spec)]
    rows = [powers]
    for _ in range(d):
        prev = rows[-1]
        nxt = [prev[0] * beta_poly]
        for i in range(1, len(prev) + 1):
            term = prev[i - 1] * alpha_poly
            if i < len(prev):
                term = term + prev[i] * beta_poly
            nxt.append(term)
        rows.append(nxt)
    conditions = []
    alpha_d = alpha_poly**d
    for i in range(d + 1):
        cond = Poly.zero(spec)
        for j in range(i, d + 1):
            c = h.coeff(j)
            if not c.is_zero():
                cond = cond + rows[j][i].scaled(c)
        cond = cond - alpha_d.scaled(ratio * g.coeff(i))
        if not cond.is_zero():
            conditions.append(cond)
    if conditions:
        acc = conditions[0]
        for cond in conditions[1:]:
            acc = gcd_monic(acc, cond)
        candidates = _poly_roots(acc)
    elif spec.is_prime_field:
        # the conditions vanish identically, so every alpha qualifies
        candidates = [a for a in spec.elements() if not a.is_zero()]
    else:
        raise AhError("elimination degenerated to the one-parameter family")
    out = []
    for alpha in candidates:
        if alpha.is_zero():
            continue
        beta = beta_poly.evaluate(alpha)
        nu = ratio * alpha**d
        if h.compose(_affine(spec, alpha, beta)) == g.scaled(nu):
            out.append((alpha, beta, nu))
    out.sort(key=lambda t: _pair_key(t[:2]))
    return out


def _poly_roots(f: Poly) -> list[FieldElem]:
    if f.spec.is_prime_field:
        return [e for e in f.spec.elements() if f.evaluate(e).is_zero()]
    return rational_roots(f)


def multiplicative_order(a: FieldElem) -> int:
    if a.is_zero():
        raise ZeroDivisionError("zero has no multiplicative order")
    # the pair computations only meet roots of unity: +-1 over QQ, F* over GF(p)
    bound = a.spec.characteristic - 1 if a.spec.is_prime_field else 2
    acc = a
    for e in range(1, bound + 1):
        if acc.is_one():
            return e
        acc = acc * a
    raise AhError(f"{a} is not a root of unity of order <= {bound}")


# -- classification ----------------------------------------------------------

POLY_ONLY = "poly_only"
SEMIDIRECT_FSTAR = "semidirect_fstar"
SEMIDIRECT_FINITE = "semidirect_finite"


@dataclass(frozen=True)
class AutGroupStructure:
    """The computed shape of the automorphism group and its invariants.

    ``t`` generates the invariant polynomials (when ``t_kind`` is
    "generated"; "whole_ring" means every polynomial is invariant and
    "constants" means only scalars are).  ``q`` generates the center of the
    automorphism group: the central shears are exactly those along
    q * (invariants), the whole polynomial group when ``dz_kind`` is
    "whole_ring".
    """

    ctx: AhContext
    case: str
    k: int
    G: tuple[FieldElem, ...]
    P: PSet
    lam: FieldElem | None
    generator: tuple[FieldElem, FieldElem] | None
    ell: int | None
    t: Poly | None
    t_kind: str
    q: Poly
    dz_kind: str
    n_exponent: int | None


def classify_aut_group(ctx: AhContext) -> AutGroupStructure:
    """Compute the group shape, the invariant generator t, and the center generator q.

    The transformation laws for t and q are asserted against the computed
    generators before returning, so a wrong case selection cannot escape.
    """
    if ctx.deg_h < 1:
        raise ConstantHError("classification needs deg h >= 1")
    spec = ctx.spec
    pset = compute_P(ctx)
    G = compute_G(ctx)
    k = distinct_root_count(ctx.h)
    d = ctx.deg_h
    one = Poly.one(spec)

    if pset.lam is not None and not spec.is_prime_field:
        # infinite one-parameter family: invariants are constants only
        structure = AutGroupStructure(
            ctx,
            SEMIDIRECT_FSTAR,
            k,
            G,
            pset,
            pset.lam,
            None,
            None,
            None,
            "constants",
            Poly(spec, (-pset.lam, 1)) ** (d - 1),
            "module",
            d - 1,
        )
        _assert_laws(structure)
        return structure

    pairs = pset.pairs()
    orders = {ab: multiplicative_order(ab[0]) for ab in pairs}
    ell = max(orders.values())
    best = min((ab for ab, o in orders.items() if o == ell), key=_pair_key)
    if ell == 1 and len(G) > 1:
        best = min(
            (ab for ab in pairs if not ab[1].is_zero()), key=_pair_key
        )

    if ell == 1 and len(G) == 1:
        structure = AutGroupStructure(
            ctx,
            POLY_ONLY,
            k,
            G,
            pset,
            pset.lam,
            None,
            1,
            Poly.x(spec),
            "whole_ring",
            one,
            "whole_ring",
            None,
        )
    elif ell == 1:
        t = one
        for nu in G:
            t = t * Poly(spec, (nu, 1))
        structure = AutGroupStructure(
            ctx,
            SEMIDIRECT_FINITE,
            k,
            G,
            pset,
            pset.lam,
            best,
            1,
            t,
            "generated",
            one,
            "module",
            0,
        )
    else:
        if k >= 2:
            assert k % ell == 0 or (k - 1) % ell == 0, "order must divide k or k-1"
        if len(G) > 1:
            assert (len(G) - 1) % ell == 0, "|G| - 1 must be divisible by ell"
        alpha, beta = best
        shift = beta / (alpha - spec.one())
        base = one
        for nu in G:
            base = base * Poly(spec, (shift + nu, 1))
        n_exp = (d - 1) * pow(len(G), -1, ell) % ell
        case = SEMIDIRECT_FSTAR if pset.lam is not None else SEMIDIRECT_FINITE
        structure = AutGroupStructure(
            ctx,
            case,
            k,
            G,
            pset,
            pset.lam,
            best,
            ell,
            base**ell,
            "generated",
            base**n_exp,
            "module",
            n_exp,
        )
    _assert_laws(structure)
    return structure


def _law_sample(structure: AutGroupStructure):
    """Pairs against which the t/q laws are checked."""
    ctx = structure.ctx
    spec = ctx.spec
    if structure.P.lam is not None and not spec.is_prime_field:
        lam = structure.P.lam
        one = spec.one()
        for raw in (2, 3, -1, 7, Fraction(1, 2)):
            alpha = spec.elem(raw)
            yield alpha, (one - alpha) * lam
        return
    yield from structure.P.pairs()


def _assert_laws(structure: AutGroupStructure) -> None:
    ctx = structure.ctx
    spec = ctx.spec
    d = ctx.deg_h
    for alpha, beta in _law_sample(structure):
        move = _affine(spec, alpha, beta)
        if structure.t_kind == "generated":
            assert structure.t.compose(move) == structure.t, "t is not invariant"
        elif structure.t_kind == "whole_ring":
            assert alpha.is_one() and beta.is_zero(), "whole ring fixed only by shears"
        assert structure.q.compose(move) == structure.q.scaled(
            alpha ** (d - 1)
        ), "q violates its transformation law"


def invariant_ring(ctx_or_structure) -> AutGroupStructure:
    """Alias for classification; the invariants are the (t_kind, t) fields."""
    if isinstance(ctx_or_structure, AutGroupStructure):
        return ctx_or_structure
    return classify_aut_group(ctx_or_structure)


def aut_center(ctx_or_structure) -> AutGroupStructure:
    """Alias for classification; the center is the (dz_kind, q, t) fields."""
    return invariant_ring(ctx_or_structure)


# -- the isomorphism problem --------------------------------------------------


def iso_test(h: Poly, g: Poly, spec: FieldSpec):
    """A witness (alpha, beta, nu) with nu*g(x) == h(alpha*x + beta), or None."""
    if h.spec != spec or g.spec != spec:
        raise ContextMismatch("polynomials over the wrong field")
    if h.is_zero() or g.is_zero():
        raise AhError("isomorphism testing needs nonzero h and g")
    if h.degree != g.degree:
        return None
    if h.degree == 0:
        return (spec.one(), spec.zero(), h.lc / g.lc)
    if spec.is_prime_field:
        candidates = []
        for alpha in spec.elements():
            if alpha.is_zero():
                continue
            for beta in spec.elements():
                nu = h.lc / g.lc * alpha**h.degree
                if h.compose(_affine(spec, alpha, beta)) == g.scaled(nu):
                    candidates.append((alpha, beta, nu))
        if not candidates:
            return None
        return min(candidates, key=lambda t: _pair_key(t[:2]))
    kh, kg = distinct_root_count(h), distinct_root_count(g)
    if kh != kg:
        return None
    if kh == 1:
        lam_h = -squarefree_part(h).coeff(0)
        lam_g = -squarefree_part(g).coeff(0)
        alpha = spec.one()
        beta = lam_h - lam_g
        nu = h.lc / g.lc
        assert h.compose(_affine(spec, alpha, beta)) == g.scaled(nu)
        return (alpha, beta, nu)
    found = affine_equivalences(h, g)
    return found[0] if found else None


# -- injective, non-surjective endomorphisms ----------------------------------


@dataclass(frozen=True)
class Endomorphism:
    """A generator-image endomorphism; ``surjective`` records the probe result."""

    ctx: AhContext
    x_image: Poly
    y_image: OreElement
    surjective: bool
    name: str

    def apply(self, a: OreElement) -> OreElement:
        if a.ctx != self.ctx:
            raise ContextMismatch("element from a different context")
        return apply_poly_map(a, self.x_image, self.y_image)


def eta_endo(ctx: AhContext, k: int) -> Endomorphism:
    """The power endomorphism x -> x^k, Y -> (1/k) x^((k-1)(n-1)) Y, for h = x^n.

    Injective always; surjective only for k = 1 (for k >= 2 the image meets
    the polynomials in F[x^k], so x has no preimage).
    """
    spec = ctx.spec
    n = ctx.deg_h
    if n < 1 or ctx.h != Poly.monomial(spec, spec.one(), n):
        raise WrongHError("this endomorphism family needs h = x^n")
    if k < 1:
        raise ValueError("k must be at least 1")
    p = spec.characteristic
    if p and k % p == 0:
        raise CharacteristicError("p divides k, so 1/k does not exist")
    scale = spec.from_int(k).inverse()
    x_image = Poly.monomial(spec, spec.one(), k)
    y_image = ctx.monomial(
        Poly.monomial(spec, scale, (k - 1) * (n - 1)), 1
    )
    endo = Endomorphism(ctx, x_image, y_image, k == 1, f"eta_{k}")
    _assert_endo_relation(endo)
    return endo


def kappa_endo(ctx: AhContext, c: OreElement) -> Endomorphism:
    """The shift endomorphism Y -> Y + c for central-with-x c, in char p.

    Surjective exactly when c is a polynomial in x (then it is the shear
    automorphism); a genuinely new central summand makes x^...Y unreachable.
    """
    if ctx.spec.characteristic == 0:
        raise CharacteristicError("this endomorphism family exists only in char p")
    if c.ctx != ctx:
        raise ContextMismatch("shift element from a different context")
    if not commutator(c, ctx.x()).is_zero():
        raise ValueError("shift must centralize x")
    y_image = ctx.gen() + c
    endo = Endomorphism(
        ctx, Poly.x(ctx.spec), y_image, len(c.coeffs) <= 1, "kappa"
    )
    _assert_endo_relation(endo)
    return endo


def _assert_endo_relation(endo: Endomorphism) -> None:
    ctx = endo.ctx
    x_img = ctx.from_poly(endo.x_image)
    lhs = commutator(endo.y_image, x_img)
    rhs = ctx.from_poly(ctx.h.compose(endo.x_image))
    assert lhs == rhs, "generator images violate the defining relation"


# -- extension and restriction along an embedding ------------------------------


def extend_automorphism(omega: Automorphism, f: Poly) -> Automorphism | None:
    """Extend an automorphism of A_g to A_f along f | g, when possible.

    The extension exists iff omega scales f by alpha^(deg f) and the shear
    polynomial (in the composition normal form) is divisible by g/f.
    """
    ctx_g = omega.ctx
    g = ctx_g.h
    if f.spec != ctx_g.spec:
        raise ContextMismatch("target polynomial over the wrong field")
    if g.degree < 1:
        raise ConstantHError("extension is stated for deg g >= 1")
    r, rem = divmod(g, f)
    if not rem.is_zero():
        raise NotDivisibleError(f"{f} does not divide {g}")
    alpha, beta = omega.alpha, omega.beta
    if f.compose(omega.x_image) != f.scaled(alpha ** f.degree):
        return None
    q = omega.f.scaled(alpha ** (1 - g.degree))
    s, rem = divmod(q, r)
    if not rem.is_zero():
        return None
    target = AhContext(ctx_g.spec, f, gen_symbol=ctx_g.gen_symbol)
    return Automorphism(
        target, alpha, beta, s.scaled(alpha ** (f.degree - 1))
    )


def restrict_automorphism(psi: Automorphism, g: Poly) -> Automorphism | None:
    """Restrict an automorphism of A_f to A_g along f | g, when possible.

    The restriction exists iff psi scales g by some nonzero lambda
    (necessarily alpha^(deg g)); the restricted shear is then
    alpha^(deg g - deg f) * s * r with s the shear of psi and r = g/f.
    """
    ctx_f = psi.ctx
    f = ctx_f.h
    if g.spec != ctx_f.spec:
        raise ContextMismatch("subalgebra polynomial over the wrong field")
    if g.degree < 1:
        raise ConstantHError("restriction is stated for deg g >= 1")
    r, rem = divmod(g, f)
    if not rem.is_zero():
        raise NotDivisibleError(f"{f} does not divide {g}")
    alpha, beta = psi.alpha, psi.beta
    moved = g.compose(psi.x_image)
    quot, rem = divmod(moved, g)
    if not rem.is_zero() or quot.degree != 0:
        return None
    assert quot.coeff(0) == alpha**g.degree, "scaling factor must be alpha^deg(g)"
    target = AhContext(ctx_f.spec, g, gen_symbol=ctx_f.gen_symbol)
    shear = (r * psi.f).scaled(alpha ** (g.degree - f.degree))
    return Automorphism(target, alpha, beta, shear)
