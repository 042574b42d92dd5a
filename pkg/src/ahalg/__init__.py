"""Exact symbolic computation in the subalgebras of the Weyl algebra
defined by the relation Y*x - x*Y = h(x), over QQ and GF(p)."""

from .algebra import (
    AhContext,
    OreElement,
    antiautomorphism,
    apply_poly_map,
    commutator,
    div_left_exact,
    div_right_exact,
)
from .autgroup import (
    Automorphism,
    AutGroupStructure,
    PSet,
    classify_aut_group,
    compute_G,
    compute_P,
    eta_endo,
    extend_automorphism,
    iso_test,
    kappa_endo,
    phi,
    restrict_automorphism,
    tau,
)
from .center import (
    CenterDescription,
    CentralDecomposition,
    bracket_x_preimage,
    bracket_yhat_preimage,
    center,
    central_decompose,
    centralizer_x_membership,
    in_commutator_space,
    is_central,
)
from .fields import QQ, FieldElem, FieldSpec
from .normal import (
    NormalityCertificate,
    PrimeGeneratorReport,
    PrimeKind,
    classify_normal,
    height_one_prime_test,
    is_normal,
    is_simple,
)
from .parsing import parse_element, parse_poly, parse_scalar
from .poly import (
    FactoredPoly,
    FactorTerm,
    Poly,
    distinct_root_count,
    factor,
    gcd_monic,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
)
from .weyl import (
    OreWitness,
    embed,
    from_weyl,
    localized_equal,
    ore_witness,
    to_weyl,
    weyl_context,
    yh_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
