"""multres: exact symbolic toolkit for multiplicity loci.

Rees algebras on affine ambients, blow-up chart transforms, characteristic-0
elimination algebras, local presentations of the n-fold locus, and an
automatic plane-curve resolver, all over exact rational or small prime-field
arithmetic.
"""

from .blowup import Center, Chart, make_charts, strict_transform_monic, total_transform
from .elimination import (
    MonicPoly,
    check_commutation,
    check_scaling_law,
    check_translation_invariance,
    elim_algebra,
    image_nfold,
    tschirnhaus,
)
from .errors import (
    CharacteristicError,
    ContractError,
    DimensionError,
    ExactDivisionError,
    MultresError,
    ParseError,
    PermissibilityError,
    RingMismatchError,
)
from .parser import parse
from .poly import (
    INFINITY,
    Polynomial,
    differentiate,
    div_exact,
    evaluate,
    order_along_coordinate_prime,
    order_at_point,
    substitute,
    translate_to_origin,
    weighted_degree,
)
from .presentation import (
    Presentation,
    attach_algebra,
    max_mult_upper_bound_check,
    transversality_test,
    zariski_check,
)
from .rees import (
    BoxGrid,
    PrimeGrid,
    ReesAlgebra,
    SingIdeal,
    contains_point,
    extend_affine,
    is_permissible,
    ord_at,
    sing_equal_on_samples,
    sing_generators,
)
from .resultant import resultant_bivariate
from .ring import RingCtx, parse_ring

__version__ = "0.1.0"

__all__ = [
    "BoxGrid",
    "Center",
    "CharacteristicError",
    "Chart",
    "ContractError",
    "DimensionError",
    "ExactDivisionError",
    "INFINITY",
    "MonicPoly",
    "MultresError",
    "ParseError",
    "PermissibilityError",
    "Polynomial",
    "Presentation",
    "PrimeGrid",
    "ReesAlgebra",
    "RingCtx",
    "RingMismatchError",
    "SingIdeal",
    "attach_algebra",
    "check_commutation",
    "check_scaling_law",
    "check_translation_invariance",
    "contains_point",
    "differentiate",
    "div_exact",
    "elim_algebra",
    "evaluate",
    "extend_affine",
    "image_nfold",
    "is_permissible",
    "make_charts",
    "max_mult_upper_bound_check",
    "ord_at",
    "order_along_coordinate_prime",
    "order_at_point",
    "parse",
    "parse_ring",
    "resultant_bivariate",
    "sing_equal_on_samples",
    "sing_generators",
    "strict_transform_monic",
    "substitute",
    "total_transform",
    "translate_to_origin",
    "transversality_test",
    "tschirnhaus",
    "weighted_degree",
    "zariski_check",
]
