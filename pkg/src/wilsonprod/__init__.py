"""Products of all units in residue rings of number-field orders.

The package computes, for a monogenic order ``o = Z[theta]`` and an ideal
``a`` with known prime factorization, the product of all units of the finite
ring ``o/a`` — both by brute-force enumeration and by the closed-form
classification generalizing Wilson's theorem and Gauss's result for Z/A —
and cross-verifies the two answers.
"""

from .errors import (
    CompositeModulus,
    DegreeMismatch,
    DegreeZero,
    JOutOfRange,
    NoSuchPrimeIndex,
    NonMaximalOrder,
    NormTooLarge,
    NotAPowerOfTwo,
    NotAUnit,
    NotMonic,
    NotPrime,
    NotUniqueTorsion,
    ParseError,
    Reducible,
    RingTooLarge,
    UniformizerNotFound,
    WilsonError,
    ZeroElement,
)
from .order import NumberFieldOrder, OrderElement, make_order, parse_poly, poly_str
from .primes import (
    FactoredIdeal,
    PrimeIdealData,
    dedekind_maximal,
    factor_element,
    factor_prime,
    parse_ideal,
    valuation,
)
from .residue import DEFAULT_CAP, Census, ResidueElement, ResidueRing, build_residue_ring
from .wilson import (
    AbelianGroupSpec,
    D2Class,
    ProductClass,
    WilsonProduct,
    classify_gauss,
    classify_global,
    d2_local,
    d2_of_ideal,
    gauss_product,
    group_sum,
    order2_local,
    sweep_field,
    sweep_ideals,
    uniformizer,
    verify_ideal,
    witness_element,
)

__version__ = "0.1.0"

__all__ = [
    "NumberFieldOrder",
    "OrderElement",
    "make_order",
    "parse_poly",
    "poly_str",
    "PrimeIdealData",
    "FactoredIdeal",
    "dedekind_maximal",
    "factor_prime",
    "factor_element",
    "parse_ideal",
    "valuation",
    "ResidueRing",
    "ResidueElement",
    "Census",
    "build_residue_ring",
    "DEFAULT_CAP",
    "AbelianGroupSpec",
    "D2Class",
    "ProductClass",
    "WilsonProduct",
    "group_sum",
    "d2_local",
    "d2_of_ideal",
    "order2_local",
    "uniformizer",
    "classify_global",
    "classify_gauss",
    "gauss_product",
    "witness_element",
    "verify_ideal",
    "sweep_ideals",
    "sweep_field",
    "WilsonError",
    "NotMonic",
    "Reducible",
    "DegreeZero",
    "DegreeMismatch",
    "NotPrime",
    "NonMaximalOrder",
    "ZeroElement",
    "NormTooLarge",
    "ParseError",
    "NoSuchPrimeIndex",
    "RingTooLarge",
    "NotAPowerOfTwo",
    "CompositeModulus",
    "JOutOfRange",
    "NotAUnit",
    "NotUniqueTorsion",
    "UniformizerNotFound",
    "__version__",
]
