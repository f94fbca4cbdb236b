"""Exact computational engine for complex hyperplane arrangements.

Builds the intersection lattice of flats over Q (or a prime field),
computes Moebius/Poincare/characteristic invariants, and produces the
perverse-sheaf decomposition report of the direct image of the constant
sheaf on the complement, verified by two independent algorithms and a
finite-field counting oracle.
"""

from .exactalg import (
    GF,
    FpElement,
    Matrix,
    PrimeField,
    QQ,
    RationalField,
    rank,
    rowspace_contains,
    rref,
)
from .arrangement import (
    Arrangement,
    ArrangementError,
    Embedding,
    Hyperplane,
    builtin,
    deletion,
    embed_system,
    parse,
    restriction,
    serialize,
)
from .lattice import (
    Flat,
    IntersectionLattice,
    MobiusTable,
    ambient_flat,
    build_lattice,
    combinatorial_fingerprint,
    flat_from_system,
    hyperplane_flat,
    intersect,
    leq,
    mobius,
    mobius_pair,
)
from .invariants import (
    IntPolynomial,
    characteristic_polynomial,
    check_mobius_additivity,
    check_triple_identity,
    length,
    poincare_polynomial,
)
from .perverse import (
    FactorDescriptor,
    GrothendieckClass,
    decompose_direct,
    decompose_recursive,
    dual_class,
    reduced_class,
    report,
)
from .fforacle import (
    BadPrimeError,
    BudgetExceededError,
    OracleResult,
    count_complement_points,
    is_good_prime,
    oracle_check,
    reduce_mod_p,
)
from .corpus import SEEDS, corpus, corpus_arrangement

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FpElement",
    "Matrix",
    "PrimeField",
    "QQ",
    "RationalField",
    "rank",
    "rowspace_contains",
    "rref",
    "Arrangement",
    "ArrangementError",
    "Embedding",
    "Hyperplane",
    "builtin",
    "deletion",
    "embed_system",
    "parse",
    "restriction",
    "serialize",
    "Flat",
    "IntersectionLattice",
    "MobiusTable",
    "ambient_flat",
    "build_lattice",
    "combinatorial_fingerprint",
    "flat_from_system",
    "hyperplane_flat",
    "intersect",
    "leq",
    "mobius",
    "mobius_pair",
    "IntPolynomial",
    "characteristic_polynomial",
    "check_mobius_additivity",
    "check_triple_identity",
    "length",
    "poincare_polynomial",
    "FactorDescriptor",
    "GrothendieckClass",
    "decompose_direct",
    "decompose_recursive",
    "dual_class",
    "reduced_class",
    "report",
    "BadPrimeError",
    "BudgetExceededError",
    "OracleResult",
    "count_complement_points",
    "is_good_prime",
    "oracle_check",
    "reduce_mod_p",
    "SEEDS",
    "corpus",
    "corpus_arrangement",
]
