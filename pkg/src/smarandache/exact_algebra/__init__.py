from .algebra import (
    AbGroup,
    AlgElement,
    AlgWitness,
    HypothesisError,
    SubgroupPairReport,
    all_idempotents,
    co_idempotents,
    from_characters,
    idempotent_from_mask,
    mask_of,
    negation_witness,
    primitive_idempotents,
    subgroup_idempotent_pair,
    to_characters,
    witness_checks,
)
from .fields import (
    CycloNumber,
    CyclotomicField,
    PrimeField,
    PrimeFieldElement,
    Rational,
    RationalField,
    cyclo_invert,
    cyclotomic_polynomial,
)
