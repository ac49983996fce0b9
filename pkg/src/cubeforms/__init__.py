"""Exact arithmetic for binary quadratic forms, oriented quadratic ideals,
and 2x2x2 cubes over the rationals and over Q(sqrt 2)."""

from .base_field import (
    FIELD_Q,
    FIELD_QSQRT2,
    FIELDS_BY_NAME,
    BaseElement,
    BaseRational,
    FieldDescriptor,
    canonical_associate,
    conj,
    divmod_euclid,
    gcd,
    hnf_rank2,
    is_totally_positive,
    is_unit,
    norm,
    rational,
    trace,
)
from .balanced_triples import (
    BalancedTriple,
    make_balanced,
    rebalance_phi2,
    scale_triple,
    triple_from_pair,
    triples_equivalent,
)
from .cubes import (
    Cube,
    CubeTranscript,
    GammaElement,
    act_cube,
    apply_axis,
    apply_transcript,
    attached_forms,
    compose_cubes,
    cube_from_ints,
    disc_cube,
    identity_cube,
    inverse_cube,
    is_projective,
    phi_prime,
    psi_prime,
    reduce_cube,
    transform_cube,
)
from .errors import AlgebraError
from .oriented_ideals import (
    OrientedIdeal,
    align_basis,
    equal_modules,
    equal_oriented,
    ideal_norm,
    inverse_ideal,
    is_oriented_principal,
    make_oriented,
    mul_ideals,
    oriented_scale,
    principal_oriented,
    unit_ideal,
)
from .quadratic_extension import (
    ExtElement,
    ExtensionDescriptor,
    disc_orbit_unit,
    is_fundamental,
    make_extension,
)
from .quadratic_forms import (
    QuadForm,
    act_form,
    compose_forms,
    cycle_of,
    disc_form,
    enumerate_reduced,
    equivalent_forms,
    form_from_ints,
    identity_form,
    inverse_form,
    is_primitive,
    narrow_class_representatives,
    phi_map,
    psi_map,
    reduce_form,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BalancedTriple",
    "BaseElement",
    "BaseRational",
    "Cube",
    "CubeTranscript",
    "ExtElement",
    "ExtensionDescriptor",
    "FieldDescriptor",
    "FIELD_Q",
    "FIELD_QSQRT2",
    "FIELDS_BY_NAME",
    "GammaElement",
    "OrientedIdeal",
    "QuadForm",
    "act_cube",
    "act_form",
    "align_basis",
    "apply_axis",
    "apply_transcript",
    "attached_forms",
    "canonical_associate",
    "compose_cubes",
    "compose_forms",
    "conj",
    "cube_from_ints",
    "cycle_of",
    "disc_cube",
    "disc_form",
    "disc_orbit_unit",
    "divmod_euclid",
    "enumerate_reduced",
    "equal_modules",
    "equal_oriented",
    "equivalent_forms",
    "form_from_ints",
    "gcd",
    "hnf_rank2",
    "ideal_norm",
    "identity_cube",
    "identity_form",
    "inverse_cube",
    "inverse_form",
    "inverse_ideal",
    "is_fundamental",
    "is_oriented_principal",
    "is_primitive",
    "is_projective",
    "is_totally_positive",
    "is_unit",
    "make_balanced",
    "make_extension",
    "make_oriented",
    "mul_ideals",
    "narrow_class_representatives",
    "norm",
    "oriented_scale",
    "phi_map",
    "phi_prime",
    "principal_oriented",
    "psi_map",
    "psi_prime",
    "rational",
    "rebalance_phi2",
    "reduce_cube",
    "reduce_form",
    "scale_triple",
    "trace",
    "transform_cube",
    "triple_from_pair",
    "triples_equivalent",
    "unit_ideal",
]
