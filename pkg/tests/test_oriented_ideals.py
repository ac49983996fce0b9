"""Oriented fractional ideals: validation, products, inverses, norms."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubeforms.base_field import (
    FIELD_Q,
    FIELD_QSQRT2,
    canonical_associate,
    rational_int,
)
from cubeforms.errors import DegenerateBasis, NotAnIdeal, UnsupportedBaseField
from cubeforms.oracle import random_unimodular
from cubeforms.oriented_ideals import (
    equal_oriented,
    ideal_norm,
    inverse_ideal,
    is_oriented_principal,
    make_oriented,
    module_contains,
    mul_ideals,
    oriented_scale,
    principal_oriented,
    unit_ideal,
)
from cubeforms.quadratic_extension import make_extension
from cubeforms.quadratic_forms import (
    act_form,
    equivalent_forms,
    form_from_ints,
    identity_form,
    narrow_class_representatives,
    phi_map,
    psi_map,
)

Q = FIELD_Q
R2 = FIELD_QSQRT2

EXTS = (
    make_extension(Q, Q.element(-4)),
    make_extension(Q, Q.element(-20)),
    make_extension(Q, Q.element(40)),
    make_extension(R2, R2.element(5)),
    make_extension(R2, R2.element(0, 4)),
)


def random_ideal(ext, rng):
    """A random oriented ideal: a twisted class representative, rescaled."""
    field = ext.field
    if field.degree == 1:
        base = rng.choice(narrow_class_representatives(ext))
    else:
        base = identity_form(ext)
    q = act_form(base, random_unimodular(rng, field, steps=3))
    ideal = psi_map(ext, q)
    if rng.randrange(2):
        gamma = ext.from_ints(
            rng.randint(-3, 3), 0, rng.randint(-3, 3), 0
        ) if field.degree == 1 else ext.from_ints(
            rng.randint(-2, 2), rng.randint(-2, 2),
            rng.randint(-2, 2), rng.randint(-2, 2),
        )
        if gamma:
            ideal = oriented_scale(ideal, gamma)
    return ideal


class TestValidation:
    def test_degenerate_basis_rejected(self):
        ext = make_extension(Q, Q.element(-20))
        a = ext.from_ints(2, 0, 0, 0)
        with pytest.raises(DegenerateBasis):
            make_oriented(a, a + a, (1,))

    def test_unstable_module_rejected(self):
        ext = make_extension(Q, Q.element(-20))
        one = ext.one
        half_omega = ext.omega.scale(rational_int(Q, 1, 2))
        with pytest.raises(NotAnIdeal):
            make_oriented(one, half_omega, (1,))

    def test_bad_orientation_vector_rejected(self):
        ext = make_extension(Q, Q.element(-20))
        with pytest.raises(NotAnIdeal):
            make_oriented(ext.one, ext.omega, (0,))
        with pytest.raises(NotAnIdeal):
            make_oriented(ext.one, ext.omega, (1, 1))


class TestFrozenExample:
    """The nonprincipal ideal [2, 1 + Omega] at discriminant -20."""

    @pytest.fixture
    def ideal(self):
        ext = make_extension(Q, Q.element(-20))
        return make_oriented(
            ext.from_ints(2, 0, 0, 0), ext.from_ints(1, 0, 1, 0), (1,)
        )

    def test_attached_form(self, ideal):
        assert phi_map(ideal).coefficients() == (
            Q.element(2),
            Q.element(-2),
            Q.element(3),
        )

    def test_norm(self, ideal):
        assert ideal_norm(ideal) == rational_int(Q, 2)

    def test_not_oriented_principal(self, ideal):
        assert is_oriented_principal(ideal) == (False, None)

    def test_square_is_principal(self, ideal):
        square = mul_ideals(ideal, ideal)
        ok, gen = is_oriented_principal(square)
        assert ok
        assert gen is not None
        assert equal_oriented(square, principal_oriented(gen))

    def test_membership(self, ideal):
        ext = ideal.ext
        assert module_contains(ideal, ext.from_ints(2, 0, 0, 0))
        assert module_contains(ideal, ext.from_ints(-1, 0, 1, 0))
        assert not module_contains(ideal, ext.one)


def test_principality_requires_the_rational_tier():
    ext = make_extension(R2, R2.element(5))
    with pytest.raises(UnsupportedBaseField):
        is_oriented_principal(unit_ideal(ext))


def test_principal_ideal_of_a_generator():
    ext = make_extension(Q, Q.element(-4))
    gen = ext.from_ints(1, 0, 2, 0)
    ideal = principal_oriented(gen)
    ok, witness = is_oriented_principal(ideal)
    assert ok
    assert equal_oriented(principal_oriented(witness), ideal)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_product_laws(data):
    ext = data.draw(st.sampled_from(EXTS))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    rng = random.Random(f"ideal-laws:{seed}")
    I = random_ideal(ext, rng)
    J = random_ideal(ext, rng)
    K = random_ideal(ext, rng)
    # the product basis is canonical, so both group laws hold exactly
    assert mul_ideals(I, J) == mul_ideals(J, I)
    assert mul_ideals(mul_ideals(I, J), K) == mul_ideals(I, mul_ideals(J, K))
    assert equal_oriented(mul_ideals(I, unit_ideal(ext)), I)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_inverse_cancels_exactly(data):
    ext = data.draw(st.sampled_from(EXTS))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    rng = random.Random(f"ideal-inverse:{seed}")
    I = random_ideal(ext, rng)
    prod = mul_ideals(I, inverse_ideal(I))
    unit = unit_ideal(ext)
    assert prod.alpha == unit.alpha
    assert prod.beta == unit.beta
    assert prod.eps == unit.eps


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_norm_is_multiplicative_up_to_canonical_units(data):
    ext = data.draw(st.sampled_from(EXTS))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    rng = random.Random(f"ideal-norm:{seed}")
    I = random_ideal(ext, rng)
    J = random_ideal(ext, rng)

    def canon(x):
        return (canonical_associate(x.num), x.den)

    assert canon(ideal_norm(mul_ideals(I, J))) == canon(
        ideal_norm(I) * ideal_norm(J)
    )


def test_scaling_moves_the_norm_and_keeps_the_class():
    ext = make_extension(Q, Q.element(-20))
    I = psi_map(ext, form_from_ints(Q, 2, 2, 3))
    gamma = ext.from_ints(1, 0, 1, 0)
    scaled = oriented_scale(I, gamma)
    assert equivalent_forms(phi_map(scaled), phi_map(I))
    # the norm of 1 + Omega is 6, so |det| grows by that factor: 2 -> 12
    assert ideal_norm(I) == rational_int(Q, 2)
    assert ideal_norm(scaled) == rational_int(Q, 12)
