"""Binary quadratic forms: reduction, enumeration, and composition."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubeforms.base_field import FIELD_Q, FIELD_QSQRT2
from cubeforms.errors import (
    DiscriminantMismatch,
    NotPrimitive,
    UnsupportedBaseField,
)
from cubeforms.oracle import random_unimodular
from cubeforms.quadratic_extension import make_extension
from cubeforms.quadratic_forms import (
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

Q = FIELD_Q
R2 = FIELD_QSQRT2


def ints(forms):
    return [tuple(x.u for x in f.coefficients()) for f in forms]


class TestBasics:
    def test_evaluation(self):
        q = form_from_ints(Q, 1, 0, 1)
        assert q(Q.element(2), Q.element(3)) == Q.element(13)

    def test_discriminant(self):
        assert disc_form(form_from_ints(Q, 2, 1, 3)) == Q.element(-23)
        assert disc_form(form_from_ints(R2, 1, 1, -1)) == R2.element(5)

    def test_primitivity(self):
        assert is_primitive(form_from_ints(Q, 2, 1, 3))
        assert not is_primitive(form_from_ints(Q, 2, 4, 6))
        # sqrt2 divides every coefficient of (2, 2, 4)
        assert not is_primitive(form_from_ints(R2, 2, 2, 4))

    def test_identity_and_inverse(self):
        ext = make_extension(Q, Q.element(-23))
        assert ints([identity_form(ext)]) == [(1, 1, 6)]
        assert ints([inverse_form(form_from_ints(Q, 2, 1, 3))]) == [(2, -1, 3)]


class TestReduction:
    def test_definite_example(self):
        red = reduce_form(form_from_ints(Q, 6, 2, 1))
        assert ints([red.reduced]) == [(1, 0, 5)]

    def test_transcript_replays(self):
        rng = random.Random("forms-replay")
        reps = [form_from_ints(Q, 2, 2, 3), form_from_ints(Q, 2, 1, 3)]
        for _ in range(40):
            q = act_form(rng.choice(reps), random_unimodular(rng, Q, steps=4))
            red = reduce_form(q)
            matrix = tuple(Q.element(x) for x in red.matrix)
            assert act_form(q, matrix) == red.reduced
            assert disc_form(red.reduced) == disc_form(q)

    def test_indefinite_lands_on_its_cycle(self):
        q = form_from_ints(Q, 3, 2, -3)
        red = reduce_form(q)
        assert ints([red.reduced])[0] in cycle_of(q)

    def test_sqrt2_tier_is_rejected(self):
        with pytest.raises(UnsupportedBaseField):
            reduce_form(form_from_ints(R2, 1, 1, -1))


class TestEnumeration:
    def test_counts_match_frozen_class_numbers(self):
        for d, count in ((-4, 1), (-20, 2), (-23, 3), (40, 2)):
            ext = make_extension(Q, Q.element(d))
            reps = narrow_class_representatives(ext)
            assert len(reps) == count, d

    def test_definite_lists(self):
        assert ints(enumerate_reduced(make_extension(Q, Q.element(-4)))) == [
            (1, 0, 1),
            (-1, 0, -1),
        ]
        assert ints(enumerate_reduced(make_extension(Q, Q.element(-20)))) == [
            (1, 0, 5),
            (2, 2, 3),
            (-1, 0, -5),
            (-2, -2, -3),
        ]
        assert sorted(ints(narrow_class_representatives(make_extension(Q, Q.element(-23))))) == [
            (1, 1, 6),
            (2, -1, 3),
            (2, 1, 3),
        ]

    def test_indefinite_cycles(self):
        # two classes; the principal cycle has length two, the other six
        assert len(cycle_of(form_from_ints(Q, 1, 6, -1))) == 2
        assert len(cycle_of(form_from_ints(Q, 3, 2, -3))) == 6
        assert equivalent_forms(
            form_from_ints(Q, 1, 6, -1), form_from_ints(Q, -1, 6, 1)
        )
        assert not equivalent_forms(
            form_from_ints(Q, 1, 6, -1), form_from_ints(Q, 3, 2, -3)
        )

    def test_opposite_definite_forms_are_inequivalent(self):
        assert not equivalent_forms(
            form_from_ints(Q, 1, 0, 1), form_from_ints(Q, -1, 0, -1)
        )


class TestIdealCorrespondence:
    def test_image_of_a_nonprincipal_form(self):
        ext = make_extension(Q, Q.element(-20))
        ideal = psi_map(ext, form_from_ints(Q, 2, -2, 3))
        assert ideal.alpha == ext.from_ints(2, 0, 0, 0)
        assert ideal.beta == ext.from_ints(1, 0, 1, 0)
        assert ideal.eps == (1,)
        assert ints([phi_map(ideal)]) == [(2, -2, 3)]

    def test_imprimitive_forms_are_rejected(self):
        ext = make_extension(Q, Q.element(-20))
        with pytest.raises(NotPrimitive):
            psi_map(ext, form_from_ints(Q, 2, 4, 6))

    def test_disc_outside_the_orbit_is_rejected(self):
        ext = make_extension(Q, Q.element(-4))
        with pytest.raises(DiscriminantMismatch):
            psi_map(ext, form_from_ints(Q, 2, 2, 3))


class TestComposition:
    def test_class_group_of_disc_minus_23(self):
        ext = make_extension(Q, Q.element(-23))
        e = form_from_ints(Q, 1, 1, 6)
        g = form_from_ints(Q, 2, 1, 3)
        ginv = form_from_ints(Q, 2, -1, 3)
        square = compose_forms(ext, g, g)
        assert ints([square]) == [(4, -3, 2)]
        assert equivalent_forms(square, ginv)
        assert equivalent_forms(compose_forms(ext, g, ginv), e)
        assert equivalent_forms(compose_forms(ext, g, e), g)

    def test_composition_with_identity_is_exactly_neutral_on_classes(self):
        for d in (-4, -20, 40):
            ext = make_extension(Q, Q.element(d))
            for rep in narrow_class_representatives(ext):
                assert equivalent_forms(
                    compose_forms(ext, rep, identity_form(ext)), rep
                )

    def test_sqrt2_composition_round_trip(self):
        ext = make_extension(R2, R2.element(5))
        q = form_from_ints(R2, 1, 1, -1)
        assert compose_forms(ext, q, q).coefficients() == q.coefficients()


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_unimodular_action_laws(data):
    field = data.draw(st.sampled_from((Q, R2)))
    coeffs = data.draw(
        st.tuples(*[st.integers(min_value=-6, max_value=6)] * 3).filter(
            lambda t: any(t)
        )
    )
    q = form_from_ints(field, *coeffs)
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    rng = random.Random(f"law:{seed}")
    m1 = random_unimodular(rng, field, steps=3)
    m2 = random_unimodular(rng, field, steps=3)
    # composing substitutions multiplies the matrices, in application order
    prod = (
        m1[0] * m2[0] + m1[1] * m2[2],
        m1[0] * m2[1] + m1[1] * m2[3],
        m1[2] * m2[0] + m1[3] * m2[2],
        m1[2] * m2[1] + m1[3] * m2[3],
    )
    assert act_form(act_form(q, m1), m2) == act_form(q, prod)
    # unimodular substitutions preserve the discriminant exactly
    assert disc_form(act_form(q, m1)) == disc_form(q)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_form_to_ideal_round_trip_is_exact(data):
    d = data.draw(st.sampled_from((-4, -20, -23, 40)))
    ext = make_extension(Q, Q.element(d))
    rep = data.draw(st.sampled_from(narrow_class_representatives(ext)))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    q = act_form(rep, random_unimodular(random.Random(f"rt:{seed}"), Q, steps=4))
    assert phi_map(psi_map(ext, q)) == q
