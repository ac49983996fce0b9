"""Triples of oriented ideals whose product is the unit ideal."""

import random

import pytest

from cubeforms.balanced_triples import (
    make_balanced,
    product_balance_check,
    rebalance_phi2,
    scale_triple,
    triple_from_pair,
    triples_equivalent,
)
from cubeforms.base_field import FIELD_Q, FIELD_QSQRT2, is_totally_positive, is_unit
from cubeforms.errors import (
    ProductNotUnitIdeal,
    ScaleNotAllowed,
    WitnessMismatch,
)
from cubeforms.oracle import random_unimodular
from cubeforms.oriented_ideals import (
    equal_oriented,
    mul_ideals,
    unit_ideal,
)
from cubeforms.quadratic_extension import make_extension
from cubeforms.quadratic_forms import (
    act_form,
    form_from_ints,
    identity_form,
    narrow_class_representatives,
    psi_map,
)

Q = FIELD_Q
R2 = FIELD_QSQRT2


def sample_triple(ext, rng):
    reps = (
        narrow_class_representatives(ext)
        if ext.field.degree == 1
        else [identity_form(ext)]
    )
    twist = lambda: act_form(
        rng.choice(reps), random_unimodular(rng, ext.field, steps=3)
    )
    return triple_from_pair(psi_map(ext, twist()), psi_map(ext, twist()))


class TestConstruction:
    def test_pair_completion_balances(self):
        ext = make_extension(Q, Q.element(-23))
        rng = random.Random("triples:completion")
        for _ in range(10):
            T = sample_triple(ext, rng)
            i1, i2, i3 = T.components()
            prod = mul_ideals(mul_ideals(i1, i2), i3)
            assert equal_oriented(prod, unit_ideal(ext))
            assert is_unit(T.witness_u)
            assert is_totally_positive(T.witness_u)

    def test_unbalanced_triples_rejected(self):
        ext = make_extension(Q, Q.element(-20))
        I = psi_map(ext, form_from_ints(Q, 2, 2, 3))
        with pytest.raises(ProductNotUnitIdeal):
            make_balanced(I, I, I)

    def test_witness_recomputation_agrees(self):
        ext = make_extension(R2, R2.element(5))
        rng = random.Random("triples:witness")
        T = sample_triple(ext, rng)
        _, ok = product_balance_check(T)
        assert ok


class TestRebalancing:
    def test_generator_certificate_rebalances(self):
        ext = make_extension(Q, Q.element(-20))
        I = psi_map(ext, form_from_ints(Q, 2, 2, 3))
        J = psi_map(ext, form_from_ints(Q, 2, -2, 3))
        U = unit_ideal(ext)
        # [2, 1+Om] times [2, -1+... ] multiplies out to (2), oriented
        gen = ext.from_ints(2, 0, 0, 0)
        T = rebalance_phi2(I, J, U, gen)
        prod = mul_ideals(mul_ideals(T.i1, T.i2), T.i3)
        assert equal_oriented(prod, unit_ideal(ext))

    def test_wrong_certificate_is_refused(self):
        ext = make_extension(Q, Q.element(-20))
        I = psi_map(ext, form_from_ints(Q, 2, 2, 3))
        J = psi_map(ext, form_from_ints(Q, 2, -2, 3))
        U = unit_ideal(ext)
        with pytest.raises(WitnessMismatch):
            rebalance_phi2(I, J, U, ext.from_ints(3, 0, 0, 0))
        with pytest.raises(WitnessMismatch):
            rebalance_phi2(I, J, U, ext.zero)


class TestScaling:
    def test_unit_product_scales(self):
        ext = make_extension(Q, Q.element(-4))
        rng = random.Random("triples:scale")
        T = sample_triple(ext, rng)
        g = ext.from_ints(1, 0, 1, 0)  # norm 2
        inv = ext.one / g
        T2 = scale_triple(T, g, inv, ext.one)
        assert triples_equivalent(T, T2)

    def test_nonunit_product_is_refused(self):
        ext = make_extension(Q, Q.element(-4))
        rng = random.Random("triples:badscale")
        T = sample_triple(ext, rng)
        with pytest.raises(ScaleNotAllowed):
            scale_triple(T, ext.from_ints(2, 0, 0, 0), ext.one, ext.one)


def test_equivalence_is_componentwise():
    ext = make_extension(Q, Q.element(-20))
    e = identity_form(ext)
    q = form_from_ints(Q, 2, 2, 3)
    principal = triple_from_pair(psi_map(ext, e), psi_map(ext, e))
    ramified = triple_from_pair(psi_map(ext, q), psi_map(ext, q))
    assert triples_equivalent(principal, principal)
    assert triples_equivalent(ramified, ramified)
    # (p, p, 1) against (1, 1, 1): the first components are in different
    # classes, so the triples cannot match even though both are balanced
    assert not triples_equivalent(principal, ramified)
