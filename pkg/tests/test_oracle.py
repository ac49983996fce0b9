"""The independent checking layer: naive products and class counts.

Everything here deliberately routes around the production Hermite-form
code so that an agreement is evidence rather than tautology.
"""

import json
import random

import pytest

from cubeforms.base_field import FIELD_Q, FIELD_QSQRT2
from cubeforms.oracle import (
    RandomSpec,
    check_product_against_naive,
    checked_mul,
    corner_cube,
    naive_module_product,
    random_unimodular,
    reduced_definite_count,
    reduced_indefinite_cycle_count,
    scan_cube_law,
)
from cubeforms.oriented_ideals import (
    equal_modules,
    make_oriented,
    module_contains,
    mul_ideals,
    oriented_scale,
)
from cubeforms.quadratic_extension import make_extension
from cubeforms.quadratic_forms import (
    act_form,
    narrow_class_representatives,
    psi_map,
)

Q = FIELD_Q
R2 = FIELD_QSQRT2


class TestClassCounts:
    def test_definite_counts_match_enumeration(self):
        for d, count in ((-4, 1), (-20, 2), (-23, 3)):
            assert reduced_definite_count(d) == count
            ext = make_extension(Q, Q.element(d))
            assert len(narrow_class_representatives(ext)) == count

    def test_indefinite_cycle_count(self):
        assert reduced_indefinite_cycle_count(40) == 2
        ext = make_extension(Q, Q.element(40))
        assert len(narrow_class_representatives(ext)) == 2

    def test_larger_definite_values(self):
        # h(-47) = 5 and h(-71) = 7, classical values
        assert reduced_definite_count(-47) == 5
        assert reduced_definite_count(-71) == 7


class TestNaiveProduct:
    def test_two_generators_already_a_basis(self):
        ext = make_extension(Q, Q.element(-20))
        a, b = ext.from_ints(2, 0, 0, 0), ext.from_ints(1, 0, 1, 0)
        g1, g2 = naive_module_product(ext, [a, b])
        got = make_oriented(g1, g2, (1,))
        want = make_oriented(a, b, (1,))
        assert equal_modules(got, want)

    def test_redundant_generators_collapse(self):
        ext = make_extension(Q, Q.element(-20))
        a, b = ext.from_ints(2, 0, 0, 0), ext.from_ints(1, 0, 1, 0)
        g1, g2 = naive_module_product(ext, [a, b, a + b, b + b + b])
        got = make_oriented(g1, g2, (1,))
        assert equal_modules(got, make_oriented(a, b, (1,)))

    def test_certificate_accepts_the_true_product(self):
        rng = random.Random("oracle:accept")
        for ext in (
            make_extension(Q, Q.element(-23)),
            make_extension(R2, R2.element(5)),
        ):
            reps = (
                narrow_class_representatives(ext)
                if ext.field.degree == 1
                else [None]
            )
            for _ in range(6):
                def pick():
                    if reps == [None]:
                        from cubeforms.quadratic_forms import identity_form

                        base = identity_form(ext)
                    else:
                        base = rng.choice(reps)
                    return psi_map(
                        ext, act_form(base, random_unimodular(rng, ext.field, 3))
                    )

                I, J = pick(), pick()
                report = check_product_against_naive(I, J, mul_ideals(I, J))
                assert report["ok"], report
                assert checked_mul(I, J) == mul_ideals(I, J)

    def test_certificate_rejects_a_wrong_product(self):
        ext = make_extension(Q, Q.element(-20))
        I = psi_map(ext, act_form(
            narrow_class_representatives(ext)[1],
            random_unimodular(random.Random("oracle:reject"), Q, 3),
        ))
        J = I
        wrong = oriented_scale(mul_ideals(I, J), ext.from_ints(2, 0, 0, 0))
        report = check_product_against_naive(I, J, wrong)
        assert not report["ok"]

    def test_membership_both_ways_is_what_is_tested(self):
        # a strict supermodule passes containment one way only
        ext = make_extension(Q, Q.element(-4))
        I = make_oriented(ext.from_ints(2, 0, 0, 0), ext.from_ints(0, 0, 2, 0), (1,))
        J = make_oriented(ext.one, ext.omega, (1,))
        prod = mul_ideals(I, J)
        assert module_contains(J, prod.alpha) and module_contains(J, prod.beta)
        assert not equal_modules(J, prod)


class TestCubeLawScan:
    def test_rational_scan_passes_and_serializes(self):
        report = scan_cube_law(RandomSpec("Q", count=12, bound=3, seed=11))
        assert report.ok
        assert report.checked > 0
        payload = json.loads(report.to_json())
        assert payload["passed"] == report.passed

    def test_sqrt2_scan_passes(self):
        report = scan_cube_law(RandomSpec("Q-sqrt2", count=6, bound=2, seed=5))
        assert report.ok
        assert report.checked > 0

    def test_corner_constructor_layout(self):
        cube = corner_cube(Q, Q.element(3), Q.element(5), Q.element(7), Q.element(9))
        assert [e.u for e in cube.entries] == [1, 0, 0, 3, 0, 5, 7, 9]
