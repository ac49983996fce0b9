"""The quadratic extension layer: descriptors, integrality, exact maps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BOTH_FIELDS
from cubeforms.base_field import FIELD_Q, FIELD_QSQRT2, norm, rational, rational_int
from cubeforms.errors import DiscriminantNotFundamental
from cubeforms.quadratic_extension import (
    canonical_d_examples,
    disc_orbit_unit,
    is_fundamental,
    make_extension,
)

Q = FIELD_Q
R2 = FIELD_QSQRT2

# one exercised extension per signature: imaginary, real, and both mixed ones
EXTENSIONS = (
    make_extension(Q, Q.element(-20)),
    make_extension(Q, Q.element(40)),
    make_extension(R2, R2.element(5)),
    make_extension(R2, R2.element(0, 4)),
)


@pytest.fixture(params=EXTENSIONS, ids=lambda e: f"{e.field.name}/D={e.d}")
def ext(request):
    return request.param


def ext_elements(ext, bound=6):
    coord = st.integers(min_value=-bound, max_value=bound)
    if ext.field.degree == 1:
        return st.builds(ext.from_ints, coord, st.just(0), coord, st.just(0))
    return st.builds(ext.from_ints, coord, coord, coord, coord)


class TestDescriptorGates:
    def test_square_discriminants_rejected(self):
        with pytest.raises(DiscriminantNotFundamental):
            make_extension(Q, Q.element(4))
        with pytest.raises(DiscriminantNotFundamental):
            make_extension(R2, R2.element(3, 2))

    def test_nonresidues_mod_four_rejected(self):
        with pytest.raises(DiscriminantNotFundamental):
            make_extension(Q, Q.element(-2))
        with pytest.raises(DiscriminantNotFundamental):
            make_extension(R2, R2.element(0, 1))

    def test_square_divisors_rejected(self):
        assert not is_fundamental(Q.element(-16))
        with pytest.raises(DiscriminantNotFundamental):
            make_extension(Q, Q.element(-16))

    def test_zero_rejected(self):
        with pytest.raises(DiscriminantNotFundamental):
            make_extension(Q, Q.element(0))

    def test_example_catalogue_is_usable(self):
        for field in BOTH_FIELDS:
            ds = canonical_d_examples(field)
            assert ds
            for d in ds:
                made = make_extension(field, d)
                assert made.d == d


class TestGeneratorRelations:
    def test_minimal_polynomial_of_omega(self, ext):
        om = ext.omega
        lhs = om * om
        rhs = ext.from_base_pair(-ext.z, -ext.w)
        assert lhs == rhs

    def test_sqrt_d_squares_to_d(self, ext):
        s = ext.sqrt_d
        assert s * s == ext.embed(ext.d)
        assert s == ext.embed(ext.w) + ext.omega + ext.omega

    def test_parity_datum_is_consistent(self, ext):
        # 4 z = w^2 - d is how the two descriptor coordinates are tied
        four_z = ext.z + ext.z + ext.z + ext.z
        assert four_z == ext.w * ext.w - ext.d


def test_omega_coordinate_of_small_powers():
    ext = make_extension(Q, Q.element(-20))
    om = ext.omega
    assert om.tau() == rational_int(Q, 1)
    assert (om * om).tau() == rational(-ext.w)
    assert (om * om * om).tau() == rational(ext.w * ext.w - ext.z)


@given(st.data())
@settings(max_examples=40)
def test_conjugation_norm_and_trace_laws(data):
    ext = data.draw(st.sampled_from(EXTENSIONS))
    x = data.draw(ext_elements(ext))
    y = data.draw(ext_elements(ext))
    assert (x * y).conj_ext() == x.conj_ext() * y.conj_ext()
    assert (x + y).conj_ext() == x.conj_ext() + y.conj_ext()
    assert x.rel_norm() * y.rel_norm() == (x * y).rel_norm()
    assert x.rel_trace() == x.conj_ext().rel_trace()
    prod = x * x.conj_ext()
    assert prod.y == rational_int(ext.field, 0)
    assert prod.x == x.rel_norm()
    # the Omega-coordinate functional kills the base ring
    assert ext.embed(ext.field.element(3)).tau() == rational_int(ext.field, 0)


@given(st.data())
@settings(max_examples=40)
def test_division_in_the_extension(data):
    ext = data.draw(st.sampled_from(EXTENSIONS))
    x = data.draw(ext_elements(ext))
    y = data.draw(ext_elements(ext).filter(bool))
    q = x / y
    assert q * y == x


def test_integrality_of_half_coordinates():
    ext = make_extension(Q, Q.element(-20))
    assert ext.omega.is_integral()
    assert not ext.omega.scale(rational_int(Q, 1, 2)).is_integral()


class TestDiscriminantOrbit:
    def test_trivial_orbit_over_q(self):
        ext = make_extension(Q, Q.element(-20))
        assert disc_orbit_unit(ext, Q.element(-20)) == Q.one
        assert disc_orbit_unit(ext, Q.element(-80)) is None
        assert disc_orbit_unit(ext, Q.element(-180)) is None

    def test_unit_square_orbit_over_sqrt2(self):
        ext = make_extension(R2, R2.element(5))
        rho = R2.element(3, 2)
        assert disc_orbit_unit(ext, R2.element(5)) == R2.one
        scaled = rho * rho * R2.element(5)
        assert disc_orbit_unit(ext, scaled) == rho
        # an odd power of the totally positive generator is not a square
        assert disc_orbit_unit(ext, rho * R2.element(5)) is None
        assert disc_orbit_unit(ext, R2.element(10)) is None

    def test_norm_of_claimed_unit(self):
        ext = make_extension(R2, R2.element(0, 4))
        rho = R2.element(3, 2)
        big = rho * rho * rho * rho * ext.d
        u = disc_orbit_unit(ext, big)
        assert u == rho * rho
        assert norm(u) == 1
