"""Shared fixtures and hypothesis strategies for both base rings."""

import pytest
from hypothesis import strategies as st

from cubeforms.base_field import FIELD_Q, FIELD_QSQRT2

BOTH_FIELDS = (FIELD_Q, FIELD_QSQRT2)


def elements(field, bound=9):
    """Ring elements with all coordinates in [-bound, bound]."""
    coord = st.integers(min_value=-bound, max_value=bound)
    if field.degree == 1:
        return st.builds(field.element, coord)
    return st.builds(field.element, coord, coord)


def nonzero(field, bound=9):
    return elements(field, bound).filter(bool)


def field_with(*makers, bound=9):
    """Draw a base field, then one value per maker over that same field.

    Keeps binary-operation tests honest: every drawn tuple lives in a
    single ring, so mixed-field errors cannot hide a vacuous pass.
    """

    def pack(field):
        return st.tuples(st.just(field), *[m(field, bound) for m in makers])

    return st.sampled_from(BOTH_FIELDS).flatmap(pack)


@pytest.fixture(params=BOTH_FIELDS, ids=lambda f: f.name)
def field(request):
    return request.param
