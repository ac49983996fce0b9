"""Balanced triples of oriented ideals.

A triple (I1, I2, I3) is balanced when its product is the unit oriented
ideal: the module product is the full ring of integers, the orientation
product is all-plus, and (with all three bases aligned) the product of the
three basis determinants is a totally positive unit.  That unit is stored on
the triple as witness_u, since the cube map scales by it.

The stored triple always carries aligned bases; alignment only rescales a
basis vector by a unit, which does not move the class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base_field import BaseElement, is_totally_positive, is_unit
from .errors import (
    DescriptorMismatch,
    DetProductNotTotallyPositiveUnit,
    ProductNotUnitIdeal,
    ScaleNotAllowed,
    UnsupportedBaseField,
    WitnessMismatch,
)
from .oriented_ideals import (
    OrientedIdeal,
    align_basis,
    det_m,
    equal_oriented,
    inverse_ideal,
    is_oriented_principal,
    mul_ideals,
    oriented_scale,
    principal_oriented,
    unit_ideal,
)
from .quadratic_extension import ExtElement, ExtensionDescriptor


@dataclass(frozen=True)
class BalancedTriple:
    i1: OrientedIdeal
    i2: OrientedIdeal
    i3: OrientedIdeal
    witness_u: BaseElement

    @property
    def ext(self) -> ExtensionDescriptor:
        return self.i1.ext

    def components(self) -> tuple[OrientedIdeal, OrientedIdeal, OrientedIdeal]:
        return (self.i1, self.i2, self.i3)

    def __repr__(self) -> str:
        return f"BalancedTriple({self.i1}, {self.i2}, {self.i3}; u={self.witness_u})"


def make_balanced(
    I1: OrientedIdeal, I2: OrientedIdeal, I3: OrientedIdeal
) -> BalancedTriple:
    """Validate balance and store the triple with aligned bases.

    Raises ProductNotUnitIdeal when the oriented product is not
    ([1, Omega]; +,...,+), and DetProductNotTotallyPositiveUnit when the
    determinant product of the aligned bases fails to be a totally positive
    unit (which would indicate a fractional-scaling mismatch).
    """
    if not (I1.ext == I2.ext == I3.ext):
        raise DescriptorMismatch("triple spans different extensions")
    ext = I1.ext
    a1, a2, a3 = align_basis(I1), align_basis(I2), align_basis(I3)
    product = mul_ideals(mul_ideals(a1, a2), a3)
    if not equal_oriented(product, unit_ideal(ext)):
        raise ProductNotUnitIdeal(f"triple product is {product}")
    dprod = det_m(a1.alpha, a1.beta) * det_m(a2.alpha, a2.beta) * det_m(
        a3.alpha, a3.beta
    )
    if not dprod.is_integral():
        raise DetProductNotTotallyPositiveUnit(f"det product {dprod} is fractional")
    u = dprod.to_element()
    if not (is_unit(u) and is_totally_positive(u)):
        raise DetProductNotTotallyPositiveUnit(f"det product {u} not in U+")
    return BalancedTriple(a1, a2, a3, u)


def triple_from_pair(I1: OrientedIdeal, I2: OrientedIdeal) -> BalancedTriple:
    """Complete a pair to a balanced triple with the inverse of the product."""
    third = inverse_ideal(mul_ideals(I1, I2))
    return make_balanced(I1, I2, third)


def rebalance_phi2(
    J1: OrientedIdeal,
    J2: OrientedIdeal,
    J3: OrientedIdeal,
    omega_gen: ExtElement,
) -> BalancedTriple:
    """Divide the first component by a generator of the product.

    The supplied certificate omega_gen must generate the oriented product
    of the triple; the first component is scaled by its inverse, which
    lands the triple on balance.
    """
    product = mul_ideals(mul_ideals(J1, J2), J3)
    if not omega_gen:
        raise WitnessMismatch("zero cannot generate the product")
    expected = principal_oriented(omega_gen)
    if not equal_oriented(product, expected):
        raise WitnessMismatch(
            f"product {product} is not the oriented principal ideal of ({omega_gen})"
        )
    scaled = oriented_scale(J1, J1.ext.one / omega_gen)
    return make_balanced(scaled, J2, J3)


def scale_triple(
    T: BalancedTriple,
    k1: ExtElement,
    k2: ExtElement,
    k3: ExtElement,
) -> BalancedTriple:
    """Componentwise rescale staying inside the balanced world.

    Allowed exactly when k1*k2*k3 is an integral unit with totally positive
    relative norm; anything else would break the product conditions.
    """
    prod = k1 * k2 * k3
    if not prod:
        raise ScaleNotAllowed("zero scale factor")
    if not prod.is_integral():
        raise ScaleNotAllowed(f"product {prod} is not integral")
    n = prod.rel_norm().to_element()
    if not is_unit(n):
        raise ScaleNotAllowed(f"product {prod} is not a unit")
    if not is_totally_positive(n):
        raise ScaleNotAllowed(f"unit product {prod} has mixed-sign norm {n}")
    return make_balanced(
        oriented_scale(T.i1, k1),
        oriented_scale(T.i2, k2),
        oriented_scale(T.i3, k3),
    )


def triples_equivalent(T1: BalancedTriple, T2: BalancedTriple) -> bool:
    """Componentwise oriented-class equality, decided over Q.

    Each quotient I * J^{-1} is tested for oriented principality; the
    rational tier is the only one with a principality decision procedure.
    """
    if T1.ext != T2.ext:
        raise DescriptorMismatch("triples over different extensions")
    if T1.ext.field.degree != 1:
        raise UnsupportedBaseField("triple equivalence is decided over Q only")
    for a, b in zip(T1.components(), T2.components()):
        quotient = mul_ideals(a, inverse_ideal(b))
        principal, _ = is_oriented_principal(quotient)
        if not principal:
            return False
    return True


def product_balance_check(T: BalancedTriple) -> tuple[BaseElement, bool]:
    """Recompute the witness and verify it matches the stored one."""
    fresh = make_balanced(T.i1, T.i2, T.i3)
    return fresh.witness_u, fresh.witness_u == T.witness_u
