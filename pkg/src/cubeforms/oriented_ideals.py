"""Oriented fractional ideals of the relative quadratic extension.

An oriented ideal is a pair: a rank-2 module M = [alpha, beta] over the base
ring together with a sign vector eps (one sign per real embedding of the
base field).  The basis determinant det_m = tau(conj(alpha) * beta) is the
coordinate determinant of the basis, and "aligned" means its sign vector
agrees with eps.  Classes are taken up to multiplication by elements kappa,
with eps transported by the sign of the relative norm of kappa.

Multiplication works on raw generator lists: clear denominators, take the
module Hermite form of the four products, restore the denominator.  The
orientation multiplies componentwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .base_field import (
    BaseElement,
    BaseRational,
    canonical_associate,
    hnf_rank2,
    rational,
    rational_int,
    sign_vector,
    unit_with_signs,
)
from .errors import (
    DegenerateBasis,
    DescriptorMismatch,
    NonzeroRequired,
    NotAnIdeal,
    UnsupportedBaseField,
)
from .quadratic_extension import ExtElement, ExtensionDescriptor, _same_ext


@dataclass(frozen=True)
class OrientedIdeal:
    alpha: ExtElement
    beta: ExtElement
    eps: tuple[int, ...]

    @property
    def ext(self) -> ExtensionDescriptor:
        return self.alpha.ext

    def __repr__(self) -> str:
        signs = "".join("+" if s == 1 else "-" for s in self.eps)
        return f"([{self.alpha}, {self.beta}]; {signs})"


def det_m(alpha: ExtElement, beta: ExtElement) -> BaseRational:
    """Basis determinant tau(conj(alpha)*beta) = a1*b2 - a2*b1."""
    _same_ext(alpha, beta)
    return alpha.x * beta.y - alpha.y * beta.x


def solve_over_basis(
    alpha: ExtElement, beta: ExtElement, xi: ExtElement
) -> tuple[BaseRational, BaseRational]:
    """Coordinates (c1, c2) with xi = c1*alpha + c2*beta, by Cramer."""
    _same_ext(alpha, beta, xi)
    d = det_m(alpha, beta)
    if not d:
        raise DegenerateBasis("basis determinant is zero")
    c1 = (xi.x * beta.y - beta.x * xi.y) / d
    c2 = (alpha.x * xi.y - xi.x * alpha.y) / d
    return c1, c2


def module_contains(I: OrientedIdeal, xi: ExtElement) -> bool:
    c1, c2 = solve_over_basis(I.alpha, I.beta, xi)
    return c1.is_integral() and c2.is_integral()


def make_oriented(
    alpha: ExtElement, beta: ExtElement, eps: tuple[int, ...]
) -> OrientedIdeal:
    """Validated constructor.

    Checks that the basis is nondegenerate, that the spanned module is
    stable under multiplication by Omega (the fractional-ideal condition;
    stability under the base ring is automatic), and that eps is a genuine
    sign vector.
    """
    ext = _same_ext(alpha, beta)
    field = ext.field
    eps = tuple(eps)
    if len(eps) != field.embeddings or any(s not in (1, -1) for s in eps):
        raise NotAnIdeal(f"bad orientation vector {eps}")
    d = det_m(alpha, beta)
    if not d:
        raise DegenerateBasis("generators are K-linearly dependent")
    omega = ext.omega
    for xi in (alpha * omega, beta * omega):
        c1, c2 = solve_over_basis(alpha, beta, xi)
        if not (c1.is_integral() and c2.is_integral()):
            raise NotAnIdeal("module is not stable under the ring of integers")
    return OrientedIdeal(alpha, beta, eps)


def align_basis(I: OrientedIdeal) -> OrientedIdeal:
    """Make sign(det_m) agree with eps by a unit rescale of beta."""
    d = det_m(I.alpha, I.beta)
    ds = sign_vector(d.num)
    if ds == I.eps:
        return I
    field = I.ext.field
    mu = unit_with_signs(field, tuple(a * b for a, b in zip(ds, I.eps)))
    beta = I.beta.scale(rational(mu))
    out = OrientedIdeal(I.alpha, beta, I.eps)
    assert sign_vector(det_m(out.alpha, out.beta).num) == I.eps
    return out


def oriented_scale(I: OrientedIdeal, kappa: ExtElement) -> OrientedIdeal:
    """The equivalent oriented ideal kappa * I.

    The orientation transports by the sign of the relative norm of kappa,
    which is exactly what keeps principality oriented-principality.
    """
    if not kappa:
        raise NonzeroRequired("scaling by zero")
    ns = kappa.rel_norm().sign_vector_rational()
    eps = tuple(a * b for a, b in zip(I.eps, ns))
    return OrientedIdeal(I.alpha * kappa, I.beta * kappa, eps)


def _den_lcm(*elements: ExtElement) -> int:
    m = 1
    for e in elements:
        m = m * e.x.den // math.gcd(m, e.x.den)
        m = m * e.y.den // math.gcd(m, e.y.den)
    return m


def _module_hnf(
    ext: ExtensionDescriptor, gens: list[ExtElement]
) -> tuple[ExtElement, ExtElement]:
    """Canonical triangular basis of the module generated by gens.

    Denominators are cleared first, restored afterward, so the result is
    the exact fractional module.
    """
    m = _den_lcm(*gens)
    scaled = [g.scale(rational_int(ext.field, m)) for g in gens]
    vecs = [(g.x.to_element(), g.y.to_element()) for g in scaled]
    res = hnf_rank2(vecs)
    (a, _), (b, c) = res.basis
    inv_m = rational_int(ext.field, 1, m)
    alpha = ext.embed(a).scale(inv_m)
    beta = ext.from_base_pair(b, c).scale(inv_m)
    return alpha, beta


def mul_ideals(I: OrientedIdeal, J: OrientedIdeal) -> OrientedIdeal:
    """Product ideal with componentwise orientation product.

    The product basis is the module Hermite form of the four generator
    products, so equal factors always give the identical result object.
    """
    ext = _same_ext(I.alpha, J.alpha)
    gens = [I.alpha * J.alpha, I.alpha * J.beta, I.beta * J.alpha, I.beta * J.beta]
    alpha, beta = _module_hnf(ext, gens)
    eps = tuple(a * b for a, b in zip(I.eps, J.eps))
    return OrientedIdeal(alpha, beta, eps)


def inverse_ideal(I: OrientedIdeal) -> OrientedIdeal:
    """The oriented inverse: conjugate basis over the determinant.

    Built aligned, with the same eps, so that mul_ideals(I, inverse_ideal(I))
    is literally the unit oriented ideal ([1, Omega]; +,...,+).
    """
    J = align_basis(I)
    d = det_m(J.alpha, J.beta)
    dinv = J.ext.embed_rational(rational_int(J.ext.field, 1) / d)
    alpha = J.alpha.conj_ext() * dinv
    beta = -(J.beta.conj_ext() * dinv)
    return OrientedIdeal(alpha, beta, J.eps)


def ideal_norm(I: OrientedIdeal) -> BaseRational:
    """Canonical associate of the basis determinant."""
    d = det_m(I.alpha, I.beta)
    return BaseRational(canonical_associate(d.num), d.den)


def principal_oriented(gamma: ExtElement) -> OrientedIdeal:
    """The oriented principal ideal (gamma) = ([gamma, gamma*Omega]; sgn N(gamma)).

    Aligned by construction since det_m = N(gamma)."""
    if not gamma:
        raise NonzeroRequired("zero generates the zero module")
    ext = gamma.ext
    eps = gamma.rel_norm().sign_vector_rational()
    return OrientedIdeal(gamma, gamma * ext.omega, tuple(eps))


def unit_ideal(ext: ExtensionDescriptor) -> OrientedIdeal:
    return OrientedIdeal(ext.one, ext.omega, (1,) * ext.field.embeddings)


def equal_modules(I: OrientedIdeal, J: OrientedIdeal) -> bool:
    """Same underlying module, orientation ignored: double inclusion by
    exact linear solves."""
    if I.ext != J.ext:
        raise DescriptorMismatch("ideals in different extensions")
    for xi in (J.alpha, J.beta):
        c1, c2 = solve_over_basis(I.alpha, I.beta, xi)
        if not (c1.is_integral() and c2.is_integral()):
            return False
    for xi in (I.alpha, I.beta):
        c1, c2 = solve_over_basis(J.alpha, J.beta, xi)
        if not (c1.is_integral() and c2.is_integral()):
            return False
    return True


def equal_oriented(I: OrientedIdeal, J: OrientedIdeal) -> bool:
    return I.eps == J.eps and equal_modules(I, J)


def is_oriented_principal(
    I: OrientedIdeal,
) -> tuple[bool, Optional[ExtElement]]:
    """Decide whether the class of I is the oriented principal class.

    Only the rational tier is supported.  For negative discriminants the
    decision comes with a generator witness found by a bounded search for a
    value 1 of the attached form; for positive discriminants the decision
    is by cycle equivalence of reduced forms and no witness is produced.
    """
    ext = I.ext
    if ext.field.degree != 1:
        raise UnsupportedBaseField(
            "principality decision is implemented over Q only"
        )
    from .quadratic_forms import (
        equivalent_forms,
        identity_form,
        phi_map,
    )

    J = align_basis(I)
    q = phi_map(J)
    qid = identity_form(ext)
    if not equivalent_forms(q, qid):
        return False, None
    d = ext.d.u
    if d > 0:
        return True, None
    # definite: y^2 <= 4a / |D| on the solution ellipse of Q(x, y) = 1
    a, b, c = q.a.u, q.b.u, q.c.u
    assert a > 0, "aligned definite form must be positive definite"
    ybound = math.isqrt(4 * a // abs(d)) + 1
    for y in range(-ybound, ybound + 1):
        disc_x = b * b * y * y - 4 * a * (c * y * y - 1)
        if disc_x < 0:
            continue
        r = math.isqrt(disc_x)
        if r * r != disc_x:
            continue
        for num in (-b * y + r, -b * y - r):
            if num % (2 * a):
                continue
            x = num // (2 * a)
            gamma = J.alpha.scale(rational_int(ext.field, x)) - J.beta.scale(
                rational_int(ext.field, y)
            )
            if not gamma:
                continue
            P = principal_oriented(gamma)
            if P.eps == I.eps and equal_modules(P, I):
                return True, gamma
    raise AssertionError("witness search failed despite class equality")
