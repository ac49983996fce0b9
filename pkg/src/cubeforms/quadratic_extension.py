"""Relative quadratic extensions L = K(sqrt(D)) with exact arithmetic.

The extension is configured by a base field and a fundamental, non-square
discriminant D.  Its ring of integers is O_K[Omega] where Omega is a root of

    X^2 + w X + z,    z = (w^2 - D) / 4,

and w is the canonical witness of D being a quadratic residue modulo 4.
Elements are stored as x + y*Omega with both coordinates base-field
rationals; integrality means both coordinates are integral.

sqrt(D) itself is the integral element w + 2*Omega, and the Omega-coordinate
map tau extracts y, so tau(conj(a)*b) is the basis determinant used all over
the oriented-ideal layer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .base_field import (
    DEFAULT_FACTOR_BOUND,
    BaseElement,
    BaseRational,
    FieldDescriptor,
    conj,
    divides,
    exact_div,
    factor_element,
    is_qr_mod4,
    is_square,
    is_totally_positive,
    is_unit,
    norm,
    rational,
    sign_vector,
)
from .errors import (
    DescriptorMismatch,
    DiscriminantNotFundamental,
    NonzeroRequired,
)


def is_fundamental(d: BaseElement, norm_bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Whether d is a fundamental element of the base ring.

    d must be a quadratic residue mod 4, and every non-unit p whose square
    divides d must divide 2 while leaving d/p^2 a non-residue mod 4.  The
    non-unit divisors are enumerated from the prime factorization, so this
    is exact but assumes the norm stays within factoring range.
    """
    if not d:
        return False
    if not is_qr_mod4(d)[0]:
        return False
    primes = factor_element(d, norm_bound)
    exps: dict[BaseElement, int] = {}
    for p in primes:
        exps[p] = exps.get(p, 0) + 1
    if all(e <= 1 for e in exps.values()):
        return True
    ps = list(exps)
    two = d.field.element(2)
    for bs in itertools.product(*(range(exps[p] // 2 + 1) for p in ps)):
        if not any(bs):
            continue
        p = d.field.one
        for base, b in zip(ps, bs):
            for _ in range(b):
                p = p * base
        if not divides(p, two):
            return False
        if is_qr_mod4(exact_div(d, p * p))[0]:
            return False
    return True


@dataclass(frozen=True)
class ExtensionDescriptor:
    """L = K(sqrt(D)) with O_L = O_K[Omega], Omega^2 = -w*Omega - z."""

    field: FieldDescriptor
    d: BaseElement
    w: BaseElement
    z: BaseElement

    def element(self, x: BaseRational, y: BaseRational) -> "ExtElement":
        return ExtElement(self, x, y)

    def from_base_pair(self, x: BaseElement, y: BaseElement) -> "ExtElement":
        return ExtElement(self, rational(x), rational(y))

    def from_ints(self, xu: int, xv: int, yu: int, yv: int) -> "ExtElement":
        return self.from_base_pair(
            self.field.element(xu, xv), self.field.element(yu, yv)
        )

    @property
    def zero(self) -> "ExtElement":
        return self.from_base_pair(self.field.zero, self.field.zero)

    @property
    def one(self) -> "ExtElement":
        return self.from_base_pair(self.field.one, self.field.zero)

    @property
    def omega(self) -> "ExtElement":
        return self.from_base_pair(self.field.zero, self.field.one)

    @property
    def sqrt_d(self) -> "ExtElement":
        return self.from_base_pair(self.w, self.field.element(2))

    def embed(self, a: BaseElement) -> "ExtElement":
        return self.from_base_pair(a, self.field.zero)

    def embed_rational(self, a: BaseRational) -> "ExtElement":
        return ExtElement(self, a, BaseRational(self.field.zero))

    def __repr__(self) -> str:
        return f"ExtensionDescriptor({self.field.name}, D={self.d})"


def make_extension(
    field: FieldDescriptor,
    d: BaseElement,
    norm_bound: int = DEFAULT_FACTOR_BOUND,
) -> ExtensionDescriptor:
    """Validate D and build the extension descriptor.

    D must be nonzero, not a square, and fundamental.  The minimal
    polynomial datum (w, z) is derived from the canonical residue witness.
    """
    if d.field is not field:
        raise DescriptorMismatch("discriminant from a different base field")
    if not d:
        raise DiscriminantNotFundamental("discriminant is zero")
    if is_square(d):
        raise DiscriminantNotFundamental(f"{d} is a square")
    ok, w = is_qr_mod4(d)
    if not ok:
        raise DiscriminantNotFundamental(f"{d} is not a quadratic residue mod 4")
    if not is_fundamental(d, norm_bound):
        raise DiscriminantNotFundamental(f"{d} has a forbidden square divisor")
    assert w is not None
    sq = w * w - d
    z = field.element(sq.u // 4, sq.v // 4)
    return ExtensionDescriptor(field, d, w, z)


def _same_ext(*xs: "ExtElement") -> ExtensionDescriptor:
    ext = xs[0].ext
    for x in xs[1:]:
        if x.ext != ext:
            raise DescriptorMismatch("mixed extensions")
    return ext


@dataclass(frozen=True)
class ExtElement:
    """x + y*Omega with base-rational coordinates."""

    ext: ExtensionDescriptor
    x: BaseRational
    y: BaseRational

    def __add__(self, other: "ExtElement") -> "ExtElement":
        _same_ext(self, other)
        return ExtElement(self.ext, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        _same_ext(self, other)
        return ExtElement(self.ext, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "ExtElement":
        return ExtElement(self.ext, -self.x, -self.y)

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        _same_ext(self, other)
        w, z = rational(self.ext.w), rational(self.ext.z)
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        yy = y1 * y2
        return ExtElement(
            self.ext,
            x1 * x2 - z * yy,
            x1 * y2 + y1 * x2 - w * yy,
        )

    def __truediv__(self, other: "ExtElement") -> "ExtElement":
        _same_ext(self, other)
        if not other:
            raise NonzeroRequired("division by zero")
        n = other.rel_norm()
        co = other.conj_ext()
        num = self * co
        return ExtElement(self.ext, num.x / n, num.y / n)

    def __bool__(self) -> bool:
        return bool(self.x) or bool(self.y)

    def scale(self, c: BaseRational) -> "ExtElement":
        return ExtElement(self.ext, self.x * c, self.y * c)

    def conj_ext(self) -> "ExtElement":
        """The nontrivial automorphism of L/K: Omega -> -w - Omega."""
        w = rational(self.ext.w)
        return ExtElement(self.ext, self.x - w * self.y, -self.y)

    def tau(self) -> BaseRational:
        """Omega-coordinate; equals (xi - conj(xi)) / sqrt(D)."""
        return self.y

    def rel_norm(self) -> BaseRational:
        """Norm from L down to K: x^2 - w x y + z y^2."""
        w, z = rational(self.ext.w), rational(self.ext.z)
        return self.x * self.x - w * self.x * self.y + z * self.y * self.y

    def rel_trace(self) -> BaseRational:
        w = rational(self.ext.w)
        return self.x + self.x - w * self.y

    def is_integral(self) -> bool:
        return self.x.is_integral() and self.y.is_integral()

    def __str__(self) -> str:
        if not self.y:
            return str(self.x)
        if not self.x:
            return f"({self.y})*Om"
        return f"({self.x}) + ({self.y})*Om"

    def __repr__(self) -> str:
        return f"<{self} | D={self.ext.d}>"


def disc_orbit_unit(
    ext: ExtensionDescriptor, disc: BaseElement
) -> Optional[BaseElement]:
    """The totally positive unit u with disc = u^2 * D, if one exists.

    Over Q the orbit is trivial.  Over Z[sqrt2] the totally positive units
    are the powers of 3+2*sqrt2, so the quotient disc/D must be an even
    power of it; the exponent is found by an exact magnitude walk.
    """
    field = ext.field
    if not disc:
        return None
    if field.degree == 1:
        return field.one if disc == ext.d else None
    num = disc * conj(ext.d)
    nd = norm(ext.d)
    if num.u % nd or num.v % nd:
        return None
    q = field.element(num.u // nd, num.v // nd)
    if abs(norm(q)) != 1 or not is_totally_positive(q):
        return None
    rho = field.element(3, 2)
    rho_inv = field.element(3, -2)
    k = 0
    cur = q
    while cur != field.one:
        if sign_vector(cur - field.one)[0] > 0:
            cur = cur * rho_inv
            k += 1
        else:
            cur = cur * rho
            k -= 1
        if abs(k) > 64:
            return None
    if k % 2:
        return None
    half = abs(k) // 2
    u = field.one
    step = rho if k > 0 else rho_inv
    for _ in range(half):
        u = u * step
    return u


def ext_is_unit_integral(xi: ExtElement) -> bool:
    """Unit test inside O_L: integral with unit relative norm."""
    if not xi.is_integral():
        return False
    n = xi.rel_norm().to_element()
    return is_unit(n)


def canonical_d_examples(field: FieldDescriptor) -> list[BaseElement]:
    """Small fundamental non-square discriminants, handy for tests and the
    command line; computed, not hard-coded."""
    out: list[BaseElement] = []
    if field.degree == 1:
        candidates = [field.element(n) for n in range(-40, 41)]
    else:
        candidates = [
            field.element(a, b) for a in range(-8, 9) for b in range(-8, 9)
        ]
    for d in candidates:
        if not d or is_square(d):
            continue
        if is_qr_mod4(d)[0] and is_fundamental(d):
            out.append(d)
    return out
