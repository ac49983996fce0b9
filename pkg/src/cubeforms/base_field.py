"""Exact arithmetic over the two supported base rings: Z and Z[sqrt2].

Elements live in the ring of integers of K, where K is either Q or the real
quadratic field Q(sqrt2).  Both rings are Euclidean with respect to the
absolute norm and have narrow class number one, which is what every higher
layer of this package relies on.

Representation: x = u + v*theta with integer coordinates (u, v), where theta
satisfies theta^2 = t*theta + n.  For Q we fix t = n = 0 and demand v = 0;
for Q(sqrt2) we have t = 0, n = 2, so theta = sqrt2.

Embedding order is pinned once and for all: sigma_1(sqrt2) = +sqrt2 and
sigma_2(sqrt2) = -sqrt2.  Every sign vector in the package uses that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from sympy.ntheory import isprime, primerange
from sympy.ntheory.residue_ntheory import sqrt_mod

from .errors import (
    DegenerateBasis,
    DescriptorMismatch,
    FactorBoundExceeded,
    NonzeroRequired,
    NotInvertible,
    UnsupportedBaseField,
)

# Refuse to factor past this absolute norm unless the caller raises the bound.
DEFAULT_FACTOR_BOUND = 10**9


@dataclass(frozen=True)
class FieldDescriptor:
    """Static description of the base field K.

    theta_trace and theta_norm are the integers (t, n) in the relation
    theta^2 = t*theta + n.  embeddings is the number of real embeddings,
    which doubles as the length of every sign vector.
    """

    name: str
    degree: int
    theta_trace: int
    theta_norm: int
    embeddings: int

    def element(self, u: int, v: int = 0) -> "BaseElement":
        return BaseElement(self, u, v)

    @property
    def zero(self) -> "BaseElement":
        return BaseElement(self, 0, 0)

    @property
    def one(self) -> "BaseElement":
        return BaseElement(self, 1, 0)

    @property
    def fundamental_unit(self) -> "BaseElement":
        # Over Q the unit group is {+-1} and -1 generates it.
        if self.degree == 1:
            return BaseElement(self, -1, 0)
        return BaseElement(self, 1, 1)  # 1 + sqrt2, norm -1

    def __repr__(self) -> str:
        return f"FieldDescriptor({self.name})"


FIELD_Q = FieldDescriptor("Q", 1, 0, 0, 1)
FIELD_QSQRT2 = FieldDescriptor("Q-sqrt2", 2, 0, 2, 2)

FIELDS_BY_NAME = {"Q": FIELD_Q, "Q-sqrt2": FIELD_QSQRT2}


def _same_field(*xs: "BaseElement") -> FieldDescriptor:
    field = xs[0].field
    for x in xs[1:]:
        if x.field is not field:
            raise DescriptorMismatch(
                f"mixed base fields {x.field.name} and {field.name}"
            )
    return field


@dataclass(frozen=True)
class BaseElement:
    """An element u + v*theta of the ring of integers of the base field."""

    field: FieldDescriptor
    u: int
    v: int = 0

    def __post_init__(self) -> None:
        if self.field.degree == 1 and self.v != 0:
            raise DescriptorMismatch("elements of Q carry no theta part")

    def __add__(self, other: "BaseElement") -> "BaseElement":
        _same_field(self, other)
        return BaseElement(self.field, self.u + other.u, self.v + other.v)

    def __sub__(self, other: "BaseElement") -> "BaseElement":
        _same_field(self, other)
        return BaseElement(self.field, self.u - other.u, self.v - other.v)

    def __neg__(self) -> "BaseElement":
        return BaseElement(self.field, -self.u, -self.v)

    def __mul__(self, other: "BaseElement") -> "BaseElement":
        _same_field(self, other)
        t, n = self.field.theta_trace, self.field.theta_norm
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        return BaseElement(
            self.field,
            u1 * u2 + n * v1 * v2,
            u1 * v2 + v1 * u2 + t * v1 * v2,
        )

    def __bool__(self) -> bool:
        return self.u != 0 or self.v != 0

    def __str__(self) -> str:
        if self.field.degree == 1:
            return str(self.u)
        if self.v == 0:
            return str(self.u)
        vpart = "sqrt2" if abs(self.v) == 1 else f"{abs(self.v)}*sqrt2"
        if self.u == 0:
            return vpart if self.v > 0 else f"-{vpart}"
        return f"{self.u}{'+' if self.v > 0 else '-'}{vpart}"

    def __repr__(self) -> str:
        return f"<{self} in {self.field.name}>"


def conj(x: BaseElement) -> BaseElement:
    """Nontrivial field automorphism; the identity over Q."""
    if x.field.degree == 1:
        return x
    t = x.field.theta_trace
    return BaseElement(x.field, x.u + t * x.v, -x.v)


def norm(x: BaseElement) -> int:
    """Field norm down to Q, always a rational integer."""
    if x.field.degree == 1:
        return x.u
    t, n = x.field.theta_trace, x.field.theta_norm
    return x.u * x.u + t * x.u * x.v - n * x.v * x.v


def trace(x: BaseElement) -> int:
    if x.field.degree == 1:
        return x.u
    return 2 * x.u + x.field.theta_trace * x.v


def sign_vector(x: BaseElement) -> tuple[int, ...]:
    """Signs of x under all real embeddings, computed exactly.

    Over Q(sqrt2) the sign of u + v*sqrt2 is decided by comparing u^2
    against 2 v^2, never by floating point.
    """
    if not x:
        raise NonzeroRequired("sign vector of zero is undefined")
    if x.field.degree == 1:
        return (1 if x.u > 0 else -1,)

    def sgn(u: int, v: int) -> int:
        # sign of u + v*sqrt2
        if v == 0:
            return 1 if u > 0 else -1
        if u == 0:
            return 1 if v > 0 else -1
        if u * u > 2 * v * v:
            return 1 if u > 0 else -1
        return 1 if v > 0 else -1

    return (sgn(x.u, x.v), sgn(x.u, -x.v))


def is_totally_positive(x: BaseElement) -> bool:
    return all(s == 1 for s in sign_vector(x))


def is_unit(x: BaseElement) -> bool:
    return abs(norm(x)) == 1


def unit_with_signs(field: FieldDescriptor, signs: Sequence[int]) -> BaseElement:
    """The unit realizing a given sign vector, chosen deterministically.

    Over Q: +1 or -1.  Over Q(sqrt2) the representatives are the four
    smallest ones: 1, 1+sqrt2, -1-sqrt2, -1 for the patterns ++, +-, -+, --.
    """
    signs = tuple(signs)
    if len(signs) != field.embeddings or any(s not in (1, -1) for s in signs):
        raise NonzeroRequired(f"bad sign pattern {signs}")
    if field.degree == 1:
        return field.element(signs[0])
    table = {
        (1, 1): field.element(1, 0),
        (1, -1): field.element(1, 1),
        (-1, 1): field.element(-1, -1),
        (-1, -1): field.element(-1, 0),
    }
    return table[signs]


def _round_nearest_ties_to_zero(num: int, den: int) -> int:
    """Round num/den (den > 0) to the nearest integer, ties toward zero."""
    q0 = num // den
    r = num - q0 * den
    if 2 * r > den:
        return q0 + 1
    if 2 * r < den:
        return q0
    # exact half: pick the candidate closer to zero
    return q0 if q0 >= 0 else q0 + 1


def divmod_euclid(x: BaseElement, y: BaseElement) -> tuple[BaseElement, BaseElement]:
    """Euclidean division: x = q*y + r with |N(r)| < |N(y)|.

    The quotient is the coordinatewise nearest integer of x/y, ties toward
    zero.  For Z[sqrt2] the quality bound is |N(delta)| <= 1/4 + 2/4 < 1
    where delta is the rounding error, so the remainder inequality is strict
    and never needs a correction step.
    """
    _same_field(x, y)
    if not y:
        raise NonzeroRequired("division by zero")
    if x.field.degree == 1:
        s = 1 if y.u > 0 else -1
        q = BaseElement(x.field, _round_nearest_ties_to_zero(x.u * s, abs(y.u)))
    else:
        w = x * conj(y)
        ny = norm(y)
        s = 1 if ny > 0 else -1
        q = BaseElement(
            x.field,
            _round_nearest_ties_to_zero(w.u * s, abs(ny)),
            _round_nearest_ties_to_zero(w.v * s, abs(ny)),
        )
    r = x - q * y
    assert abs(norm(r)) < abs(norm(y)), "euclidean bound violated"
    return q, r


def divides(y: BaseElement, x: BaseElement) -> bool:
    """True when y | x in the ring of integers."""
    if not y:
        return not x
    if x.field.degree == 1:
        return x.u % y.u == 0
    w = x * conj(y)
    ny = norm(y)
    return w.u % ny == 0 and w.v % ny == 0


def exact_div(x: BaseElement, y: BaseElement) -> BaseElement:
    """x / y when exact, otherwise NotInvertible."""
    _same_field(x, y)
    if not y:
        raise NonzeroRequired("division by zero")
    if x.field.degree == 1:
        q, rem = divmod(x.u, y.u)
        if rem:
            raise NotInvertible(f"{y} does not divide {x}")
        return BaseElement(x.field, q)
    w = x * conj(y)
    ny = norm(y)
    if w.u % ny or w.v % ny:
        raise NotInvertible(f"{y} does not divide {x}")
    return BaseElement(x.field, w.u // ny, w.v // ny)


# The square of the fundamental unit of Z[sqrt2]; totally positive generator
# of the totally positive unit group.
def _rho(field: FieldDescriptor) -> BaseElement:
    return field.element(3, 2)


def _assoc_key(x: BaseElement) -> tuple[int, int, int]:
    # smaller is better: u coordinate, then |v|, then prefer v >= 0
    return (x.u, abs(x.v), 0 if x.v >= 0 else 1)


def canonical_associate(x: BaseElement) -> BaseElement:
    return canonical_associate_with_unit(x)[0]


def canonical_associate_with_unit(x: BaseElement) -> tuple[BaseElement, BaseElement]:
    """The canonical representative of the associate class, and the unit
    mu with canonical = mu * x.

    Over Q: |x|.  Over Z[sqrt2]: the totally positive associate minimizing
    (u, |v|), preferring v > 0 on the remaining two-fold tie.  The u
    coordinate is strictly convex along the orbit under powers of 3+2*sqrt2,
    so a local walk from any starting point finds the minimum.
    """
    field = x.field
    if not x:
        return x, field.one
    if field.degree == 1:
        return (x, field.one) if x.u > 0 else (-x, field.element(-1))
    mu = unit_with_signs(field, sign_vector(x))
    cur = mu * x
    rho = _rho(field)
    rho_inv = field.element(3, -2)
    while _assoc_key(cur * rho) < _assoc_key(cur):
        cur = cur * rho
        mu = mu * rho
    while _assoc_key(cur * rho_inv) < _assoc_key(cur):
        cur = cur * rho_inv
        mu = mu * rho_inv
    return cur, mu


def gcd(x: BaseElement, y: BaseElement) -> BaseElement:
    """Greatest common divisor, returned as the canonical associate."""
    _same_field(x, y)
    if not x and not y:
        raise NonzeroRequired("gcd(0, 0) is undefined")
    a, b = x, y
    while b:
        _, a = a, divmod_euclid(a, b)[1]
        a, b = b, a
    return canonical_associate(a)


def ext_gcd(
    x: BaseElement, y: BaseElement
) -> tuple[BaseElement, BaseElement, BaseElement]:
    """Extended Euclid: returns (g, s, t) with s*x + t*y = g and g canonical."""
    _same_field(x, y)
    if not x and not y:
        raise NonzeroRequired("gcd(0, 0) is undefined")
    field = x.field
    one, zero = field.one, field.zero
    a, b = x, y
    sa, ta, sb, tb = one, zero, zero, one
    while b:
        q, r = divmod_euclid(a, b)
        a, b = b, r
        sa, sb = sb, sa - q * sb
        ta, tb = tb, ta - q * tb
    g, mu = canonical_associate_with_unit(a)
    s, t = mu * sa, mu * ta
    assert s * x + t * y == g
    return g, s, t


def gcd_many(xs: Sequence[BaseElement]) -> BaseElement:
    xs = [x for x in xs if x]
    if not xs:
        raise NonzeroRequired("gcd of all-zero list")
    g = xs[0]
    for x in xs[1:]:
        g = gcd(g, x)
    return canonical_associate(g)


def divisible_by_rational_int(x: BaseElement, m: int) -> bool:
    """True when the rational integer m divides x in O_K."""
    return x.u % m == 0 and x.v % m == 0


def is_qr_mod4(d: BaseElement) -> tuple[bool, Optional[BaseElement]]:
    """Is d congruent to a square modulo 4 O_K?

    Enumerates a complete residue system modulo 2 O_K (two classes for Q,
    four for Z[sqrt2]).  The squares of distinct residues are pairwise
    incongruent mod 4 here, so the witness is unique and the enumeration
    order does not matter.
    """
    field = d.field
    if field.degree == 1:
        residues = [field.element(0), field.element(1)]
    else:
        residues = [
            field.element(0, 0),
            field.element(1, 0),
            field.element(0, 1),
            field.element(1, 1),
        ]
    for w in residues:
        if divisible_by_rational_int(w * w - d, 4):
            return True, w
    return False, None


def is_square(x: BaseElement) -> bool:
    """Exact squareness test in the ring of integers."""
    if not x:
        return True
    if x.field.degree == 1:
        return x.u >= 0 and math.isqrt(x.u) ** 2 == x.u
    u, v = x.u, x.v
    if v % 2:
        return False
    if v == 0:
        # s^2 + 2 t^2 = u with 2 s t = 0
        if u >= 0 and math.isqrt(u) ** 2 == u:
            return True
        return u >= 0 and u % 2 == 0 and math.isqrt(u // 2) ** 2 == u // 2
    half = v // 2  # s * t = half, both nonzero
    for t in _divisors_signed(half):
        s = half // t
        if s * t == half and s * s + 2 * t * t == u:
            return True
    return False


def _divisors_signed(m: int):
    m = abs(m)
    for i in range(1, math.isqrt(m) + 1):
        if m % i == 0:
            yield from (i, -i, m // i, -(m // i))


def factor_element(
    x: BaseElement, norm_bound: int = DEFAULT_FACTOR_BOUND
) -> list[BaseElement]:
    """Factor x into canonical primes of O_K, with multiplicity.

    Units factor as the empty list; the unit cofactor is implicit.  The
    rational norm is trial-divided with sympy's prime sieve; split primes of
    Z[sqrt2] (p = +-1 mod 8) are found via a square root of 2 mod p and a
    ring gcd, the classical recipe.
    """
    if not x:
        raise NonzeroRequired("cannot factor zero")
    n_abs = abs(norm(x))
    if n_abs > norm_bound:
        raise FactorBoundExceeded(f"|norm| = {n_abs} exceeds bound {norm_bound}")
    if n_abs == 1:
        return []
    field = x.field
    out: list[BaseElement] = []
    if field.degree == 1:
        m = abs(x.u)
        for p in primerange(2, math.isqrt(m) + 1):
            while m % p == 0:
                out.append(field.element(p))
                m //= p
        if m > 1:
            out.append(field.element(m))
        return sorted(out, key=lambda e: (abs(norm(e)), e.u, e.v))

    cur = x
    # ramified prime above 2
    sqrt2 = field.element(0, 1)
    sqrt2_can = canonical_associate(sqrt2)
    while divides(sqrt2, cur):
        cur = exact_div(cur, sqrt2)
        out.append(sqrt2_can)
    n_abs = abs(norm(cur))
    for p in primerange(3, math.isqrt(n_abs) + 1):
        if n_abs % p:
            continue
        if p % 8 in (3, 5):
            pel = field.element(p)
            while divides(pel, cur):
                cur = exact_div(cur, pel)
                out.append(canonical_associate(pel))
        else:
            r = sqrt_mod(2, p)
            pi = gcd(field.element(r, 1), field.element(p))
            for q in (pi, canonical_associate(conj(pi))):
                while divides(q, cur):
                    cur = exact_div(cur, q)
                    out.append(canonical_associate(q))
        n_abs = abs(norm(cur))
    if n_abs > 1:
        # what is left has prime norm, or is an inert rational prime
        if isprime(n_abs):
            out.append(canonical_associate(cur))
        else:
            root = math.isqrt(n_abs)
            assert root * root == n_abs and isprime(root), "factor leak"
            out.append(canonical_associate(field.element(root)))
            cur = exact_div(cur, field.element(root))
            assert is_unit(cur)
    return sorted(out, key=lambda e: (abs(norm(e)), e.u, e.v))


def is_squarefree(x: BaseElement, norm_bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    fs = factor_element(x, norm_bound)
    return len(fs) == len(set(fs))


# ---------------------------------------------------------------------------
# rationals with a shared denominator


@dataclass(frozen=True)
class BaseRational:
    """num / den with num in O_K and a single positive integer denominator.

    Always stored in lowest terms: gcd(num_u, num_v, den) = 1, den >= 1.
    """

    num: BaseElement
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise NonzeroRequired("zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(math.gcd(abs(num.u), abs(num.v)), den)
        if g > 1:
            num = BaseElement(num.field, num.u // g, num.v // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def field(self) -> FieldDescriptor:
        return self.num.field

    def __add__(self, other: "BaseRational") -> "BaseRational":
        return BaseRational(
            self.num * other.field.element(other.den)
            + other.num * self.field.element(self.den),
            self.den * other.den,
        )

    def __sub__(self, other: "BaseRational") -> "BaseRational":
        return self + (-other)

    def __neg__(self) -> "BaseRational":
        return BaseRational(-self.num, self.den)

    def __mul__(self, other: "BaseRational") -> "BaseRational":
        return BaseRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "BaseRational") -> "BaseRational":
        if not other.num:
            raise NonzeroRequired("division by zero")
        if self.field.degree == 1:
            return BaseRational(
                self.num * self.field.element(other.den),
                self.den * other.num.u,
            )
        n = norm(other.num)
        return BaseRational(
            self.num * conj(other.num) * self.field.element(other.den),
            self.den * n,
        )

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_element(self) -> BaseElement:
        if self.den != 1:
            raise NotInvertible(f"{self} is not integral")
        return self.num

    def conj_rational(self) -> "BaseRational":
        return BaseRational(conj(self.num), self.den)

    def norm_fraction(self) -> Fraction:
        return Fraction(norm(self.num), self.den * self.den)

    def sign_vector_rational(self) -> tuple[int, ...]:
        return sign_vector(self.num)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"

    def __repr__(self) -> str:
        return f"<{self} in {self.field.name}>"


def rational(x: BaseElement) -> BaseRational:
    return BaseRational(x, 1)


def rational_int(field: FieldDescriptor, num: int, den: int = 1) -> BaseRational:
    return BaseRational(field.element(num), den)


# ---------------------------------------------------------------------------
# Hermite normal form for rank-2 modules over O_K


@dataclass(frozen=True)
class HnfResult:
    """Triangular basis ((A, 0), (B, C)) of the module generated by the
    input vectors, together with both transformation certificates.

    to_basis is a 2 x n matrix over O_K with basis[j] = sum to_basis[j][i] * gens[i];
    from_basis is n x 2 with gens[i] = from_basis[i][0]*basis[0] + from_basis[i][1]*basis[1].
    """

    basis: tuple[tuple[BaseElement, BaseElement], tuple[BaseElement, BaseElement]]
    to_basis: tuple[tuple[BaseElement, ...], ...]
    from_basis: tuple[tuple[BaseElement, BaseElement], ...]


def _canonical_residue(x: BaseElement, modulus: BaseElement) -> BaseElement:
    """The unique distinguished representative of x + (modulus).

    Over Q: in [0, |modulus|).  Over Z[sqrt2]: inside the half-open
    fundamental box of the coordinate lattice of (modulus), obtained from a
    2x2 integer Hermite form.  Canonical per residue class, which is what
    makes the module Hermite form reproducible.
    """
    field = x.field
    if field.degree == 1:
        return field.element(x.u % abs(modulus.u))
    # Z-lattice of (modulus): rows are coords of modulus*1 and modulus*sqrt2
    r1 = (modulus.u, modulus.v)
    r2 = (2 * modulus.v, modulus.u)
    # integer HNF with shape ((a, 0), (b, c)): gcd work on the v column
    g, s, t = _int_ext_gcd(r1[1], r2[1])
    row_c = (s * r1[0] + t * r2[0], g)
    k1, k2 = r2[1] // g, r1[1] // g
    row_a = (-k1 * r1[0] + k2 * r2[0], 0)
    a = abs(row_a[0])
    c = g
    assert a > 0 and c > 0, "modulus lattice degenerate"
    b = row_c[0]
    xu, xv = x.u, x.v
    q2 = xv // c
    xu, xv = xu - q2 * b, xv - q2 * c
    xu %= a
    return field.element(xu, xv)


def _int_ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Positive gcd with Bezout coefficients over Z."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_rank2(
    gens: Sequence[tuple[BaseElement, BaseElement]],
) -> HnfResult:
    """Hermite form of the O_K-module spanned by pairs of base elements.

    The result basis is ((A, 0), (B, C)) with A and C canonical associates
    and B the canonical residue of its class modulo (A).  Two generator
    lists spanning the same module produce the identical HnfResult basis.
    Raises DegenerateBasis when the span has rank below 2.
    """
    if not gens:
        raise DegenerateBasis("no generators")
    field = gens[0][0].field
    n = len(gens)
    rows = [list(g) for g in gens]
    # trans[i] tracks row i as a combination of the original generators
    trans = [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)
    ]

    def combine(i: int, j: int, col: int) -> None:
        """Unimodular 2-row operation putting gcd at (i, col), 0 at (j, col)."""
        a, b = rows[i][col], rows[j][col]
        if not b:
            return
        if not a:
            rows[i], rows[j] = rows[j], rows[i]
            trans[i], trans[j] = trans[j], trans[i]
            return
        g, s, t = ext_gcd(a, b)
        ka, kb = exact_div(a, g), exact_div(b, g)
        new_i = [s * rows[i][k] + t * rows[j][k] for k in range(2)]
        new_j = [-kb * rows[i][k] + ka * rows[j][k] for k in range(2)]
        nt_i = [s * trans[i][k] + t * trans[j][k] for k in range(n)]
        nt_j = [-kb * trans[i][k] + ka * trans[j][k] for k in range(n)]
        rows[i], rows[j] = new_i, new_j
        trans[i], trans[j] = nt_i, nt_j

    # sweep the second coordinate into row 0
    for j in range(1, n):
        combine(0, j, 1)
    if not rows[0][1]:
        raise DegenerateBasis("second coordinate identically zero")
    # sweep the first coordinate of the remaining rows into row 1
    for j in range(2, n):
        combine(1, j, 0)
    if n == 1 or not rows[1][0]:
        raise DegenerateBasis("rank below 2")

    # canonicalize the pivots
    c_can, mu_c = canonical_associate_with_unit(rows[0][1])
    rows[0] = [mu_c * rows[0][0], c_can]
    trans[0] = [mu_c * e for e in trans[0]]
    a_can, mu_a = canonical_associate_with_unit(rows[1][0])
    rows[1] = [a_can, field.zero]
    trans[1] = [mu_a * e for e in trans[1]]

    # reduce B into the canonical residue of its class mod (A)
    b_raw = rows[0][0]
    b_red = _canonical_residue(b_raw, a_can)
    q = exact_div(b_raw - b_red, a_can)
    rows[0][0] = b_red
    trans[0] = [trans[0][k] - q * trans[1][k] for k in range(n)]

    basis = ((a_can, field.zero), (b_red, c_can))
    to_basis = (tuple(trans[1]), tuple(trans[0]))

    # solve every generator over the triangular basis
    from_rows: list[tuple[BaseElement, BaseElement]] = []
    for g1, g2 in gens:
        y = exact_div(g2, c_can)
        xcoef = exact_div(g1 - y * b_red, a_can)
        from_rows.append((xcoef, y))
    result = HnfResult(basis=basis, to_basis=to_basis, from_basis=tuple(from_rows))

    # paranoia: certificates must reproduce both sides exactly
    for j in (0, 1):
        acc = [field.zero, field.zero]
        for i in range(n):
            acc[0] = acc[0] + to_basis[j][i] * gens[i][0]
            acc[1] = acc[1] + to_basis[j][i] * gens[i][1]
        assert (acc[0], acc[1]) == basis[j], "to_basis certificate broken"
    for i in range(n):
        x0, x1 = from_rows[i]
        rec = (
            x0 * basis[0][0] + x1 * basis[1][0],
            x0 * basis[0][1] + x1 * basis[1][1],
        )
        assert rec == gens[i], "from_basis certificate broken"
    return result
