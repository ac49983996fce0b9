"""Binary quadratic forms over the base ring, and the form <-> ideal maps.

A form is a coefficient triple (a, b, c) over the base ring.  Narrow
equivalence allows substitutions with totally positive unit determinant plus
an overall totally positive unit factor, so the discriminant is only pinned
down inside the orbit {u^2 D : u totally positive unit}.

The two correspondence maps:

  to_ideal:  Q = (a, b, c)  ->  ([a, (-b + sqrt(disc Q))/2]; sign a)
  to_form:   [alpha, beta]  ->  (N(alpha) x^2 - tr(conj(alpha) beta) xy + N(beta) y^2) / det

to_form lands exactly on the configured discriminant D; to_ideal accepts any
discriminant in the orbit and picks sqrt(disc) = u * (w + 2 Omega).

Reduction theory (Gauss for definite forms, the rho walk on cycles for
indefinite ones) is implemented for the rational tier only, with full
replayable transcripts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .base_field import (
    BaseElement,
    FieldDescriptor,
    FIELD_Q,
    gcd_many,
    is_unit,
    sign_vector,
)
from .errors import (
    DescriptorMismatch,
    DiscriminantMismatch,
    DiscriminantNotFundamental,
    NonIntegralEntry,
    NotPrimitive,
    UnsupportedBaseField,
)
from .oriented_ideals import (
    OrientedIdeal,
    align_basis,
    det_m,
    make_oriented,
    mul_ideals,
)
from .quadratic_extension import ExtensionDescriptor, disc_orbit_unit


@dataclass(frozen=True)
class QuadForm:
    """a x^2 + b xy + c y^2 with coefficients in the base ring."""

    field: FieldDescriptor
    a: BaseElement
    b: BaseElement
    c: BaseElement

    def __call__(self, x: BaseElement, y: BaseElement) -> BaseElement:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def coefficients(self) -> tuple[BaseElement, BaseElement, BaseElement]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a})x^2 + ({self.b})xy + ({self.c})y^2"

    def __repr__(self) -> str:
        return f"QuadForm({self.a}, {self.b}, {self.c})"


def form_from_ints(field: FieldDescriptor, a: int, b: int, c: int) -> QuadForm:
    return QuadForm(field, field.element(a), field.element(b), field.element(c))


def disc_form(q: QuadForm) -> BaseElement:
    four = q.field.element(4)
    return q.b * q.b - four * q.a * q.c


def is_primitive(q: QuadForm) -> bool:
    if not (q.a or q.b or q.c):
        return False
    return is_unit(gcd_many([q.a, q.b, q.c]))


def act_form(
    q: QuadForm,
    t: tuple[BaseElement, BaseElement, BaseElement, BaseElement],
    u: BaseElement | None = None,
) -> QuadForm:
    """u * Q(p x + q y, r x + s y) for the matrix t = (p, q, r, s).

    Pure substitution; the narrow-equivalence side conditions (det in U+,
    u a totally positive unit) are the caller's business, which lets the
    same primitive drive transcripts and the transformation-law tests.
    """
    p, qq, r, s = t
    a2 = q(p, r)
    c2 = q(qq, s)
    two = q.field.element(2)
    b2 = two * q.a * p * qq + q.b * (p * s + qq * r) + two * q.c * r * s
    if u is not None:
        a2, b2, c2 = u * a2, u * b2, u * c2
    return QuadForm(q.field, a2, b2, c2)


def identity_form(ext: ExtensionDescriptor) -> QuadForm:
    """The principal form (1, w, z); its ideal image is the unit ideal."""
    return QuadForm(ext.field, ext.field.one, ext.w, ext.z)


def inverse_form(q: QuadForm) -> QuadForm:
    return QuadForm(q.field, q.a, -q.b, q.c)


def psi_map(ext: ExtensionDescriptor, q: QuadForm) -> OrientedIdeal:
    """Form to oriented ideal: ([a, (-b + u(w + 2 Omega))/2]; sign a).

    Requires a primitive form whose discriminant lies in the orbit of the
    configured D.  A zero leading coefficient is first moved away by the
    substitution (x, y) -> (x, y + kx) with the least k >= 1 that works.
    Output basis is aligned by construction: det = a * u.
    """
    if q.field is not ext.field:
        raise DescriptorMismatch("form and extension over different base fields")
    if not is_primitive(q):
        raise NotPrimitive(f"content of {q} is not a unit")
    disc = disc_form(q)
    u = disc_orbit_unit(ext, disc)
    if u is None:
        raise DiscriminantMismatch(
            f"disc {disc} is not a totally-positive-unit-square multiple of {ext.d}"
        )
    work = q
    if not work.a:
        for k in (1, 2):
            cand = act_form(
                work,
                (
                    q.field.one,
                    q.field.zero,
                    q.field.element(k),
                    q.field.one,
                ),
            )
            if cand.a:
                work = cand
                break
        assert work.a, "no substitution fixed the zero leading coefficient"
    # beta = (-b + u*sqrt(D)) / 2 = (-b + u*w)/2 + u*Omega, integral because
    # b and u*w agree mod 2 whenever disc is congruent to a square mod 4
    num = u * ext.w - work.b
    assert num.u % 2 == 0 and num.v % 2 == 0, "half-integer ideal generator"
    half = ext.field.element(num.u // 2, num.v // 2)
    alpha = ext.embed(work.a)
    beta = ext.from_base_pair(half, u)
    eps = sign_vector(work.a)
    out = make_oriented(alpha, beta, eps)
    d = det_m(out.alpha, out.beta)
    assert sign_vector(d.num) == eps, "image basis should be aligned"
    return out


def phi_map(I: OrientedIdeal) -> QuadForm:
    """Oriented ideal to form, exactly on the configured discriminant.

    The input basis is aligned first (a no-op for already aligned bases);
    coefficients are (N(alpha), -tr(conj(alpha) beta), N(beta)) over det.
    """
    ext = I.ext
    J = align_basis(I)
    d = det_m(J.alpha, J.beta)
    cross = J.alpha.conj_ext() * J.beta
    coeffs = []
    for num in (J.alpha.rel_norm(), -cross.rel_trace(), J.beta.rel_norm()):
        val = num / d
        if not val.is_integral():
            raise NonIntegralEntry(f"coefficient {val} left the ring of integers")
        coeffs.append(val.to_element())
    q = QuadForm(ext.field, *coeffs)
    assert disc_form(q) == ext.d, "image discriminant must be exactly D"
    return q


def compose_forms(ext: ExtensionDescriptor, q1: QuadForm, q2: QuadForm) -> QuadForm:
    """Gauss composition through the ideal layer."""
    i1 = psi_map(ext, q1)
    i2 = psi_map(ext, q2)
    return phi_map(mul_ideals(i1, i2))


# ---------------------------------------------------------------------------
# reduction over the rational tier

Matrix = tuple[BaseElement, BaseElement, BaseElement, BaseElement]


@dataclass(frozen=True)
class FormReduction:
    """Reduced form plus a replayable transcript.

    word lists the elementary substitutions in application order; matrix is
    their ordered product, so act_form(original, matrix) == reduced.
    """

    reduced: QuadForm
    word: tuple[tuple[int, int, int, int], ...]
    matrix: tuple[int, int, int, int]


def _mat_mul(
    m1: tuple[int, int, int, int], m2: tuple[int, int, int, int]
) -> tuple[int, int, int, int]:
    p1, q1, r1, s1 = m1
    p2, q2, r2, s2 = m2
    return (
        p1 * p2 + q1 * r2,
        p1 * q2 + q1 * s2,
        r1 * p2 + s1 * r2,
        r1 * q2 + s1 * s2,
    )


def _as_base_matrix(field: FieldDescriptor, m: tuple[int, int, int, int]) -> Matrix:
    return tuple(field.element(x) for x in m)  # type: ignore[return-value]


def _require_q(field: FieldDescriptor, what: str) -> None:
    if field is not FIELD_Q:
        raise UnsupportedBaseField(f"{what} is implemented over Q only")


_SWAP = (0, -1, 1, 0)  # (x, y) -> (-y, x): (a, b, c) -> (c, -b, a)


def _ints(q: QuadForm) -> tuple[int, int, int]:
    return q.a.u, q.b.u, q.c.u


def _check_disc_ok(q: QuadForm) -> int:
    d = disc_form(q).u
    if d == 0 or (d > 0 and math.isqrt(d) ** 2 == d):
        raise DiscriminantNotFundamental(
            "reduction needs a nonzero, nonsquare discriminant"
        )
    return d


def reduce_form(q: QuadForm) -> FormReduction:
    """Reduce to the Gauss box (definite) or the rho window (indefinite).

    Definite convention: -a < b <= a <= c with b >= 0 when a == c, sign of
    the form preserved.  Indefinite: 0 < b < sqrt(D) < b + 2|a|, with
    2|a| < sqrt(D) + b.  Deterministic, so equal inputs give equal outputs.
    """
    _require_q(q.field, "form reduction")
    d = _check_disc_ok(q)
    word: list[tuple[int, int, int, int]] = []
    total = (1, 0, 0, 1)

    def push(m: tuple[int, int, int, int], cur: tuple[int, int, int]) -> tuple:
        nonlocal total
        word.append(m)
        total = _mat_mul(total, m)
        frm = form_from_ints(q.field, *cur)
        nxt = act_form(frm, _as_base_matrix(q.field, m))
        return _ints(nxt)

    a, b, c = _ints(q)
    if d < 0:
        neg = a < 0
        if neg:
            a, b, c = -a, -b, -c
        guard = 0
        while True:
            guard += 1
            assert guard < 10_000, "definite reduction ran away"
            if c < a:
                a, b, c = push(_SWAP, (a, b, c) if not neg else (-a, -b, -c))
                if neg:
                    a, b, c = -a, -b, -c
                continue
            if not (-a < b <= a):
                m = (b % (2 * a) + 2 * a) % (2 * a)
                b2 = m if m <= a else m - 2 * a
                k = (b2 - b) // (2 * a)
                a, b, c = push(
                    (1, k, 0, 1), (a, b, c) if not neg else (-a, -b, -c)
                )
                if neg:
                    a, b, c = -a, -b, -c
                continue
            if a == c and b < 0:
                a, b, c = push(_SWAP, (a, b, c) if not neg else (-a, -b, -c))
                if neg:
                    a, b, c = -a, -b, -c
                continue
            break
        out = (a, b, c) if not neg else (-a, -b, -c)
    else:
        s = math.isqrt(d)
        a, b, c = _ints(q)
        guard = 0
        while not _indef_is_reduced(a, b, c, s):
            guard += 1
            assert guard < 100_000, "indefinite reduction ran away"
            # rho: swap, then translate b into the window for the new lead
            a, b, c = push(_SWAP, (a, b, c))
            aa = abs(a)
            hi = aa if aa > s else s
            lo = hi - 2 * aa + 1
            b2 = lo + ((b - lo) % (2 * aa))
            k = (b2 - b) // (2 * a)
            a, b, c = push((1, k, 0, 1), (a, b, c))
        out = (a, b, c)

    reduced = form_from_ints(q.field, *out)
    assert act_form(q, _as_base_matrix(q.field, total)) == reduced
    return FormReduction(reduced=reduced, word=tuple(word), matrix=total)


def _indef_is_reduced(a: int, b: int, c: int, s: int) -> bool:
    # 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, exactly
    return 0 < b <= s and s - b < 2 * abs(a) <= s + b


def _rho_step(a: int, b: int, c: int, s: int) -> tuple[int, int, int]:
    """One cycle step on a reduced indefinite form."""
    a, b, c = c, -b, a
    aa = abs(a)
    hi = aa if aa > s else s
    lo = hi - 2 * aa + 1
    b2 = lo + ((b - lo) % (2 * aa))
    k = (b2 - b) // (2 * a)
    return a, b2, a * k * k + b * k + c


def cycle_of(q: QuadForm) -> list[tuple[int, int, int]]:
    """The full rho cycle through the reduction of q (indefinite, over Q)."""
    _require_q(q.field, "cycle enumeration")
    d = _check_disc_ok(q)
    if d < 0:
        raise DiscriminantNotFundamental("cycles exist for positive discriminants")
    s = math.isqrt(d)
    start = _ints(reduce_form(q).reduced)
    cyc = [start]
    cur = _rho_step(*start, s)
    guard = 0
    while cur != start:
        cyc.append(cur)
        cur = _rho_step(*cur, s)
        guard += 1
        assert guard < 100_000, "cycle failed to close"
    return cyc


def _canonical_cycle_rep(q: QuadForm) -> tuple[int, int, int]:
    return min(cycle_of(q))


def equivalent_forms(q1: QuadForm, q2: QuadForm) -> bool:
    """Narrow equivalence over Q, decided by complete invariants.

    Definite: the signed Gauss-reduced form.  Indefinite: the lex-least
    member of the rho cycle.  Forms of different discriminant are never
    equivalent here since totally positive unit squares are trivial over Q.
    """
    _require_q(q1.field, "form equivalence")
    if q1.field is not q2.field:
        raise DescriptorMismatch("forms over different base fields")
    d1, d2 = disc_form(q1).u, disc_form(q2).u
    if d1 != d2:
        return False
    _check_disc_ok(q1)
    if d1 < 0:
        return reduce_form(q1).reduced == reduce_form(q2).reduced
    return _canonical_cycle_rep(q1) == _canonical_cycle_rep(q2)


def enumerate_reduced(ext: ExtensionDescriptor) -> list[QuadForm]:
    """All primitive reduced class representatives at the configured D.

    Definite: the positive-definite reduced forms followed by their
    negatives (the two orientations are inequivalent over Q).  Indefinite:
    the lex-least representative of each rho cycle.  Sorted, deterministic.
    """
    _require_q(ext.field, "class enumeration")
    d = ext.d.u
    field = ext.field
    out: list[tuple[int, int, int]] = []
    if d < 0:
        pos: list[tuple[int, int, int]] = []
        for a in range(1, math.isqrt(abs(d) // 3) + 1):
            for b in range(-a + 1, a + 1):
                if (b * b - d) % (4 * a):
                    continue
                c = (b * b - d) // (4 * a)
                if c < a:
                    continue
                if a == c and b < 0:
                    continue
                if math.gcd(math.gcd(a, abs(b)), c) != 1:
                    continue
                pos.append((a, b, c))
        pos.sort()
        out = pos + [(-a, -b, -c) for (a, b, c) in pos]
    else:
        s = math.isqrt(d)
        seen: set[tuple[int, int, int]] = set()
        reps: list[tuple[int, int, int]] = []
        for b in range(1, s + 1):
            if (d - b * b) % 4:
                continue
            prod = (b * b - d) // 4  # = a * c, negative
            for aa in range((s - b) // 2 + 1, (s + b) // 2 + 1):
                for a in (aa, -aa):
                    if a == 0 or prod % a:
                        continue
                    c = prod // a
                    if math.gcd(math.gcd(abs(a), b), abs(c)) != 1:
                        continue
                    trip = (a, b, c)
                    if trip in seen:
                        continue
                    form = form_from_ints(field, *trip)
                    cyc = cycle_of(form)
                    seen.update(cyc)
                    reps.append(min(cyc))
        reps.sort()
        out = reps
    return [form_from_ints(field, a, b, c) for (a, b, c) in out]


def narrow_class_representatives(ext: ExtensionDescriptor) -> list[QuadForm]:
    """One reduced form per narrow class, rational tier.

    Definite discriminants keep the positive-definite reduced forms (the
    negative-definite family is the same group seen through the other
    orientation); indefinite ones keep one canonical form per cycle.
    """
    reduced = enumerate_reduced(ext)
    if ext.d.u < 0:
        return [q for q in reduced if q.a.u > 0]
    reps: list[QuadForm] = []
    for q in reduced:
        if not any(equivalent_forms(q, r) for r in reps):
            reps.append(q)
    return reps
