"""2x2x2 cubes of base-ring integers and their composition.

Entry order is fixed once: (a, b, c, d, e, f, g, h) stands for

    layer 1 (front):  a  b        layer 2 (back):  e  f
                      c  d                         g  h

indexed so that a = x_111, b = x_121, c = x_112, d = x_122, e = x_211,
f = x_221, g = x_212, h = x_222.  The three slicings give the attached
forms Q_i(x, y) = -det(R_i x - S_i y); a cube is projective when all three
are primitive.

The group of the story acts per axis: a 2x2 matrix (p, q, r, s) on axis i
recombines entry pairs that differ only in the i-th index, first' = p *
first + q * second, second' = r * first + s * second, plus an overall unit
scalar.  Composition goes through balanced ideal triples: split both cubes,
multiply componentwise, map back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .base_field import (
    BaseElement,
    FieldDescriptor,
    conj,
    divides,
    divmod_euclid,
    exact_div,
    is_totally_positive,
    is_unit,
    norm,
)
from .balanced_triples import BalancedTriple, make_balanced, rebalance_phi2, triple_from_pair
from .errors import (
    DescriptorMismatch,
    DiscriminantMismatch,
    NonIntegralEntry,
    NotProjective,
    NotUnimodular,
)
from .oriented_ideals import OrientedIdeal, unit_ideal
from .quadratic_extension import ExtensionDescriptor, disc_orbit_unit
from .quadratic_forms import QuadForm, disc_form, is_primitive, psi_map

Matrix = tuple[BaseElement, BaseElement, BaseElement, BaseElement]

# entry indices paired by each axis (first holds index 1, second index 2)
_AXIS_PAIRS = {
    1: ((0, 4), (1, 5), (2, 6), (3, 7)),
    2: ((0, 1), (2, 3), (4, 5), (6, 7)),
    3: ((0, 2), (1, 3), (4, 6), (5, 7)),
}


@dataclass(frozen=True)
class Cube:
    field: FieldDescriptor
    entries: tuple[BaseElement, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != 8:
            raise DescriptorMismatch("a cube has exactly eight entries")
        for e in self.entries:
            if e.field is not self.field:
                raise DescriptorMismatch("entry from a different base field")

    def __repr__(self) -> str:
        return "Cube(" + ", ".join(str(e) for e in self.entries) + ")"


def cube_from_ints(field: FieldDescriptor, *vals: int) -> Cube:
    assert len(vals) == 8
    return Cube(field, tuple(field.element(v) for v in vals))


def _det2(m11, m12, m21, m22) -> BaseElement:
    return m11 * m22 - m12 * m21


def attached_forms(cube: Cube) -> tuple[QuadForm, QuadForm, QuadForm]:
    """The three forms -det(R_i x - S_i y), computed two ways.

    The slice-determinant expansion and the closed coefficient tuples are
    evaluated independently and must agree; this guards the sign and index
    conventions against each other.
    """
    a, b, c, d, e, f, g, h = cube.entries
    slices = (
        ((a, b, c, d), (e, f, g, h)),
        ((a, e, c, g), (b, f, d, h)),
        ((a, e, b, f), (c, g, d, h)),
    )
    via_dets = []
    for (r11, r12, r21, r22), (s11, s12, s21, s22) in slices:
        qa = -_det2(r11, r12, r21, r22)
        qc = -_det2(s11, s12, s21, s22)
        qb = r11 * s22 + s11 * r22 - r12 * s21 - s12 * r21
        via_dets.append((qa, qb, qc))
    closed = (
        (b * c - a * d, a * h - b * g - c * f + d * e, f * g - e * h),
        (c * e - a * g, a * h + b * g - c * f - d * e, d * f - b * h),
        (b * e - a * f, a * h - b * g + c * f - d * e, d * g - c * h),
    )
    assert tuple(via_dets) == closed, "slice expansion disagrees with closed form"
    return tuple(QuadForm(cube.field, *t) for t in closed)  # type: ignore[return-value]


def disc_cube(cube: Cube) -> BaseElement:
    """Common discriminant of the attached forms, by the degree-4 polynomial."""
    a, b, c, d, e, f, g, h = cube.entries
    two, four = cube.field.element(2), cube.field.element(4)
    val = (
        a * a * h * h
        + b * b * g * g
        + c * c * f * f
        + d * d * e * e
        - two
        * (
            a * b * g * h
            + a * c * f * h
            + a * d * e * h
            + b * c * f * g
            + b * d * e * g
            + c * d * e * f
        )
        + four * (a * d * f * g + b * c * e * h)
    )
    for q in attached_forms(cube):
        assert disc_form(q) == val, "attached form discriminant drifted"
    return val


def is_projective(cube: Cube) -> bool:
    return all(is_primitive(q) for q in attached_forms(cube))


def apply_axis(cube: Cube, axis: int, m: Matrix) -> Cube:
    """Raw axis action, no determinant policing.

    This is the shared primitive under both the validated group action and
    the transformation-law tests, which deliberately feed it singular and
    non-unimodular matrices.
    """
    p, q, r, s = m
    entries = list(cube.entries)
    for i1, i2 in _AXIS_PAIRS[axis]:
        x, y = entries[i1], entries[i2]
        entries[i1] = p * x + q * y
        entries[i2] = r * x + s * y
    return Cube(cube.field, tuple(entries))


def scale_cube(cube: Cube, u: BaseElement) -> Cube:
    return Cube(cube.field, tuple(u * e for e in cube.entries))


def transform_cube(
    cube: Cube,
    scalar: BaseElement,
    t1: Matrix,
    t2: Matrix,
    t3: Matrix,
) -> Cube:
    """scalar * (t1 x t2 x t3) applied to the cube, unvalidated."""
    out = apply_axis(cube, 1, t1)
    out = apply_axis(out, 2, t2)
    out = apply_axis(out, 3, t3)
    return scale_cube(out, scalar)


@dataclass(frozen=True)
class GammaElement:
    """A validated symmetry: unit scalar and three matrices with totally
    positive unit determinant."""

    u: BaseElement
    t1: Matrix
    t2: Matrix
    t3: Matrix

    def __post_init__(self) -> None:
        if not is_unit(self.u):
            raise NotUnimodular(f"scalar {self.u} is not a unit")
        for t in (self.t1, self.t2, self.t3):
            d = _det2(*t)
            if not d or not (is_unit(d) and is_totally_positive(d)):
                raise NotUnimodular(f"matrix determinant {d} is not in U+")


def act_cube(cube: Cube, gamma: GammaElement) -> Cube:
    return transform_cube(cube, gamma.u, gamma.t1, gamma.t2, gamma.t3)


def identity_cube(ext: ExtensionDescriptor) -> Cube:
    """The composition identity at the configured discriminant.

    Entries are the Omega-coordinates of products of the standard basis
    (1, Omega) with itself three times: tau(1) = 0, tau(Omega) = 1,
    tau(Omega^2) = -w, tau(Omega^3) = w^2 - z.
    """
    w, z = ext.w, ext.z
    f = ext.field
    return Cube(
        f,
        (f.zero, f.one, f.one, -w, f.one, -w, -w, w * w - z),
    )


def inverse_cube(cube: Cube) -> Cube:
    """Negate the entries with odd index sum."""
    a, b, c, d, e, f, g, h = cube.entries
    return Cube(cube.field, (-a, b, c, -d, e, -f, -g, h))


# ---------------------------------------------------------------------------
# transcripts and reduction


@dataclass(frozen=True)
class CubeTranscript:
    """Replayable elementary history: axis moves in application order, then
    one unit rescale."""

    word: tuple[tuple[int, Matrix], ...]
    scalar: BaseElement

    def to_gamma(self) -> GammaElement:
        """Collapse to a single group element (moves on one axis compose in
        reverse application order; distinct axes commute)."""
        field = self.scalar.field
        ident: Matrix = (field.one, field.zero, field.zero, field.one)
        mats = {1: ident, 2: ident, 3: ident}
        for axis, m in self.word:
            p1, q1, r1, s1 = m
            p0, q0, r0, s0 = mats[axis]
            mats[axis] = (
                p1 * p0 + q1 * r0,
                p1 * q0 + q1 * s0,
                r1 * p0 + s1 * r0,
                r1 * q0 + s1 * s0,
            )
        return GammaElement(self.scalar, mats[1], mats[2], mats[3])


def apply_transcript(cube: Cube, tr: CubeTranscript) -> Cube:
    out = cube
    for axis, m in tr.word:
        out = apply_axis(out, axis, m)
    return scale_cube(out, tr.scalar)


def _swap_matrix(field: FieldDescriptor) -> Matrix:
    return (field.zero, field.one, -field.one, field.zero)


def _lower_shear(field: FieldDescriptor, q: BaseElement) -> Matrix:
    return (field.one, field.zero, -q, field.one)


def _upper_add(field: FieldDescriptor) -> Matrix:
    return (field.one, field.one, field.zero, field.one)


def reduce_cube(cube: Cube) -> tuple[Cube, CubeTranscript]:
    """Bring a projective cube to the shape (1, 0, 0, d, 0, f, g, h).

    Strategy: make the leading corner nonzero, then run Euclid along the
    three axes until the corner divides its three neighbors, pulling the
    far entries in whenever the corner is still not a unit.  Every Euclid
    round strictly shrinks |N(corner)|, so this terminates.  One unit
    rescale at the end pins the corner to exactly 1.
    """
    if not is_projective(cube):
        raise NotProjective("only projective cubes reduce to corner form")
    field = cube.field
    work = cube
    word: list[tuple[int, Matrix]] = []

    def apply(axis: int, m: Matrix) -> None:
        nonlocal work
        work = apply_axis(work, axis, m)
        word.append((axis, m))

    def ent(i: int) -> BaseElement:
        return work.entries[i]

    # corner nonzero: each swap strictly moves a nonzero entry closer to slot 0
    guard = 0
    while not ent(0):
        guard += 1
        assert guard < 8, "projective cube cannot be all zero"
        if ent(4):
            apply(1, _swap_matrix(field))
        elif ent(1):
            apply(2, _swap_matrix(field))
        elif ent(2):
            apply(3, _swap_matrix(field))
        elif ent(5) or ent(6) or ent(7):
            apply(1, _swap_matrix(field))
        elif ent(3):
            apply(2, _swap_matrix(field))
        else:
            raise AssertionError("zero cube slipped past projectivity")

    def euclid(axis: int, neighbor: int) -> None:
        # gcd the corner against one neighbor with SL2 moves on that axis
        local = 0
        while ent(neighbor):
            local += 1
            assert local < 10_000, "euclid loop ran away"
            qq, r = divmod_euclid(ent(neighbor), ent(0))
            apply(axis, _lower_shear(field, qq))
            if r:
                apply(axis, _swap_matrix(field))

    guard = 0
    while True:
        guard += 1
        assert guard < 10_000, "cube reduction ran away"
        a = ent(0)
        if not divides(a, ent(1)):
            euclid(2, 1)
            continue
        if not divides(a, ent(2)):
            euclid(3, 2)
            continue
        if not divides(a, ent(4)):
            euclid(1, 4)
            continue
        # corner divides its neighbors; clear them
        if ent(1):
            apply(2, _lower_shear(field, exact_div(ent(1), a)))
        if ent(2):
            apply(3, _lower_shear(field, exact_div(ent(2), a)))
        if ent(4):
            apply(1, _lower_shear(field, exact_div(ent(4), a)))
        if is_unit(a):
            break
        # pull a non-divisible far entry next to the corner
        if not divides(a, ent(5)) or not divides(a, ent(6)):
            apply(1, _upper_add(field))
        elif not divides(a, ent(3)):
            apply(2, _upper_add(field))
        elif not divides(a, ent(7)):
            apply(1, _upper_add(field))
        else:
            raise AssertionError(
                "corner divides every entry of a projective cube"
            )

    a = ent(0)
    if field.degree == 1:
        inv = a  # 1 and -1 are their own inverses
    else:
        inv = conj(a) if norm(a) == 1 else -conj(a)
    assert inv * a == field.one
    word_t = tuple(word)
    reduced = scale_cube(work, inv)
    assert reduced.entries[0] == field.one
    assert not reduced.entries[1] and not reduced.entries[2] and not reduced.entries[4]
    tr = CubeTranscript(word=word_t, scalar=inv)
    assert apply_transcript(cube, tr) == reduced
    return reduced, tr


def is_reduced_shape(cube: Cube) -> bool:
    e = cube.entries
    return e[0] == cube.field.one and not e[1] and not e[2] and not e[4]


# ---------------------------------------------------------------------------
# the correspondence with balanced triples


def phi_prime(T: BalancedTriple) -> Cube:
    """Cube of Omega-coordinates tau(alpha_i beta_j gamma_k).

    The triple is stored aligned and balanced, so every product lies in the
    full ring of integers and the coordinates are integral.  The resulting
    discriminant is witness_u^2 * D exactly, which is asserted.
    """
    ext = T.ext
    bases = [
        (T.i1.alpha, T.i1.beta),
        (T.i2.alpha, T.i2.beta),
        (T.i3.alpha, T.i3.beta),
    ]
    vals: list[BaseElement] = []
    for i in (0, 1):
        for k in (0, 1):
            for j in (0, 1):
                prod = bases[0][i] * bases[1][j] * bases[2][k]
                t = prod.tau()
                if not t.is_integral():
                    raise NonIntegralEntry(f"tau({prod}) = {t} is fractional")
                vals.append(t.to_element())
    out = Cube(ext.field, tuple(vals))
    if not is_projective(out):
        raise NotProjective("balanced triple mapped to an imprimitive cube")
    expected = T.witness_u * T.witness_u * ext.d
    actual = disc_cube(out)
    if actual != expected:
        raise DiscriminantMismatch(
            f"cube discriminant {actual}, expected witness^2 * D = {expected}"
        )
    return out


def _reduced_data(cube: Cube) -> tuple[BaseElement, BaseElement, BaseElement, BaseElement]:
    e = cube.entries
    return e[3], e[5], e[6], e[7]  # d, f, g, h


def psi_prime(ext: ExtensionDescriptor, cube: Cube) -> BalancedTriple:
    """Split a projective cube into a balanced triple of oriented ideals.

    For a corner-form cube the product of the three form ideals is the
    principal oriented ideal generated by (-h + sqrt(disc))/2, and dividing
    the first component by that generator balances the triple exactly; that
    route makes the round trip through phi_prime literal, not only up to
    equivalence.  A general cube takes the pair-completion route instead;
    both land in the same class.
    """
    if cube.field is not ext.field:
        raise DescriptorMismatch("cube and extension over different base fields")
    if not is_projective(cube):
        raise NotProjective("splitting needs a projective cube")
    disc = disc_cube(cube)
    u = disc_orbit_unit(ext, disc)
    if u is None:
        raise DiscriminantMismatch(
            f"cube discriminant {disc} is outside the orbit of {ext.d}"
        )
    q1, q2, q3 = attached_forms(cube)
    if is_reduced_shape(cube):
        _, _, _, h = _reduced_data(cube)
        num = u * ext.w - h
        assert num.u % 2 == 0 and num.v % 2 == 0
        omega = ext.from_base_pair(
            ext.field.element(num.u // 2, num.v // 2), u
        )
        return rebalance_phi2(
            psi_map(ext, q1), psi_map(ext, q2), psi_map(ext, q3), omega
        )
    return triple_from_pair(psi_map(ext, q1), psi_map(ext, q2))


def compose_cubes(ext: ExtensionDescriptor, lhs: Cube, rhs: Cube) -> Cube:
    """Composition through balanced triples.

    Componentwise ideal products of two balanced triples are balanced again
    (module product is literally the unit ideal, determinant product a
    totally positive unit), so no generator hunt is ever needed here.
    """
    from .oriented_ideals import mul_ideals

    ta = psi_prime(ext, lhs)
    tb = psi_prime(ext, rhs)
    prods = [
        mul_ideals(a, b) for a, b in zip(ta.components(), tb.components())
    ]
    return phi_prime(make_balanced(*prods))
