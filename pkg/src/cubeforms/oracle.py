"""Independent cross-checks computed from definitions only.

Everything here deliberately avoids the optimized paths it is checking:
module products are triangulated by plain repeated subtraction over the raw
generator list (no certified normal form), inclusion both ways is certified
by Cramer solves and a unit-minor argument, and class counts come from a
coefficient scan organized differently from the main enumerator.  Slow is
fine; disagreeing is not.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field as dc_field

from .base_field import (
    FIELDS_BY_NAME,
    BaseElement,
    BaseRational,
    FieldDescriptor,
    canonical_associate,
    divmod_euclid,
    gcd_many,
    is_unit,
    norm,
)
from .errors import AlgebraError
from .oriented_ideals import OrientedIdeal, mul_ideals
from .quadratic_extension import ExtElement, ExtensionDescriptor, make_extension


@dataclass(frozen=True)
class RandomSpec:
    """Seeded sampling plan for a scan."""

    field_name: str = "Q"
    count: int = 100
    bound: int = 3
    seed: int = 0

    @property
    def field(self) -> FieldDescriptor:
        return FIELDS_BY_NAME[self.field_name]

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def random_element(
    rng: random.Random, field: FieldDescriptor, bound: int
) -> BaseElement:
    u = rng.randint(-bound, bound)
    v = rng.randint(-bound, bound) if field.degree == 2 else 0
    return field.element(u, v)


def random_unit(rng: random.Random, field: FieldDescriptor) -> BaseElement:
    sign = rng.choice((1, -1))
    out = field.element(sign)
    if field.degree == 2:
        eps = field.fundamental_unit
        k = rng.randint(-2, 2)
        if k < 0:
            # eps has norm -1, so its inverse is minus its conjugate
            inv = -field.element(eps.u, -eps.v)
            for _ in range(-k):
                out = out * inv
        else:
            for _ in range(k):
                out = out * eps
        assert is_unit(out)
    return out


def random_unimodular(
    rng: random.Random, field: FieldDescriptor, steps: int = 4
) -> tuple[BaseElement, BaseElement, BaseElement, BaseElement]:
    """A short random word in shears and swaps; determinant exactly one."""
    one, zero = field.one, field.zero
    m = (one, zero, zero, one)
    for _ in range(steps):
        kind = rng.randrange(3)
        if kind == 0:
            q = random_element(rng, field, 2)
            e = (one, q, zero, one)
        elif kind == 1:
            q = random_element(rng, field, 2)
            e = (one, zero, q, one)
        else:
            e = (zero, one, -one, zero)
        m = (
            e[0] * m[0] + e[1] * m[2],
            e[0] * m[1] + e[1] * m[3],
            e[2] * m[0] + e[3] * m[2],
            e[2] * m[1] + e[3] * m[3],
        )
    assert m[0] * m[3] - m[1] * m[2] == one
    return m


# ---------------------------------------------------------------------------
# module product from the definition


def _scaled_integer_rows(
    gens: list[ExtElement],
) -> tuple[int, list[tuple[BaseElement, BaseElement]]]:
    den = 1
    for g in gens:
        den = den * g.x.den // math.gcd(den, g.x.den)
        den = den * g.y.den // math.gcd(den, g.y.den)
    rows = []
    for g in gens:
        sx = g.x * BaseRational(g.x.num.field.element(den))
        sy = g.y * BaseRational(g.y.num.field.element(den))
        assert sx.den == 1 and sy.den == 1
        rows.append((sx.num, sy.num))
    return den, rows


def naive_module_product(
    ext: ExtensionDescriptor, gens: list[ExtElement]
) -> tuple[ExtElement, ExtElement]:
    """Triangulate a generator list into a two-element basis.

    Repeated subtraction only: find the nonzero pivot of least absolute
    norm in the working coordinate, shrink every other row by a Euclidean
    step, repeat until one row survives.  Each operation replaces a row by
    itself minus a ring multiple of another, so the generated module never
    changes.
    """
    field = ext.field
    den, rows = _scaled_integer_rows(gens)

    def sweep(rows, coord):
        live = [r for r in rows if r[coord]]
        rest = [r for r in rows if not r[coord]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(norm(r[coord])))
            pivot = live[0]
            nxt = []
            for r in live[1:]:
                q, rem = divmod_euclid(r[coord], pivot[coord])
                newr = (r[0] - q * pivot[0], r[1] - q * pivot[1])
                assert newr[coord] == rem
                if newr[coord]:
                    nxt.append(newr)
                elif newr[0] or newr[1]:
                    rest.append(newr)
            live = [pivot] + nxt
        return (live[0] if live else None), rest

    # clear the Omega coordinate first, then the residual constants
    omega_row, consts = sweep(rows, 1)
    assert omega_row is not None, "product module has rank below two"
    const_row, leftovers = sweep(consts, 0)
    assert const_row is not None, "product module has rank below two"
    assert not leftovers
    a = const_row[0]
    b, c = omega_row
    # cosmetic normalization, all module-preserving
    a = canonical_associate(a)
    c_canon, uu = _canonical_with_unit(c)
    b, c = uu * b, c_canon
    q, _ = divmod_euclid(b, a)
    b = b - q * a
    return (
        ExtElement(ext, BaseRational(a, den), BaseRational(field.zero, 1)),
        ExtElement(ext, BaseRational(b, den), BaseRational(c, den)),
    )


def _canonical_with_unit(x: BaseElement) -> tuple[BaseElement, BaseElement]:
    cx = canonical_associate(x)
    # unit u with u * x == cx, found by exact division
    from .base_field import exact_div

    u = exact_div(cx, x)
    assert is_unit(u) and u * x == cx
    return cx, u


def _cramer_solve(
    b1: ExtElement, b2: ExtElement, target: ExtElement
) -> tuple[BaseElement, BaseElement] | None:
    """Integral coordinates of target over (b1, b2), or None."""
    det = b1.x * b2.y - b1.y * b2.x
    if not det:
        return None
    s = (target.x * b2.y - target.y * b2.x) / det
    t = (b1.x * target.y - b1.y * target.x) / det
    if not (s.is_integral() and t.is_integral()):
        return None
    return s.to_element(), t.to_element()


def _two_by_two_minors(
    coeffs: list[tuple[BaseElement, BaseElement]]
) -> list[BaseElement]:
    out = []
    for i in range(len(coeffs)):
        for j in range(i + 1, len(coeffs)):
            out.append(coeffs[i][0] * coeffs[j][1] - coeffs[i][1] * coeffs[j][0])
    return out


def check_product_against_naive(
    I: OrientedIdeal, J: OrientedIdeal, claimed: OrientedIdeal
) -> dict:
    """Certify mul_ideals output from the definition of the product module.

    The four pairwise generator products are triangulated naively; then
    (1) the claimed basis must solve integrally over the naive basis and
    vice versa, and (2) the 4x2 matrix expressing the generators over the
    naive basis must have unit 2x2-minor content, which pins the naive
    basis inside the generator module.  Orientation must multiply
    componentwise.
    """
    ext = I.ext
    gens = [
        I.alpha * J.alpha,
        I.alpha * J.beta,
        I.beta * J.alpha,
        I.beta * J.beta,
    ]
    n1, n2 = naive_module_product(ext, gens)
    report: dict = {"ok": True, "reasons": []}

    def fail(reason: str) -> None:
        report["ok"] = False
        report["reasons"].append(reason)

    coeffs = []
    for g in gens:
        sol = _cramer_solve(n1, n2, g)
        if sol is None:
            fail(f"generator {g} not integral over naive basis")
            continue
        coeffs.append(sol)
    if len(coeffs) == len(gens):
        content = gcd_many(
            [m for m in _two_by_two_minors(coeffs) if m]
        )
        if not is_unit(content):
            fail(f"naive basis strictly larger than product: minor content {content}")
    for name, elt in (("alpha", claimed.alpha), ("beta", claimed.beta)):
        if _cramer_solve(n1, n2, elt) is None:
            fail(f"claimed {name} outside naive product module")
    for name, elt in (("n1", n1), ("n2", n2)):
        sol = _cramer_solve(claimed.alpha, claimed.beta, elt)
        if sol is None:
            fail(f"naive basis vector {name} outside claimed module")
    want_eps = tuple(a * b for a, b in zip(I.eps, J.eps))
    if claimed.eps != want_eps:
        fail(f"orientation {claimed.eps}, expected {want_eps}")
    return report


def checked_mul(I: OrientedIdeal, J: OrientedIdeal) -> OrientedIdeal:
    """mul_ideals plus the oracle certificate; raises with a reproducer."""
    out = mul_ideals(I, J)
    report = check_product_against_naive(I, J, out)
    if not report["ok"]:
        from .serialization import encode_ideal

        repro = json.dumps(
            {
                "lhs": encode_ideal(I),
                "rhs": encode_ideal(J),
                "claimed": encode_ideal(out),
                "reasons": report["reasons"],
            },
            sort_keys=True,
        )
        raise AssertionError(f"product oracle disagreement: {repro}")
    return out


# ---------------------------------------------------------------------------
# independent class counts (rational tier)


def reduced_definite_count(d: int) -> int:
    """Positive definite reduced forms of discriminant d < 0, scanned
    middle-coefficient first."""
    assert d < 0 and d % 4 in (0, 1)
    count = 0
    bmax = math.isqrt(-d // 3)
    for b in range(d % 2, bmax + 1, 2):
        m4 = b * b - d
        assert m4 % 4 == 0
        m = m4 // 4
        for a in range(max(b, 1), math.isqrt(m) + 1):
            if m % a:
                continue
            c = m // a
            if c < a:
                continue
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            count += 1
            # (a, -b, c) is reduced too unless on the boundary
            if 0 < b < a < c:
                count += 1
    return count


def reduced_indefinite_cycle_count(d: int) -> int:
    """Cycle count for indefinite forms of nonsquare discriminant d > 0.

    Collects every reduced form by direct inequality scan, then walks
    neighbors with a locally written step until the orbit closes.
    """
    assert d > 0
    s = math.isqrt(d)
    assert s * s != d
    forms = set()
    for b in range(1, s + 1):
        if (d - b * b) % 4:
            continue
        prod = (d - b * b) // 4  # = -a*c > 0 for reduced forms
        lo = (s - b) // 2 + 1
        hi = (s + b) // 2
        for aa in range(max(lo, 1), hi + 1):
            if prod % aa:
                continue
            cc = prod // aa
            for a in (aa, -aa):
                c = -prod // a
                if math.gcd(math.gcd(abs(a), b), abs(c)) != 1:
                    continue
                forms.add((a, b, c))
    def step(f):
        a, b, c = f
        # neighbor through the right edge of the cycle
        ac = abs(c)
        # choose b' congruent to -b mod 2|c| inside the reduced window
        hi = ac if ac > s else s
        lo = hi - 2 * ac + 1
        b2 = lo + ((-b - lo) % (2 * ac))
        a2 = c
        c2 = (b2 * b2 - d) // (4 * a2)
        return (a2, b2, c2)

    cycles = 0
    seen: set[tuple[int, int, int]] = set()
    for f in sorted(forms):
        if f in seen:
            continue
        cycles += 1
        g = f
        while g not in seen:
            seen.add(g)
            g = step(g)
            assert g in forms, f"rho step left the reduced set: {g}"
    return cycles


# ---------------------------------------------------------------------------
# cube-law scan


@dataclass
class ScanReport:
    attempted: int = 0
    checked: int = 0
    passed: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and self.passed == self.checked and not self.failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "attempted": self.attempted,
                "checked": self.checked,
                "passed": self.passed,
                "failures": self.failures,
            },
            sort_keys=True,
        )


def corner_cube(field: FieldDescriptor, d, f, g, h):
    from .cubes import Cube

    one, zero = field.one, field.zero
    return Cube(field, (one, zero, zero, d, zero, f, g, h))


def scan_cube_law(spec: RandomSpec) -> ScanReport:
    """Sample corner cubes with fundamental discriminant and verify that the
    product of the three attached-form ideals is the principal oriented
    ideal on (-h + sqrt(disc))/2, by explicit module equality."""
    from .cubes import attached_forms, disc_cube, is_projective
    from .oriented_ideals import equal_modules, principal_oriented
    from .quadratic_forms import psi_map

    field = spec.field
    rng = spec.rng()
    report = ScanReport()
    while report.checked < spec.count and report.attempted < 400 * spec.count:
        report.attempted += 1
        d, f, g, h = (random_element(rng, field, spec.bound) for _ in range(4))
        cube = corner_cube(field, d, f, g, h)
        if not is_projective(cube):
            continue
        disc = disc_cube(cube)
        try:
            ext = make_extension(field, disc)
        except AlgebraError:
            continue
        report.checked += 1
        try:
            idl = [psi_map(ext, q) for q in attached_forms(cube)]
            prod = checked_mul(checked_mul(idl[0], idl[1]), idl[2])
            num = ext.w - h
            assert num.u % 2 == 0 and num.v % 2 == 0
            omega = ext.from_base_pair(
                field.element(num.u // 2, num.v // 2), field.one
            )
            target = principal_oriented(omega)
            if equal_modules(prod, target) and prod.eps == target.eps:
                report.passed += 1
            else:
                report.failures.append(
                    {"cube": [str(e) for e in cube.entries], "disc": str(disc)}
                )
        except AlgebraError as exc:
            report.failures.append(
                {
                    "cube": [str(e) for e in cube.entries],
                    "disc": str(disc),
                    "error": f"{type(exc).__name__}: {exc}",
                }
            )
    return report
