"""The acceptance suite: nine exact criteria, runnable from tests or the CLI.

Each criterion is a function returning a CriterionResult whose details are
JSON-friendly.  Randomized suites are fully seeded; exhaustive suites are
bounded small enough to finish in seconds.  Products of oriented ideals
formed inside suites 2, 5, and 6 all pass through the definition-level
oracle, so a silent regression in the optimized product path cannot slip
through on a green run.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field

from .balanced_triples import make_balanced
from .base_field import (
    FIELD_Q,
    FIELD_QSQRT2,
    BaseElement,
    BaseRational,
    FieldDescriptor,
    canonical_associate,
)
from .cubes import (
    Cube,
    GammaElement,
    act_cube,
    apply_axis,
    attached_forms,
    compose_cubes,
    cube_from_ints,
    disc_cube,
    identity_cube,
    inverse_cube,
    is_projective,
    phi_prime,
    psi_prime,
    transform_cube,
)
from .errors import AlgebraError
from .oracle import (
    RandomSpec,
    checked_mul,
    random_element,
    random_unimodular,
    reduced_definite_count,
    reduced_indefinite_cycle_count,
    scan_cube_law,
)
from .oriented_ideals import (
    equal_modules,
    ideal_norm,
    inverse_ideal,
    is_oriented_principal,
    make_oriented,
    principal_oriented,
    unit_ideal,
)
from .quadratic_extension import ExtensionDescriptor, disc_orbit_unit, make_extension
from .quadratic_forms import (
    QuadForm,
    act_form,
    compose_forms,
    disc_form,
    enumerate_reduced,
    equivalent_forms,
    identity_form,
    narrow_class_representatives,
    phi_map,
    psi_map,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: dict = dc_field(default_factory=dict)


_TIERS = (FIELD_Q, FIELD_QSQRT2)


def _corner(field: FieldDescriptor, d, f, g, h) -> Cube:
    one, zero = field.one, field.zero
    return Cube(field, (one, zero, zero, d, zero, f, g, h))


def _fundamental_corner_stream(
    rng: random.Random, field: FieldDescriptor, bound: int
):
    """Endless corner cubes with fundamental discriminant, plus their
    extension context."""
    while True:
        d, f, g, h = (random_element(rng, field, bound) for _ in range(4))
        cube = _corner(field, d, f, g, h)
        if not is_projective(cube):
            continue
        try:
            ext = make_extension(field, disc_cube(cube))
        except AlgebraError:
            continue
        yield ext, cube


def _scale_corner_preserving_shape(cube: Cube) -> Cube:
    """Multiply the discriminant by the square of the squared fundamental
    unit while keeping the corner shape: d -> e^4 d, h -> e^2 h."""
    field = cube.field
    assert field.degree == 2
    eps = field.fundamental_unit
    e2 = eps * eps
    e4 = e2 * e2
    e = cube.entries
    return Cube(
        field, (e[0], e[1], e[2], e4 * e[3], e[4], e[5], e[6], e2 * e[7])
    )


# ---------------------------------------------------------------------------
# criterion 1: the worked axis-action example, bit exact


def run_criterion_1(seed: int = 0) -> CriterionResult:
    field = FIELD_Q
    ext = make_extension(field, field.element(-4))
    one = ext.one
    om = ext.omega
    plus = (1,)
    unit = make_oriented(one, om, plus)
    first = phi_prime(make_balanced(unit, unit, unit))
    twisted = make_oriented(om, -one, plus)
    second = phi_prime(make_balanced(twisted, unit, unit))
    want_first = cube_from_ints(field, 0, 1, 1, 0, 1, 0, 0, -1)
    want_second = cube_from_ints(field, 1, 0, 0, -1, 0, -1, -1, 0)
    swap = (field.zero, field.one, -field.one, field.zero)
    acted = apply_axis(first, 2, swap)
    checks = {
        "unit_triple_cube": first == want_first,
        "twisted_triple_cube": second == want_second,
        "axis_2_action": acted == want_second,
        "identity_cube_matches": identity_cube(ext) == want_first,
    }
    return CriterionResult(1, "worked axis-action example", all(checks.values()), checks)


# ---------------------------------------------------------------------------
# criterion 2: cube law at desk scale


def _omega_for_corner(ext: ExtensionDescriptor, h: BaseElement):
    num = ext.w - h
    assert num.u % 2 == 0 and num.v % 2 == 0
    return ext.from_base_pair(
        ext.field.element(num.u // 2, num.v // 2), ext.field.one
    )


def run_criterion_2(seed: int = 0) -> CriterionResult:
    details: dict = {}
    failures: list = []
    checked = 0
    principal_ok = 0
    module_ok = 0
    field = FIELD_Q
    span = range(-3, 4)
    for du in span:
        for fu in span:
            for gu in span:
                for hu in span:
                    cube = _corner(
                        field,
                        field.element(du),
                        field.element(fu),
                        field.element(gu),
                        field.element(hu),
                    )
                    if not is_projective(cube):
                        continue
                    try:
                        ext = make_extension(field, disc_cube(cube))
                    except AlgebraError:
                        continue
                    checked += 1
                    idl = [psi_map(ext, q) for q in attached_forms(cube)]
                    prod = checked_mul(checked_mul(idl[0], idl[1]), idl[2])
                    target = principal_oriented(
                        _omega_for_corner(ext, cube.entries[7])
                    )
                    if equal_modules(prod, target) and prod.eps == target.eps:
                        module_ok += 1
                    else:
                        failures.append({"cube": [str(e) for e in cube.entries]})
                    flag, _ = is_oriented_principal(prod)
                    if flag:
                        principal_ok += 1
                    else:
                        failures.append(
                            {"cube": [str(e) for e in cube.entries], "kind": "principal"}
                        )
    details["rational_checked"] = checked
    details["rational_module_ok"] = module_ok
    details["rational_principal_ok"] = principal_ok
    report = scan_cube_law(
        RandomSpec(field_name="Q-sqrt2", count=200, bound=2, seed=seed)
    )
    details["sqrt2_checked"] = report.checked
    details["sqrt2_passed"] = report.passed
    if report.failures:
        failures.extend(report.failures)
    passed = (
        checked > 0
        and module_ok == checked
        and principal_ok == checked
        and report.ok
        and not failures
    )
    if failures:
        details["failures"] = failures[:5]
    return CriterionResult(2, "cube law at desk scale", passed, details)


# ---------------------------------------------------------------------------
# criterion 3: round trip through triples on corner cubes


def run_criterion_3(seed: int = 0) -> CriterionResult:
    details: dict = {}
    failures: list = []
    for field, bound, count in ((FIELD_Q, 4, 500), (FIELD_QSQRT2, 2, 500)):
        rng = random.Random(f"{seed}:{field.name}:3")
        stream = _fundamental_corner_stream(rng, field, bound)
        done = 0
        scaled_done = 0
        while done < count:
            ext, cube = next(stream)
            if field.degree == 2 and done % 3 == 2:
                cube = _scale_corner_preserving_shape(cube)
                scaled_done += 1
            done += 1
            u = disc_orbit_unit(ext, disc_cube(cube))
            assert u is not None
            got = phi_prime(psi_prime(ext, cube))
            e = cube.entries
            zero = field.zero
            expected = (
                -u, zero, zero, -u * e[3],
                zero, -u * e[5], -u * e[6], -u * e[7],
            )
            entry_ok = [got.entries[k] == expected[k] for k in range(8)]
            if not all(entry_ok):
                failures.append(
                    {
                        "tier": field.name,
                        "cube": [str(x) for x in e],
                        "bad_positions": [k for k, ok in enumerate(entry_ok) if not ok],
                    }
                )
        details[f"{field.name}_count"] = done
        if field.degree == 2:
            details[f"{field.name}_orbit_scaled"] = scaled_done
    if failures:
        details["failures"] = failures[:5]
    return CriterionResult(
        3, "triple round trip on corner cubes", not failures, details
    )


# ---------------------------------------------------------------------------
# criterion 4: discriminant transformation law


def run_criterion_4(seed: int = 0) -> CriterionResult:
    details: dict = {}
    failures = 0
    for field in _TIERS:
        rng = random.Random(f"{seed}:{field.name}:4")
        count = 1000
        for _ in range(count):
            cube = Cube(
                field, tuple(random_element(rng, field, 3) for _ in range(8))
            )
            t = random_element(rng, field, 2)
            mats = [
                tuple(random_element(rng, field, 2) for _ in range(4))
                for _ in range(3)
            ]
            out = transform_cube(cube, t, *mats)
            dets = [m[0] * m[3] - m[1] * m[2] for m in mats]
            factor = t * t * t * t
            for dd in dets:
                factor = factor * dd * dd
            lhs = disc_cube(out)
            rhs = factor * disc_cube(cube)
            if lhs != rhs:
                failures += 1
            # the three attached forms must share one discriminant
            discs = {str(disc_form(q)) for q in attached_forms(out)}
            if len(discs) != 1:
                failures += 1
        details[f"{field.name}_count"] = count
    details["failure_count"] = failures
    return CriterionResult(
        4, "discriminant transformation law", failures == 0, details
    )


# ---------------------------------------------------------------------------
# criterion 5: form bijection and class tables (rational tier)


_CLASS_ORDERS = {-4: 1, -20: 2, -23: 3, 40: 2}


def run_criterion_5(seed: int = 0) -> CriterionResult:
    field = FIELD_Q
    details: dict = {}
    failures: list = []
    rng = random.Random(f"{seed}:5")
    for d_int, want_order in _CLASS_ORDERS.items():
        ext = make_extension(field, field.element(d_int))
        reduced = enumerate_reduced(ext)
        reps = narrow_class_representatives(ext)
        if len(reps) != want_order:
            failures.append({"disc": d_int, "reps": len(reps), "want": want_order})
        # independent enumeration oracle
        if d_int < 0:
            oracle_count = reduced_definite_count(d_int)
        else:
            oracle_count = reduced_indefinite_cycle_count(d_int)
        if oracle_count != want_order:
            failures.append({"disc": d_int, "oracle": oracle_count, "want": want_order})
        # random round trips: twist any reduced form by a unimodular word
        for _ in range(75):
            q = act_form(
                rng.choice(reduced), random_unimodular(rng, field, steps=5)
            )
            image = phi_map(psi_map(ext, q))
            if image.coefficients() != q.coefficients():
                failures.append({"disc": d_int, "form": str(q), "kind": "exact"})
            if not equivalent_forms(image, q):
                failures.append({"disc": d_int, "form": str(q), "kind": "class"})
        # composition table: closed, correct order, identity neutral
        table = []
        ident_idx = None
        for i, qi in enumerate(reps):
            if equivalent_forms(qi, identity_form(ext)):
                ident_idx = i
            row = []
            for qj in reps:
                checked_mul(psi_map(ext, qi), psi_map(ext, qj))
                prod = compose_forms(ext, qi, qj)
                hits = [
                    k for k, qk in enumerate(reps) if equivalent_forms(prod, qk)
                ]
                if len(hits) != 1:
                    failures.append({"disc": d_int, "pair": (str(qi), str(qj))})
                    row.append(None)
                else:
                    row.append(hits[0])
            table.append(row)
        if ident_idx is None:
            failures.append({"disc": d_int, "kind": "no identity class"})
        else:
            for i in range(len(reps)):
                if table[ident_idx][i] != i or table[i][ident_idx] != i:
                    failures.append({"disc": d_int, "kind": "identity not neutral"})
        for row in table:
            if sorted(k for k in row if k is not None) != list(range(len(reps))):
                failures.append({"disc": d_int, "kind": "row not a permutation"})
        details[f"order_{d_int}"] = len(reps)
    if failures:
        details["failures"] = failures[:5]
    return CriterionResult(
        5, "form bijection and class tables", not failures, details
    )


# ---------------------------------------------------------------------------
# criterion 6: ideal inverse identity and norm multiplicativity


def _canonical_rational(x: BaseRational) -> BaseRational:
    return BaseRational(canonical_associate(x.num), x.den)


def _styled_ideal(rng: random.Random, ext, base):
    """Reshape an attached-form ideal: sometimes a principal multiple,
    sometimes an inverse (fractional), sometimes as is."""
    style = rng.randrange(3)
    if style == 1:
        field = ext.field
        gamma = ext.zero
        while not gamma or not gamma.rel_norm():
            gamma = ext.from_base_pair(
                random_element(rng, field, 2), random_element(rng, field, 2)
            )
        return checked_mul(base, principal_oriented(gamma))
    if style == 2:
        return inverse_ideal(base)
    return base


def _random_ideal_pairs(rng: random.Random, field: FieldDescriptor, bound: int):
    """Pairs of valid oriented ideals over one shared extension."""
    corner = _fundamental_corner_stream(rng, field, bound)
    while True:
        ext, cube = next(corner)
        forms = attached_forms(cube)
        I = _styled_ideal(rng, ext, psi_map(ext, forms[rng.randrange(3)]))
        J = _styled_ideal(rng, ext, psi_map(ext, forms[rng.randrange(3)]))
        yield ext, I, J


def run_criterion_6(seed: int = 0) -> CriterionResult:
    details: dict = {}
    failures: list = []
    for field in _TIERS:
        rng = random.Random(f"{seed}:{field.name}:6")
        pairs = _random_ideal_pairs(rng, field, 2)
        count = 300
        for _ in range(count):
            ext, I, J = next(pairs)
            unit = unit_ideal(ext)
            prod = checked_mul(I, inverse_ideal(I))
            if not (
                prod.alpha == unit.alpha
                and prod.beta == unit.beta
                and prod.eps == unit.eps
            ):
                failures.append({"tier": field.name, "kind": "inverse identity"})
            lhs = _canonical_rational(ideal_norm(checked_mul(I, J)))
            rhs = _canonical_rational(ideal_norm(I) * ideal_norm(J))
            if lhs != rhs:
                failures.append({"tier": field.name, "kind": "norm product"})
        details[f"{field.name}_count"] = count
    if failures:
        details["failures"] = failures[:5]
    return CriterionResult(
        6, "ideal inverse identity and norms", not failures, details
    )


# ---------------------------------------------------------------------------
# criterion 7: inverse cube composition lands in the identity class


def _corner_cubes_with_disc(field: FieldDescriptor, d_int: int) -> list[Cube]:
    out = []
    for du in range(-6, 7):
        for fu in range(-6, 7):
            for gu in range(-6, 7):
                h2 = d_int - 4 * du * fu * gu
                if h2 < 0:
                    continue
                hu = math.isqrt(h2)
                if hu * hu != h2:
                    continue
                for sign in (hu, -hu) if hu else (0,):
                    cube = _corner(
                        field,
                        field.element(du),
                        field.element(fu),
                        field.element(gu),
                        field.element(sign),
                    )
                    if is_projective(cube):
                        out.append(cube)
    return out


def _random_gamma(rng: random.Random, field: FieldDescriptor) -> GammaElement:
    scalar = field.element(rng.choice((1, -1)))
    return GammaElement(
        scalar,
        random_unimodular(rng, field, steps=3),
        random_unimodular(rng, field, steps=3),
        random_unimodular(rng, field, steps=3),
    )


def run_criterion_7(seed: int = 0) -> CriterionResult:
    field = FIELD_Q
    details: dict = {}
    failures: list = []
    rng = random.Random(f"{seed}:7")
    pools = {
        d_int: _corner_cubes_with_disc(field, d_int) for d_int in (-4, -20, 40)
    }
    details["pool_sizes"] = {str(k): len(v) for k, v in pools.items()}
    count = 0
    for k in range(100):
        d_int = (-4, -20, 40)[k % 3]
        ext = make_extension(field, field.element(d_int))
        base = rng.choice(pools[d_int])
        cube = act_cube(base, _random_gamma(rng, field))
        assert disc_cube(cube) == ext.d
        count += 1
        ident = identity_form(ext)
        prod = compose_cubes(ext, cube, inverse_cube(cube))
        for q in attached_forms(prod):
            if not equivalent_forms(q, ident):
                failures.append({"disc": d_int, "kind": "inverse composition"})
                break
        neutral = compose_cubes(ext, cube, identity_cube(ext))
        for qn, qa in zip(attached_forms(neutral), attached_forms(cube)):
            if not equivalent_forms(qn, qa):
                failures.append({"disc": d_int, "kind": "identity not neutral"})
                break
    details["count"] = count
    if failures:
        details["failures"] = failures[:5]
    return CriterionResult(
        7, "inverse cube composition", not failures, details
    )


# ---------------------------------------------------------------------------
# criterion 8: basis-change naturality and form transformation laws


def _axis_substitution(m):
    p, q, r, s = m
    return (p, -r, -q, s)


def run_criterion_8(seed: int = 0) -> CriterionResult:
    details: dict = {}
    failures: list = []
    for field in _TIERS:
        rng = random.Random(f"{seed}:{field.name}:8")
        stream = _fundamental_corner_stream(rng, field, 2)
        # naturality: a basis change on one component is an axis action
        nat_count = 500
        for _ in range(nat_count):
            ext, corner_cube = next(stream)
            T = psi_prime(ext, corner_cube)
            base = phi_prime(T)
            axis = rng.randrange(1, 4)
            m = random_unimodular(rng, field, steps=3)
            if field.degree == 2 and rng.randrange(4) == 0:
                rho = field.fundamental_unit * field.fundamental_unit
                m = (m[0], m[1], rho * m[2], rho * m[3])
            comps = list(T.components())
            old = comps[axis - 1]
            p, q, r, s = (ext.embed(x) for x in m)
            comps[axis - 1] = make_oriented(
                p * old.alpha + q * old.beta,
                r * old.alpha + s * old.beta,
                old.eps,
            )
            T2 = make_balanced(*comps)
            lhs = phi_prime(T2)
            rhs = apply_axis(base, axis, m)
            if lhs != rhs:
                failures.append(
                    {
                        "tier": field.name,
                        "kind": "naturality",
                        "axis": axis,
                        "matrix": [str(x) for x in m],
                    }
                )
        # form transformation: arbitrary matrices, any cube
        law_count = 500
        for _ in range(law_count):
            cube = Cube(
                field, tuple(random_element(rng, field, 3) for _ in range(8))
            )
            axis = rng.randrange(1, 4)
            m = tuple(random_element(rng, field, 2) for _ in range(4))
            det = m[0] * m[3] - m[1] * m[2]
            before = attached_forms(cube)
            after = attached_forms(apply_axis(cube, axis, m))
            for k in range(3):
                if k + 1 == axis:
                    want = act_form(before[k], _axis_substitution(m))
                else:
                    want = QuadForm(
                        field,
                        det * before[k].a,
                        det * before[k].b,
                        det * before[k].c,
                    )
                if after[k].coefficients() != want.coefficients():
                    failures.append(
                        {
                            "tier": field.name,
                            "kind": "form law",
                            "axis": axis,
                            "slot": k + 1,
                        }
                    )
        details[f"{field.name}_naturality"] = nat_count
        details[f"{field.name}_form_law"] = law_count
    if failures:
        details["failures"] = failures[:5]
    return CriterionResult(
        8, "basis-change naturality and form laws", not failures, details
    )


# ---------------------------------------------------------------------------
# criterion 9: oracle independence


def run_criterion_9(seed: int = 0) -> CriterionResult:
    """Every product formed in suites 2, 5, and 6 runs through checked_mul,
    which certifies the optimized product against the definition-level
    triangulation and raises with a reproducer on any disagreement.  This
    criterion re-exercises a representative slice of those products and
    counts certificates."""
    details: dict = {}
    products = 0
    failures: list = []
    field = FIELD_Q
    # slice of suite 2: small corner cubes
    rng = random.Random(f"{seed}:9")
    stream = _fundamental_corner_stream(rng, field, 3)
    for _ in range(40):
        ext, cube = next(stream)
        idl = [psi_map(ext, q) for q in attached_forms(cube)]
        try:
            checked_mul(checked_mul(idl[0], idl[1]), idl[2])
            products += 2
        except AssertionError as exc:
            failures.append(str(exc))
    # slice of suite 5: the class tables
    for d_int in _CLASS_ORDERS:
        ext = make_extension(field, field.element(d_int))
        reps = narrow_class_representatives(ext)
        for qi in reps:
            for qj in reps:
                try:
                    checked_mul(psi_map(ext, qi), psi_map(ext, qj))
                    products += 1
                except AssertionError as exc:
                    failures.append(str(exc))
    # slice of suite 6: inverse pairs on both tiers
    for field2 in _TIERS:
        rng2 = random.Random(f"{seed}:{field2.name}:9")
        pairs = _random_ideal_pairs(rng2, field2, 2)
        for _ in range(30):
            ext, I, _unused = next(pairs)
            try:
                checked_mul(I, inverse_ideal(I))
                products += 1
            except AssertionError as exc:
                failures.append(str(exc))
    details["products_certified"] = products
    if failures:
        details["failures"] = failures[:3]
    return CriterionResult(
        9, "oracle independence", products > 0 and not failures, details
    )


_ALL = (
    run_criterion_1,
    run_criterion_2,
    run_criterion_3,
    run_criterion_4,
    run_criterion_5,
    run_criterion_6,
    run_criterion_7,
    run_criterion_8,
    run_criterion_9,
)


def run_all(seed: int = 0) -> list[CriterionResult]:
    """Run every criterion; an escaped exception fails its criterion with
    the message preserved rather than aborting the whole suite."""
    out = []
    for number, fn in enumerate(_ALL, start=1):
        try:
            out.append(fn(seed))
        except (AssertionError, AlgebraError) as exc:
            out.append(
                CriterionResult(
                    number,
                    fn.__name__,
                    False,
                    {"error": f"{type(exc).__name__}: {exc}"},
                )
            )
    return out
