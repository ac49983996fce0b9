"""Command-line front end.

Every operation the library exposes is reachable as a subcommand with
deterministic JSON output (sorted keys, decimal-string leaves), so shell
pipelines can feed one command's output to the next.  Payload arguments
are JSON; a lone "-" (or an omitted payload) reads standard input.

Exit codes: 0 success, 1 mathematical error (typed payload on stdout),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import serialization as ser
from .balanced_triples import make_balanced
from .base_field import BaseElement, FieldDescriptor
from .cubes import (
    Cube,
    GammaElement,
    act_cube,
    attached_forms,
    compose_cubes,
    disc_cube,
    identity_cube,
    inverse_cube,
    phi_prime,
    psi_prime,
    reduce_cube,
)
from .errors import AlgebraError, DescriptorMismatch
from .oriented_ideals import inverse_ideal, is_oriented_principal, mul_ideals
from .quadratic_extension import ExtensionDescriptor, make_extension
from .quadratic_forms import (
    QuadForm,
    compose_forms,
    equivalent_forms,
    narrow_class_representatives,
    phi_map,
    psi_map,
)

_SUBCOMMANDS = (
    "forms-of",
    "disc",
    "reduce-cube",
    "act",
    "identity-cube",
    "invert-cube",
    "compose-cubes",
    "compose-forms",
    "psi",
    "phi",
    "psi-prime",
    "phi-prime",
    "mul-ideals",
    "invert-ideal",
    "is-principal",
    "classgroup",
    "make-balanced",
    "verify",
)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        choices=("Q", "Q-sqrt2"),
        default="Q",
        help="base field (default Q)",
    )
    common.add_argument(
        "--disc",
        default=None,
        help="fundamental discriminant: decimal, or JSON {\"u\":..,\"v\":..}",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for verify")
    common.add_argument(
        "--format",
        choices=("json", "pretty"),
        default="json",
        dest="fmt",
        help="output format (default json)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="cubeforms",
        description="exact composition of binary quadratic forms and 2x2x2 cubes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, n_payloads: int, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        if n_payloads:
            nargs = "*" if n_payloads > 1 else "?"
            p.add_argument(
                "payload",
                nargs=nargs,
                default=None,
                help=f"{n_payloads} JSON argument(s); '-' reads stdin",
            )
        return p

    add("forms-of", 1, "three attached forms of a cube")
    add("disc", 1, "discriminant of a cube")
    add("reduce-cube", 1, "corner form of a projective cube, with transcript")
    actp = add("act", 1, "apply a validated symmetry to a cube")
    actp.add_argument("--scalar", default="1", help="unit scalar, element JSON")
    actp.add_argument("--t1", default=None, help="axis-1 matrix, JSON list of 4")
    actp.add_argument("--t2", default=None, help="axis-2 matrix, JSON list of 4")
    actp.add_argument("--t3", default=None, help="axis-3 matrix, JSON list of 4")
    add("identity-cube", 0, "the neutral cube at the configured discriminant")
    add("invert-cube", 1, "entrywise sign flip giving the inverse class")
    add("compose-cubes", 2, "compose two cubes through balanced triples")
    add("compose-forms", 2, "Gauss composition of two forms")
    add("psi", 1, "form to oriented ideal")
    add("phi", 1, "oriented ideal to form")
    add("psi-prime", 1, "cube to balanced ideal triple")
    add("phi-prime", 1, "balanced ideal triple to cube")
    add("mul-ideals", 2, "product of two oriented ideals")
    add("invert-ideal", 1, "inverse of an oriented ideal")
    add("is-principal", 1, "oriented principality test (rational tier)")
    add("classgroup", 0, "reduced representatives and composition table")
    add("make-balanced", 3, "validate three oriented ideals as a balanced triple")
    add("verify", 0, "run the acceptance suite")
    return parser


def _read_payloads(args: argparse.Namespace, want: int) -> list[Any]:
    raw = getattr(args, "payload", None)
    if want == 0:
        return []
    items: list[str]
    if raw is None or raw == []:
        items = [sys.stdin.read()]
    elif isinstance(raw, str):
        items = [sys.stdin.read() if raw == "-" else raw]
    else:
        items = [sys.stdin.read() if r == "-" else r for r in raw]
    if len(items) == 1 and want > 1:
        # allow a single JSON array holding all payloads
        doc = json.loads(items[0])
        if isinstance(doc, list) and len(doc) == want:
            return doc
        raise DescriptorMismatch(
            f"expected {want} JSON payloads, got one non-array document"
        )
    if len(items) != want:
        raise DescriptorMismatch(f"expected {want} JSON payloads, got {len(items)}")
    return [json.loads(s) for s in items]


def _parse_disc(field: FieldDescriptor, raw: str | None) -> BaseElement:
    if raw is None:
        raise DescriptorMismatch("this command needs --disc")
    text = raw.strip()
    try:
        return field.element(int(text, 10))
    except ValueError:
        pass
    return ser.decode_element(field, json.loads(text))


def _need_ext(args: argparse.Namespace) -> ExtensionDescriptor:
    field = ser.field_by_name(args.field)
    return make_extension(field, _parse_disc(field, args.disc))


def _emit(args: argparse.Namespace, payload: dict, pretty: str) -> None:
    if args.fmt == "pretty":
        print(pretty)
    else:
        print(ser.dump(payload))


def _matrix_from_json(field: FieldDescriptor, raw: str | None) -> tuple:
    if raw is None:
        return (field.one, field.zero, field.zero, field.one)
    doc = json.loads(raw)
    if not isinstance(doc, list) or len(doc) != 4:
        raise DescriptorMismatch(f"matrix needs a JSON list of 4 entries: {raw!r}")
    return tuple(ser.decode_element(field, x) for x in doc)


def _pretty_forms(forms: list[QuadForm]) -> str:
    return "\n".join(ser.pretty_form(q) for q in forms)


def _run_classgroup(args: argparse.Namespace) -> int:
    ext = _need_ext(args)
    if ext.field.degree != 1:
        raise DescriptorMismatch("classgroup tables are a rational-tier feature")
    reps = narrow_class_representatives(ext)
    table = []
    for qi in reps:
        row = []
        for qj in reps:
            prod = compose_forms(ext, qi, qj)
            matches = [k for k, qk in enumerate(reps) if equivalent_forms(prod, qk)]
            assert len(matches) == 1, "composition left the representative set"
            row.append(matches[0])
        table.append(row)
    payload = {
        "order": len(reps),
        "representatives": [ser.encode_form(q) for q in reps],
        "table": table,
    }
    lines = [f"order {len(reps)}"]
    for i, q in enumerate(reps):
        lines.append(f"[{i}] {ser.pretty_form(q)}")
    lines.append("composition table (indices):")
    for row in table:
        lines.append("  " + " ".join(str(k) for k in row))
    _emit(args, payload, "\n".join(lines))
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    from .acceptance import run_all

    results = run_all(seed=args.seed)
    ok = all(r.passed for r in results)
    if args.fmt == "pretty":
        width = max(len(r.name) for r in results)
        for r in results:
            mark = "pass" if r.passed else "FAIL"
            print(f"{r.number}. {r.name.ljust(width)}  {mark}")
        print("all passed" if ok else "FAILURES PRESENT")
    else:
        for r in results:
            print(
                ser.dump(
                    {
                        "criterion": r.number,
                        "name": r.name,
                        "passed": r.passed,
                        "details": r.details,
                    }
                )
            )
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except AlgebraError as exc:
        payload = {
            "error": type(exc).__name__,
            "message": str(exc),
            "input": getattr(args, "payload", None),
        }
        print(ser.dump(payload))
        return 1
    except json.JSONDecodeError as exc:
        print(ser.dump({"error": "JSONDecodeError", "message": str(exc)}))
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command
    field = ser.field_by_name(args.field)

    if cmd == "verify":
        return _run_verify(args)
    if cmd == "classgroup":
        return _run_classgroup(args)
    if cmd == "identity-cube":
        ext = _need_ext(args)
        cube = identity_cube(ext)
        _emit(args, ser.encode_cube(cube), ser.pretty_cube(cube))
        return 0

    if cmd in ("forms-of", "disc", "reduce-cube", "act", "invert-cube"):
        (doc,) = _read_payloads(args, 1)
        cube = ser.decode_cube(field, doc)
        if cmd == "forms-of":
            forms = list(attached_forms(cube))
            _emit(
                args,
                {"forms": [ser.encode_form(q) for q in forms]},
                _pretty_forms(forms),
            )
        elif cmd == "disc":
            d = disc_cube(cube)
            _emit(args, {"disc": ser.encode_element(d)}, str(d))
        elif cmd == "reduce-cube":
            red, tr = reduce_cube(cube)
            _emit(
                args,
                {
                    "cube": ser.encode_cube(red),
                    "transcript": ser.encode_transcript(tr),
                },
                ser.pretty_cube(red),
            )
        elif cmd == "invert-cube":
            out = inverse_cube(cube)
            _emit(args, ser.encode_cube(out), ser.pretty_cube(out))
        else:
            gamma = GammaElement(
                ser.decode_element(field, json.loads(args.scalar)),
                _matrix_from_json(field, args.t1),
                _matrix_from_json(field, args.t2),
                _matrix_from_json(field, args.t3),
            )
            out = act_cube(cube, gamma)
            _emit(args, ser.encode_cube(out), ser.pretty_cube(out))
        return 0

    ext = _need_ext(args)
    if cmd == "compose-cubes":
        lhs_doc, rhs_doc = _read_payloads(args, 2)
        out = compose_cubes(
            ext, ser.decode_cube(field, lhs_doc), ser.decode_cube(field, rhs_doc)
        )
        _emit(args, ser.encode_cube(out), ser.pretty_cube(out))
    elif cmd == "compose-forms":
        lhs_doc, rhs_doc = _read_payloads(args, 2)
        out_q = compose_forms(
            ext, ser.decode_form(field, lhs_doc), ser.decode_form(field, rhs_doc)
        )
        _emit(args, ser.encode_form(out_q), ser.pretty_form(out_q))
    elif cmd == "psi":
        (doc,) = _read_payloads(args, 1)
        ideal = psi_map(ext, ser.decode_form(field, doc))
        _emit(args, ser.encode_ideal(ideal), ser.pretty_ideal(ideal))
    elif cmd == "phi":
        (doc,) = _read_payloads(args, 1)
        out_q = phi_map(ser.decode_ideal(ext, doc))
        _emit(args, ser.encode_form(out_q), ser.pretty_form(out_q))
    elif cmd == "psi-prime":
        (doc,) = _read_payloads(args, 1)
        T = psi_prime(ext, ser.decode_cube(field, doc))
        _emit(
            args,
            ser.encode_triple(T),
            "\n".join(ser.pretty_ideal(I) for I in T.components())
            + f"\nwitness {T.witness_u}",
        )
    elif cmd == "phi-prime":
        (doc,) = _read_payloads(args, 1)
        T = ser.decode_triple(ext, doc)
        cube = phi_prime(T)
        _emit(args, ser.encode_cube(cube), ser.pretty_cube(cube))
    elif cmd == "mul-ideals":
        lhs_doc, rhs_doc = _read_payloads(args, 2)
        out_i = mul_ideals(
            ser.decode_ideal(ext, lhs_doc), ser.decode_ideal(ext, rhs_doc)
        )
        _emit(args, ser.encode_ideal(out_i), ser.pretty_ideal(out_i))
    elif cmd == "invert-ideal":
        (doc,) = _read_payloads(args, 1)
        out_i = inverse_ideal(ser.decode_ideal(ext, doc))
        _emit(args, ser.encode_ideal(out_i), ser.pretty_ideal(out_i))
    elif cmd == "is-principal":
        (doc,) = _read_payloads(args, 1)
        flag, gen = is_oriented_principal(ser.decode_ideal(ext, doc))
        payload = {
            "principal": flag,
            "generator": ser.encode_ext_element(gen) if gen is not None else None,
        }
        pretty = "principal" if flag else "not principal"
        if gen is not None:
            pretty += f", generator {gen}"
        _emit(args, payload, pretty)
    elif cmd == "make-balanced":
        docs = _read_payloads(args, 3)
        T = make_balanced(*(ser.decode_ideal(ext, d) for d in docs))
        _emit(
            args,
            ser.encode_triple(T),
            "\n".join(ser.pretty_ideal(I) for I in T.components())
            + f"\nwitness {T.witness_u}",
        )
    else:  # pragma: no cover - parser rejects unknown commands
        raise DescriptorMismatch(f"unknown command {cmd!r}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
