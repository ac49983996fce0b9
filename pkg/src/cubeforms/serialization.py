"""JSON encoding and decoding for every public object.

All numeric leaves are decimal strings so payloads survive any 64-bit
JSON reader; orientation signs stay as bare ints.  Encoders produce plain
dicts; dump() serializes them with sorted keys so output is byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .balanced_triples import BalancedTriple, make_balanced
from .base_field import (
    FIELDS_BY_NAME,
    BaseElement,
    BaseRational,
    FieldDescriptor,
)
from .cubes import Cube, CubeTranscript
from .errors import DescriptorMismatch
from .oriented_ideals import OrientedIdeal, make_oriented
from .quadratic_extension import ExtElement, ExtensionDescriptor
from .quadratic_forms import FormReduction, QuadForm


def dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "))


def encode_element(x: BaseElement) -> dict:
    return {"u": str(x.u), "v": str(x.v)}


def decode_element(field: FieldDescriptor, obj: Any) -> BaseElement:
    if isinstance(obj, dict):
        u = int(obj.get("u", "0"))
        v = int(obj.get("v", "0"))
    elif isinstance(obj, (int, str)):
        u, v = int(obj), 0
    else:
        raise DescriptorMismatch(f"cannot read a ring element from {obj!r}")
    if v and field.degree == 1:
        raise DescriptorMismatch("nonzero second coordinate over the rationals")
    return field.element(u, v)


def encode_rational(x: BaseRational) -> dict:
    return {"num_u": str(x.num.u), "num_v": str(x.num.v), "den": str(x.den)}


def decode_rational(field: FieldDescriptor, obj: Any) -> BaseRational:
    if isinstance(obj, dict) and "den" in obj:
        num = field.element(int(obj.get("num_u", "0")), int(obj.get("num_v", "0")))
        return BaseRational(num, int(obj["den"]))
    return BaseRational(decode_element(field, obj), 1)


def encode_ext_element(x: ExtElement) -> dict:
    return {"x": encode_rational(x.x), "y": encode_rational(x.y)}


def decode_ext_element(ext: ExtensionDescriptor, obj: Any) -> ExtElement:
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise DescriptorMismatch(f"cannot read an extension element from {obj!r}")
    return ExtElement(
        ext,
        decode_rational(ext.field, obj["x"]),
        decode_rational(ext.field, obj["y"]),
    )


def encode_form(q: QuadForm) -> dict:
    return {
        "a": encode_element(q.a),
        "b": encode_element(q.b),
        "c": encode_element(q.c),
    }


def decode_form(field: FieldDescriptor, obj: Any) -> QuadForm:
    if not isinstance(obj, dict) or not {"a", "b", "c"} <= set(obj):
        raise DescriptorMismatch(f"cannot read a form from {obj!r}")
    return QuadForm(
        field,
        decode_element(field, obj["a"]),
        decode_element(field, obj["b"]),
        decode_element(field, obj["c"]),
    )


def encode_cube(cube: Cube) -> dict:
    return {"entries": [encode_element(e) for e in cube.entries]}


def decode_cube(field: FieldDescriptor, obj: Any) -> Cube:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise DescriptorMismatch(f"cannot read a cube from {obj!r}")
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != 8:
        raise DescriptorMismatch("a cube needs exactly eight entries")
    return Cube(field, tuple(decode_element(field, e) for e in entries))


def encode_ideal(I: OrientedIdeal) -> dict:
    return {
        "alpha": encode_ext_element(I.alpha),
        "beta": encode_ext_element(I.beta),
        "eps": list(I.eps),
    }


def decode_ideal(ext: ExtensionDescriptor, obj: Any) -> OrientedIdeal:
    if not isinstance(obj, dict) or not {"alpha", "beta", "eps"} <= set(obj):
        raise DescriptorMismatch(f"cannot read an oriented ideal from {obj!r}")
    eps = tuple(int(s) for s in obj["eps"])
    return make_oriented(
        decode_ext_element(ext, obj["alpha"]),
        decode_ext_element(ext, obj["beta"]),
        eps,
    )


def encode_triple(T: BalancedTriple) -> dict:
    return {
        "components": [encode_ideal(I) for I in T.components()],
        "witness": encode_element(T.witness_u),
    }


def decode_triple(ext: ExtensionDescriptor, obj: Any) -> BalancedTriple:
    if not isinstance(obj, dict) or "components" not in obj:
        raise DescriptorMismatch(f"cannot read a balanced triple from {obj!r}")
    comps = obj["components"]
    if not isinstance(comps, list) or len(comps) != 3:
        raise DescriptorMismatch("a balanced triple needs three components")
    return make_balanced(*(decode_ideal(ext, c) for c in comps))


def encode_transcript(tr: CubeTranscript) -> dict:
    return {
        "word": [
            {"axis": axis, "matrix": [encode_element(x) for x in m]}
            for axis, m in tr.word
        ],
        "scalar": encode_element(tr.scalar),
    }


def encode_form_reduction(r: FormReduction) -> dict:
    return {
        "reduced": encode_form(r.reduced),
        "word": [[str(x) for x in step] for step in r.word],
        "matrix": [str(x) for x in r.matrix],
    }


def pretty_element(x: BaseElement) -> str:
    return str(x)


def pretty_form(q: QuadForm) -> str:
    return f"({q.a}) x^2 + ({q.b}) xy + ({q.c}) y^2"


def pretty_cube(cube: Cube) -> str:
    e = [str(x) for x in cube.entries]
    width = max(len(s) for s in e)
    pad = [s.rjust(width) for s in e]
    return (
        f"front [{pad[0]} {pad[1]} | {pad[2]} {pad[3]}]\n"
        f"back  [{pad[4]} {pad[5]} | {pad[6]} {pad[7]}]"
    )


def pretty_ideal(I: OrientedIdeal) -> str:
    signs = " ".join("+" if s > 0 else "-" for s in I.eps)
    return f"[{I.alpha}, {I.beta}]; signs ({signs})"


def field_by_name(name: str) -> FieldDescriptor:
    if name not in FIELDS_BY_NAME:
        raise DescriptorMismatch(f"unknown base field {name!r}")
    return FIELDS_BY_NAME[name]
