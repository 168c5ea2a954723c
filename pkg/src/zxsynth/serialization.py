"""JSON form of diagrams (schema ``zxsynth-diagram/1``).

    {"schema": "zxsynth-diagram/1", "dom": 1, "cod": 1,
     "term": {"kind": "gen", "gen": "H"}}

Terms nest as ``{"kind": "seq", "first": ..., "then": ...}`` and
``{"kind": "par", "left": ..., "right": ...}``.  Z spiders carry
``n``, ``m`` and ``a`` as an ``[re, im]`` pair, X spiders ``n``, ``m`` and
a boolean ``pi``, AND gates their fan-in ``k``.
"""

from __future__ import annotations

import json
import math

from .diagram import _FIXED_ARITY, AND, X, Z, ArityError, Diagram, Gen, Generator, Par, Seq

SCHEMA = "zxsynth-diagram/1"


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _gen_to_json(g: Generator) -> dict:
    out = {"kind": "gen", "gen": g.name}
    if g.name == Z:
        out.update(n=g.dom, m=g.cod, a=[g.param.real, g.param.imag])
    elif g.name == X:
        out.update(n=g.dom, m=g.cod, pi=g.param)
    elif g.name == AND:
        out.update(k=g.dom)
    return out


def term_to_json(d: Diagram) -> dict:
    if isinstance(d, Gen):
        return _gen_to_json(d.gen)
    if isinstance(d, Seq):
        return {"kind": "seq", "first": term_to_json(d.first), "then": term_to_json(d.then)}
    return {"kind": "par", "left": term_to_json(d.left), "right": term_to_json(d.right)}


def to_json(d: Diagram) -> dict:
    return {"schema": SCHEMA, "dom": d.dom, "cod": d.cod, "term": term_to_json(d)}


def serialize(d: Diagram) -> bytes:
    return json.dumps(to_json(d), separators=(",", ":")).encode()


def _field(obj: dict, key: str, path: str):
    if key not in obj:
        raise SchemaError(path, f"missing field {key!r}")
    return obj[key]


def _arity(obj: dict, key: str, path: str) -> int:
    value = _field(obj, key, path)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{path}.{key}", f"expected a nonnegative integer, got {value!r}")
    return value


def _complex(value, path: str) -> complex:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        raise SchemaError(path, f"expected [re, im], got {value!r}")
    if not all(math.isfinite(v) for v in value):
        raise SchemaError(path, "non-finite complex number")
    return complex(float(value[0]), float(value[1]))


def _gen_from_json(obj: dict, path: str) -> Diagram:
    name = _field(obj, "gen", path)
    try:
        if name in _FIXED_ARITY:
            return Gen(Generator(name, *_FIXED_ARITY[name]))
        if name == Z:
            return Gen(Generator(Z, _arity(obj, "n", path), _arity(obj, "m", path),
                                 _complex(_field(obj, "a", path), f"{path}.a")))
        if name == X:
            flag = _field(obj, "pi", path)
            if not isinstance(flag, bool):
                raise SchemaError(f"{path}.pi", f"expected a boolean, got {flag!r}")
            return Gen(Generator(X, _arity(obj, "n", path), _arity(obj, "m", path), flag))
        if name == AND:
            return Gen(Generator(AND, _arity(obj, "k", path), 1))
    except (ArityError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(path, str(exc)) from None
    raise SchemaError(f"{path}.gen", f"unknown generator {name!r}")


def term_from_json(obj, path: str = "$.term") -> Diagram:
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected an object, got {type(obj).__name__}")
    kind = _field(obj, "kind", path)
    if kind == "gen":
        return _gen_from_json(obj, path)
    if kind == "seq":
        first = term_from_json(_field(obj, "first", path), f"{path}.first")
        then = term_from_json(_field(obj, "then", path), f"{path}.then")
        if first.cod != then.dom:
            raise SchemaError(path, f"seq arity mismatch: first.cod={first.cod}, "
                                    f"then.dom={then.dom}")
        return Seq(first, then)
    if kind == "par":
        return Par(term_from_json(_field(obj, "left", path), f"{path}.left"),
                   term_from_json(_field(obj, "right", path), f"{path}.right"))
    raise SchemaError(f"{path}.kind", f"unknown term kind {kind!r}")


def from_json(obj) -> Diagram:
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected an object")
    if obj.get("schema", SCHEMA) != SCHEMA:
        raise SchemaError("$.schema", f"expected {SCHEMA!r}, got {obj['schema']!r}")
    d = term_from_json(_field(obj, "term", "$"))
    for key in ("dom", "cod"):
        if key in obj and obj[key] != getattr(d, key):
            raise SchemaError(f"$.{key}", f"declared {obj[key]!r} but term has {getattr(d, key)}")
    return d


def deserialize(data: bytes | str) -> Diagram:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return from_json(obj)
