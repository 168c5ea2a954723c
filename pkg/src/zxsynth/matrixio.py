"""Reading and writing dense complex matrices.

JSON files hold a 2-D array whose entries are ``[re, im]`` pairs; plain
numbers and strings like ``"1.5-0.5i"`` are accepted on input.  CSV files
hold one matrix row per line with ``re+imi`` strings.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .interpreter import as_dense


def parse_complex(value) -> complex:
    """Parse ``[re, im]``, a real number, or a string such as ``"1.5-0.5i"``."""
    if isinstance(value, bool):
        raise ValueError(f"not a complex number: {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"expected [re, im], got {value!r}")
        re_, im = value
        return complex(float(re_), float(im))
    if isinstance(value, str):
        text = value.strip().replace(" ", "").replace("i", "j")
        if not text:
            raise ValueError("empty complex literal")
        try:
            return complex(text)
        except ValueError:
            raise ValueError(f"cannot parse complex number {value!r}") from None
    raise ValueError(f"not a complex number: {value!r}")


def format_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real!r}{'-' if np.signbit(z.imag) else '+'}{abs(z.imag)!r}i"


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ValueError("expected a non-empty 2-D array")
    widths = {len(r) for r in obj}
    if len(widths) != 1:
        raise ValueError("rows have different lengths")
    return as_dense([[parse_complex(v) for v in row] for row in obj])


def matrix_to_json(a: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(a, dtype=complex)]


def matrix_from_csv(text: str) -> np.ndarray:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise ValueError("empty CSV matrix")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError("rows have different lengths")
    return as_dense([[parse_complex(v) for v in row] for row in rows])


def matrix_to_csv(a: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(a, dtype=complex):
        writer.writerow([format_complex(z) for z in row])
    return buf.getvalue()


def read_matrix(path, fmt: str | None = None) -> np.ndarray:
    path = Path(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    text = path.read_text()
    if fmt == "csv":
        return matrix_from_csv(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {path}: {exc}") from None
    return matrix_from_json(obj)


def write_matrix(path, a: np.ndarray, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    if fmt == "csv":
        path.write_text(matrix_to_csv(a))
    else:
        path.write_text(json.dumps(matrix_to_json(a)))
