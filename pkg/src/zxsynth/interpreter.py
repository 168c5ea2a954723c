"""Standard interpretation of diagrams as dense complex matrices.

A diagram with ``n`` inputs and ``m`` outputs evaluates to a
``2**m x 2**n`` complex128 array.  Row/column index bits follow the wire
order: the leftmost wire is the most significant bit.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .diagram import (AND, CAP, CUP, H, ID, SWAP, TRI, TRI_INV, X, Z, Diagram, Gen,
                      Generator, Par, Seq)

DEFAULT_MAX_WIRES = 24
MAX_WIRES_ENV = "ZXSYNTH_MAX_WIRES"


class SizeCapError(ValueError):
    """Raised before evaluating a diagram that would need too many wires."""


def max_wires() -> int:
    value = os.environ.get(MAX_WIRES_ENV)
    return int(value) if value else DEFAULT_MAX_WIRES


def _popcounts(k: int) -> np.ndarray:
    idx = np.arange(2 ** k)
    return np.array([bin(i).count("1") for i in idx], dtype=np.int64)


_FIXED = {
    H: np.array([[1, 1], [1, -1]], dtype=complex),
    ID: np.eye(2, dtype=complex),
    TRI: np.array([[1, 1], [0, 1]], dtype=complex),
    TRI_INV: np.array([[1, -1], [0, 1]], dtype=complex),
    SWAP: np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex),
    CAP: np.array([[1], [0], [0], [1]], dtype=complex),
    CUP: np.array([[1, 0, 0, 1]], dtype=complex),
}


@lru_cache(maxsize=1024)
def generator_matrix(gen: Generator) -> np.ndarray:
    """Matrix of a single generator, shape ``(2**cod, 2**dom)``; read-only."""
    out = _build_matrix(gen)
    out.setflags(write=False)
    return out


def _build_matrix(gen: Generator) -> np.ndarray:
    if gen.name in _FIXED:
        return _FIXED[gen.name].copy()
    rows, cols = 2 ** gen.cod, 2 ** gen.dom
    if gen.name == Z:
        out = np.zeros((rows, cols), dtype=complex)
        out[0, 0] += 1
        out[-1, -1] += gen.param
        return out
    if gen.name == X:
        parity = (_popcounts(gen.cod)[:, None] + _popcounts(gen.dom)[None, :]) % 2
        return (parity == int(gen.param)).astype(complex)
    if gen.name == AND:
        out = np.zeros((2, cols), dtype=complex)
        out[0, :] = 1
        out[0, -1] = 0
        out[1, -1] = 1
        return out
    raise ValueError(f"no interpretation for generator {gen.name!r}")


def _tensor_of(gen: Generator) -> np.ndarray:
    return generator_matrix(gen).reshape((2,) * (gen.cod + gen.dom))


def peak_wires(d: Diagram) -> int:
    """Largest number of wires alive at any slice of ``d``."""
    if isinstance(d, Gen):
        return max(d.dom, d.cod)
    if isinstance(d, Seq):
        return max(peak_wires(d.first), peak_wires(d.then))
    return max(peak_wires(d.left) + d.right.dom, d.left.cod + peak_wires(d.right))


def check_size(d: Diagram, cap: int | None = None) -> None:
    cap = max_wires() if cap is None else cap
    if d.dom + d.cod > cap:
        raise SizeCapError(
            f"diagram {d.dom}->{d.cod} has {d.dom + d.cod} wire endpoints, cap is {cap}")
    width = peak_wires(d) + d.dom
    if width > cap:
        raise SizeCapError(
            f"evaluating {d.dom}->{d.cod} diagram needs {width} wires "
            f"(peak {peak_wires(d)} + {d.dom} inputs), cap is {cap}")


def _apply(d: Diagram, state: np.ndarray, offset: int) -> np.ndarray:
    # state has shape (2,)*W + (batch,); d acts on axes offset .. offset+dom-1
    if isinstance(d, Seq):
        return _apply(d.then, _apply(d.first, state, offset), offset)
    if isinstance(d, Par):
        state = _apply(d.left, state, offset)
        return _apply(d.right, state, offset + d.left.cod)
    gen = d.gen
    if gen.name == ID:
        return state
    k, c = gen.dom, gen.cod
    out = np.tensordot(_tensor_of(gen), state,
                       axes=(list(range(c, c + k)), list(range(offset, offset + k))))
    # tensordot puts the c new axes first
    return np.moveaxis(out, list(range(c)), list(range(offset, offset + c)))


def interpret(d: Diagram, max_wires: int | None = None, method: str = "tensor") -> np.ndarray:
    """Evaluate ``d`` to a dense ``2**cod x 2**dom`` matrix.

    ``method="tensor"`` pushes a batch of basis inputs through the diagram
    one generator at a time; ``method="kron"`` multiplies out Kronecker
    products literally and is only meant for small diagrams.
    """
    check_size(d, max_wires)
    if method == "kron":
        return np.array(_interpret_kron(d))
    if method != "tensor":
        raise ValueError(f"unknown method {method!r}")
    n = d.dom
    state = np.eye(2 ** n, dtype=complex).reshape((2,) * n + (2 ** n,))
    out = _apply(d, state, 0)
    return out.reshape(2 ** d.cod, 2 ** n)


def _interpret_kron(d: Diagram) -> np.ndarray:
    if isinstance(d, Gen):
        return generator_matrix(d.gen)
    if isinstance(d, Seq):
        return _interpret_kron(d.then) @ _interpret_kron(d.first)
    return np.kron(_interpret_kron(d.left), _interpret_kron(d.right))


def matrices_close(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """True iff the largest entrywise absolute difference is at most ``tol``."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return bool(np.max(np.abs(a - b), initial=0.0) <= tol)


def max_abs_error(a: np.ndarray, b: np.ndarray) -> float:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b), initial=0.0))


def relative_error(approx: np.ndarray, exact: np.ndarray) -> float:
    """Frobenius error relative to ``exact`` (absolute when ``exact`` is zero)."""
    approx, exact = np.asarray(approx), np.asarray(exact)
    if approx.shape != exact.shape:
        raise ValueError(f"shape mismatch: {approx.shape} vs {exact.shape}")
    diff = np.linalg.norm(approx - exact)
    scale = np.linalg.norm(exact)
    return float(diff / scale) if scale > 0 else float(diff)


def wires_of(size: int) -> int:
    """``log2(size)``, raising unless ``size`` is a power of two."""
    if size < 1 or size & (size - 1):
        raise ValueError(f"dimension {size} is not a power of two")
    return size.bit_length() - 1


def as_dense(a) -> np.ndarray:
    """Validate a 2-D complex array with power-of-two shape and finite entries."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {arr.shape}")
    wires_of(arr.shape[0])
    wires_of(arr.shape[1])
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr
