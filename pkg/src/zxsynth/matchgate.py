"""Two-qubit matchgates G(A, B) as diagrams.

``G(A, B)`` acts as ``A`` on span{|00>, |11>} and as ``B`` on
span{|01>, |10>}.  With ``A = [[p, q], [r, s]]`` and ``B = [[w, x], [y, z]]``
and ``p, w`` nonzero, two row additions and two column additions reduce
``G`` to a diagonal core:

    G = R_{0x(r/p)+3} R_{1x(y/w)+2} . diag(p, w, det B / w, det A / p)
        . C_{1x(x/w)+2} C_{0x(q/p)+3}

and the core factors as ``p * diag(1, e) (x) diag(1, f)`` with
``e = det B / (p w)`` and ``f = w / p`` whenever ``det A == det B``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .diagram import Diagram, compose, scalar, tensor, z_spider
from .elementary import COL, ElementaryOp, diagram_add, diagram_for, diagram_mul
from .synthesis import synthesize

DIRECT, FALLBACK = "direct", "fallback"


class MatchgateWarning(UserWarning):
    """det A and det B differ, so G(A, B) is not a matchgate in the strict sense."""


@dataclass(frozen=True)
class MatchgateSpec:
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        for name in ("A", "B"):
            block = np.array(getattr(self, name), dtype=complex)
            if block.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2, got shape {block.shape}")
            if not np.all(np.isfinite(block)):
                raise ValueError(f"{name} has non-finite entries")
            if abs(np.linalg.det(block)) <= 1e-14 * max(1.0, np.max(np.abs(block)) ** 2):
                raise ValueError(f"{name} is singular")
            block.setflags(write=False)
            object.__setattr__(self, name, block)

    @property
    def is_strict(self) -> bool:
        return bool(abs(np.linalg.det(self.A) - np.linalg.det(self.B)) <= 1e-9)


def matchgate_matrix(spec: MatchgateSpec) -> np.ndarray:
    (p, q), (r, s) = spec.A
    (w, x), (y, z) = spec.B
    return np.array([
        [p, 0, 0, q],
        [0, w, x, 0],
        [0, y, z, 0],
        [r, 0, 0, s],
    ], dtype=complex)


def route(spec: MatchgateSpec, degenerate_tol: float = 1e-12) -> str:
    """``"direct"`` when the factored form applies, else ``"fallback"``."""
    p, w = spec.A[0, 0], spec.B[0, 0]
    return FALLBACK if min(abs(p), abs(w)) <= degenerate_tol else DIRECT


def matchgate_diagram(spec: MatchgateSpec, degenerate_tol: float = 1e-12) -> Diagram:
    """2 -> 2 diagram for ``G(A, B)``.

    Uses the factored elementary-op form when ``|p|`` and ``|w|`` exceed
    ``degenerate_tol``; otherwise falls back to generic synthesis of the
    4x4 matrix.
    """
    if not spec.is_strict:
        warnings.warn("det A != det B; building G(A, B) anyway", MatchgateWarning,
                      stacklevel=2)
    if route(spec, degenerate_tol) == FALLBACK:
        return synthesize(matchgate_matrix(spec))

    (p, q), (r, s) = spec.A
    (w, x), (y, z) = spec.B
    det_a, det_b = s * p - q * r, z * w - x * y
    e = det_b / (p * w)
    f = w / p
    core = [tensor(scalar(p), z_spider(1, 1, e), z_spider(1, 1, f))]
    # p e f = det B / p; a row scaling fixes the last entry up to det A / p
    if not np.isclose(det_a, det_b, rtol=0, atol=1e-15 * abs(det_b)):
        core.append(diagram_mul(2, 3, det_a / det_b))
    return compose(
        diagram_for(ElementaryOp.add(2, 0, q / p, 3, COL)),
        diagram_for(ElementaryOp.add(2, 1, x / w, 2, COL)),
        *core,
        diagram_add(2, 1, y / w, 2),
        diagram_add(2, 0, r / p, 3),
    )


def su2(theta: float, phase_a: float, phase_b: float) -> np.ndarray:
    """``[[cos t e^{i pa}, -sin t e^{-i pb}], [sin t e^{i pb}, cos t e^{-i pa}]]``."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([
        [c * np.exp(1j * phase_a), -s * np.exp(-1j * phase_b)],
        [s * np.exp(1j * phase_b), c * np.exp(-1j * phase_a)],
    ])


def random_su2(rng: np.random.Generator) -> np.ndarray:
    theta = rng.uniform(0, np.pi / 2)
    return su2(theta, rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi))
