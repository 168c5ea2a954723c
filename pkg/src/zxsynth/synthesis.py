"""Diagrams for arbitrary 2**m x 2**n matrices.

Gaussian elimination with full pivoting brings ``A`` to the standard form
``[[E_r, 0], [0, 0]]`` using elementary row ops (applied on the left) and
column ops (applied on the right).  The standard form has a direct diagram,
and undoing the recorded ops around it gives a diagram for ``A``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .diagram import Diagram, bra0, compose, identity, ket0, scalar, tensor
from .elementary import COL, ROW, ElementaryOp, diagram_for, diagram_mul, oracle_matrix
from .interpreter import as_dense, wires_of

DEFAULT_PIVOT_TOL = 1e-10
PLAN_SCHEMA = "zxsynth-plan/1"


@dataclass
class SynthesisPlan:
    """Everything needed to rebuild a matrix as a diagram.

    ``row_ops`` and ``col_ops`` are in the order they were applied, so
    ``R_k ... R_1 @ A @ C_1 ... C_l`` is the standard form.  ``core`` holds
    the ``r`` leading diagonal entries of that form: all ones, unless
    elimination stopped before normalizing pivots.
    """

    m: int
    n: int
    rank: int
    row_ops: list[ElementaryOp] = field(default_factory=list)
    col_ops: list[ElementaryOp] = field(default_factory=list)
    pivot_tolerance: float = DEFAULT_PIVOT_TOL
    core: list[complex] | None = None

    def __post_init__(self):
        if not 0 <= self.rank <= min(2 ** self.m, 2 ** self.n):
            raise ValueError(f"rank {self.rank} out of range for {2 ** self.m}x{2 ** self.n}")
        if self.core is None:
            self.core = [1.0 + 0j] * self.rank
        if len(self.core) != self.rank:
            raise ValueError("core must list one diagonal entry per unit of rank")

    def standard_form(self) -> np.ndarray:
        out = np.zeros((2 ** self.m, 2 ** self.n), dtype=complex)
        out[range(self.rank), range(self.rank)] = self.core
        return out

    def replay(self, a: np.ndarray) -> np.ndarray:
        """Apply the recorded ops to ``a``; should give ``standard_form()``."""
        out = np.array(a, dtype=complex)
        for op in self.row_ops:
            out = oracle_matrix(op) @ out
        for op in self.col_ops:
            out = out @ oracle_matrix(op)
        return out

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for op in self.row_ops + self.col_ops:
            key = f"{op.side}-{op.kind}"
            out[key] = out.get(key, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "schema": PLAN_SCHEMA,
            "m": self.m,
            "n": self.n,
            "rank": self.rank,
            "pivot_tolerance": self.pivot_tolerance,
            "core": [[c.real, c.imag] for c in map(complex, self.core)],
            "ops": [_op_to_json(op) for op in self.row_ops + self.col_ops],
        }

    @classmethod
    def from_json(cls, obj: dict) -> SynthesisPlan:
        if obj.get("schema") != PLAN_SCHEMA:
            raise ValueError(f"expected plan schema {PLAN_SCHEMA!r}, got {obj.get('schema')!r}")
        ops = [_op_from_json(o) for o in obj["ops"]]
        return cls(
            m=int(obj["m"]), n=int(obj["n"]), rank=int(obj["rank"]),
            row_ops=[op for op in ops if op.side == ROW],
            col_ops=[op for op in ops if op.side == COL],
            pivot_tolerance=float(obj["pivot_tolerance"]),
            core=[complex(re, im) for re, im in obj["core"]],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> SynthesisPlan:
        return cls.from_json(json.loads(text))


def _op_to_json(op: ElementaryOp) -> dict:
    return {"kind": op.kind, "side": op.side, "i": op.i, "j": op.j,
            "a": [op.a.real, op.a.imag], "m": op.m}


def _op_from_json(obj: dict) -> ElementaryOp:
    re, im = obj["a"]
    return ElementaryOp(obj["kind"], int(obj["m"]), int(obj["i"]),
                        None if obj.get("j") is None else int(obj["j"]),
                        complex(re, im), obj["side"])


def eliminate(a, tol: float = DEFAULT_PIVOT_TOL, stop_at_rref: bool = False) -> SynthesisPlan:
    """Reduce ``a`` to standard form, recording every elementary op.

    Each step picks the largest remaining entry as pivot, swaps it into
    place, scales it to 1, clears its column with row additions and its
    row with column additions.  Elimination stops once the largest
    remaining entry is at most ``tol * max|a|``.

    With ``stop_at_rref`` the pivots are left unscaled and the core keeps
    them as its diagonal.
    """
    if tol <= 0:
        raise ValueError("pivot tolerance must be positive")
    w = as_dense(a).copy()
    rows, cols = w.shape
    m, n = wires_of(rows), wires_of(cols)
    threshold = tol * np.max(np.abs(w), initial=0.0)
    row_ops, col_ops, core = [], [], []

    rank = 0
    for k in range(min(rows, cols)):
        sub = np.abs(w[k:, k:])
        p, q = np.unravel_index(np.argmax(sub), sub.shape)
        if sub[p, q] <= threshold or sub[p, q] == 0:
            break
        p, q = int(p) + k, int(q) + k
        if p != k:
            row_ops.append(ElementaryOp.swap(m, k, p))
            w[[k, p]] = w[[p, k]]
        if q != k:
            col_ops.append(ElementaryOp.swap(n, k, q, COL))
            w[:, [k, q]] = w[:, [q, k]]
        pivot = w[k, k]
        if not stop_at_rref and pivot != 1:
            row_ops.append(ElementaryOp.mul(m, k, 1 / pivot))
            w[k] /= pivot
            w[k, k] = 1
        core.append(complex(w[k, k]))
        for i in range(k + 1, rows):
            if w[i, k] != 0:
                coef = -w[i, k] / w[k, k]
                row_ops.append(ElementaryOp.add(m, k, coef, i))
                w[i] += coef * w[k]
                w[i, k] = 0
        for j in range(k + 1, cols):
            if w[k, j] != 0:
                coef = -w[k, j] / w[k, k]
                col_ops.append(ElementaryOp.add(n, k, coef, j, COL))
                w[:, j] += coef * w[:, k]
                w[k, j] = 0
        rank += 1

    return SynthesisPlan(m, n, rank, row_ops, col_ops, tol, core)


def standard_form_diagram(m: int, n: int, r: int, core=None) -> Diagram:
    """``n -> m`` diagram of ``[[E_r, 0], [0, 0]]``.

    For ``m <= n`` this is ``<0|`` on the ``n - m`` extra inputs tensored
    with ``K``, the square form on ``m`` wires built from ``2**m - r``
    multiplications by zero.  For ``m > n`` the extra ``m - n`` wires
    start in ``|0>``.  ``core``, if given, puts those values on the
    leading diagonal instead of ones.
    """
    if m < 0 or n < 0:
        raise ValueError("wire counts must be nonnegative")
    if not 0 <= r <= min(2 ** m, 2 ** n):
        raise ValueError(f"rank {r} out of range for a {2 ** m}x{2 ** n} matrix")
    core = [1] * r if core is None else [complex(c) for c in core]
    if len(core) != r:
        raise ValueError("core needs one entry per unit of rank")
    k = min(m, n)
    square = _square_core(k, r, core)
    if m <= n:
        return tensor(*[bra0] * (n - m), square)
    return tensor(*[ket0] * (m - n), square)


def _square_core(k: int, r: int, core) -> Diagram:
    if k == 0:
        # 1x1: rank 0 or the single entry
        return scalar(core[0]) if r else scalar(0)
    parts = [diagram_mul(k, i, c) for i, c in enumerate(core) if c != 1]
    parts += [diagram_mul(k, i, 0) for i in range(r, 2 ** k)]
    return compose(*parts) if parts else identity(k)


def plan_diagram(plan: SynthesisPlan) -> Diagram:
    """Assemble the diagram by undoing the plan around the standard form.

    ``A = R_1^-1 ... R_k^-1 @ C @ C_l^-1 ... C_1^-1``: the inverse column
    ops come first (innermost on the input side), then the core, then the
    inverse row ops in reverse order of application.
    """
    parts = [diagram_for(op.inverse()) for op in plan.col_ops]
    parts.append(standard_form_diagram(plan.m, plan.n, plan.rank, plan.core))
    parts += [diagram_for(op.inverse()) for op in reversed(plan.row_ops)]
    return compose(*parts)


def synthesize(a, tol: float = DEFAULT_PIVOT_TOL, stop_at_rref: bool = False) -> Diagram:
    """A diagram whose interpretation is ``a``, up to rounding."""
    return plan_diagram(eliminate(a, tol, stop_at_rref))

