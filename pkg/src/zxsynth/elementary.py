"""Elementary matrices of size 2**m x 2**m as diagrams.

Rows are counted from 0.  Row ``c`` corresponds to the basis state whose
wire bits, read from the leftmost wire, are ``c_{m-1} ... c_0``; wire
``k`` (counting bits) therefore sits at position ``m - 1 - k``.

Each constructor follows the same plan: copy every data wire, compare the
copies against the bit pattern of a row index, feed the comparisons into an
AND gate, and let the AND output control the action on the data wires.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import (Circuit, Diagram, and_gate, compose, identity, not_gate, scalar,
                      triangle, x_spider, z_spider)

MUL, ADD, SWAP = "mul", "add", "swap"
ROW, COL = "row", "col"


@dataclass(frozen=True)
class ElementaryOp:
    """``Mul(i, a)``, ``Add(i, a, j)`` or ``Swap(i, j)`` on a 2**m space.

    A row ``Add`` adds ``a`` times row ``i`` to row ``j``; a column ``Add``
    adds ``a`` times column ``i`` to column ``j``.
    """

    kind: str
    m: int
    i: int
    j: int | None = None
    a: complex = 1
    side: str = ROW

    def __post_init__(self):
        if self.kind not in (MUL, ADD, SWAP):
            raise ValueError(f"unknown elementary op kind {self.kind!r}")
        if self.side not in (ROW, COL):
            raise ValueError(f"side must be 'row' or 'col', got {self.side!r}")
        object.__setattr__(self, "a", complex(self.a))
        if self.m < 1 and not (self.kind == MUL and self.m == 0):
            raise ValueError(f"need at least one wire, got m={self.m}")
        size = 2 ** self.m
        if not 0 <= self.i < size:
            raise IndexError(f"row index {self.i} out of range 0..{size - 1}")
        if self.kind == MUL:
            if self.j is not None:
                raise ValueError("Mul takes no second index")
            return
        if self.j is None or not 0 <= self.j < size:
            raise IndexError(f"row index {self.j} out of range 0..{size - 1}")
        if self.i == self.j:
            raise ValueError(f"{self.kind} needs distinct indices, got i=j={self.i}")

    @classmethod
    def mul(cls, m, i, a, side=ROW):
        return cls(MUL, m, i, None, a, side)

    @classmethod
    def add(cls, m, i, a, j, side=ROW):
        return cls(ADD, m, i, j, a, side)

    @classmethod
    def swap(cls, m, i, j, side=ROW):
        return cls(SWAP, m, i, j, 1, side)

    def inverse(self) -> ElementaryOp:
        if self.kind == MUL:
            if self.a == 0:
                raise ZeroDivisionError("Mul by 0 has no inverse")
            return ElementaryOp.mul(self.m, self.i, 1 / self.a, self.side)
        if self.kind == ADD:
            return ElementaryOp.add(self.m, self.i, -self.a, self.j, self.side)
        return self

    def __str__(self):
        tag = "R" if self.side == ROW else "C"
        if self.kind == MUL:
            return f"{tag}_{self.i}x({self.a:g})"
        if self.kind == ADD:
            return f"{tag}_{self.i}x({self.a:g})+{self.j}"
        return f"{tag}_{self.i}<->{self.j}"


def oracle_matrix(op: ElementaryOp) -> np.ndarray:
    """The elementary matrix itself, written down entry by entry.

    Column ops are returned in right-multiplication form, so ``A @ M``
    performs the column operation on ``A``.
    """
    size = 2 ** op.m
    out = np.eye(size, dtype=complex)
    if op.kind == MUL:
        out[op.i, op.i] = op.a
    elif op.kind == ADD:
        if op.side == ROW:
            out[op.j, op.i] = op.a
        else:
            out[op.i, op.j] = op.a
    else:
        out[[op.i, op.j]] = out[[op.j, op.i]]
    return out


def bits(i: int, m: int) -> list[int]:
    """``[a_0, ..., a_{m-1}]`` with ``i = sum a_k 2**k``."""
    return [(i >> k) & 1 for k in range(m)]


def differing_bits(i: int, j: int) -> list[int]:
    """Bit positions where ``i`` and ``j`` differ, ascending."""
    x, out, k = i ^ j, [], 0
    while x:
        if x & 1:
            out.append(k)
        x >>= 1
        k += 1
    return out


def _data(k):
    return ("w", k)


def _data_order(m):
    return [_data(k) for k in reversed(range(m))]


def _check_index(m, *idx):
    if m < 1:
        raise ValueError(f"need at least one wire, got m={m}")
    for i in idx:
        if not 0 <= i < 2 ** m:
            raise IndexError(f"row index {i} out of range 0..{2 ** m - 1}")


def _match_bit(c: Circuit, k: int, bit: int, label) -> None:
    # copy wire k; the copy reads 1 exactly when the wire carries `bit`
    c.apply(z_spider(1, 2), [_data(k)], [_data(k), label])
    if not bit:
        c.apply(not_gate, [label], [label])


def _pattern_and(c: Circuit, i: int, m: int):
    """Leave an AND output wire that is 1 exactly on basis state ``|i>``."""
    a = bits(i, m)
    checks = []
    for k in reversed(range(m)):
        _match_bit(c, k, a[k], ("eq", k))
        checks.append(("eq", k))
    c.apply(and_gate(m), checks, ["ctrl"])
    return "ctrl"


def _fan_out_xor(c: Circuit, control, targets) -> None:
    """XOR ``control`` onto each of the wires ``targets``."""
    if len(targets) == 1:
        copies = [control]
    else:
        copies = [("copy", t) for t in targets]
        c.apply(z_spider(1, len(targets)), [control], copies)
    for t, copy in zip(targets, copies):
        c.apply(x_spider(2, 1), [_data(t), copy], [_data(t)])


def diagram_mul(m: int, i: int, a: complex) -> Diagram:
    """Diagram of ``R_{i x (a)}``: row ``i`` multiplied by ``a`` (0 allowed)."""
    _check_index(m, i)
    if m == 1:
        d = z_spider(1, 1, a)
        return d if i == 1 else compose(not_gate, d, not_gate)
    c = Circuit(_data_order(m))
    ctrl = _pattern_and(c, i, m)
    c.apply(z_spider(1, 0, a), [ctrl], [])
    return c.finish(_data_order(m))


def diagram_add(m: int, i: int, a: complex, j: int) -> Diagram:
    """Diagram of ``R_{i x (a) + j}``: ``a`` times row ``i`` added to row ``j``.

    On ``|i>`` the AND output is 1; triangle then spider turn it into
    ``|0> + a|1>``, and the fan-out flips the wires where ``i`` and ``j``
    differ, giving ``e_i + a e_j``.  Every other basis state passes through.
    """
    _check_index(m, i, j)
    if i == j:
        raise ValueError(f"row addition needs i != j, got {i}")
    c = Circuit(_data_order(m))
    ctrl = _pattern_and(c, i, m)
    c.apply(triangle, [ctrl], [ctrl])
    c.apply(z_spider(1, 1, a), [ctrl], [ctrl])
    _fan_out_xor(c, ctrl, differing_bits(i, j))
    return c.finish(_data_order(m))


def diagram_swap(m: int, i: int, j: int) -> Diagram:
    """Diagram of ``R_{i <-> j}``.

    With ``j_1 < ... < j_s`` the differing bits, the AND gate takes ``m - s``
    equality checks on the other wires plus ``s - 1`` parity checks
    ``c_{j_1} xor c_{j_x} == a_{j_1} xor a_{j_x}``, i.e. ``m - 1`` inputs in
    total.  Its output flips all differing wires.
    """
    _check_index(m, i, j)
    if i == j:
        raise ValueError(f"row switching needs i != j, got {i}")
    if m == 1:
        return not_gate
    a = bits(i, m)
    diff = differing_bits(i, j)
    first, rest = diff[0], diff[1:]
    c = Circuit(_data_order(m))
    checks = []
    for k in reversed(range(m)):
        if k not in diff:
            _match_bit(c, k, a[k], ("eq", k))
            checks.append(("eq", k))
    if rest:
        c.apply(z_spider(1, 1 + len(rest)), [_data(first)],
                [_data(first)] + [("pf", x) for x in rest])
        for x in rest:
            c.apply(z_spider(1, 2), [_data(x)], [_data(x), ("px", x)])
            # phase pi negates the XOR, so the check reads 1 on a match
            c.apply(x_spider(2, 1, pi=not (a[first] ^ a[x])),
                    [("pf", x), ("px", x)], [("par", x)])
            checks.append(("par", x))
    c.apply(and_gate(m - 1), checks, ["ctrl"])
    _fan_out_xor(c, "ctrl", diff)
    return c.finish(_data_order(m))


def diagram_for(op: ElementaryOp) -> Diagram:
    """Dispatch to the constructors.

    Column ops reuse the row constructors: ``C_{i x (a)} = R_{i x (a)}``,
    ``C_{i x (a) + j} = R_{j x (a) + i}`` and ``C_{i <-> j} = R_{i <-> j}``.
    """
    if op.kind == MUL:
        if op.m == 0:
            return scalar(op.a)
        return diagram_mul(op.m, op.i, op.a)
    if op.kind == ADD:
        if op.side == ROW:
            return diagram_add(op.m, op.i, op.a, op.j)
        return diagram_add(op.m, op.j, op.a, op.i)
    return diagram_swap(op.m, op.i, op.j)


def zero_rows(m: int, rows) -> Diagram:
    """Composite of ``R_{i x (0)}`` over ``rows`` (identity if empty)."""
    parts = [diagram_mul(m, i, 0) for i in rows]
    return compose(*parts) if parts else identity(m)
