"""Generators and composition trees for algebraic ZX diagrams.

A diagram is an immutable tree built from generator leaves with two
combinators: sequential composition (``f >> g``, first ``f`` then ``g``)
and parallel composition (``f @ g``, ``f`` on the upper wires).  Wires are
listed left to right; the leftmost wire of an ``m``-wire slice carries the
most significant bit, so ``f @ g`` interprets to ``kron(F, G)``.
"""

from __future__ import annotations

import cmath
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence


class ArityError(ValueError):
    """Raised when wire counts do not line up."""


# Generator names, as used in serialized diagrams.
Z, X, H, ID, SWAP, CAP, CUP, TRI, TRI_INV, AND = (
    "Z", "X", "H", "Id", "Swap", "Cap", "Cup", "T", "Tinv", "AND",
)

_FIXED_ARITY = {
    H: (1, 1),
    ID: (1, 1),
    SWAP: (2, 2),
    CAP: (0, 2),
    CUP: (2, 0),
    TRI: (1, 1),
    TRI_INV: (1, 1),
}


@dataclass(frozen=True)
class Generator:
    """One node of the signature.

    ``param`` is the complex label of a Z spider, the ``pi`` flag of an X
    spider (``True`` for phase pi) and unused otherwise.  ``AND`` is the
    k-input conjunction, kept as a primitive node.
    """

    name: str
    dom: int
    cod: int
    param: complex | bool | None = None

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ArityError(f"negative arity {self.dom}->{self.cod} for {self.name}")
        if self.name in _FIXED_ARITY:
            if (self.dom, self.cod) != _FIXED_ARITY[self.name]:
                raise ArityError(
                    f"{self.name} has arity {_FIXED_ARITY[self.name]}, "
                    f"got ({self.dom}, {self.cod})")
            if self.param is not None:
                raise ValueError(f"{self.name} takes no parameter")
        elif self.name == Z:
            a = complex(self.param)
            if not (cmath.isfinite(a)):
                raise ValueError(f"non-finite Z spider label {a!r}")
            object.__setattr__(self, "param", a)
        elif self.name == X:
            if not isinstance(self.param, bool):
                raise ValueError("X spider phase must be given as a bool pi flag")
        elif self.name == AND:
            if self.cod != 1:
                raise ArityError(f"AND has exactly one output, got {self.cod}")
        else:
            raise ValueError(f"unknown generator {self.name!r}")

    def __str__(self):
        if self.name == Z:
            a = self.param
            label = f"{a.real:g}" if a.imag == 0 else f"{a:g}"
            return f"Z({self.dom},{self.cod},{label})"
        if self.name == X:
            return f"X({self.dom},{self.cod}{',pi' if self.param else ''})"
        if self.name == AND:
            return f"AND({self.dom})"
        return self.name


class Diagram:
    """Base class of the three term constructors ``Gen``, ``Seq`` and ``Par``."""

    dom: int
    cod: int

    def __rshift__(self, other: Diagram) -> Diagram:
        return seq(self, other)

    def __matmul__(self, other: Diagram) -> Diagram:
        return par(self, other)

    def leaves(self) -> Iterable[Generator]:
        """Yield generator leaves left to right, without recursion."""
        stack: list[Diagram] = [self]
        while stack:
            d = stack.pop()
            if isinstance(d, Gen):
                yield d.gen
            elif isinstance(d, Seq):
                stack.extend((d.then, d.first))
            else:
                stack.extend((d.right, d.left))

    @property
    def size(self) -> int:
        return sum(1 for _ in self.leaves())


@dataclass(frozen=True, eq=True)
class Gen(Diagram):
    gen: Generator
    dom: int = field(init=False)
    cod: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "dom", self.gen.dom)
        object.__setattr__(self, "cod", self.gen.cod)

    def __repr__(self):
        return f"Gen({self.gen})"


@dataclass(frozen=True, eq=True)
class Seq(Diagram):
    first: Diagram
    then: Diagram
    dom: int = field(init=False)
    cod: int = field(init=False)

    def __post_init__(self):
        if self.first.cod != self.then.dom:
            raise ArityError(
                f"cannot compose: first has cod={self.first.cod}, "
                f"then has dom={self.then.dom}")
        object.__setattr__(self, "dom", self.first.dom)
        object.__setattr__(self, "cod", self.then.cod)

    def __repr__(self):
        return f"({self.first!r} >> {self.then!r})"


@dataclass(frozen=True, eq=True)
class Par(Diagram):
    left: Diagram
    right: Diagram
    dom: int = field(init=False)
    cod: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "dom", self.left.dom + self.right.dom)
        object.__setattr__(self, "cod", self.left.cod + self.right.cod)

    def __repr__(self):
        return f"({self.left!r} @ {self.right!r})"


def seq(f: Diagram, g: Diagram) -> Diagram:
    """First ``f``, then ``g``.  Raises ``ArityError`` unless ``f.cod == g.dom``."""
    return Seq(f, g)


def par(f: Diagram, g: Diagram) -> Diagram:
    return Par(f, g)


# -- generator constructors ---------------------------------------------------

def z_spider(n: int, m: int, a: complex = 1) -> Diagram:
    """Green spider with ``n`` inputs, ``m`` outputs and label ``a``."""
    return Gen(Generator(Z, n, m, a))


def x_spider(n: int, m: int, pi: bool = False) -> Diagram:
    """Red spider; ``pi=True`` gives phase pi."""
    return Gen(Generator(X, n, m, bool(pi)))


def and_gate(k: int) -> Diagram:
    return Gen(Generator(AND, k, 1))


hadamard = Gen(Generator(H, 1, 1))
wire = Gen(Generator(ID, 1, 1))
swap = Gen(Generator(SWAP, 2, 2))
cap = Gen(Generator(CAP, 0, 2))
cup = Gen(Generator(CUP, 2, 0))
triangle = Gen(Generator(TRI, 1, 1))
triangle_inv = Gen(Generator(TRI_INV, 1, 1))

# The empty diagram: Z(0,0,a) interprets to 1 + a.
empty = z_spider(0, 0, 0)


def is_empty(d: Diagram) -> bool:
    return d == empty


def compose(*diagrams: Diagram) -> Diagram:
    """Sequential composition of a chain, as a balanced tree.

    Balancing keeps the term depth logarithmic in the chain length, which
    matters for serialization of large synthesized diagrams.
    """
    if not diagrams:
        raise ValueError("compose() needs at least one diagram")
    if len(diagrams) == 1:
        return diagrams[0]
    mid = len(diagrams) // 2
    return seq(compose(*diagrams[:mid]), compose(*diagrams[mid:]))


def tensor(*diagrams: Diagram) -> Diagram:
    """Parallel composition of several diagrams, skipping empty units."""
    parts = [d for d in diagrams if not is_empty(d)]
    if not parts:
        return empty
    if len(parts) == 1:
        return parts[0]
    mid = len(parts) // 2
    return par(tensor(*parts[:mid]), tensor(*parts[mid:]))


def identity(n: int) -> Diagram:
    if n < 0:
        raise ArityError(f"negative wire count {n}")
    return tensor(*[wire] * n)


def permutation(perm: Sequence[int]) -> Diagram:
    """Diagram sending input wire ``p`` to output wire ``perm[p]``.

    Built from layers of adjacent swaps (odd-even transposition sort), so
    the depth is at most ``len(perm)``.
    """
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation: {list(perm)}")
    # current[k] is the destination of the wire now sitting at position k
    current = list(perm)
    layers = []
    for rnd in range(n):
        swaps = []
        for k in range(rnd % 2, n - 1, 2):
            if current[k] > current[k + 1]:
                current[k], current[k + 1] = current[k + 1], current[k]
                swaps.append(k)
        if not swaps:
            if current == sorted(current):
                break
            continue
        parts, pos = [], 0
        for k in swaps:
            parts += [identity(k - pos), swap]
            pos = k + 2
        parts.append(identity(n - pos))
        layers.append(tensor(*parts))
    return compose(*layers) if layers else identity(n)


# -- derived macros -------------------------------------------------------------

@dataclass(frozen=True)
class Macro:
    """Derived shorthand: ``NOT``, ``AND`` (with fan-in ``k``), basis
    states ``KET0``/``KET1``, effects ``BRA0``/``BRA1`` and ``SCALAR``."""

    kind: str
    k: int = 0
    a: complex = 1

    def __post_init__(self):
        if self.kind not in ("NOT", "AND", "KET0", "KET1", "BRA0", "BRA1", "SCALAR"):
            raise ValueError(f"unknown macro {self.kind!r}")
        if self.kind == "AND" and self.k < 0:
            raise ArityError(f"AND fan-in must be nonnegative, got {self.k}")


NOT = Macro("NOT")
KET0, KET1, BRA0, BRA1 = Macro("KET0"), Macro("KET1"), Macro("BRA0"), Macro("BRA1")


def AndGate(k: int) -> Macro:
    return Macro("AND", k=k)


def Scalar(a: complex) -> Macro:
    return Macro("SCALAR", a=complex(a))


def expand_and(k: int) -> Diagram:
    """AND over raw generators: ``T^-1 . Z(k->1, 1) . T^(x k)``.

    Each triangle sends ``|b>`` to ``|0> + b|1>``; the spider keeps
    ``|0> + (b1...bk)|1>`` and the inverse triangle turns that into
    ``|b1 and ... and bk>``.
    """
    if k == 0:
        return z_spider(0, 1, 1) >> triangle_inv
    return compose(tensor(*[triangle] * k), z_spider(k, 1, 1), triangle_inv)


def expand_macro(macro: Macro, raw: bool = False) -> Diagram:
    """Diagram for a macro.  ``AND`` stays a primitive node unless ``raw``."""
    kind = macro.kind
    if kind == "NOT":
        return x_spider(1, 1, pi=True)
    if kind == "AND":
        return expand_and(macro.k) if raw else and_gate(macro.k)
    if kind == "KET0":
        return z_spider(0, 1, 0)
    if kind == "BRA0":
        return z_spider(1, 0, 0)
    if kind == "KET1":
        return z_spider(0, 1, 0) >> x_spider(1, 1, pi=True)
    if kind == "BRA1":
        return x_spider(1, 1, pi=True) >> z_spider(1, 0, 0)
    return z_spider(0, 0, macro.a - 1)


not_gate = expand_macro(NOT)
ket0 = expand_macro(KET0)
ket1 = expand_macro(KET1)
bra0 = expand_macro(BRA0)
bra1 = expand_macro(BRA1)


def scalar(a: complex) -> Diagram:
    return expand_macro(Scalar(a))


def basis_state(bits: Sequence[int]) -> Diagram:
    """``|b_0 b_1 ...>`` with ``bits[0]`` on the leftmost wire."""
    return tensor(*[ket1 if b else ket0 for b in bits]) if bits else empty


# -- structural helpers -----------------------------------------------------------

def recompute_arity(d: Diagram) -> tuple[int, int]:
    """Arity computed from the leaves alone, checking every composition."""
    if isinstance(d, Gen):
        return d.gen.dom, d.gen.cod
    if isinstance(d, Seq):
        f, g = recompute_arity(d.first), recompute_arity(d.then)
        if f[1] != g[0]:
            raise ArityError(f"inner composition mismatch {f} >> {g}")
        return f[0], g[1]
    left, right = recompute_arity(d.left), recompute_arity(d.right)
    return left[0] + right[0], left[1] + right[1]


def census(d: Diagram) -> Counter:
    """Count generators by displayed name, e.g. ``{'AND(3)': 1, 'Z(1,2,1)': 3}``."""
    return Counter(str(g) for g in d.leaves())


def and_fan_ins(d: Diagram) -> list[int]:
    return [g.dom for g in d.leaves() if g.name == AND]


def transpose(d: Diagram) -> Diagram:
    """Transpose by bending wires: caps on the inputs, cups on the outputs."""
    n, m = d.dom, d.cod
    return compose(
        tensor(_nested_caps(n), identity(m)),
        tensor(identity(n), d, identity(m)),
        tensor(identity(n), _nested_cups(m)),
    )


def _nested_caps(n: int) -> Diagram:
    """State ``sum_x |x>|x>`` on ``2n`` wires (wire k paired with n+k)."""
    if n == 0:
        return empty
    # caps produce pairs (k, n+k) adjacent; route them into two blocks
    perm = []
    for k in range(n):
        perm += [k, n + k]
    return tensor(*[cap] * n) >> permutation(perm)


def _nested_cups(m: int) -> Diagram:
    if m == 0:
        return empty
    order = []
    for k in range(m):
        order += [k, m + k]
    # inverse routing: position order[p] goes to p
    perm = [0] * (2 * m)
    for p, src in enumerate(order):
        perm[src] = p
    return permutation(perm) >> tensor(*[cup] * m)


class Circuit:
    """Lay generators onto labelled wires and read the result as a diagram.

    >>> c = Circuit(["a", "b"])
    >>> c.apply(z_spider(1, 2), ["a"], ["a", "copy"])
    >>> d = c.finish(["a", "b", "copy"])   # 2 -> 3 wires
    """

    def __init__(self, labels: Sequence[Hashable]):
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate wire labels")
        self.wires = list(labels)
        self.layers: list[Diagram] = []

    def _route(self, target: list) -> None:
        if target != self.wires:
            pos = {w: k for k, w in enumerate(target)}
            self.layers.append(permutation([pos[w] for w in self.wires]))
        self.wires = target

    def apply(self, gate: Diagram, inputs: Sequence[Hashable],
              outputs: Sequence[Hashable]) -> None:
        inputs, outputs = list(inputs), list(outputs)
        if len(inputs) != gate.dom or len(outputs) != gate.cod:
            raise ArityError(
                f"gate is {gate.dom}->{gate.cod}, wired {len(inputs)}->{len(outputs)}")
        missing = [w for w in inputs if w not in self.wires]
        if missing:
            raise KeyError(f"no such wires: {missing}")
        rest = [w for w in self.wires if w not in inputs]
        clash = set(outputs) & set(rest)
        if clash:
            raise ValueError(f"output labels already in use: {sorted(map(str, clash))}")
        # gather the inputs just above the first of them
        at = min(self.wires.index(w) for w in inputs) if inputs else len(rest)
        before = [w for w in self.wires[:at] if w not in inputs]
        after = rest[len(before):]
        self._route(before + inputs + after)
        self.layers.append(tensor(identity(len(before)), gate, identity(len(after))))
        self.wires = before + outputs + after

    def finish(self, order: Sequence[Hashable]) -> Diagram:
        order = list(order)
        if sorted(map(repr, order)) != sorted(map(repr, self.wires)):
            raise ValueError(f"output order {order} does not match live wires {self.wires}")
        self._route(order)
        return compose(*self.layers) if self.layers else identity(len(order))
