"""GraphViz export.

Generators become nodes and wires become edges, so an AND gate with fan-in
``k`` shows ``k`` incoming edges.  Identity wires and swaps carry no node;
they only reroute edges.

    dot -Tpng diagram.dot -o diagram.png
"""

from __future__ import annotations

from .diagram import AND, CAP, CUP, H, ID, SWAP, TRI, TRI_INV, X, Z, Diagram, Gen, Seq

_STYLE = {
    Z: 'shape=circle, style=filled, fillcolor="#99dd99"',
    X: 'shape=circle, style=filled, fillcolor="#ff8888"',
    H: 'shape=square, style=filled, fillcolor="#ffff66"',
    TRI: 'shape=triangle, style=filled, fillcolor="#ffffff"',
    TRI_INV: 'shape=invtriangle, style=filled, fillcolor="#ffffff"',
    AND: 'shape=box, style=filled, fillcolor="#dddddd"',
    CAP: "shape=point",
    CUP: "shape=point",
}


def _label(gen) -> str:
    if gen.name == Z:
        a = gen.param
        if a == 1:
            return ""
        return f"{a.real:.4g}" if a.imag == 0 else f"{a.real:.4g}{a.imag:+.4g}i"
    if gen.name == X:
        return "π" if gen.param else ""
    if gen.name == AND:
        return f"AND/{gen.dom}"
    if gen.name == TRI_INV:
        return "-1"
    return "" if gen.name in (TRI, CAP, CUP) else gen.name


def to_dot(d: Diagram, name: str = "diagram") -> str:
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [fontsize=10];"]
    counter = [0]

    def node(attrs: str) -> str:
        counter[0] += 1
        ident = f"n{counter[0]}"
        lines.append(f"  {ident} [{attrs}];")
        return ident

    def edge(src, dst):
        lines.append(f"  {src} -> {dst} [arrowhead=none];")

    def trace(sub: Diagram, ports: list) -> list:
        if isinstance(sub, Seq):
            return trace(sub.then, trace(sub.first, ports))
        if not isinstance(sub, Gen):
            k = sub.left.dom
            return trace(sub.left, ports[:k]) + trace(sub.right, ports[k:])
        gen = sub.gen
        if gen.name == ID:
            return ports
        if gen.name == SWAP:
            return ports[::-1]
        ident = node(f'label="{_label(gen)}", {_STYLE[gen.name]}')
        for p in ports:
            edge(p, ident)
        return [ident] * gen.cod

    inputs = [node(f'label="in{k}", shape=plaintext') for k in range(d.dom)]
    outputs = trace(d, inputs)
    for k, src in enumerate(outputs):
        edge(src, node(f'label="out{k}", shape=plaintext'))
    lines.append("}")
    return "\n".join(lines) + "\n"
