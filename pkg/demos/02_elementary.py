"""
Elementary row operations as diagrams
=====================================

Each of the three kinds of elementary matrix on eight rows, built from
spiders and an AND gate, then compared against the matrix written out
entry by entry.
"""

import numpy as np

from zxsynth import ElementaryOp, diagram_for, interpret, oracle_matrix
from zxsynth.diagram import census

ops = [
    ElementaryOp.mul(3, 1, 1 / 5),     # divide row 1 by 5
    ElementaryOp.add(3, 1, 2, 3),      # add twice row 1 to row 3
    ElementaryOp.swap(3, 1, 7),        # exchange rows 1 and 7
]

for op in ops:
    d = diagram_for(op)
    err = np.max(np.abs(interpret(d) - oracle_matrix(op)))
    ands = [k for k in census(d) if k.startswith("AND")]
    print(f"{str(op):18s} generators={d.size:3d}  {ands}  error={err:.1e}")

# the row-add matrix itself
print(interpret(diagram_for(ops[1])).real.astype(int))

# column operations act from the right
col = ElementaryOp.add(3, 1, 2, 3, side="col")
a = np.arange(64.0).reshape(8, 8)
print(np.allclose(a @ interpret(diagram_for(col)), a @ oracle_matrix(col)))
