"""
Any matrix as a diagram
=======================

Reduce a random complex matrix to standard form with elementary row and
column operations, then undo those operations around the standard form
to get a diagram that evaluates back to the matrix.
"""

import numpy as np

from zxsynth import eliminate, interpret, relative_error
from zxsynth.synthesis import plan_diagram

rng = np.random.default_rng(0)

# the two-by-two case, where the steps can be followed by hand
a = np.array([[4.0, 1.0], [2.0, 3.0]])
plan = eliminate(a)
print("row ops:", [str(op) for op in plan.row_ops])
print("col ops:", [str(op) for op in plan.col_ops])
print(np.round(plan.replay(a), 12).real)

# a rank-deficient 8x4 matrix
b = (rng.normal(size=(8, 2)) + 1j * rng.normal(size=(8, 2))) @ \
    (rng.normal(size=(2, 4)) + 1j * rng.normal(size=(2, 4)))
plan = eliminate(b)
d = plan_diagram(plan)
print("rank", plan.rank, "ops", plan.counts())
print("dom", d.dom, "cod", d.cod, "generators", d.size)
print("relative error", relative_error(interpret(d), b))
