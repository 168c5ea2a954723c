"""
Generators and their matrices
=============================

Build a few small diagrams by hand and look at the matrices they stand for.
"""

import numpy as np

from zxsynth import (and_gate, basis_state, cap, cup, hadamard, interpret, not_gate, par,
                     wire, x_spider, z_spider)

np.set_printoptions(precision=3, suppress=True)

# a Z spider with two inputs and one output merges equal bits
print(interpret(z_spider(2, 1)).real)

# the X spider with one input and two outputs copies classical bits
print(interpret(x_spider(1, 2)).real)

# the Hadamard is unnormalized, so it squares to twice the identity
print(interpret(hadamard >> hadamard).real)

# bending a wire twice gives back a straight wire
snake = par(cap, wire) >> par(wire, cup)
print(np.array_equal(interpret(snake), np.eye(2)))

# par is the Kronecker product, leftmost wire most significant
print(np.array_equal(interpret(par(not_gate, wire)), np.kron([[0, 1], [1, 0]], np.eye(2))))

# |110> is basis vector 6
print(np.flatnonzero(interpret(basis_state([1, 1, 0]))))

# AND(3) sends each basis state to the conjunction of its bits
print(interpret(and_gate(3)).real.astype(int))
