"""Algebraic ZX diagrams for elementary and arbitrary 2**m x 2**n matrices."""

from .diagram import (AndGate, Circuit, Diagram, Gen, Generator, Macro, Par, Scalar, Seq,
                      and_gate, basis_state, bra0, bra1, cap, compose, cup, empty,
                      expand_macro, hadamard, identity, ket0, ket1, not_gate, par,
                      permutation, scalar, seq, swap, tensor, transpose, triangle,
                      triangle_inv, wire, x_spider, z_spider)
from .elementary import (COL, ROW, ElementaryOp, diagram_add, diagram_for, diagram_mul,
                         diagram_swap, oracle_matrix)
from .interpreter import interpret, matrices_close, relative_error
from .matchgate import MatchgateSpec, matchgate_diagram, matchgate_matrix
from .serialization import deserialize, serialize
from .synthesis import SynthesisPlan, eliminate, standard_form_diagram, synthesize

__version__ = "0.1.0"
