"""Random terms and matrices shared by the tests."""

import numpy as np

from zxsynth.diagram import (cap, cup, hadamard, par, seq, swap, triangle, triangle_inv,
                             wire, x_spider, z_spider, and_gate, tensor, empty)

MAX_WIDTH = 5


def random_complex(rng, size=None, scale=1.0):
    return scale * (rng.normal(size=size) + 1j * rng.normal(size=size))


def random_leaf(rng, dom, integer=False):
    """A generator with the given input count and a small random output count."""
    a = complex(int(rng.integers(-2, 3)), int(rng.integers(-2, 3))) if integer \
        else complex(random_complex(rng))
    if dom == 0:
        choices = [cap, z_spider(0, int(rng.integers(0, 3)), a), x_spider(0, 1, bool(rng.integers(2)))]
    elif dom == 1:
        choices = [wire, hadamard, triangle, triangle_inv,
                   z_spider(1, int(rng.integers(0, 3)), a),
                   x_spider(1, int(rng.integers(0, 3)), bool(rng.integers(2))),
                   and_gate(1)]
    else:
        choices = [swap, cup, z_spider(2, int(rng.integers(0, 3)), a),
                   x_spider(2, int(rng.integers(0, 3)), bool(rng.integers(2))), and_gate(2)]
    return choices[int(rng.integers(len(choices)))]


def random_layer(rng, dom, integer=False):
    parts, left = [], dom
    while left:
        k = int(rng.integers(1, min(2, left) + 1))
        parts.append(random_leaf(rng, k, integer))
        left -= k
    if rng.random() < 0.2:
        parts.append(random_leaf(rng, 0, integer))
    return tensor(*parts) if parts else random_leaf(rng, 0, integer)


def random_term(rng, dom, depth=3, integer=False):
    """Random well-formed term with ``dom`` inputs and bounded width."""
    if depth == 0 or rng.random() < 0.25:
        d = random_layer(rng, dom, integer)
        return d if d.cod <= MAX_WIDTH else seq(d, z_spider(d.cod, 1, 1))
    if rng.random() < 0.5 and dom >= 1:
        k = int(rng.integers(0, dom + 1))
        left = random_term(rng, k, depth - 1, integer)
        right = random_term(rng, dom - k, depth - 1, integer)
        d = par(left, right)
        return d if d.cod <= MAX_WIDTH else seq(d, z_spider(d.cod, 2, 1))
    first = random_term(rng, dom, depth - 1, integer)
    return seq(first, random_term(rng, first.cod, depth - 1, integer))


def random_rank_matrix(rng, rows, cols, rank):
    return random_complex(rng, (rows, rank)) @ random_complex(rng, (rank, cols))
