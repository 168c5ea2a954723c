import itertools

import numpy as np
import pytest

from zxsynth.diagram import and_fan_ins, transpose
from zxsynth.elementary import (ADD, COL, MUL, ROW, SWAP, ElementaryOp, bits, diagram_add,
                                diagram_for, diagram_mul, diagram_swap, differing_bits,
                                oracle_matrix)
from zxsynth.interpreter import interpret, max_abs_error

from helpers import random_complex

TOL = 1e-12


def _example_1():
    # divide row 1 by 5; the printed version also shows a stray 1 at row 6,
    # column 4, which contradicts the definition and is left out
    out = np.eye(8, dtype=complex)
    out[1, 1] = 1 / 5
    return out


def _example_2():
    # add 2 * row 1 to row 3 (same stray entry dropped)
    out = np.eye(8, dtype=complex)
    out[3, 1] = 2
    return out


def _example_3():
    out = np.eye(8, dtype=complex)
    out[[1, 7]] = out[[7, 1]]
    return out


def test_examples_written_out():
    e1 = np.diag([1, 1 / 5, 1, 1, 1, 1, 1, 1])
    np.testing.assert_array_equal(_example_1(), e1)
    assert _example_2()[3].tolist() == [0, 2, 0, 1, 0, 0, 0, 0]
    assert _example_3()[1].tolist() == [0, 0, 0, 0, 0, 0, 0, 1]
    assert _example_3()[7].tolist() == [0, 1, 0, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("op,expected", [
    (ElementaryOp.mul(3, 1, 1 / 5), _example_1()),
    (ElementaryOp.add(3, 1, 2, 3), _example_2()),
    (ElementaryOp.swap(3, 1, 7), _example_3()),
])
def test_oracle_examples(op, expected):
    np.testing.assert_array_equal(oracle_matrix(op), expected)


def test_diagram_examples():
    assert max_abs_error(interpret(diagram_mul(3, 1, 1 / 5)), _example_1()) <= TOL
    assert max_abs_error(interpret(diagram_add(3, 1, 2, 3)), _example_2()) <= TOL
    assert max_abs_error(interpret(diagram_swap(3, 1, 7)), _example_3()) <= TOL


def test_example_bit_bookkeeping():
    assert bits(3, 3) == [1, 1, 0]
    assert differing_bits(1, 3) == [1]
    assert differing_bits(1, 7) == [1, 2]


def test_small_cases():
    np.testing.assert_array_equal(interpret(diagram_mul(2, 0, 1)), np.eye(4))
    np.testing.assert_array_equal(interpret(diagram_mul(2, 3, 0)), np.diag([1, 1, 1, 0]))
    np.testing.assert_array_equal(interpret(diagram_add(2, 2, 0, 1)), np.eye(4))
    np.testing.assert_array_equal(interpret(diagram_swap(1, 0, 1)), [[0, 1], [1, 0]])
    a = 0.3 + 2j
    np.testing.assert_allclose(interpret(diagram_add(1, 0, a, 1)), [[1, 0], [a, 1]], atol=TOL)
    np.testing.assert_allclose(interpret(diagram_add(1, 1, a, 0)), [[1, a], [0, 1]], atol=TOL)
    np.testing.assert_allclose(interpret(diagram_mul(1, 0, a)), [[a, 0], [0, 1]], atol=TOL)
    np.testing.assert_allclose(interpret(diagram_mul(1, 1, a)), [[1, 0], [0, a]], atol=TOL)


def test_two_wire_swap_of_opposite_corners():
    expected = np.eye(4)[[3, 1, 2, 0]]
    np.testing.assert_array_equal(interpret(diagram_swap(2, 0, 3)), expected)
    np.testing.assert_array_equal(interpret(diagram_swap(2, 1, 2)), np.eye(4)[[0, 2, 1, 3]])


def _all_ops(m, rng, side=ROW, samples=2):
    size = 2 ** m
    for i in range(size):
        for a in random_complex(rng, samples):
            yield ElementaryOp.mul(m, i, a, side)
        yield ElementaryOp.mul(m, i, 0, side)
        for j in range(size):
            if i == j:
                continue
            yield ElementaryOp.swap(m, i, j, side)
            for a in random_complex(rng, samples):
                yield ElementaryOp.add(m, i, a, j, side)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("side", [ROW, COL])
def test_soundness_exhaustive(m, side, rng):
    for op in _all_ops(m, rng, side):
        got = interpret(diagram_for(op))
        assert max_abs_error(got, oracle_matrix(op)) <= TOL, str(op)


def test_column_dispatch():
    a = 1.5 - 0.25j
    col = ElementaryOp.add(1, 0, a, 1, COL)
    np.testing.assert_allclose(interpret(diagram_for(col)), [[1, a], [0, 1]], atol=TOL)
    assert diagram_for(col) == diagram_add(1, 1, a, 0)
    assert diagram_for(ElementaryOp.mul(2, 1, a, COL)) == diagram_mul(2, 1, a)
    assert diagram_for(ElementaryOp.swap(2, 1, 3, COL)) == diagram_swap(2, 1, 3)


def test_column_oracle_acts_on_the_right(rng):
    a = random_complex(rng, (4, 4))
    op = ElementaryOp.add(2, 1, 3.0, 2, COL)
    expected = a.copy()
    expected[:, 2] += 3.0 * a[:, 1]
    np.testing.assert_allclose(a @ oracle_matrix(op), expected)


def _grid(m):
    size = 2 ** m
    return [(i, j) for i in range(size) for j in range(size) if i != j]


def _mat(d):
    return interpret(d)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_mul_inverse(m, rng):
    for i in range(2 ** m):
        a = complex(random_complex(rng))
        f, g = _mat(diagram_mul(m, i, a)), _mat(diagram_mul(m, i, 1 / a))
        assert max_abs_error(f @ g, np.eye(2 ** m)) <= TOL
        assert max_abs_error(g @ f, np.eye(2 ** m)) <= TOL


@pytest.mark.parametrize("m", [1, 2, 3])
def test_add_inverse(m, rng):
    for i, j in _grid(m):
        a = complex(random_complex(rng))
        f, g = _mat(diagram_add(m, i, a, j)), _mat(diagram_add(m, i, -a, j))
        assert max_abs_error(f @ g, np.eye(2 ** m)) <= TOL
        assert max_abs_error(g @ f, np.eye(2 ** m)) <= TOL


@pytest.mark.parametrize("m", [1, 2, 3])
def test_swap_involution(m):
    for i, j in _grid(m):
        f = _mat(diagram_swap(m, i, j))
        assert max_abs_error(f @ f, np.eye(2 ** m)) <= TOL


@pytest.mark.parametrize("m", [1, 2])
def test_transposes(m, rng):
    # checked on matrices and on the diagrams themselves, bent with caps and cups
    for i in range(2 ** m):
        a = complex(random_complex(rng))
        d = diagram_mul(m, i, a)
        assert max_abs_error(_mat(d).T, _mat(d)) <= TOL
        assert max_abs_error(_mat(transpose(d)), _mat(d)) <= TOL
    for i, j in _grid(m):
        a = complex(random_complex(rng))
        d = diagram_add(m, i, a, j)
        assert max_abs_error(_mat(d).T, _mat(diagram_add(m, j, a, i))) <= TOL
        assert max_abs_error(_mat(transpose(d)), _mat(diagram_add(m, j, a, i))) <= TOL
        s = diagram_swap(m, i, j)
        assert max_abs_error(_mat(s).T, _mat(s)) <= TOL
        assert max_abs_error(_mat(transpose(s)), _mat(s)) <= TOL


def test_transposes_three_wires(rng):
    for i, j in _grid(3):
        a = complex(random_complex(rng))
        assert max_abs_error(_mat(diagram_mul(3, i, a)).T, _mat(diagram_mul(3, i, a))) <= TOL
        assert max_abs_error(_mat(diagram_add(3, i, a, j)).T,
                             _mat(diagram_add(3, j, a, i))) <= TOL
        assert max_abs_error(_mat(diagram_swap(3, i, j)).T, _mat(diagram_swap(3, i, j))) <= TOL


@pytest.mark.parametrize("m", [1, 2, 3])
def test_mul_multiplicative(m, rng):
    for i in range(2 ** m):
        a, b = random_complex(rng, 2)
        lhs = _mat(diagram_mul(m, i, a)) @ _mat(diagram_mul(m, i, b))
        assert max_abs_error(lhs, _mat(diagram_mul(m, i, a * b))) <= TOL


@pytest.mark.parametrize("m", [1, 2, 3])
def test_add_additive(m, rng):
    for i, j in _grid(m):
        a, b = random_complex(rng, 2)
        lhs = _mat(diagram_add(m, i, a, j)) @ _mat(diagram_add(m, i, b, j))
        assert max_abs_error(lhs, _mat(diagram_add(m, i, a + b, j))) <= TOL


@pytest.mark.parametrize("m", [1, 2, 3])
def test_mul_on_basis_vectors(m, rng):
    for i in range(2 ** m):
        a = complex(random_complex(rng))
        f = _mat(diagram_mul(m, i, a))
        for c in range(2 ** m):
            e = np.eye(2 ** m)[:, c]
            expected = a * e if c == i else e
            assert max_abs_error(f @ e, expected) <= TOL


@pytest.mark.parametrize("m", [2, 3, 4])
def test_and_fan_in_census(m):
    for i, j in itertools.islice(_grid(m), 12):
        assert and_fan_ins(diagram_mul(m, i, 2)) == [m]
        assert and_fan_ins(diagram_add(m, i, 2, j)) == [m]
        assert and_fan_ins(diagram_swap(m, i, j)) == [m - 1]


def test_op_validation():
    with pytest.raises(IndexError):
        ElementaryOp.mul(2, 4, 1)
    with pytest.raises(ValueError):
        ElementaryOp.add(2, 1, 1, 1)
    with pytest.raises(ValueError):
        ElementaryOp.swap(2, 3, 3)
    with pytest.raises(ValueError):
        ElementaryOp.add(0, 0, 1, 0)
    with pytest.raises(ValueError):
        ElementaryOp("rotate", 1, 0)
    with pytest.raises(IndexError):
        diagram_add(2, 0, 1, 7)
    with pytest.raises(ZeroDivisionError):
        ElementaryOp.mul(1, 0, 0).inverse()


def test_inverse_ops():
    assert ElementaryOp.mul(2, 1, 4).inverse() == ElementaryOp.mul(2, 1, 0.25)
    assert ElementaryOp.add(2, 1, 4, 0).inverse().a == -4
    op = ElementaryOp.swap(2, 1, 3, COL)
    assert op.inverse() == op
    assert {op.kind for op in (ElementaryOp.mul(1, 0, 1), op)} == {MUL, SWAP}
    assert ElementaryOp.add(1, 0, 1, 1).kind == ADD
    assert str(ElementaryOp.add(2, 0, 2, 3, COL)) == "C_0x(2+0j)+3"
