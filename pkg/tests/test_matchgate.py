import warnings

import numpy as np
import pytest

from zxsynth.interpreter import interpret, relative_error
from zxsynth.matchgate import (MatchgateSpec, MatchgateWarning, matchgate_diagram,
                               matchgate_matrix, random_su2, route, su2)

from helpers import random_complex

C = 1 / np.sqrt(2)
ROT = np.array([[C, -C], [C, C]])


def test_identity():
    spec = MatchgateSpec(np.eye(2), np.eye(2))
    np.testing.assert_array_equal(matchgate_matrix(spec), np.eye(4))
    assert relative_error(interpret(matchgate_diagram(spec)), np.eye(4)) <= 1e-12


def test_outer_flip():
    spec = MatchgateSpec([[0, 1], [1, 0]], np.eye(2))
    expected = np.eye(4)[[3, 1, 2, 0]]
    np.testing.assert_array_equal(matchgate_matrix(spec), expected)
    assert route(spec) == "fallback"
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MatchgateWarning)
        got = interpret(matchgate_diagram(spec))
    assert relative_error(got, expected) <= 1e-9


def test_rotation_placement():
    spec = MatchgateSpec(ROT, np.eye(2))
    g = matchgate_matrix(spec)
    assert (g[0, 0], g[0, 3], g[3, 0], g[3, 3]) == (C, -C, C, C)
    np.testing.assert_array_equal(g[1:3, 1:3], np.eye(2))
    assert relative_error(interpret(matchgate_diagram(spec)), g) <= 1e-12


def test_composition_law(rng):
    for _ in range(10):
        a1, a2, b1, b2 = (random_complex(rng, (2, 2)) for _ in range(4))
        lhs = matchgate_matrix(MatchgateSpec(a1 @ a2, b1 @ b2))
        rhs = matchgate_matrix(MatchgateSpec(a1, b1)) @ matchgate_matrix(MatchgateSpec(a2, b2))
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_su2_pairs(rng):
    for _ in range(30):
        a, b = random_su2(rng), random_su2(rng)
        np.testing.assert_allclose(a @ a.conj().T, np.eye(2), atol=1e-12)
        assert abs(np.linalg.det(a) - 1) < 1e-12
        spec = MatchgateSpec(a, b)
        assert spec.is_strict
        with warnings.catch_warnings():
            warnings.simplefilter("error", MatchgateWarning)
            d = matchgate_diagram(spec)
        assert relative_error(interpret(d), matchgate_matrix(spec)) <= 1e-9


def test_general_invertible_warns_but_verifies(rng):
    a, b = random_complex(rng, (2, 2)), random_complex(rng, (2, 2))
    a[0, 0], b[0, 0] = 1.0, 0.5j
    spec = MatchgateSpec(a, b)
    assert not spec.is_strict
    with pytest.warns(MatchgateWarning):
        d = matchgate_diagram(spec)
    assert relative_error(interpret(d), matchgate_matrix(spec)) <= 1e-9


@pytest.mark.parametrize("which", ["A", "B", "both"])
def test_degenerate_corner_falls_back(which):
    a = su2(np.pi / 2, 0.3, 1.1) if which in ("A", "both") else su2(0.4, 0.2, 0.9)
    b = su2(np.pi / 2, 2.0, 0.5) if which in ("B", "both") else su2(0.7, 1.3, 0.1)
    a[0, 0] = 0 if which in ("A", "both") else a[0, 0]
    b[0, 0] = 0 if which in ("B", "both") else b[0, 0]
    spec = MatchgateSpec(a, b)
    assert route(spec) == "fallback"
    d = matchgate_diagram(spec)
    assert relative_error(interpret(d), matchgate_matrix(spec)) <= 1e-9


def test_spec_validation():
    with pytest.raises(ValueError):
        MatchgateSpec(np.eye(3), np.eye(2))
    with pytest.raises(ValueError):
        MatchgateSpec(np.ones((2, 2)), np.eye(2))
    with pytest.raises(ValueError):
        MatchgateSpec([[np.nan, 0], [0, 1]], np.eye(2))
