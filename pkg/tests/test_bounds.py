import pytest

from hilbreg import (
    abhyankar_bound,
    bound_polynomial,
    cm_tangent_cone_bound,
    h1_bound_check,
    kleiman_bounds,
    local_mumford_bound,
    parameter_hf_bound,
)
from hilbreg.bounds import all_bounds
from hilbreg.unipoly import UniPoly

X = UniPoly.X()


def test_F_polynomials():
    assert bound_polynomial("F", 1).poly == X
    F2 = bound_polynomial("F", 2)
    assert F2.poly == X * X + 2 * X and F2.value(1) == 3
    for d in range(1, 6):
        assert bound_polynomial("F", d).value(0) == 0


def test_Q_polynomials():
    assert bound_polynomial("Q", 1).poly == X - 1
    assert bound_polynomial("Q", 2).poly == X * X
    assert bound_polynomial("Q", 3).value(2) == 29


def test_bad_family():
    with pytest.raises(ValueError):
        bound_polynomial("G", 2)
    with pytest.raises(ValueError):
        bound_polynomial("F", 0)


def test_kleiman():
    assert kleiman_bounds(1, 3) == (2, 3)
    assert kleiman_bounds(2, 2) == (3, 4)
    for d in range(1, 5):
        assert kleiman_bounds(d, 1) == (0, d)


def test_h1_bound_check():
    assert h1_bound_check([0, 0, 0], 1, 2)
    assert h1_bound_check([1], 1, 2)
    assert not h1_bound_check([2], 1, 3)


def test_parameter_bound():
    assert parameter_hf_bound([1, 2, 2, 2, 2], 1, 2)
    assert parameter_hf_bound([n + 1 for n in range(8)], 2, 1)
    assert not parameter_hf_bound([1, 10], 1, 2)


def test_local_mumford():
    assert local_mumford_bound([1] * 5, 0) == 1
    assert local_mumford_bound([1, 2, 2, 2], 1) == 4 == cm_tangent_cone_bound(2, 2)
    assert local_mumford_bound([1, 3, 3, 3], 2) == 9 == bound_polynomial("Q", 2).value(3)
    with pytest.raises(IndexError):
        local_mumford_bound([1, 2], 5)


def test_cm_and_abhyankar():
    for e in range(1, 6):
        assert cm_tangent_cone_bound(1, e) == e - 1
    assert cm_tangent_cone_bound(2, 2) == 4
    assert abhyankar_bound(2, 2) == 3


def test_all_bounds_table():
    b = all_bounds(2, 2)
    assert b["F_d(e-1)"] == 3 and b["embdim<=ed"] == 4 and b["Q_d(e)"] == 4
