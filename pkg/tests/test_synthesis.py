import pytest
from hypothesis import given, strategies as st

from protrusion_lab.equivalence import enumerate_representative_functions, equivalent
from protrusion_lab.oracle import BoundaryFunction, boundary_function, boundary_function_brute
from protrusion_lab.synthesis import realize_function, realized_size, verify_realization


def test_trivial_function():
    g = realize_function(BoundaryFunction(1, (0, 0)))
    assert g.n == 2 and g.edges == frozenset({(0, 1)})


def test_single_block():
    g = realize_function(BoundaryFunction(1, (0, 1)))
    assert g.n == 3
    assert g.neighbors[2] == (1,)
    assert boundary_function_brute(g).values == (1, 2)


def test_rejects_non_representative():
    with pytest.raises(ValueError):
        realize_function(BoundaryFunction(1, (0, 2)))


@pytest.mark.parametrize("t", [1, 2])
def test_raw_values_are_shifted_by_t(t):
    for f in enumerate_representative_functions(t):
        g = realize_function(f)
        assert g.n == realized_size(f)
        assert boundary_function_brute(g).values == tuple(t + v for v in f.values)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_verify_realization_everywhere(t):
    assert all(verify_realization(f) for f in enumerate_representative_functions(t))


@given(st.sampled_from(enumerate_representative_functions(3)),
       st.sampled_from(enumerate_representative_functions(3)))
def test_distinct_functions_realize_inequivalent_graphs(f, h):
    r = equivalent(realize_function(f), realize_function(h))
    assert bool(r) == (f == h)


def test_boundary_is_independent():
    for f in enumerate_representative_functions(3):
        assert realize_function(f).boundary_is_independent()
