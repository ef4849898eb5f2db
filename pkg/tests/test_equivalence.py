import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import boundaried_graphs
from protrusion_lab.equivalence import (KNOWN_DEDEKIND, DerivedFunction, MonotoneBoolFunction,
                                        MonotoneCNF, RepresentativeFunction, compare_functions,
                                        count_monotone_brute, count_representative_functions_brute,
                                        decode_derived, dedekind, encode_derived,
                                        enumerate_monotone_functions,
                                        enumerate_representative_functions, equivalent,
                                        is_representative, maximal_zero_sets,
                                        monotone_to_cnf, monotone_to_representative,
                                        satisfies_exchange_bound, stirling_bound)
from protrusion_lab.graph import BoundariedGraph, add_isolated, glue, indicator_graph
from protrusion_lab.oracle import (BoundaryFunction, CapacityError, boundary_function,
                                   max_independent_set)

# frozen from enumerate_representative_functions, t = 0..4; t <= 3 also by the brute filter
REPRESENTATIVE_COUNTS = (1, 2, 6, 38, 990)


def bf(t, *vals):
    return BoundaryFunction(t, vals)


# -- representative functions -------------------------------------------------

@pytest.mark.parametrize("t,vals,ok", [
    (1, (0, 1), True), (1, (0, 2), False), (2, (0, 1, 1, 0), False), (1, (0, 0), True),
    (2, (0, 1, 1, 2), True), (2, (1, 1, 1, 1), False), (2, (0, 1, 0, 2), False),
])
def test_is_representative_examples(t, vals, ok):
    assert is_representative(bf(t, *vals)) == ok


def test_representative_function_validates():
    with pytest.raises(ValueError):
        RepresentativeFunction(1, (0, 2))
    f = RepresentativeFunction(2, (0, 1, 0, 1))
    assert RepresentativeFunction.from_dict(f.to_dict()) == f


def test_enumeration_small_cases():
    assert [f.values for f in enumerate_representative_functions(1)] == [(0, 0), (0, 1)]
    assert len(enumerate_representative_functions(2)) == 6


@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_enumeration_matches_brute_filter(t):
    assert len(enumerate_representative_functions(t)) == count_representative_functions_brute(t)
    assert len(enumerate_representative_functions(t)) == REPRESENTATIVE_COUNTS[t]


def test_enumeration_t4_frozen_and_bounds():
    funcs = enumerate_representative_functions(4)
    assert len(funcs) == REPRESENTATIVE_COUNTS[4]
    assert len(set(funcs)) == len(funcs)
    for t, c in enumerate(REPRESENTATIVE_COUNTS):
        assert KNOWN_DEDEKIND[t] - 1 <= c <= 2 ** (2 ** t - 1)


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_representative_functions(5)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_representatives_satisfy_exchange_bound(t):
    for f in enumerate_representative_functions(t):
        assert satisfies_exchange_bound(f)
        assert max(f.values) <= t


@given(boundaried_graphs(max_n=8))
def test_normalized_boundary_functions_are_representative(g):
    from protrusion_lab.oracle import normalize
    assert is_representative(normalize(boundary_function(g)))


# -- equivalence --------------------------------------------------------------

def test_equivalence_examples():
    lone = BoundariedGraph(1, [], (0,))
    pendant = BoundariedGraph(2, [(0, 1)], (0,))
    assert equivalent(lone, lone).to_dict() == {"equivalent": True, "delta": 0}
    r = equivalent(lone, pendant)
    assert not r and r.witness == 1
    r = equivalent(pendant, add_isolated(pendant))
    assert r and r.delta == -1


def test_compare_rejects_mismatched_boundaries():
    with pytest.raises(ValueError):
        compare_functions(bf(1, 0, 1), bf(2, 0, 1, 1, 1))


@given(boundaried_graphs(max_n=6), st.data())
def test_equivalence_is_behaviourally_sound(g, data):
    h = data.draw(boundaried_graphs(t=g.t, max_n=6))
    r = equivalent(g, h)
    shifts = {max_independent_set(glue(g, indicator_graph(g.t, s)))
              - max_independent_set(glue(h, indicator_graph(g.t, s))) for s in range(1 << g.t)}
    if r:
        assert shifts == {r.delta}
    else:
        assert len(shifts) > 1


@given(boundaried_graphs(max_n=6))
def test_equivalence_is_reflexive_and_shift_invariant(g):
    assert equivalent(g, g).delta == 0
    assert equivalent(add_isolated(g, 2), g).delta == 2


# -- derived encoding ---------------------------------------------------------

def test_derived_examples():
    assert encode_derived(bf(1, 0, 1)).bits == (0, 1)
    assert encode_derived(bf(1, 0, 0)).bits == (0, 0)
    assert encode_derived(bf(2, 0, 1, 1, 2)).bits == (0, 1, 1, 1)
    assert decode_derived(DerivedFunction(1, (0, 1))).values == (0, 1)
    d = decode_derived(DerivedFunction(2, (0, 0, 0, 1)))
    assert d.values == (0, 0, 0, 1) and is_representative(d)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_derived_round_trip(t):
    for f in enumerate_representative_functions(t):
        assert decode_derived(encode_derived(f)).values == f.values


def test_derived_validation():
    with pytest.raises(ValueError):
        DerivedFunction(1, (1, 0))
    with pytest.raises(ValueError):
        DerivedFunction(1, (0, 2))
    with pytest.raises(ValueError):
        encode_derived(bf(1, 0, 2))


# -- monotone functions -------------------------------------------------------

@pytest.mark.parametrize("t,count", list(enumerate(KNOWN_DEDEKIND[:6])))
def test_dedekind_small(t, count):
    assert dedekind(t) == count


@pytest.mark.parametrize("t", [0, 1, 2, 3, 4])
def test_dedekind_matches_brute(t):
    assert dedekind(t) == count_monotone_brute(t) == len(enumerate_monotone_functions(t))


def test_dedekind_limit_and_capacity():
    with pytest.raises(CapacityError):
        dedekind(5, limit=1000)
    with pytest.raises(CapacityError):
        dedekind(7)
    seen = []
    dedekind(5, progress=lambda done, total: seen.append((done, total)))
    assert seen[-1][0] == seen[-1][1] == KNOWN_DEDEKIND[4]


@pytest.mark.slow
def test_dedekind_six():
    assert dedekind(6) == 7828354


def test_monotone_validation():
    with pytest.raises(ValueError):
        MonotoneBoolFunction(1, (1, 0))
    f = MonotoneBoolFunction(2, (0, 1, 1, 1))
    assert f.truth_table == 0b1110
    assert MonotoneBoolFunction.from_truth_table(2, 0b1110) == f


def test_monotone_to_representative():
    assert monotone_to_representative(MonotoneBoolFunction(2, (0, 0, 0, 0))).values == (0,) * 4
    assert monotone_to_representative(MonotoneBoolFunction(2, (0, 1, 1, 1))).values == (0, 1, 1, 1)
    admissible = [f for f in enumerate_monotone_functions(2) if f(0) == 0]
    images = {monotone_to_representative(f).values for f in admissible}
    assert len(admissible) == len(images) == 5
    with pytest.raises(ValueError):
        monotone_to_representative(MonotoneBoolFunction(1, (1, 1)))


def test_cnf_examples():
    orf = MonotoneBoolFunction(2, (0, 1, 1, 1))
    andf = MonotoneBoolFunction(2, (0, 0, 0, 1))
    maj = MonotoneBoolFunction(3, tuple(int(bin(s).count("1") >= 2) for s in range(8)))
    assert monotone_to_cnf(orf).clauses == ((1, 2),)
    assert sorted(monotone_to_cnf(andf).clauses) == [(1,), (2,)]
    assert sorted(monotone_to_cnf(maj).clauses) == [(1, 2), (1, 3), (2, 3)]
    assert maximal_zero_sets(orf) == [0]


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_cnf_round_trip_for_all_nonconstant(t):
    for f in enumerate_monotone_functions(t):
        if f.is_constant:
            continue
        cnf = monotone_to_cnf(f)
        assert cnf.to_function() == f
        # clauses form an antichain
        for a, b in itertools.permutations(cnf.clauses, 2):
            assert not set(a) <= set(b)


def test_cnf_validation():
    with pytest.raises(ValueError):
        MonotoneCNF(2, ((),))
    with pytest.raises(ValueError):
        MonotoneCNF(2, ((3,),))
    with pytest.raises(ValueError):
        monotone_to_cnf(MonotoneBoolFunction(1, (0, 0)))


# -- counting estimates -------------------------------------------------------

# frozen from the exact integer computation
STIRLING = (1, 2, 3, 4, 8, 14, 25, 46, 86, 162, 309, 592, 1137, 2190, 4231, 8192)


@pytest.mark.parametrize("t", range(1, 17))
def test_stirling_bound(t):
    k = stirling_bound(t)
    assert k == STIRLING[t - 1]
    assert k * k * 4 * t >= 4 ** t > (k - 1) * (k - 1) * 4 * t
    c = __import__("math").comb(t, t // 2)
    assert c >= k


def test_antichain_inequality_at_six():
    assert 2 ** 20 <= KNOWN_DEDEKIND[6]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_decode_of_arbitrary_tables(t):
    # exactly the encodings of representative functions decode to representative ones
    size = 1 << t
    good = set()
    for b in range(1 << (size - 1)):
        d = DerivedFunction(t, (0,) + tuple(b >> i & 1 for i in range(size - 1)))
        f = decode_derived(d)
        if is_representative(f):
            good.add(f.values)
            assert encode_derived(f) == d
    assert good == {f.values for f in enumerate_representative_functions(t)}
    if t == 2:
        assert not is_representative(decode_derived(DerivedFunction(2, (0, 1, 0, 0))))
