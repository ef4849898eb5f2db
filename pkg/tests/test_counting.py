import json
import math

import pytest

from protrusion_lab.counting import (MODELS, count_boundaried_planar, critical_size_bound,
                                     cumulative_exact_counts, load_planar_counts, planar_counts)
from protrusion_lab.equivalence import KNOWN_DEDEKIND
from protrusion_lab.oracle import CapacityError


def test_small_counts():
    assert count_boundaried_planar(1, 1) == 1
    assert count_boundaried_planar(2, 2) == 2
    assert count_boundaried_planar(1, 2) == 2


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 33)])
def test_unlabeled_counts_match_data_file(n, expected):
    assert count_boundaried_planar(0, n, "exhaustive") == expected == planar_counts()[n - 1]


@pytest.mark.parametrize("t,n", [(0, 4), (1, 3), (1, 4), (2, 4), (2, 5), (3, 4), (0, 6), (1, 5)])
def test_exhaustive_and_burnside_agree(t, n):
    assert count_boundaried_planar(t, n, "exhaustive") == count_boundaried_planar(t, n, "atlas")


def test_atlas_covers_n6_and_n7():
    assert count_boundaried_planar(0, 6, "atlas") == planar_counts()[5] == 142
    assert count_boundaried_planar(0, 7, "atlas") == planar_counts()[6] == 822


def test_all_labelled_triangles():
    # every 3-vertex graph with all vertices on the boundary is its own class
    assert count_boundaried_planar(3, 3) == 8


def test_count_errors():
    with pytest.raises(ValueError):
        count_boundaried_planar(3, 2)
    with pytest.raises(CapacityError):
        count_boundaried_planar(0, 8, "atlas")
    with pytest.raises(ValueError):
        count_boundaried_planar(1, 3, "magic")


def test_critical_size_examples():
    assert critical_size_bound(6, "exact") == 10
    assert critical_size_bound(1, "exact") == 1
    assert critical_size_bound(6, "exact", ordered=True) == 8


# frozen from critical_size_bound
EXACT_SIZES = (1, 3, 4, 5, 7, 10)
PLANAR_SIZES = (1, 2, 3, 4, 5, 6)
GENERAL_SIZES = (1, 2, 3, 4, 6, 7)


def test_critical_sizes_per_model():
    assert tuple(critical_size_bound(t, "exact") for t in range(1, 7)) == EXACT_SIZES
    assert tuple(critical_size_bound(t, "planar") for t in range(1, 7)) == PLANAR_SIZES
    assert tuple(critical_size_bound(t, "general") for t in range(1, 7)) == GENERAL_SIZES


@pytest.mark.parametrize("model", MODELS)
def test_critical_size_monotone_in_t(model):
    sizes = [critical_size_bound(t, model) for t in range(1, 7)]
    assert sizes == sorted(sizes)


def test_exact_model_pigeonhole_at_six():
    sums = cumulative_exact_counts(6, 10)
    need = KNOWN_DEDEKIND[6] - 2
    assert sums[-2] < need <= sums[-1]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_pigeonhole_soundness(t):
    bound = critical_size_bound(t, "exact")
    total = sum(count_boundaried_planar(t, n) for n in range(t, bound))
    assert total < KNOWN_DEDEKIND[t] - 2


@pytest.mark.parametrize("t", range(8, 17))
def test_asymptotic_planar_model(t):
    log2_classes = math.comb(t, t // 2)
    s = critical_size_bound(t, "planar", log2_classes=log2_classes)
    assert s >= log2_classes / 6


def test_critical_size_errors():
    with pytest.raises(ValueError):
        critical_size_bound(0)
    with pytest.raises(ValueError):
        critical_size_bound(2, "fancy")
    with pytest.raises(CapacityError):
        critical_size_bound(7, "exact")
    with pytest.raises(CapacityError):
        critical_size_bound(6, "exact", counts=(1, 2, 4))


def test_load_counts(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"counts": [1, 2, 4]}))
    assert load_planar_counts(str(p)) == (1, 2, 4)
