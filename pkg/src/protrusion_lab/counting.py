"""Counting small boundaried planar graphs and the critical-size arithmetic.

The critical size under a counting model is the smallest s for which the
number of t-boundaried graphs on t..s vertices reaches the number of
equivalence classes that need a representative (M(t) - 2 by default).
"""
from __future__ import annotations

import itertools
import json
import math
from functools import lru_cache
from importlib import resources

import networkx as nx
import numpy as np

from .equivalence import KNOWN_DEDEKIND
from .oracle import CapacityError

MODELS = ("planar", "general", "exact")
BONICHON_EXPONENT = 4.91  # unlabeled n-vertex planar graphs number fewer than 2^(4.91 n)
EXHAUSTIVE_BUDGET = 6 * 10 ** 8
ATLAS_MAX_N = 7


@lru_cache(maxsize=1)
def planar_counts() -> tuple:
    """Unlabeled planar graph counts for n = 1, 2, ... from the bundled data file."""
    text = resources.files("protrusion_lab").joinpath("data/planar_counts.json").read_text()
    return tuple(int(c) for c in json.loads(text)["counts"])


def load_planar_counts(path: str) -> tuple:
    with open(path) as fh:
        return tuple(int(c) for c in json.load(fh)["counts"])


# -- exhaustive counting ------------------------------------------------------

def _count_exhaustive(t: int, n: int) -> int:
    """Enumerate every edge set, take the minimum image under permutations of
    the non-boundary vertices, and test planarity once per class."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    canon = masks.copy()
    free = list(range(t, n))
    for perm in itertools.permutations(free):
        if list(perm) == free:
            continue
        rel = list(range(t)) + list(perm)
        image = np.zeros_like(masks)
        for k, (a, b) in enumerate(pairs):
            x, y = rel[a], rel[b]
            image |= ((masks >> k) & 1) << index[(min(x, y), max(x, y))]
        np.minimum(canon, image, out=canon)
    reps = np.unique(canon)
    count = 0
    for r in reps.tolist():
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(p for k, p in enumerate(pairs) if r >> k & 1)
        if nx.check_planarity(g)[0]:
            count += 1
    return count


def _labelled_orbits(h: nx.Graph, t: int) -> int:
    """Orbits of Aut(h) on sequences of t distinct vertices (Burnside)."""
    matcher = nx.algorithms.isomorphism.GraphMatcher(h, h)
    total = 0
    autos = 0
    for iso in matcher.isomorphisms_iter():
        autos += 1
        fixed = sum(1 for v, w in iso.items() if v == w)
        total += math.perm(fixed, t)
    return total // autos


def _count_atlas(t: int, n: int) -> int:
    if n > ATLAS_MAX_N:
        raise CapacityError(f"graph atlas covers n <= {ATLAS_MAX_N}")
    count = 0
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n or not nx.check_planarity(h)[0]:
            continue
        count += _labelled_orbits(h, t)
    return count


def count_boundaried_planar(t: int, n: int, method: str = "auto") -> int:
    """Number of n-vertex t-boundaried planar graphs up to isomorphisms that
    respect boundary labels (t = 0 counts unlabeled planar graphs).

    ``exhaustive`` enumerates every labelled graph; ``atlas`` runs Burnside's
    lemma over the catalogue of graphs with at most seven vertices.
    """
    if t < 0 or n < t:
        raise ValueError("need 0 <= t <= n")
    if n == 0:
        return 1
    pairs = n * (n - 1) // 2
    cost = math.factorial(n - t) * max(pairs, 1) * (1 << pairs)
    if method == "auto":
        method = "exhaustive" if cost <= EXHAUSTIVE_BUDGET else "atlas"
    if method == "exhaustive":
        if cost > EXHAUSTIVE_BUDGET * 20:
            raise CapacityError(f"exhaustive enumeration too large for n={n}, t={t}")
        return _count_exhaustive(t, n)
    if method == "atlas":
        return _count_atlas(t, n)
    raise ValueError(f"unknown method {method!r}")


# -- critical size ------------------------------------------------------------

def _log2_count(model: str, t: int, n: int, counts, ordered: bool) -> float:
    if model == "planar":
        # fewer than 2^(4.91 n) unlabeled graphs, at most 2^n boundary choices
        return (BONICHON_EXPONENT + 1) * n
    if model == "general":
        return n * n / 2
    raise ValueError(model)


def _exact_count(t: int, n: int, counts, ordered: bool) -> int:
    if n > len(counts):
        raise CapacityError(f"planar graph counts known only up to n={len(counts)}")
    factor = math.perm(n, t) if ordered else math.comb(n, t)
    return counts[n - 1] * factor


def classes_needed(t: int) -> int:
    if t >= len(KNOWN_DEDEKIND):
        raise CapacityError(f"Dedekind number unavailable for t={t}")
    return KNOWN_DEDEKIND[t] - 2


def critical_size_bound(t: int, model: str = "exact", *, log2_classes: float | None = None,
                        counts=None, ordered: bool = False, max_n: int = 10 ** 6) -> int:
    """Smallest s with sum_{n=t}^{s} count(n) >= number of classes.

    Models: ``exact`` uses unlabeled planar graph counts times binom(n, t)
    (times t! more with ``ordered=True``); ``planar`` uses 2^(5.91 n);
    ``general`` uses 2^(n^2 / 2). The class count defaults to M(t) - 2;
    ``log2_classes`` overrides it (useful beyond t = 6).
    """
    if t < 1:
        raise ValueError("t must be positive")
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")
    if model == "exact":
        if log2_classes is not None:
            raise ValueError("the exact model works with integer class counts only")
        need = classes_needed(t)
        counts = planar_counts() if counts is None else counts
        total = 0
        for s in range(t, max_n):
            total += _exact_count(t, s, counts, ordered)
            if total >= need:
                return s
        raise CapacityError("no critical size found")
    target = math.log2(classes_needed(t)) if log2_classes is None else log2_classes
    logs: list[float] = []
    for s in range(t, max_n):
        logs.append(_log2_count(model, t, s, counts, ordered))
        top = max(logs)
        total = top + math.log2(math.fsum(2.0 ** (x - top) for x in logs))
        if total >= target:
            return s
    raise CapacityError("no critical size found")


def cumulative_exact_counts(t: int, upto: int, ordered: bool = False, counts=None) -> list[int]:
    counts = planar_counts() if counts is None else counts
    out, total = [], 0
    for n in range(t, upto + 1):
        total += _exact_count(t, n, counts, ordered)
        out.append(total)
    return out
