"""Representative functions, the equivalence test, monotone Boolean functions
and their enumeration.

Set functions over [t] are stored as tuples indexed by subset mask: bit i-1
of the mask is set iff label i belongs to the subset.
"""
from __future__ import annotations

import itertools
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .graph import BoundariedGraph, iter_bits, mask_size
from .oracle import BoundaryFunction, CapacityError, boundary_function, normalize

# Dedekind numbers known to this library: t = 0..6
DEDEKIND_MAX_T = 6
REPRESENTATIVE_MAX_T = 4
MONOTONE_LIST_MAX_T = 5


def _table(values: Sequence[int], t: int) -> tuple:
    vals = tuple(int(v) for v in values)
    if len(vals) != 1 << t:
        raise ValueError(f"expected {1 << t} values for t={t}, got {len(vals)}")
    return vals


def _min_below(vals: Sequence[int], s: int) -> int:
    return min(vals[s & ~(1 << i)] for i in iter_bits(s))


# -- representative functions -------------------------------------------------

@dataclass(frozen=True)
class RepresentativeFunction:
    t: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", _table(self.values, self.t))
        if not is_representative(self):
            raise ValueError(f"not a representative function: {self.values}")

    def __getitem__(self, s: int) -> int:
        return self.values[s]

    def to_dict(self) -> dict:
        return {"t": self.t, "values": list(self.values)}

    @classmethod
    def from_dict(cls, d: dict) -> "RepresentativeFunction":
        return cls(int(d["t"]), tuple(d["values"]))


def is_representative(f) -> bool:
    """Zero on the empty set, monotone, and each added element raises the value
    by at most one over the smallest one-element-smaller subset."""
    vals = f.values
    if len(vals) != 1 << f.t or vals[0] != 0:
        return False
    for s in range(1, len(vals)):
        below = [vals[s & ~(1 << i)] for i in iter_bits(s)]
        if vals[s] < max(below) or vals[s] > 1 + min(below):
            return False
    return True


def satisfies_exchange_bound(f) -> bool:
    """f(S') - |S' \\ S| <= f(S) for every pair of subsets."""
    vals = f.values
    n = len(vals)
    return all(vals[a] - mask_size(a & ~b) <= vals[b] for a in range(n) for b in range(n))


def enumerate_representative_functions(t: int) -> list[RepresentativeFunction]:
    """Every t-representative function, lexicographic over mask-ordered tables.

    Values are assigned in increasing mask order, so all proper subsets of a
    mask are fixed before it; each value ranges over
    [max of the one-smaller subsets, 1 + min of them]. Values never exceed t.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if t > REPRESENTATIVE_MAX_T:
        raise CapacityError(f"enumeration limited to t <= {REPRESENTATIVE_MAX_T}")
    size = 1 << t
    vals = [0] * size
    out: list[RepresentativeFunction] = []

    def assign(s: int):
        if s == size:
            out.append(RepresentativeFunction(t, tuple(vals)))
            return
        below = [vals[s & ~(1 << i)] for i in iter_bits(s)]
        for v in range(max(below), min(below) + 2):
            vals[s] = v
            assign(s + 1)

    assign(1)
    assert all(max(f.values) <= t for f in out)
    return out


def count_representative_functions_brute(t: int) -> int:
    """Reference count: filter every table with entries in 0..t."""
    if t > 3:
        raise CapacityError("brute-force count limited to t <= 3")
    size = 1 << t
    count = 0
    for rest in itertools.product(range(t + 1), repeat=size - 1):
        if is_representative(BoundaryFunction(t, (0,) + rest)):
            count += 1
    return count


# -- equivalence --------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    delta: int | None = None
    witness: int | None = None  # smallest subset mask where the normalized functions differ

    def __bool__(self):
        return self.equivalent

    def to_dict(self) -> dict:
        if self.equivalent:
            return {"equivalent": True, "delta": self.delta}
        return {"equivalent": False, "witness": self.witness}


def compare_functions(fg: BoundaryFunction, fh: BoundaryFunction) -> EquivalenceResult:
    if fg.t != fh.t:
        raise ValueError(f"boundary sizes differ: {fg.t} vs {fh.t}")
    ng, nh = normalize(fg), normalize(fh)
    for s in range(1 << fg.t):
        if ng[s] != nh[s]:
            return EquivalenceResult(False, None, s)
    return EquivalenceResult(True, fg[0] - fh[0], None)


def equivalent(g: BoundariedGraph, h: BoundariedGraph, method: str = "auto") -> EquivalenceResult:
    """Equivalence of two t-boundaried graphs for Independent Set.

    Equivalent iff the normalized boundary functions agree; the transposition
    constant is then the difference of the empty-set values.
    """
    if g.t != h.t:
        raise ValueError(f"boundary sizes differ: {g.t} vs {h.t}")
    return compare_functions(boundary_function(g, method), boundary_function(h, method))


# -- derived 0/1 encoding -----------------------------------------------------

@dataclass(frozen=True)
class DerivedFunction:
    t: int
    bits: tuple

    def __post_init__(self):
        b = _table(self.bits, self.t)
        if b[0] != 0 or any(x not in (0, 1) for x in b):
            raise ValueError("derived table must be 0/1 with a zero at the empty set")
        object.__setattr__(self, "bits", b)


def encode_derived(f) -> DerivedFunction:
    if not is_representative(f):
        raise ValueError("encoding requires a representative function")
    vals = f.values
    bits = [0] + [vals[s] - _min_below(vals, s) for s in range(1, len(vals))]
    return DerivedFunction(f.t, tuple(bits))


def decode_derived(d: DerivedFunction) -> BoundaryFunction:
    """Inverse of :func:`encode_derived` on representative inputs.

    Returns a plain table: for arbitrary 0/1 inputs the result need not be
    representative.
    """
    vals = [0] * (1 << d.t)
    for s in range(1, 1 << d.t):
        vals[s] = d.bits[s] + _min_below(vals, s)
    return BoundaryFunction(d.t, tuple(vals))


# -- monotone Boolean functions -----------------------------------------------

@dataclass(frozen=True)
class MonotoneBoolFunction:
    t: int
    outputs: tuple

    def __post_init__(self):
        out = _table(self.outputs, self.t)
        if any(x not in (0, 1) for x in out):
            raise ValueError("outputs must be 0/1")
        if not is_monotone(out, self.t):
            raise ValueError("function is not monotone")
        object.__setattr__(self, "outputs", out)

    def __call__(self, s: int) -> int:
        return self.outputs[s]

    @property
    def is_constant(self) -> bool:
        return len(set(self.outputs)) == 1

    @property
    def truth_table(self) -> int:
        return sum(1 << s for s, x in enumerate(self.outputs) if x)

    @classmethod
    def from_truth_table(cls, t: int, bits: int) -> "MonotoneBoolFunction":
        return cls(t, tuple(bits >> s & 1 for s in range(1 << t)))


def is_monotone(outputs: Sequence[int], t: int) -> bool:
    return all(outputs[s | (1 << i)] >= outputs[s] for s in range(1 << t) for i in range(t))


def _monotone_tables(t: int) -> list[int]:
    """Truth tables (bit S set iff f(S) = 1) of all monotone functions.

    A function of t variables splits on the last variable into f0 (it is 0)
    and f1 (it is 1); monotonicity means both halves are monotone and f0
    implies f1.
    """
    if t == 0:
        return [0, 1]
    prev = _monotone_tables(t - 1)
    half = 1 << (t - 1)
    return [f0 | (f1 << half) for f1 in prev for f0 in prev if f0 & ~f1 == 0]


def enumerate_monotone_functions(t: int) -> list[MonotoneBoolFunction]:
    """All monotone Boolean functions of t variables, lexicographic by output table."""
    if t > MONOTONE_LIST_MAX_T:
        raise CapacityError(f"listing limited to t <= {MONOTONE_LIST_MAX_T}; use dedekind() to count")
    funcs = [MonotoneBoolFunction.from_truth_table(t, b) for b in _monotone_tables(t)]
    funcs.sort(key=lambda f: f.outputs)
    return funcs


def count_monotone_brute(t: int) -> int:
    """Reference count: test every Boolean function for monotonicity."""
    if t > 4:
        raise CapacityError("brute-force count limited to t <= 4")
    size = 1 << t
    return sum(1 for bits in range(1 << size)
               if is_monotone([bits >> s & 1 for s in range(size)], t))


def dedekind(t: int, limit: int | None = None,
             progress: Callable[[int, int], None] | None = None) -> int:
    """Number of monotone Boolean functions of t variables (t <= 6).

    For t = 6 the functions are counted as pairs f0 <= f1 of five-variable
    functions without being materialised. ``limit`` aborts with
    CapacityError once more than ``limit`` functions have been counted;
    ``progress(done, total)`` is called after each block of rows.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if t > DEDEKIND_MAX_T:
        raise CapacityError(f"Dedekind numbers computed only for t <= {DEDEKIND_MAX_T}")
    if t <= 4:
        count = len(_monotone_tables(t))
        if limit is not None and count > limit:
            raise CapacityError(f"count exceeds limit {limit}")
        return count
    base = np.array(_monotone_tables(t - 1), dtype=np.uint64)
    total = 0
    block = 256
    for start in range(0, len(base), block):
        upper = base[start:start + block]
        # pairs with f0 & ~f1 == 0
        fits = (base[None, :] & ~upper[:, None]) == 0
        total += int(fits.sum())
        if limit is not None and total > limit:
            raise CapacityError(f"count exceeds limit {limit}")
        if progress is not None:
            progress(min(start + block, len(base)), len(base))
    return total


def monotone_to_representative(f: MonotoneBoolFunction) -> RepresentativeFunction:
    if f.outputs[0] != 0:
        raise ValueError("the constant-one function has no representative counterpart")
    return RepresentativeFunction(f.t, f.outputs)


# -- monotone CNF -------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneCNF:
    """Conjunction of clauses; each clause is a sorted tuple of labels 1..t."""

    t: int
    clauses: tuple

    def __post_init__(self):
        cl = tuple(tuple(sorted(set(int(x) for x in c))) for c in self.clauses)
        for c in cl:
            if not c:
                raise ValueError("empty clause")
            if c[0] < 1 or c[-1] > self.t:
                raise ValueError(f"clause {c} uses labels outside 1..{self.t}")
        object.__setattr__(self, "clauses", cl)

    def evaluate(self, s: int) -> int:
        return int(all(any(s >> (x - 1) & 1 for x in c) for c in self.clauses))

    def to_function(self) -> MonotoneBoolFunction:
        return MonotoneBoolFunction(self.t, tuple(self.evaluate(s) for s in range(1 << self.t)))

    def to_dict(self) -> dict:
        return {"t": self.t, "clauses": [list(c) for c in self.clauses]}


def maximal_zero_sets(f: MonotoneBoolFunction) -> list[int]:
    """Masks T with f(T) = 0 such that adding any label makes f one."""
    return [s for s in range(1 << f.t) if not f(s)
            and all(f(s | (1 << i)) for i in range(f.t) if not s >> i & 1)]


def monotone_to_cnf(f: MonotoneBoolFunction) -> MonotoneCNF:
    """One clause per inclusion-maximal zero set T, listing the labels outside T."""
    if f.is_constant:
        raise ValueError("constant functions have no monotone CNF with nonempty clauses")
    full = (1 << f.t) - 1
    clauses = [tuple(i + 1 for i in iter_bits(full & ~s)) for s in maximal_zero_sets(f)]
    cnf = MonotoneCNF(f.t, tuple(clauses))
    assert cnf.to_function() == f
    return cnf


# -- counting estimates -------------------------------------------------------

KNOWN_DEDEKIND = (2, 3, 6, 20, 168, 7581, 7828354)


def stirling_bound(t: int) -> int:
    """ceil(2^t / sqrt(4t)), checked against the central binomial coefficient.

    Asserts binom(t, t//2) >= 2^t / sqrt(4t) (in exact integer form
    binom^2 * 4t >= 4^t) and, where the Dedekind number is known,
    2^binom(t, t//2) <= M(t).
    """
    if t < 1:
        raise ValueError("t must be positive")
    c = math.comb(t, t // 2)
    assert c * c * 4 * t >= 4 ** t, f"central binomial bound fails at t={t}"
    if t < len(KNOWN_DEDEKIND):
        assert 2 ** c <= KNOWN_DEDEKIND[t], f"antichain bound fails at t={t}"
    # smallest k with k >= 2^t / sqrt(4t), i.e. k^2 * 4t >= 4^t
    k = math.isqrt(4 ** t // (4 * t))
    while k * k * 4 * t < 4 ** t:
        k += 1
    while k > 0 and (k - 1) * (k - 1) * 4 * t >= 4 ** t:
        k -= 1
    return k


def dump_function_lines(funcs: Iterable, out=sys.stdout):
    for f in funcs:
        vals = f.values if hasattr(f, "values") else f.outputs
        out.write(json.dumps({"t": f.t, "values": list(vals)}) + "\n")
