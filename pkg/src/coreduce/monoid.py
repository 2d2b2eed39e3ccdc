"""Hilbert bases of weight-relation monoids and bounded integer feasibility.

The central object is the monoid of nonnegative integer relations
``sum_i m_i * a_i = 0`` among a list of integer vectors ``a_i`` (torus
weights in scaled coordinates).  Its unique minimal generating set — the
indecomposable relations — is computed by Contejean–Devié completion.  A
weight list is *coreduced for the torus* exactly when every generator has
all coefficients in {0, 1}.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    """Nonnegative coefficients with sum_i coeffs[i] * weights[i] = 0."""

    coeffs: Vec

    @property
    def degree(self) -> int:
        return sum(self.coeffs)

    @property
    def max_coeff(self) -> int:
        return max(self.coeffs, default=0)

    def verify(self, weights: Sequence[Vec]) -> bool:
        dim = len(weights[0]) if weights else 0
        return all(
            sum(m * w[j] for m, w in zip(self.coeffs, weights)) == 0 for j in range(dim)
        )


@dataclass(frozen=True)
class HilbertBasis:
    weights: tuple[Vec, ...]
    generators: tuple[Relation, ...]


def _dominates(x: Vec, y: Vec) -> bool:
    return all(a >= b for a, b in zip(x, y))


def iter_hilbert_basis(
    weights: Sequence[Vec], limits: Limits = DEFAULT_LIMITS
) -> Iterator[Relation]:
    """Yield the indecomposable relations among ``weights`` (Contejean–Devié).

    Candidates are explored in order of increasing coefficient sum, so each
    solution is emitted before any solution it could decompose through; the
    minimality pruning against previously found generators is therefore
    complete, and early consumers (e.g. the 0/1 test) may stop at the first
    interesting generator.
    """
    n = len(weights)
    if n == 0:
        return
    dim = len(weights[0])
    if any(len(w) != dim for w in weights):
        raise ValueError("weights must share a dimension")
    if any(all(x == 0 for x in w) for w in weights):
        raise ValueError("zero weights must be discarded before basis computation")

    def dot(a: Vec, b: Vec) -> int:
        return sum(x * y for x, y in zip(a, b))

    found: list[Vec] = []
    visited: set[Vec] = set()
    # heap entries: (degree, coeffs, value)
    heap: list[tuple[int, Vec, Vec]] = []
    for i, w in enumerate(weights):
        e = tuple(int(j == i) for j in range(n))
        heap.append((1, e, w))
        visited.add(e)
    heapq.heapify(heap)
    examined = 0
    emitted = 0
    while heap:
        deg, x, val = heapq.heappop(heap)
        examined += 1
        if examined > limits.max_candidates:
            raise ResourceLimitError(
                f"hilbert basis search exceeded {limits.max_candidates} candidates"
            )
        if any(_dominates(x, m) for m in found):
            continue
        if all(v == 0 for v in val):
            found.append(x)
            emitted += 1
            if emitted > limits.max_generators:
                raise ResourceLimitError(
                    f"hilbert basis exceeded {limits.max_generators} generators"
                )
            yield Relation(x)
            continue
        for j, w in enumerate(weights):
            if dot(val, w) < 0:
                y = x[:j] + (x[j] + 1,) + x[j + 1 :]
                if y in visited:
                    continue
                if any(_dominates(y, m) for m in found):
                    continue
                visited.add(y)
                heapq.heappush(
                    heap, (deg + 1, y, tuple(a + b for a, b in zip(val, w)))
                )


def hilbert_basis(weights: Sequence[Vec], limits: Limits = DEFAULT_LIMITS) -> HilbertBasis:
    ws = tuple(tuple(w) for w in weights)
    gens = tuple(iter_hilbert_basis(ws, limits))
    return HilbertBasis(ws, gens)


@dataclass(frozen=True)
class TorusVerdict:
    coreduced: bool
    weights: tuple[Vec, ...]
    certificate: Optional[Relation]  # a generator with a coefficient >= 2


def is_torus_coreduced(
    weights: Sequence[Vec], limits: Limits = DEFAULT_LIMITS
) -> TorusVerdict:
    """Decide whether every indecomposable relation has 0/1 coefficients.

    Zero weights are discarded first (they impose no relation constraints
    beyond a free coordinate).  Stops at the first violating generator.
    """
    ws = tuple(tuple(w) for w in weights if any(x != 0 for x in w))
    for gen in iter_hilbert_basis(ws, limits):
        if gen.max_coeff >= 2:
            return TorusVerdict(False, ws, gen)
    return TorusVerdict(True, ws, None)


# ---------------------------------------------------------------------------
# Bounded feasibility: sum x_i w_i = target with a count constraint.


@dataclass(frozen=True)
class SumWitness:
    feasible: bool
    # indices into the weight list (or, for one_per_block, one index per block)
    chosen: Optional[tuple[int, ...]]


def exists_sum(
    weights: Sequence[Vec],
    target: Vec,
    count: int,
    mode: str = "exact_count",
    limits: Limits = DEFAULT_LIMITS,
) -> SumWitness:
    """Decide solvability of sum_i x_i * weights[i] = target, x_i in N.

    mode "exact_count": sum x_i = count; mode "at_most": sum x_i <= count.
    Exhaustive level-by-level dynamic programming with exact arithmetic;
    a witness multiset (as a tuple of weight indices) is reconstructed.
    """
    if mode not in ("exact_count", "at_most"):
        raise ValueError(f"unknown mode {mode!r}")
    target = tuple(target)
    zero = tuple(0 for _ in target)
    ws = [tuple(w) for w in weights]
    if any(len(w) != len(target) for w in ws):
        raise ValueError("weight/target dimension mismatch")
    # parent[(level, sum)] = (previous sum, weight index)
    parent: dict[tuple[int, Vec], tuple[Vec, int]] = {}
    level: set[Vec] = {zero}
    states = 1

    def witness(lvl: int, s: Vec) -> tuple[int, ...]:
        out = []
        while lvl > 0:
            s_prev, j = parent[(lvl, s)]
            out.append(j)
            s, lvl = s_prev, lvl - 1
        return tuple(sorted(out))

    if target == zero and (mode == "at_most" or count == 0):
        return SumWitness(True, ())
    for lvl in range(1, count + 1):
        nxt: set[Vec] = set()
        for s in level:
            for j, w in enumerate(ws):
                t = tuple(a + b for a, b in zip(s, w))
                if t not in nxt:
                    nxt.add(t)
                    states += 1
                    if states > limits.dp_state_limit:
                        raise ResourceLimitError("exists_sum state limit exceeded")
                    parent[(lvl, t)] = (s, j)
        if target in nxt and (mode == "at_most" or lvl == count):
            if mode == "at_most" or lvl == count:
                return SumWitness(True, witness(lvl, target))
        level = nxt
    if mode == "exact_count" and target in level and count >= 1:
        return SumWitness(True, witness(count, target))
    return SumWitness(False, None)


def exists_sum_one_per_block(
    blocks: Sequence[Sequence[Vec]],
    target: Vec,
    limits: Limits = DEFAULT_LIMITS,
) -> SumWitness:
    """Decide whether picking exactly one vector per block can sum to target."""
    target = tuple(target)
    zero = tuple(0 for _ in target)
    parent: dict[tuple[int, Vec], tuple[Vec, int]] = {}
    level: set[Vec] = {zero}
    states = 1
    for b, block in enumerate(blocks):
        nxt: set[Vec] = set()
        for s in level:
            for j, w in enumerate(block):
                t = tuple(a + b2 for a, b2 in zip(s, w))
                if t not in nxt:
                    nxt.add(t)
                    states += 1
                    if states > limits.dp_state_limit:
                        raise ResourceLimitError("exists_sum state limit exceeded")
                    parent[(b + 1, t)] = (s, j)
        level = nxt
    if target not in level:
        return SumWitness(False, None)
    out = []
    s = target
    for b in range(len(blocks), 0, -1):
        s_prev, j = parent[(b, s)]
        out.append(j)
        s = s_prev
    return SumWitness(True, tuple(reversed(out)))


# ---------------------------------------------------------------------------
# Brute-force reference (kept here so the CLI can cross-certify small inputs)


def brute_force_minimal_relations(weights: Sequence[Vec], bound: int) -> list[Vec]:
    """All componentwise-minimal nonzero relations with coefficient sum <= bound."""
    n = len(weights)
    dim = len(weights[0]) if n else 0
    sols: list[Vec] = []
    for total in range(1, bound + 1):
        for comp in _compositions(total, n):
            if any(_dominates(comp, s) for s in sols):
                continue
            if all(
                sum(m * w[j] for m, w in zip(comp, weights)) == 0 for j in range(dim)
            ):
                sols.append(comp)
    return sols


def _compositions(total: int, parts: int) -> Iterator[Vec]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest
