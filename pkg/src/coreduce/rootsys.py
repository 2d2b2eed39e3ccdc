"""Exact root-system and Weyl-group arithmetic.

Simple types are labelled in Bourbaki's ordering.  Weights are stored either
in Dynkin labels (fundamental-weight basis, the canonical internal basis) or
in ``root_scaled`` coordinates: root-basis coordinates multiplied by the
index of the root lattice in the weight lattice, so that every weight of the
weight lattice has integer coordinates in both bases.

Product groups concatenate coordinate blocks (simple factors first, then a
central torus block); their Weyl group is the direct product.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Coords = tuple[int, ...]

_FAMILY_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),  # the classical usage starts at 3 but C2 is accepted
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystemError(ValueError):
    """Invalid simple type, rank, or weight data."""


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Lie type, e.g. ``SimpleType("A", 2)``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_BOUNDS:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo, hi = _FAMILY_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise RootSystemError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def weyl_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family in ("B", "C"):
            return 2**n * factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        if self.family == "E":
            return {6: 51840, 7: 2903040, 8: 696729600}[n]
        if self.family == "F":
            return 1152
        return 12  # G2


def _cartan_matrix(t: SimpleType) -> tuple[Coords, ...]:
    """Cartan matrix with ``cartan[i][j] = <alpha_i, alpha_j^vee>``."""
    n = t.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, a: int = -1, b: int = -1) -> None:
        m[i][j] = a
        m[j][i] = b

    if t.family in ("A", "B", "C", "D", "F", "G"):
        chain = n if t.family != "D" else n - 1
        for i in range(chain - 1):
            link(i, i + 1)
    if t.family == "B" and n >= 2:
        # alpha_{n-1} long, alpha_n short
        link(n - 2, n - 1, -2, -1)
    if t.family == "C" and n >= 2:
        link(n - 2, n - 1, -1, -2)
    if t.family == "D":
        link(n - 3, n - 1)
    if t.family == "E":
        # Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4.
        for i, j in zip((0, 2, 3, 4, 5, 6), (2, 3, 4, 5, 6, 7)):
            if j < n:
                link(i, j)
        link(1, 3)
    if t.family == "F":
        link(1, 2, -2, -1)
    if t.family == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in m)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Diagonal d with d_i * cartan[i][j] symmetric; normalized so max d = 1.

    ``d_i`` is half the squared length of the simple root ``alpha_i``, so
    long roots get norm 2.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if cartan[i][j] and d[i] is not None and d[j] is None:
                    # (alpha_i, alpha_j) = d_j a_ij = d_i a_ji
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    changed = True
    assert all(x is not None for x in d)
    top = max(x for x in d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


def _mat_inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _det(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


class RootSystem:
    """Root-system data for one simple type (all coordinates exact)."""

    def __init__(self, t: SimpleType):
        self.type = t
        self.rank = t.rank
        self.cartan = _cartan_matrix(t)
        self.symmetrizer = _symmetrizer(self.cartan)
        self.lattice_index = abs(_det(self.cartan))
        inv = _mat_inverse(self.cartan)
        # row vector d (Dynkin) -> root coords: c = d @ cartan^{-1}
        scaled = [[x * self.lattice_index for x in row] for row in inv]
        assert all(x.denominator == 1 for row in scaled for x in row)
        self._dynkin_to_root_scaled = tuple(tuple(int(x) for x in row) for row in scaled)
        # common denominator for the symmetrizer, for integer inner products
        den = 1
        for x in self.symmetrizer:
            den = den * x.denominator // _gcd(den, x.denominator)
        self._sym_scaled = tuple(int(x * den) for x in self.symmetrizer)
        self._sym_den = den
        self.positive_roots = self._positive_roots()
        self.weyl_vector = (1,) * self.rank
        self.weyl_order = t.weyl_order

    # -- basis conversions (plain tuples) --------------------------------

    def root_scaled_of_dynkin(self, d: Coords) -> Coords:
        m = self._dynkin_to_root_scaled
        return tuple(sum(d[i] * m[i][j] for i in range(self.rank)) for j in range(self.rank))

    def dynkin_of_root_scaled(self, c: Coords) -> Coords:
        out = []
        for j in range(self.rank):
            v = sum(c[i] * self.cartan[i][j] for i in range(self.rank))
            if v % self.lattice_index:
                raise RootSystemError(f"{c} is not in the weight lattice (root_scaled)")
            out.append(v // self.lattice_index)
        return tuple(out)

    def dynkin_of_root(self, root: Coords) -> Coords:
        """Dynkin labels of an element of the root lattice in root coords."""
        return tuple(sum(root[i] * self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))

    def root_coords_of_dynkin(self, d: Coords) -> tuple[Fraction, ...]:
        rs = self.root_scaled_of_dynkin(d)
        return tuple(Fraction(x, self.lattice_index) for x in rs)

    # -- reflections and orbits ------------------------------------------

    def reflect(self, d: Coords, i: int) -> Coords:
        """Simple reflection s_i on Dynkin labels."""
        ci = d[i]
        if ci == 0:
            return d
        row = self.cartan[i]
        return tuple(x - ci * row[j] for j, x in enumerate(d))

    def dominantize(self, d: Coords) -> tuple[Coords, int]:
        """Dominant representative and the sign of a Weyl element achieving it."""
        cur = list(d)
        sign = 1
        while True:
            for i in range(self.rank):
                if cur[i] < 0:
                    ci = cur[i]
                    row = self.cartan[i]
                    for j in range(self.rank):
                        cur[j] -= ci * row[j]
                    sign = -sign
                    break
            else:
                return tuple(cur), sign

    def orbit_size(self, dominant: Coords) -> int:
        """|W·dominant| via the stabilizer subdiagram, without materializing."""
        zero = [i for i, x in enumerate(dominant) if x == 0]
        return self.weyl_order // _sub_weyl_order(self.cartan, zero)

    # -- inner products ---------------------------------------------------

    def inner_dr(self, d: Coords, root: Coords) -> int:
        """Scaled invariant form <λ, μ> for λ in Dynkin labels, μ in root coords.

        The result is ``den * (λ, μ)`` with the fixed denominator
        ``self._sym_den``; differences/ratios of such values are exact.
        """
        s = self._sym_scaled
        return sum(root[j] * d[j] * s[j] for j in range(self.rank))

    def norm2_root(self, root: Coords) -> Fraction:
        return Fraction(self.inner_dr(self.dynkin_of_root(root), root), self._sym_den)

    # -- construction of the root list ------------------------------------

    def _positive_roots(self) -> tuple[Coords, ...]:
        # orbit of the simple roots under simple reflections, in Dynkin labels
        seen: set[Coords] = set()
        frontier: list[Coords] = []
        for i in range(self.rank):
            d = tuple(self.cartan[i])
            seen.add(d)
            frontier.append(d)
        while frontier:
            nxt = []
            for d in frontier:
                for i in range(self.rank):
                    e = self.reflect(d, i)
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
            frontier = nxt
        roots = []
        for d in seen:
            rs = self.root_scaled_of_dynkin(d)
            assert all(x % self.lattice_index == 0 for x in rs)
            roots.append(tuple(x // self.lattice_index for x in rs))
        pos = sorted(r for r in roots if all(x >= 0 for x in r))
        assert 2 * len(pos) == len(roots)
        return tuple(pos)

    @property
    def short_positive_roots(self) -> tuple[Coords, ...]:
        m = min(self.norm2_root(r) for r in self.positive_roots)
        return tuple(r for r in self.positive_roots if self.norm2_root(r) == m)

    @property
    def highest_root(self) -> Coords:
        # the unique positive root whose Dynkin labels are dominant
        for r in self.positive_roots:
            if all(x >= 0 for x in self.dynkin_of_root(r)):
                return r
        raise AssertionError("no highest root")

    def __repr__(self) -> str:
        return f"RootSystem({self.type})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    return RootSystem(t)


def _sub_weyl_order(cartan: Sequence[Sequence[int]], nodes: list[int]) -> int:
    """Weyl group order of the subsystem generated by a subset of simple roots."""
    if not nodes:
        return 1
    nodeset = set(nodes)
    seen: set[int] = set()
    total = 1
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in nodeset:
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    comp.append(j)
                    stack.append(j)
        total *= _component_weyl_order(cartan, sorted(comp))
    return total


def _component_weyl_order(cartan: Sequence[Sequence[int]], comp: list[int]) -> int:
    r = len(comp)
    mult = max(abs(cartan[i][j]) for i in comp for j in comp if i != j) if r > 1 else 1
    # count roots of the component by closure (small, bounded by 240)
    sub = [[cartan[i][j] for j in comp] for i in comp]
    seen = {tuple(row) for row in ((2 if a == b else sub[a][b] for b in range(r)) for a in range(r))}
    seen = set()
    simple = []
    for a in range(r):
        d = tuple(sub[a][b] for b in range(r))
        simple.append(d)
        seen.add(d)
    frontier = list(seen)
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(r):
                if d[i] == 0:
                    continue
                e = tuple(x - d[i] * sub[i][j] for j, x in enumerate(d))
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    nroots = len(seen)
    if mult >= 3:
        return 12  # G2
    if mult == 2:
        if r == 4 and nroots == 48:
            return 1152  # F4
        return 2**r * factorial(r)  # B/C
    if nroots == r * (r + 1):
        return factorial(r + 1)  # A
    if nroots == 2 * r * (r - 1):
        return 2 ** (r - 1) * factorial(r)  # D
    return {6: 51840, 7: 2903040, 8: 696729600}[r]  # E


# ---------------------------------------------------------------------------
# Product groups


@dataclass(frozen=True)
class GroupSpec:
    """An ordered product of simple factors and a central torus."""

    simple_factors: tuple[SimpleType, ...]
    torus_rank: int = 0

    def __post_init__(self) -> None:
        if not self.simple_factors and self.torus_rank <= 0:
            raise RootSystemError("need at least one simple factor or a torus")
        if self.torus_rank < 0:
            raise RootSystemError("torus rank must be nonnegative")

    def __str__(self) -> str:
        parts = [str(t) for t in self.simple_factors]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "x".join(parts)

    @property
    def root_systems(self) -> tuple[RootSystem, ...]:
        return tuple(build_root_system(t) for t in self.simple_factors)

    @property
    def rank(self) -> int:
        return sum(t.rank for t in self.simple_factors) + self.torus_rank

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """(start, stop) coordinate slices: one per simple factor, then torus."""
        out = []
        pos = 0
        for t in self.simple_factors:
            out.append((pos, pos + t.rank))
            pos += t.rank
        out.append((pos, pos + self.torus_rank))
        return tuple(out)

    @property
    def weyl_order(self) -> int:
        n = 1
        for t in self.simple_factors:
            n *= t.weyl_order
        return n

    @property
    def num_positive_roots(self) -> int:
        return sum(len(rs.positive_roots) for rs in self.root_systems)

    def positive_roots_dynkin(self) -> list[Coords]:
        """Positive roots of the product, as full-length Dynkin label tuples."""
        out: list[Coords] = []
        for k, rs in enumerate(self.root_systems):
            lo, hi = self.blocks[k]
            for r in rs.positive_roots:
                d = rs.dynkin_of_root(r)
                full = [0] * self.rank
                full[lo:hi] = d
                out.append(tuple(full))
        return out

    def roots_dynkin(self) -> list[Coords]:
        pos = self.positive_roots_dynkin()
        return pos + [tuple(-x for x in r) for r in pos]

    @property
    def weyl_vector(self) -> Coords:
        out = [0] * self.rank
        for k, t in enumerate(self.simple_factors):
            lo, hi = self.blocks[k]
            for i in range(lo, hi):
                out[i] = 1
        return tuple(out)


@dataclass(frozen=True)
class Weight:
    """A weight of a :class:`GroupSpec` in a fixed basis tag."""

    coords: Coords
    basis: str  # "dynkin" | "root_scaled"
    group: GroupSpec

    def __post_init__(self) -> None:
        if self.basis not in ("dynkin", "root_scaled"):
            raise RootSystemError(f"unknown basis {self.basis!r}")
        if len(self.coords) != self.group.rank:
            raise RootSystemError(
                f"weight has {len(self.coords)} coordinates; {self.group} has rank {self.group.rank}"
            )

    def to_dynkin(self) -> "Weight":
        if self.basis == "dynkin":
            return self
        return Weight(dynkin_of_root_scaled(self.group, self.coords), "dynkin", self.group)

    def to_root_scaled(self) -> "Weight":
        if self.basis == "root_scaled":
            return self
        return Weight(root_scaled_of_dynkin(self.group, self.coords), "root_scaled", self.group)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.coords), self.basis, self.group)

    def __add__(self, other: "Weight") -> "Weight":
        assert self.group == other.group and self.basis == other.basis
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis, self.group)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.to_dynkin().coords)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def in_root_lattice(self) -> bool:
        rs = self.to_root_scaled().coords
        for k, r in enumerate(self.group.root_systems):
            lo, hi = self.group.blocks[k]
            if any(x % r.lattice_index for x in rs[lo:hi]):
                return False
        return True


# -- per-block conversions on plain tuples ----------------------------------


def root_scaled_of_dynkin(g: GroupSpec, d: Coords) -> Coords:
    out = list(d)
    for k, rs in enumerate(g.root_systems):
        lo, hi = g.blocks[k]
        out[lo:hi] = rs.root_scaled_of_dynkin(tuple(d[lo:hi]))
    return tuple(out)


def dynkin_of_root_scaled(g: GroupSpec, c: Coords) -> Coords:
    out = list(c)
    for k, rs in enumerate(g.root_systems):
        lo, hi = g.blocks[k]
        out[lo:hi] = rs.dynkin_of_root_scaled(tuple(c[lo:hi]))
    return tuple(out)


def simple_reflections(g: GroupSpec) -> list[tuple[int, int, int]]:
    """All simple reflections as (block index, block start, local index)."""
    out = []
    for k, t in enumerate(g.simple_factors):
        lo, _hi = g.blocks[k]
        for i in range(t.rank):
            out.append((k, lo, i))
    return out


def reflect(g: GroupSpec, d: Coords, refl: tuple[int, int, int]) -> Coords:
    k, lo, i = refl
    rs = g.root_systems[k]
    ci = d[lo + i]
    if ci == 0:
        return d
    row = rs.cartan[i]
    out = list(d)
    for j in range(rs.rank):
        out[lo + j] -= ci * row[j]
    return tuple(out)


def weyl_orbit(g: GroupSpec, w: Weight) -> frozenset[Coords]:
    """Orbit of a weight (Dynkin coordinates) under the product Weyl group."""
    d0 = w.to_dynkin().coords
    refls = simple_reflections(g)
    seen = {d0}
    frontier = [d0]
    while frontier:
        nxt = []
        for d in frontier:
            for r in refls:
                e = reflect(g, d, r)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return frozenset(seen)


def signed_orbit(g: GroupSpec, d0: Coords) -> list[tuple[Coords, int]]:
    """(w·d0, sign(w)) for all w in W; requires d0 regular (no zero label).

    Regularity makes the orbit simply transitive, so the parity of the
    generating word is well defined.
    """
    for k, _t in enumerate(g.simple_factors):
        lo, hi = g.blocks[k]
        if any(x == 0 for x in d0[lo:hi]):
            raise RootSystemError("signed_orbit needs a regular weight")
    refls = simple_reflections(g)
    signs = {d0: 1}
    frontier = [d0]
    while frontier:
        nxt = []
        for d in frontier:
            s = signs[d]
            for r in refls:
                e = reflect(g, d, r)
                if e not in signs:
                    signs[e] = -s
                    nxt.append(e)
        frontier = nxt
    return list(signs.items())


def dominantize(g: GroupSpec, d: Coords) -> tuple[Coords, int]:
    out = list(d)
    sign = 1
    for k, rs in enumerate(g.root_systems):
        lo, hi = g.blocks[k]
        dom, s = rs.dominantize(tuple(out[lo:hi]))
        out[lo:hi] = dom
        sign *= s
    return tuple(out), sign


def orbit_size(g: GroupSpec, dominant: Coords) -> int:
    n = 1
    for k, rs in enumerate(g.root_systems):
        lo, hi = g.blocks[k]
        n *= rs.orbit_size(tuple(dominant[lo:hi]))
    return n


def dominant_weights_below(g: GroupSpec, lam: Weight) -> frozenset[Coords]:
    """All dominant μ ⪯ lam (lam − μ a nonnegative sum of simple roots).

    Computed by the dominant-chain descent: every such μ is reachable from
    lam through dominant weights by subtracting single positive roots.
    """
    d0 = lam.to_dynkin().coords
    if not all(x >= 0 for x in d0):
        raise RootSystemError("weight is not dominant")
    pos = g.positive_roots_dynkin()
    seen = {d0}
    frontier = [d0]
    while frontier:
        nxt = []
        for d in frontier:
            for b in pos:
                e = tuple(x - y for x, y in zip(d, b))
                if e not in seen and all(x >= 0 for x in e):
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return frozenset(seen)


# ---------------------------------------------------------------------------
# SL3 conventions: weights (p, q) = p*alpha + q*beta with p, q in (1/3)Z.

SL3 = GroupSpec((SimpleType("A", 2),))


def sl3_weight(r: int, s: int) -> Weight:
    """The A2 weight with Dynkin labels [r, s]."""
    return Weight((r, s), "dynkin", SL3)


def sl3_root_coords(w: Weight) -> tuple[Fraction, Fraction]:
    """(p, q) with w = p·alpha + q·beta (thirds allowed)."""
    c = w.to_root_scaled().coords
    return Fraction(c[0], 3), Fraction(c[1], 3)


def min_max_negation_ratios(g: GroupSpec, w: Weight) -> tuple[Fraction, Fraction]:
    """(max, min positive) of {-k/l : (k,l) in W·(p,q)} for dominant (p,q), p≠q.

    Closed forms: max = min(p,q)/|p−q| and min positive = |p−q|/min(p,q).
    """
    if g != SL3:
        raise RootSystemError("negation ratios are an SL3 (A2) notion")
    if not w.is_dominant():
        raise RootSystemError("weight must be dominant")
    p, q = sl3_root_coords(w)
    if p == q:
        raise RootSystemError("p = q: the ratio formulas degenerate")
    m = min(p, q)
    return m / abs(p - q), abs(p - q) / m


# ---------------------------------------------------------------------------
# Epsilon coordinates for the classical types and F4/G2.

def _eps_dim(t: SimpleType) -> int:
    return {"A": t.rank + 1, "B": t.rank, "C": t.rank, "D": t.rank, "F": 4, "G": 3}.get(t.family, -1)


def eps_to_dynkin(t: SimpleType, coeffs: Sequence[Fraction]) -> Coords:
    """Dynkin labels of sum_i coeffs[i] * eps_i in the standard realization."""
    n = t.rank
    c = [Fraction(x) for x in coeffs]
    if len(c) != _eps_dim(t):
        raise RootSystemError(f"{t} epsilon coordinates need {_eps_dim(t)} entries")
    out: list[Fraction]
    if t.family == "A":
        # project modulo (1,...,1)
        out = [c[i] - c[i + 1] for i in range(n)]
    elif t.family == "B":
        out = [c[i] - c[i + 1] for i in range(n - 1)] + [2 * c[n - 1]]
    elif t.family == "C":
        out = [c[i] - c[i + 1] for i in range(n - 1)] + [c[n - 1]]
    elif t.family == "D":
        out = [c[i] - c[i + 1] for i in range(n - 2)] + [c[n - 2] - c[n - 1], c[n - 2] + c[n - 1]]
    elif t.family == "F":
        out = [c[1] - c[2], c[2] - c[3], 2 * c[3], c[0] - c[1] - c[2] - c[3]]
    elif t.family == "G":
        out = [c[0] - c[1], Fraction(-2 * c[0] + c[1] + c[2], 3)]
    else:
        raise RootSystemError(f"no epsilon realization for {t}")
    bad = [x for x in out if x.denominator != 1]
    if bad:
        raise RootSystemError(f"epsilon vector {coeffs} is not in the weight lattice of {t}")
    return tuple(int(x) for x in out)


def dynkin_to_eps(t: SimpleType, d: Coords) -> tuple[Fraction, ...]:
    """Canonical epsilon coordinates of a weight (inverse of eps_to_dynkin).

    For type A the representative with last coordinate 0 is returned.
    """
    n = t.rank
    dd = [Fraction(x) for x in d]
    if t.family == "A":
        c = [Fraction(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            c[i] = c[i + 1] + dd[i]
        return tuple(c)
    if t.family == "B":
        c = [Fraction(0)] * n
        c[n - 1] = dd[n - 1] / 2
        for i in range(n - 2, -1, -1):
            c[i] = c[i + 1] + dd[i]
        return tuple(c)
    if t.family == "C":
        c = [Fraction(0)] * n
        c[n - 1] = dd[n - 1]
        for i in range(n - 2, -1, -1):
            c[i] = c[i + 1] + dd[i]
        return tuple(c)
    if t.family == "D":
        c = [Fraction(0)] * n
        c[n - 1] = (dd[n - 1] - dd[n - 2]) / 2
        c[n - 2] = (dd[n - 1] + dd[n - 2]) / 2
        for i in range(n - 3, -1, -1):
            c[i] = c[i + 1] + dd[i]
        return tuple(c)
    if t.family == "F":
        c4 = dd[2] / 2
        c3 = dd[1] + c4
        c2 = dd[0] + c3
        c1 = dd[3] + c2 + c3 + c4
        return (c1, c2, c3, c4)
    if t.family == "G":
        # representative with c1 + c2 + c3 = 0, where alpha1 = e1 - e2 and
        # alpha2 = -2e1 + e2 + e3: d1 = c1 - c2 and d2 = -c1 on that slice.
        c1 = -dd[1]
        c2 = -dd[0] - dd[1]
        c3 = dd[0] + 2 * dd[1]
        return (c1, c2, c3)
    raise RootSystemError(f"no epsilon realization for {t}")


# ---------------------------------------------------------------------------
# Text grammar

_GROUP_RE = re.compile(r"^([ABCDEFG])(\d+)$")
_TORUS_RE = re.compile(r"^T(\d+)$")
_EPS_TERM_RE = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*e(\d+)")


def parse_group(text: str) -> GroupSpec:
    """Parse strings like ``"A2"``, ``"A1xA1xG2"``, ``"B3xT1"``, ``"T1"``."""
    factors: list[SimpleType] = []
    torus = 0
    for part in text.strip().split("x"):
        m = _GROUP_RE.match(part)
        if m:
            factors.append(SimpleType(m.group(1), int(m.group(2))))
            continue
        m = _TORUS_RE.match(part)
        if m:
            torus += int(m.group(1))
            continue
        raise RootSystemError(f"cannot parse group factor {part!r}")
    return GroupSpec(tuple(factors), torus)


def format_group(g: GroupSpec) -> str:
    return str(g)


def parse_weight(g: GroupSpec, text: str) -> Weight:
    """Parse ``"[3,1]"``, ``"(2,-1)@root"`` or ``"e1+e2@eps"``."""
    text = text.strip()
    if text.endswith("@eps"):
        if len(g.simple_factors) != 1 or g.torus_rank:
            raise RootSystemError("@eps weights are only defined for one simple factor")
        t = g.simple_factors[0]
        body = text[: -len("@eps")].strip()
        coeffs = [Fraction(0)] * _eps_dim(t)
        pos = 0
        for m in _EPS_TERM_RE.finditer(body):
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            idx = int(m.group(3)) - 1
            if idx < 0 or idx >= len(coeffs):
                raise RootSystemError(f"epsilon index out of range in {text!r}")
            coeffs[idx] += sign * coef
            pos = m.end()
        if not _EPS_TERM_RE.search(body):
            raise RootSystemError(f"cannot parse epsilon weight {text!r}")
        return Weight(eps_to_dynkin(t, coeffs), "dynkin", g)
    if text.endswith("@root"):
        body = text[: -len("@root")].strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise RootSystemError(f"root_scaled weights look like (a,b)@root, got {text!r}")
        coords = tuple(int(x) for x in body[1:-1].split(","))
        return Weight(coords, "root_scaled", g)
    if text.startswith("[") and text.endswith("]"):
        coords = tuple(int(x) for x in text[1:-1].split(","))
        return Weight(coords, "dynkin", g)
    raise RootSystemError(f"cannot parse weight {text!r}")


def format_weight(w: Weight) -> str:
    if w.basis == "dynkin":
        return "[" + ",".join(str(x) for x in w.coords) + "]"
    return "(" + ",".join(str(x) for x in w.coords) + ")@root"


def format_weight_eps(w: Weight) -> str:
    """Canonical epsilon form (single simple factor only)."""
    g = w.group
    if len(g.simple_factors) != 1 or g.torus_rank:
        raise RootSystemError("@eps form is only defined for one simple factor")
    coeffs = dynkin_to_eps(g.simple_factors[0], w.to_dynkin().coords)
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if terms else "")
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        terms.append(f"{sign}{coef}e{i + 1}")
    if not terms:
        terms = ["0e1"]
    return "".join(terms) + "@eps"


def ratios_from_orbit(g: GroupSpec, w: Weight) -> set[Fraction]:
    """Positive values −k/l over the orbit of w in A2 root coordinates."""
    if g != SL3:
        raise RootSystemError("orbit ratios are an SL3 (A2) notion")
    out: set[Fraction] = set()
    for d in weyl_orbit(g, w):
        c = root_scaled_of_dynkin(g, d)
        k, l = Fraction(c[0], 3), Fraction(c[1], 3)
        if l != 0 and -k / l > 0:
            out.add(-k / l)
    return out
