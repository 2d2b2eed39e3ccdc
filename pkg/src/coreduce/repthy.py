"""Weight diagrams, symmetric powers, and multiplicity extraction.

Irreducible weight multiplicities come from the Freudenthal recursion run
over dominant weights only (the diagram is Weyl-invariant, so one value per
orbit suffices); full diagrams are materialized on demand by orbit closure.
Multiplicities of irreducibles inside an arbitrary character use the
alternating Weyl-sum (Racah) formula, which needs only point lookups.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .rootsys import (
    Coords,
    GroupSpec,
    RootSystem,
    RootSystemError,
    SimpleType,
    Weight,
    build_root_system,
    dominant_weights_below,
    dominantize,
    orbit_size,
    parse_weight,
    reflect,
    signed_orbit,
    simple_reflections,
)

SCHEMA_VERSION = 1

_freudenthal_cache: dict[tuple[SimpleType, Coords], dict[Coords, int]] = {}


def weyl_dim(t: SimpleType, hw: Coords) -> int:
    """Dimension of the irreducible with highest weight ``hw`` (Weyl formula)."""
    rs = build_root_system(t)
    delta = rs.weyl_vector
    num = 1
    den = 1
    lam_delta = tuple(a + b for a, b in zip(hw, delta))
    for alpha in rs.positive_roots:
        num *= rs.inner_dr(lam_delta, alpha)
        den *= rs.inner_dr(delta, alpha)
    assert num % den == 0
    return num // den


def group_weyl_dim(g: GroupSpec, hw: Coords) -> int:
    d = 1
    for k, t in enumerate(g.simple_factors):
        lo, hi = g.blocks[k]
        d *= weyl_dim(t, tuple(hw[lo:hi]))
    return d


def simple_dominant_diagram(
    t: SimpleType, hw: Coords, cache_dir: Optional[str] = None
) -> dict[Coords, int]:
    """Multiplicities of the dominant weights of the irreducible V(hw).

    Freudenthal recursion, exact integer arithmetic.  Results are cached in
    memory and, when ``cache_dir`` is given, on disk (atomic rename, so
    concurrent writers are safe).
    """
    hw = tuple(hw)
    key = (t, hw)
    if key in _freudenthal_cache:
        return _freudenthal_cache[key]
    path = None
    if cache_dir:
        tag = f"{t}-" + "_".join(str(x) for x in hw) + f"-v{SCHEMA_VERSION}.json"
        path = os.path.join(cache_dir, tag)
        if os.path.exists(path):
            with open(path) as fh:
                payload = json.load(fh)
            if payload.get("schema") == SCHEMA_VERSION:
                out = {tuple(e[:-1]): e[-1] for e in payload["entries"]}
                _freudenthal_cache[key] = out
                return out
    out = _freudenthal(t, hw)
    _freudenthal_cache[key] = out
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        payload = {
            "schema": SCHEMA_VERSION,
            "group": str(t),
            "highest_weight": list(hw),
            "entries": sorted([*coords, mult] for coords, mult in out.items()),
        }
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    return out


def _freudenthal(t: SimpleType, hw: Coords) -> dict[Coords, int]:
    rs = build_root_system(t)
    g = GroupSpec((t,))
    if any(x < 0 for x in hw):
        raise RootSystemError("highest weight must be dominant")
    dom = dominant_weights_below(g, Weight(hw, "dynkin", g))
    # process in decreasing height (sum of scaled root coordinates)
    ordered = sorted(dom, key=lambda d: -sum(rs.root_scaled_of_dynkin(d)))
    pos_dynkin = [rs.dynkin_of_root(a) for a in rs.positive_roots]
    delta = rs.weyl_vector
    mults: dict[Coords, int] = {hw: 1}
    hw_rs = rs.root_scaled_of_dynkin(hw)
    # string_tail[(nu, i)] = sum of mult(nu+k*alpha_i) * <nu+k*alpha_i, alpha_i>
    # over k >= 0 until the string leaves the diagram; weight strings through
    # a representation are contiguous, so the first absent point ends the sum
    string_tail: dict[tuple[Coords, int], int] = {}
    for mu in ordered:
        if mu == hw:
            continue
        num = 0
        for i, (a_root, a_dyn) in enumerate(zip(rs.positive_roots, pos_dynkin)):
            chain: list[tuple[Coords, int]] = []
            nu = tuple(m + d for m, d in zip(mu, a_dyn))
            while (nu, i) not in string_tail:
                nu_dom, _ = rs.dominantize(nu)
                m = mults.get(nu_dom)
                if m is None:
                    string_tail[(nu, i)] = 0
                    break
                chain.append((nu, m * rs.inner_dr(nu, a_root)))
                nu = tuple(x + d for x, d in zip(nu, a_dyn))
            total = string_tail[(nu, i)]
            for point, f in reversed(chain):
                total += f
                string_tail[(point, i)] = total
            num += string_tail[(tuple(m + d for m, d in zip(mu, a_dyn)), i)]
        # denominator (|hw+delta|^2 - |mu+delta|^2) = <hw+mu+2delta, hw-mu>
        diff_rs = tuple(a - b for a, b in zip(hw_rs, rs.root_scaled_of_dynkin(mu)))
        assert all(x % rs.lattice_index == 0 for x in diff_rs)
        diff_root = tuple(x // rs.lattice_index for x in diff_rs)
        summ = tuple(a + b + 2 * c for a, b, c in zip(hw, mu, delta))
        den = rs.inner_dr(summ, diff_root)
        assert den > 0 and (2 * num) % den == 0, (t, hw, mu)
        mults[mu] = 2 * num // den
    return mults


def dominant_diagram(
    g: GroupSpec, hw: Coords, cache_dir: Optional[str] = None
) -> dict[Coords, int]:
    """Dominant-weight multiplicities of the product-group irreducible V(hw)."""
    parts: list[dict[Coords, int]] = []
    for k, t in enumerate(g.simple_factors):
        lo, hi = g.blocks[k]
        parts.append(simple_dominant_diagram(t, tuple(hw[lo:hi]), cache_dir))
    torus = tuple(hw[g.blocks[-1][0] : g.blocks[-1][1]])
    out: dict[Coords, int] = {(): 1} if False else {}
    combos: list[tuple[Coords, int]] = [((), 1)]
    for part in parts:
        combos = [
            (prefix + coords, mult * m)
            for prefix, mult in combos
            for coords, m in part.items()
        ]
    for prefix, mult in combos:
        out[prefix + torus] = mult
    return out


@dataclass
class Character:
    """A virtual character: map from weights (Dynkin coordinates) to integers.

    ``dominant_only`` characters store one value per Weyl orbit and answer
    point queries by dominantization; they expand lazily.
    """

    group: GroupSpec
    entries: dict[Coords, int]
    dominant_only: bool = False

    def mult(self, coords: Coords) -> int:
        if self.dominant_only:
            dom, _ = dominantize(self.group, coords)
            return self.entries.get(dom, 0)
        return self.entries.get(coords, 0)

    def mass(self) -> int:
        if self.dominant_only:
            return sum(m * orbit_size(self.group, d) for d, m in self.entries.items())
        return sum(self.entries.values())

    def expand(self) -> "Character":
        if not self.dominant_only:
            return self
        full: dict[Coords, int] = {}
        for dom, m in self.entries.items():
            for w in _orbit(self.group, dom):
                full[w] = m
        return Character(self.group, full, False)

    def nonzero_weights(self) -> dict[Coords, int]:
        zero = tuple(0 for _ in range(self.group.rank))
        full = self.expand().entries
        return {w: m for w, m in full.items() if w != zero and m}

    def support_root_scaled(self) -> list[Coords]:
        """Nonzero weights with multiplicity, in scaled root-basis coordinates."""
        from .rootsys import root_scaled_of_dynkin

        out = []
        for w, m in sorted(self.nonzero_weights().items()):
            out.extend([root_scaled_of_dynkin(self.group, w)] * m)
        return out


def _orbit(g: GroupSpec, d0: Coords) -> set[Coords]:
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
    return seen


def weight_diagram(g: GroupSpec, hw: Coords, cache_dir: Optional[str] = None) -> Character:
    """Full weight diagram (with multiplicities) of the irreducible V(hw)."""
    return Character(g, dominant_diagram(g, hw, cache_dir), True).expand()


# ---------------------------------------------------------------------------
# Modules: formal sums of irreducibles of a product group.


@dataclass(frozen=True)
class ModuleSpec:
    group: GroupSpec
    summands: tuple[tuple[int, Coords], ...]  # (coefficient, highest weight)

    def __post_init__(self) -> None:
        for coeff, hw in self.summands:
            if coeff <= 0:
                raise ValueError("summand coefficients must be positive")
            if len(hw) != self.group.rank:
                raise ValueError("highest weight rank mismatch")
            if any(x < 0 for x in hw[: self.group.rank - self.group.torus_rank]):
                raise ValueError("highest weights must be dominant")

    def dimension(self) -> int:
        return sum(c * group_weyl_dim(self.group, hw) for c, hw in self.summands)

    def __str__(self) -> str:
        terms = []
        for c, hw in self.summands:
            w = "[" + ",".join(str(x) for x in hw) + "]"
            terms.append(w if c == 1 else f"{c}*{w}")
        return "+".join(terms)


def parse_module(g: GroupSpec, text: str) -> ModuleSpec:
    """Parse module text like ``[1,1]``, ``2*[0,1]+[2,0]``, ``3*[1]``."""
    summands = []
    for term in text.replace(" ", "").split("+"):
        if "*" in term:
            c_text, w_text = term.split("*", 1)
            coeff = int(c_text)
        else:
            coeff, w_text = 1, term
        w = parse_weight(g, w_text).to_dynkin().coords
        summands.append((coeff, w))
    return ModuleSpec(g, tuple(summands))


def module_weights(m: ModuleSpec, cache_dir: Optional[str] = None) -> Character:
    """Weight multiset of the module (direct sums add, tensor via the group)."""
    total: dict[Coords, int] = {}
    for coeff, hw in m.summands:
        diag = weight_diagram(m.group, hw, cache_dir)
        for w, mult in diag.entries.items():
            total[w] = total.get(w, 0) + coeff * mult
    return Character(m.group, total, False)


def min_root_multiplicity(
    m: ModuleSpec, cache_dir: Optional[str] = None
) -> tuple[int, Optional[Coords]]:
    """Minimum, over all roots of the group, of the root's weight multiplicity.

    Returns (0, some absent root) when a root is missing.  Multiplicities are
    Weyl-invariant, so only one root per length class and factor matters, but
    all are checked for the witness.
    """
    g = m.group
    # accumulate dominant-backed characters to keep E-series cheap
    chars = [
        (coeff, Character(g, dominant_diagram(g, hw, cache_dir), True))
        for coeff, hw in m.summands
    ]
    best: Optional[tuple[int, Coords]] = None
    for root_d in g.roots_dynkin():
        mult = sum(coeff * ch.mult(root_d) for coeff, ch in chars)
        if best is None or mult < best[0]:
            best = (mult, root_d)
    assert best is not None
    return best


def max_nonzero_weight_multiplicity(
    g: GroupSpec, hw: Coords, cache_dir: Optional[str] = None
) -> tuple[int, Optional[Coords]]:
    """Largest multiplicity among nonzero weights of V(hw), with a witness."""
    dom = dominant_diagram(g, hw, cache_dir)
    zero = tuple(0 for _ in range(g.rank))
    best = (0, None)
    for w, mult in dom.items():
        if w != zero and mult > best[0]:
            best = (mult, w)
    return best


def zero_weight_multiplicity(g: GroupSpec, hw: Coords, cache_dir: Optional[str] = None) -> int:
    dom = dominant_diagram(g, hw, cache_dir)
    return dom.get(tuple(0 for _ in range(g.rank)), 0)


# ---------------------------------------------------------------------------
# Symmetric powers


def symmetric_power(
    chi: Character, d: int, limits: Limits = DEFAULT_LIMITS
) -> list[Character]:
    """Characters of S^0(chi), ..., S^d(chi) for an effective character chi.

    Dynamic programming over the weight list: multiplying in one weight ``w``
    of multiplicity one is the geometric-series pass
    ``S[k] += shift(S[k], w)`` taken in increasing ``k``.  Runs on a dense
    integer array over the bounding box of reachable weights; the number of
    DP cells is capped by ``limits.dp_state_limit``.
    """
    entries = chi.expand().entries
    if any(m < 0 for m in entries.values()):
        raise ValueError("symmetric powers need an effective character")
    rank = chi.group.rank
    weights: list[Coords] = []
    for w, m in sorted(entries.items()):
        weights.extend([w] * m)
    if d == 0 or not weights:
        zero = tuple(0 for _ in range(rank))
        out = [Character(chi.group, {zero: 1}, False)]
        out += [Character(chi.group, {}, False) for _ in range(d)]
        return out
    lo = [min(0, d * min(w[j] for w in weights)) for j in range(rank)]
    hi = [max(0, d * max(w[j] for w in weights)) for j in range(rank)]
    shape = tuple(h - l + 1 for l, h in zip(lo, hi))
    cells = (d + 1) * int(np.prod([Fraction(s) for s in shape]))
    if cells > limits.dp_state_limit:
        raise ResourceLimitError(
            f"symmetric_power would need {cells} DP cells (> {limits.dp_state_limit})"
        )
    # overflow guard: every cell is bounded by the total mass of S^d
    mass_bound = 1
    n = len(weights)
    for i in range(d):
        mass_bound = mass_bound * (n + i) // (i + 1)
    use_numpy = mass_bound < 2**62
    if use_numpy:
        dp = np.zeros((d + 1,) + shape, dtype=np.int64)
        origin = tuple(-l for l in lo)
        dp[(0,) + origin] = 1
        for w in weights:
            src = tuple(
                slice(max(0, -w[j]), min(shape[j], shape[j] - w[j])) for j in range(rank)
            )
            dst = tuple(
                slice(max(0, w[j]), min(shape[j], shape[j] + w[j])) for j in range(rank)
            )
            for k in range(1, d + 1):
                dp[(k,) + dst] += dp[(k - 1,) + src]
        out = []
        for k in range(d + 1):
            layer = dp[k]
            idx = np.argwhere(layer)
            ent = {
                tuple(int(c) + l for c, l in zip(pos, lo)): int(layer[tuple(pos)])
                for pos in idx
            }
            out.append(Character(chi.group, ent, False))
        total = sum(c.mass() for c in out[1:]) + 1
        return out
    # big-int fallback: dict DP
    zero = tuple(0 for _ in range(rank))
    layers: list[dict[Coords, int]] = [{zero: 1}] + [dict() for _ in range(d)]
    for w in weights:
        for k in range(1, d + 1):
            prev = layers[k - 1]
            cur = layers[k]
            for x, c in list(prev.items()):
                y = tuple(a + b for a, b in zip(x, w))
                cur[y] = cur.get(y, 0) + c
    return [Character(chi.group, layer, False) for layer in layers]


def symmetric_power_multidegree(
    chis: Sequence[Character], degrees: Sequence[int], limits: Limits = DEFAULT_LIMITS
) -> Character:
    """S^{d_1}(chi_1) · ... · S^{d_k}(chi_k) as one character (convolution)."""
    assert len(chis) == len(degrees) and chis
    g = chis[0].group
    acc: dict[Coords, int] = {tuple(0 for _ in range(g.rank)): 1}
    for chi, d in zip(chis, degrees):
        part = symmetric_power(chi, d, limits)[d].entries
        nxt: dict[Coords, int] = {}
        for x, c in acc.items():
            for y, e in part.items():
                z = tuple(a + b for a, b in zip(x, y))
                nxt[z] = nxt.get(z, 0) + c * e
        acc = nxt
    return Character(g, acc, False)


# ---------------------------------------------------------------------------
# Multiplicity extraction (alternating Weyl sum)

_WEYL_ENUM_LIMIT = 100_000


def mult_in_character(chi: Character, lam: Coords) -> int:
    """Multiplicity of the irreducible V(lam) inside the character chi."""
    g = chi.group
    if g.weyl_order > _WEYL_ENUM_LIMIT:
        raise ResourceLimitError(
            f"Weyl group of order {g.weyl_order} too large for the alternating sum"
        )
    delta = g.weyl_vector
    start = tuple(a + b for a, b in zip(lam, delta))
    full = chi.expand()
    total = 0
    for pt, sign in signed_orbit(g, start):
        shifted = tuple(a - b for a, b in zip(pt, delta))
        total += sign * full.mult(shifted)
    return total


def invariant_dimension(chi: Character) -> int:
    return mult_in_character(chi, tuple(0 for _ in range(chi.group.rank)))


def character_point_convolution(
    parts: Sequence[Character], point: Coords
) -> int:
    """Value of the convolution of ``parts`` at one lattice point.

    Avoids materializing the full product when only a handful of point
    evaluations are needed (alternating Weyl sums over few points).
    """
    assert parts
    if len(parts) == 1:
        return parts[0].mult(point)
    first = parts[0].expand().entries
    rest = parts[1:]
    total = 0
    for x, c in first.items():
        if c:
            total += c * character_point_convolution(
                rest, tuple(a - b for a, b in zip(point, x))
            )
    return total


def mult_in_convolution(parts: Sequence[Character], lam: Coords) -> int:
    """Multiplicity of V(lam) in the product of the given characters.

    The parts are pre-convolved pairwise (greedy, smallest first) and the
    final product is only evaluated at the Weyl-sum points.
    """
    g = parts[0].group
    if g.weyl_order > _WEYL_ENUM_LIMIT:
        raise ResourceLimitError("Weyl group too large")
    work = sorted((p.expand() for p in parts), key=lambda c: len(c.entries))
    while len(work) > 2:
        a = work.pop(0)
        b = work.pop(0)
        prod: dict[Coords, int] = {}
        for x, c in a.entries.items():
            for y, e in b.entries.items():
                z = tuple(p + q for p, q in zip(x, y))
                prod[z] = prod.get(z, 0) + c * e
        work.append(Character(g, prod, False))
        work.sort(key=lambda c: len(c.entries))
    delta = g.weyl_vector
    start = tuple(a + b for a, b in zip(lam, delta))
    total = 0
    for pt, sign in signed_orbit(g, start):
        shifted = tuple(a - b for a, b in zip(pt, delta))
        total += sign * character_point_convolution(work, shifted)
    return total


# ---------------------------------------------------------------------------
# Generating-covariant existence (the counting bound)


@dataclass(frozen=True)
class CovariantCertificate:
    target: Coords
    degree: int
    multiplicity: int  # of V(target) in S^d(V)
    ideal_bound: int  # sum over e<d of dimInv_{d-e} * mult_e(target)
    per_degree_mults: tuple[int, ...]  # degrees 1..d
    per_degree_invariants: tuple[int, ...]  # degrees 1..d

    @property
    def exists(self) -> bool:
        return self.multiplicity > self.ideal_bound


def covariant_generator_exists(
    m: ModuleSpec, target: Coords, d: int, limits: Limits = DEFAULT_LIMITS
) -> CovariantCertificate:
    """Decide whether a generating covariant of type V(target) exists in degree d.

    True when the multiplicity of V(target) in S^d(V) exceeds the upper bound
    on the ideal part: sum over 0 < e < d of (invariants in degree d-e) times
    (covariants of that type in degree e).
    """
    chi = module_weights(m)
    powers = symmetric_power(chi, d, limits)
    mults = tuple(mult_in_character(powers[e], target) for e in range(1, d + 1))
    invs = tuple(invariant_dimension(powers[e]) for e in range(1, d + 1))
    bound = sum(invs[d - e - 1] * mults[e - 1] for e in range(1, d))
    return CovariantCertificate(target, d, mults[d - 1], bound, mults, invs)


def covariant_generator_exists_multidegree(
    summands: Sequence[Character],
    degrees: Sequence[int],
    target: Coords,
    limits: Limits = DEFAULT_LIMITS,
) -> CovariantCertificate:
    """Multigraded version: the module is a direct sum with one grading per summand.

    The ideal bound runs over proper nonzero sub-multidegrees e of the given
    multidegree d: invariants in degree d-e times covariants in degree e.
    """
    import itertools as it

    degrees = tuple(degrees)
    m_target = _multidegree_mult(summands, degrees, target, limits)
    bound = 0
    ranges = [range(x + 1) for x in degrees]
    for e in it.product(*ranges):
        if e == degrees or all(x == 0 for x in e):
            continue
        rem = tuple(a - b for a, b in zip(degrees, e))
        inv = _multidegree_mult(summands, rem, tuple(0 for _ in target), limits)
        if inv:
            bound += inv * _multidegree_mult(summands, e, target, limits)
    return CovariantCertificate(target, sum(degrees), m_target, bound, (), ())


def _multidegree_mult(
    summands: Sequence[Character], degrees: Sequence[int], lam: Coords, limits: Limits
) -> int:
    parts = [
        symmetric_power(chi, d, limits)[d] for chi, d in zip(summands, degrees) if d
    ]
    if not parts:
        return 1 if all(x == 0 for x in lam) else 0
    return mult_in_convolution(parts, lam)


def graded_invariant_series(
    summands: Sequence[Character],
    max_multidegree: Sequence[int],
    limits: Limits = DEFAULT_LIMITS,
) -> dict[Coords, int]:
    """Invariant dimensions of every multigraded piece up to the bound."""
    import itertools as it

    g = summands[0].group
    zero = tuple(0 for _ in range(g.rank))
    out: dict[Coords, int] = {}
    for degs in it.product(*[range(x + 1) for x in max_multidegree]):
        out[degs] = _multidegree_mult(summands, degs, zero, limits)
    return out
