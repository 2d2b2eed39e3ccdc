"""Independent brute-force oracles used to cross-check the fast algorithms.

Everything here is deliberately naive: exhaustive enumeration with exact
integer arithmetic, no shared code paths with the package internals beyond
basic root-system bookkeeping.
"""

from __future__ import annotations

from functools import lru_cache

from coreduce.rootsys import GroupSpec, root_scaled_of_dynkin


def kostant_weight_multiplicity(g: GroupSpec, hw: tuple, target: tuple) -> int:
    """Weight multiplicity by the alternating sum over the Weyl group of
    Kostant partition numbers (Weyl character formula, brute force)."""
    rho = tuple(1 for _ in range(g.rank))
    lam_rho = tuple(a + b for a, b in zip(hw, rho))
    mu_rho_scaled = root_scaled_of_dynkin(
        g, tuple(a + b for a, b in zip(target, rho))
    )
    total = 0
    for wd, sign in _signed_orbit(g, lam_rho):
        diff = tuple(
            a - b for a, b in zip(root_scaled_of_dynkin(g, wd), mu_rho_scaled)
        )
        total += sign * _partition_count(g, diff)
    return total


@lru_cache(maxsize=None)
def _partition_cache(g: GroupSpec):
    return {}


def _partition_count(g: GroupSpec, vec: tuple) -> int:
    """Number of multisets of positive roots (scaled coords) summing to vec."""
    cache = _partition_cache(g)
    pos = sorted(root_scaled_of_dynkin(g, d) for d in g.positive_roots_dynkin())

    def rec(v: tuple, i: int) -> int:
        if all(x == 0 for x in v):
            return 1
        if i >= len(pos):
            return 0
        key = (v, i)
        if key in cache:
            return cache[key]
        total = 0
        w = v
        j = 0
        while True:
            total += rec(w, i + 1)
            w = tuple(a - b for a, b in zip(w, pos[i]))
            j += 1
            # positive roots have positive height: stop when overshooting
            if sum(w) < 0 or j > 400:
                break
        cache[key] = total
        return total

    return rec(vec, 0)


def _signed_orbit(g: GroupSpec, d0: tuple):
    """(w(d0), det w) over the Weyl orbit of a regular weight d0."""
    from coreduce.rootsys import signed_orbit

    return signed_orbit(g, d0)


def brute_force_symmetric_power_mass(dim: int, d: int) -> int:
    """dim S^d(C^dim) by the multiset-coefficient formula."""
    import math

    return math.comb(dim + d - 1, d)


def brute_force_torus_coreduced(weights: list, bound: int = 8) -> bool:
    """Every componentwise-minimal relation with coefficient sum <= bound has
    0/1 coefficients.  Exhaustive over compositions."""
    from coreduce.monoid import brute_force_minimal_relations

    ws = [w for w in weights if any(x != 0 for x in w)]
    if not ws:
        return True
    for rel in brute_force_minimal_relations(ws, bound):
        if max(rel) >= 2:
            return False
    return True


def brute_force_sl3_dominant_sets(m, limits) -> list:
    """Admissible sets of an A2 module by exhaustive rational slope sweep,
    for cross-checking the chamber enumeration."""
    from fractions import Fraction
    from coreduce.nullcone import Cocharacter, AdmissibleSet, _positive_set
    from coreduce.repthy import module_weights

    chi = module_weights(m)
    g = m.group
    # candidate slopes: mediants between consecutive critical slopes
    crits = set()
    for w in chi.nonzero_weights():
        c = root_scaled_of_dynkin(g, w)
        if c[1] != 0:
            crits.add(Fraction(-c[0], c[1]))
    samples = []
    pts = sorted(crits)
    cuts = [pts[0] - 1] + pts + [pts[-1] + 1]
    for a, b in zip(cuts, cuts[1:]):
        samples.append((a + b) / 2)
    out = []
    seen = set()
    for t in samples:
        rho = Cocharacter((Fraction(1), t), g)
        if not rho.is_dominant():
            continue
        try:
            pos = _positive_set(chi, rho)
        except Exception:
            continue
        if pos in seen:
            continue
        seen.add(pos)
        adm = AdmissibleSet(pos, rho)
        adm.verify(chi)
        out.append(adm)
    return out
