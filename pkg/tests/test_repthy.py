import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from coreduce.config import Limits
from coreduce.repthy import (
    CovariantCertificate,
    ModuleSpec,
    covariant_generator_exists,
    covariant_generator_exists_multidegree,
    graded_invariant_series,
    group_weyl_dim,
    invariant_dimension,
    module_weights,
    mult_in_character,
    parse_module,
    symmetric_power,
    weight_diagram,
    zero_weight_multiplicity,
)
from coreduce.rootsys import Weight, dominantize, parse_group, weyl_orbit

from oracles import kostant_weight_multiplicity

LIMITS = Limits()


KNOWN_DIMS = [
    ("A1", (1,), 2),
    ("A1", (6,), 7),
    ("A2", (1, 1), 8),
    ("A2", (3, 1), 24),
    ("B3", (1, 0, 0), 7),
    ("B3", (0, 0, 1), 8),
    ("C3", (0, 1, 0), 14),
    ("D4", (0, 1, 0, 0), 28),
    ("G2", (1, 0), 7),
    ("G2", (0, 1), 14),
    ("F4", (0, 0, 0, 1), 26),
    ("F4", (1, 0, 0, 0), 52),
]


@pytest.mark.parametrize("name,hw,dim", KNOWN_DIMS)
def test_known_dimensions(name, hw, dim):
    g = parse_group(name)
    assert group_weyl_dim(g, hw) == dim
    assert weight_diagram(g, hw).mass() == dim


def test_mass_equals_weyl_dim_sweep():
    """Multiplicity sum = dimension formula across small highest weights."""
    for name in ["A2", "B2", "G2", "A3", "B3", "C3"]:
        g = parse_group(name)
        for hw in itertools.product(range(3), repeat=g.rank):
            if group_weyl_dim(g, hw) > 600:
                continue
            assert weight_diagram(g, hw).mass() == group_weyl_dim(g, hw)


def test_pointwise_kostant_oracle_rank2():
    for name in ["A2", "B2", "G2", "A1xA1"]:
        g = parse_group(name)
        for hw in itertools.product(range(4), repeat=2):
            if group_weyl_dim(g, hw) > 50:
                continue
            chi = weight_diagram(g, hw).expand()
            for w, m in chi.entries.items():
                assert kostant_weight_multiplicity(g, hw, w) == m


@given(
    name=st.sampled_from(["A2", "B2", "G2"]),
    hw=st.tuples(st.integers(0, 3), st.integers(0, 3)),
)
@settings(max_examples=40, deadline=None)
def test_weyl_invariance_of_diagrams(name, hw):
    g = parse_group(name)
    chi = weight_diagram(g, hw)
    for w, m in list(chi.expand().entries.items())[:20]:
        for v in weyl_orbit(g, Weight(w, "dynkin", g)):
            assert chi.mult(v) == m


def test_symmetric_power_mass():
    g = parse_group("A2")
    chi = module_weights(ModuleSpec(g, ((1, (1, 1)),)))
    powers = symmetric_power(chi, 5, LIMITS)
    for d in range(1, 6):
        assert powers[d].mass() == math.comb(8 + d - 1, d)


def test_symmetric_power_binary_quadratic():
    # S^d of the 3-dim module of the rank-1 group: one invariant every
    # even degree (the discriminant powers)
    g = parse_group("A1")
    chi = module_weights(ModuleSpec(g, ((1, (2,)),)))
    powers = symmetric_power(chi, 6, LIMITS)
    assert [invariant_dimension(powers[d]) for d in range(1, 7)] == [0, 1, 0, 1, 0, 1]


def test_invariant_dimension_is_trivial_isotypic_count():
    g = parse_group("A2")
    chi = module_weights(ModuleSpec(g, ((1, (1, 0)), (1, (0, 1)))))
    powers = symmetric_power(chi, 4, LIMITS)
    # C^3 + (C^3)*: invariants generated by the pairing, one per degree step
    assert [invariant_dimension(powers[d]) for d in range(1, 5)] == [0, 1, 0, 1]


def test_zero_weight_multiplicities():
    g = parse_group("F4")
    assert zero_weight_multiplicity(g, (0, 0, 0, 1)) == 2
    assert zero_weight_multiplicity(g, (1, 0, 0, 0)) == 4
    a2 = parse_group("A2")
    assert zero_weight_multiplicity(a2, (1, 1)) == 2


def test_covariant_certificate_example():
    g = parse_group("A1xA1")
    m = ModuleSpec(g, ((3, (1, 1)),))
    cert = covariant_generator_exists(m, (1, 1), 3, LIMITS)
    assert cert.exists
    assert (cert.multiplicity, cert.ideal_bound) == (19, 18)


def test_covariant_certificate_monotone_consistency():
    # per-degree tables in the certificate are internally consistent
    g = parse_group("A2")
    m = ModuleSpec(g, ((1, (3, 1)),))
    cert = covariant_generator_exists(m, (1, 0), 8, LIMITS)
    assert cert.exists and cert.degree == 8
    assert cert.multiplicity == cert.per_degree_mults[-1] == 44
    d = cert.degree
    bound = sum(
        cert.per_degree_invariants[d - e - 1] * cert.per_degree_mults[e - 1]
        for e in range(1, d)
    )
    assert bound == cert.ideal_bound == 4


def test_multidegree_refines_total_degree():
    g = parse_group("A1")
    chi = module_weights(ModuleSpec(g, ((1, (2,)),)))
    total = symmetric_power(chi, 4, LIMITS)
    agg = 0
    for a in range(5):
        b = 4 - a
        cert = covariant_generator_exists_multidegree(
            [chi, chi], (a, b), (0,), LIMITS
        )
        agg += cert.multiplicity
    two = symmetric_power(module_weights(ModuleSpec(g, ((2, (2,)),))), 4, LIMITS)
    assert agg == invariant_dimension(two[4])


def test_graded_invariant_series_small():
    g = parse_group("A1")
    chi = module_weights(ModuleSpec(g, ((1, (2,)),)))
    series = graded_invariant_series([chi, chi], (2, 2), LIMITS)
    assert series[(0, 0)] == 1
    assert series[(1, 1)] == 1  # the polarized discriminant pairing
    assert series[(2, 0)] == 1 == series[(0, 2)]


def test_parse_module_roundtrip():
    g = parse_group("A2")
    for text in ["[3,1]", "2*[1,0]+[0,1]", "[1,1]+[2,0]"]:
        m = parse_module(g, text)
        assert str(parse_module(g, str(m))) == str(m)


def test_module_dimension_additivity():
    g = parse_group("B3")
    m = parse_module(g, "2*[1,0,0]+[0,0,1]")
    assert m.dimension() == 2 * 7 + 8
    assert module_weights(m).mass() == m.dimension()
