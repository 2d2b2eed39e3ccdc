import random

from hypothesis import given, settings, strategies as st

from coreduce.config import Limits
from coreduce.monoid import (
    brute_force_minimal_relations,
    exists_sum,
    hilbert_basis,
    is_torus_coreduced,
)

from oracles import brute_force_torus_coreduced

LIMITS = Limits()


def test_plus_minus_k_is_coreduced():
    for k in [1, 2, 5, 9]:
        assert is_torus_coreduced([(k,), (-k,)], LIMITS).coreduced


def test_four_six_example():
    v = is_torus_coreduced([(4,), (-4,), (6,), (-6,)], LIMITS)
    assert not v.coreduced
    assert max(v.certificate.coeffs) == 3


def test_hilbert_basis_four_six():
    basis = hilbert_basis([(4,), (-4,), (6,), (-6,)], LIMITS)
    got = sorted(g.coeffs for g in basis.generators)
    assert got == [(0, 0, 1, 1), (0, 3, 2, 0), (1, 1, 0, 0), (3, 0, 0, 2)]


nonzero_pair = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(
    lambda w: w != (0, 0)
)
weight_lists = st.lists(nonzero_pair, min_size=1, max_size=6)


@given(ws=weight_lists)
@settings(max_examples=250, deadline=None)
def test_hilbert_basis_matches_brute_force_2d(ws):
    basis = hilbert_basis(ws, LIMITS)
    small = sorted(g.coeffs for g in basis.generators if g.degree <= 7)
    oracle = sorted(brute_force_minimal_relations(ws, 7))
    assert small == oracle


@given(ws=st.lists(st.tuples(st.integers(-4, 4)), min_size=1, max_size=6))
@settings(max_examples=250, deadline=None)
def test_coreduced_matches_brute_force_1d(ws):
    got = is_torus_coreduced(ws, LIMITS).coreduced
    oracle = brute_force_torus_coreduced(list(ws), bound=8)
    # oracle bound 8 covers every generator here: coords in [-4,4]
    if not oracle:
        assert not got
    elif not got:
        # the only escape: a violating generator too big for the oracle bound
        cert = is_torus_coreduced(ws, LIMITS).certificate
        assert cert.degree > 8


def test_torus_certificate_is_exact_relation():
    rng = random.Random(7)
    for _ in range(100):
        ws = [
            (rng.randint(-4, 4), rng.randint(-4, 4))
            for _ in range(rng.randint(1, 6))
        ]
        v = is_torus_coreduced(ws, LIMITS)
        if v.certificate is not None:
            for j in range(2):
                assert (
                    sum(c * w[j] for c, w in zip(v.certificate.coeffs, v.weights))
                    == 0
                )
            assert max(v.certificate.coeffs) >= 2


@given(
    ws=st.lists(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5
    ),
    target=st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
    count=st.integers(1, 5),
)
@settings(max_examples=150, deadline=None)
def test_exists_sum_matches_exhaustive(ws, target, count):
    got = exists_sum(ws, target, count, "exact_count", LIMITS)
    feasible = any(
        tuple(sum(w[j] for w in pick) for j in range(2)) == target
        for pick in _multisets(ws, count)
    )
    assert got.feasible == feasible
    if got.feasible:
        chosen = [ws[i] for i in got.chosen]
        assert len(chosen) == count
        assert tuple(sum(w[j] for w in chosen) for j in range(2)) == target


def _multisets(ws, count):
    import itertools

    return itertools.combinations_with_replacement(ws, count)


def test_exists_sum_at_most_is_monotone():
    ws = [(2, 0), (-1, 1), (0, -1)]
    for target in [(1, 0), (0, 0), (3, -1)]:
        feas = [
            exists_sum(ws, target, c, "at_most", LIMITS).feasible for c in range(1, 8)
        ]
        # once feasible at some count, stays feasible for larger bounds
        assert feas == sorted(feas)
