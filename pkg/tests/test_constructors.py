import itertools

import pytest

from hypercolor.combinatorics import binomial
from hypercolor.constructors import (
    construct,
    construct_balanced_2color,
    construct_balanced_3color,
    construct_degenerate,
    construct_tripartite_2color,
    x_prime,
)
from hypercolor.errors import UnsupportedRegimeError, ValidationError
from hypercolor.model import ColorCounts, HypergraphSpec, canonicalize

from oracle import brute_min, formula, orbit_key


def reds(result):
    return [tuple(row[0] for row in c.counts) for c in result.colorings]


def oracle_keys(spec):
    return brute_min(spec.class_sizes, spec.edge_size, spec.num_colors)


def assert_matches_oracle(result):
    spec = result.spec
    value, keys = oracle_keys(spec)
    assert result.value == value
    ours = {orbit_key(spec.class_sizes, c.counts) for c in result.colorings}
    if result.complete:
        assert ours == keys
    else:
        assert ours <= keys


# -- balanced, two colors -----------------------------------------------------

def test_balanced2_examples():
    r = construct_balanced_2color(4, 3, 3)
    assert reds(r) == [(4, 2, 0)] and r.value == 32
    r = construct_balanced_2color(3, 2, 3)
    assert reds(r) == [(3, 0)] and r.value == 0
    r = construct_balanced_2color(5, 4, 3)
    assert reds(r) == [(5, 5, 0, 0)]
    assert r.value == oracle_keys(r.spec)[0]


@pytest.mark.parametrize("n,k,e", [(n, k, e) for e in (3, 4) for n in range(e, 6) for k in (2, 3)])
def test_balanced2_is_the_unique_minimum(n, k, e):
    assert_matches_oracle(construct_balanced_2color(n, k, e))


@pytest.mark.parametrize("args", [(2, 3, 3), (4, 1, 3), (4, 3, 2)])
def test_balanced2_bounds(args):
    with pytest.raises(UnsupportedRegimeError):
        construct_balanced_2color(*args)


# -- tripartite, two colors ---------------------------------------------------

def test_tripartite_examples():
    r = construct_tripartite_2color(3, 3, 6)
    assert reds(r) == [(3, 3, 0)] and r.value == 18
    r = construct_tripartite_2color(3, 4, 5)
    assert reds(r) == [(1, 0, 5)] and r.value == 26
    r = construct_tripartite_2color(2, 3, 4)
    assert r.value == 9 and len(r.colorings) == 2
    spec = r.spec
    assert r.keys() == {canonicalize(spec, ColorCounts.two_color(spec, x)) for x in [(0, 0, 4), (1, 3, 0)]}


@pytest.mark.parametrize("n1,n3,N,expected", [(3, 5, 12, 6), (2, 4, 9, 4), (3, 4, 10, 5)])
def test_x_prime_examples(n1, n3, N, expected):
    assert x_prime(n1, n3, N) == expected


def test_x_prime_rejects_degenerate_denominator():
    with pytest.raises(ValidationError):
        x_prime(3, 0, 3)


def test_x_prime_is_the_last_improving_red_total():
    # adding a red vertex to class 1 of (X - n3, 0, n3) helps exactly while X < x_prime
    for n1, n2, n3 in itertools.product(range(1, 9), repeat=3):
        if not (n1 <= n2 <= n3 and n1 + n2 > n3):
            continue
        N = n1 + n2 + n3
        xp = x_prime(n1, n3, N)
        for X in range(n3, n3 + n1):
            before = formula(3, ((X - n3, n1 - X + n3), (0, n2), (n3, 0)))
            after = formula(3, ((X - n3 + 1, n1 - X + n3 - 1), (0, n2), (n3, 0)))
            assert (after < before) == (X < xp), (n1, n2, n3, X)


def _type_b(limit):
    for n1 in range(1, limit + 1):
        for n2 in range(n1, limit + 1):
            for n3 in range(n2, limit + 1):
                if n1 + n2 > n3:
                    yield n1, n2, n3


def test_x_prime_bounds_that_hold():
    for n1, n2, n3 in _type_b(30):
        N = n1 + n2 + n3
        xp = x_prime(n1, n3, N)
        assert xp <= N // 2
        assert xp - n3 <= n1


def _below_n3():
    return [t for t in _type_b(30) if x_prime(t[0], t[2], sum(t)) < t[2]]


def test_x_prime_below_n3_is_flagged():
    # the ceiling formula can fall just short of n3 when n1 + n2 barely exceeds n3
    low = _below_n3()
    assert len(low) == 45
    assert (9, 9, 17) in low and x_prime(9, 17, 35) == 16
    for n1, n2, n3 in low:
        assert n1 + n2 - n3 <= 3
        assert n3 - x_prime(n1, n3, n1 + n2 + n3) <= 2


def test_clamped_triples_match_the_oracle():
    for t in _below_n3():
        r = construct_tripartite_2color(*t)
        assert r.regime.endswith("/clamped")
        assert reds(r) == [(0, 0, t[2])]
        assert_matches_oracle(r)


def test_type_a_boundary_is_type_a():
    for n1, n2 in [(3, 3), (3, 4), (2, 5), (1, 3)]:
        n3 = n1 + n2
        spec = HypergraphSpec((n1, n2, n3))
        assert spec.tripartite_type == "A"
        r = construct_tripartite_2color(n1, n2, n3)
        assert "type-A" in r.regime and "type-B" not in r.regime
        assert reds(r) == [(n1, n2, 0)]
        assert_matches_oracle(r)


@pytest.mark.parametrize("sizes", [(1, 1, 3), (1, 1, 6), (1, 2, 4), (2, 2, 3), (2, 2, 5), (2, 3, 4), (2, 5, 6), (2, 4, 4), (1, 4, 6)])
def test_small_class_cases_match_oracle(sizes):
    assert_matches_oracle(construct_tripartite_2color(*sizes))


def test_small_class_regime_labels():
    assert construct_tripartite_2color(1, 1, 4).regime == "tripartite/small-1-1"
    assert construct_tripartite_2color(1, 2, 4).regime == "tripartite/small-1-2"
    assert construct_tripartite_2color(2, 2, 3).regime == "tripartite/small-2-2"
    assert len(construct_tripartite_2color(2, 2, 3).colorings) == 2
    assert len(construct_tripartite_2color(2, 2, 4).colorings) == 1
    assert construct_tripartite_2color(2, 4, 5).regime.endswith("/pair")


def test_tripartite_errors():
    with pytest.raises(ValidationError):
        construct_tripartite_2color(4, 3, 5)
    with pytest.raises(UnsupportedRegimeError):
        construct_tripartite_2color(1, 2, 2)


# -- balanced, three colors ---------------------------------------------------

def test_balanced3_examples():
    r = construct_balanced_3color(3, 3, 3)
    assert r.value == 0
    r = construct_balanced_3color(3, 4, 3)
    assert r.value == 9 and r.colorings[0].counts[-1] == (1, 1, 1)
    r = construct_balanced_3color(4, 4, 3)
    assert r.value == 28 and sorted(r.colorings[0].counts[-1]) == [1, 1, 2]


def test_balanced3_open_case():
    with pytest.raises(UnsupportedRegimeError, match="open problem"):
        construct_balanced_3color(3, 5, 3)
    with pytest.raises(UnsupportedRegimeError):
        construct_balanced_3color(2, 3, 3)


def test_balanced3_value_formula_k1():
    for n in range(3, 7):
        r = construct_balanced_3color(n, 4, 3)
        spec = r.spec
        assert r.value == formula(3, r.colorings[0].counts)
        assert max(r.colorings[0].counts[-1]) - min(r.colorings[0].counts[-1]) <= 1
        assert spec.k == 4


@pytest.mark.parametrize("n", [3, 4])
def test_balanced3_k4_matches_oracle(n):
    assert_matches_oracle(construct_balanced_3color(n, 4, 3))


# -- degenerate ---------------------------------------------------------------

def test_degenerate_examples():
    r = construct_degenerate(HypergraphSpec((2, 2, 2), 3, 2))
    assert r.colorings[0].totals == (3, 3) and r.value == 2
    r = construct_degenerate(HypergraphSpec((3, 3), 3, 3))
    assert r.value == 0
    r = construct_degenerate(HypergraphSpec((3, 3, 3, 3), 3, 2))
    assert reds(r) == [(3, 3, 0, 0)]
    assert r.value == 36 == 2 * (binomial(6, 3) - 2 * binomial(3, 3))


@pytest.mark.parametrize("spec", [
    HypergraphSpec((2, 2, 2), 3, 2),
    HypergraphSpec((1, 2, 2, 2), 3, 3),
    HypergraphSpec((2, 2), 4, 3),
    HypergraphSpec((3, 3), 3, 3),
    HypergraphSpec((4, 2), 3, 3),
    HypergraphSpec((3, 3, 3, 3), 3, 2),
    HypergraphSpec((4, 4, 4, 4), 3, 2),
    HypergraphSpec((3,) * 6, 3, 3),
])
def test_degenerate_matches_oracle(spec):
    assert_matches_oracle(construct_degenerate(spec))


def test_degenerate_rejects_other_specs():
    with pytest.raises(UnsupportedRegimeError):
        construct_degenerate(HypergraphSpec((3, 3, 3), 3, 2))


# -- dispatcher ---------------------------------------------------------------

@pytest.mark.parametrize("spec, regime", [
    (HypergraphSpec((4, 4, 4), 3, 2), "balanced-2color"),
    (HypergraphSpec((3, 4, 5), 3, 2), "tripartite/type-B"),
    (HypergraphSpec((3, 3, 3, 3), 3, 3), "balanced-3color"),
    (HypergraphSpec((2, 2, 2), 3, 2), "degenerate/small-classes"),
    (HypergraphSpec((3, 3), 3, 3), "degenerate/few-classes"),
    (HypergraphSpec((3,) * 4, 3, 4), "degenerate/divisible"),
])
def test_construct_dispatch(spec, regime):
    assert construct(spec).regime == regime


def test_construct_unsupported():
    with pytest.raises(UnsupportedRegimeError):
        construct(HypergraphSpec((3, 4, 5), 4, 2))
    with pytest.raises(UnsupportedRegimeError):
        construct(HypergraphSpec((3,) * 5, 3, 3))
    with pytest.raises(UnsupportedRegimeError):
        construct(HypergraphSpec((3, 3, 4, 4), 3, 2))


def test_result_json():
    data = construct_balanced_2color(4, 3, 3).to_json()
    assert data["value"] == "32" and data["complete"] is True
    assert data["colorings"][0] == [[4, 0], [2, 2], [0, 4]]
