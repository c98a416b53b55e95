import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _support import groups_up_to
from autorbit.equivalence import are_automorphic, quotient_key
from autorbit.errors import DimensionMismatch
from autorbit.groups import element_order, make_group
from autorbit.oracle import brute_orbits, enumerate_automorphisms


def test_unit_scaling_and_swap_are_automorphic():
    G = make_group([4, 4])
    assert are_automorphic(G, G.element([1, 0]), G.element([0, 3]))


def test_distinct_quotients_not_automorphic():
    G = make_group([2, 4])
    x, y = G.element([1, 0]), G.element([0, 2])
    assert quotient_key(G, x).describe_invariant() == "C4"
    assert quotient_key(G, y).describe_invariant() == "C2 x C2"
    assert not are_automorphic(G, x, y)
    # brute confirmation: Aut(C2+C4) has 8 elements and the orbit of (1,0)
    # is {(1,0), (1,2)}
    assert len(enumerate_automorphisms(G)) == 8
    orbit = next(
        o for o in brute_orbits(G) if G.element([1, 0]) in o
    )
    assert {e.coords for e in orbit} == {(1, 0), (1, 2)}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 32])
def test_uniform_family_ones_and_threes(n):
    G = make_group([4] * n)
    assert are_automorphic(G, G.element([1] * n), G.element([3] * n))


def test_quotient_key_dispatch_agrees():
    G = make_group([2, 4, 8, 8])
    x = G.element([2, 1, 2, 4])
    fast = quotient_key(G, x, method="fast")
    snf = quotient_key(G, x, method="snf")
    assert fast == snf
    assert fast.primary_parts == {2: (3, 3, 1)}
    G5 = make_group([5])
    for method in ("fast", "snf"):
        assert quotient_key(G5, G5.element([0]), method).primary_parts == {5: (1,)}
    with pytest.raises(ValueError):
        quotient_key(G, x, method="magic")


def test_are_automorphic_method_param():
    G = make_group([6, 4])
    x, y = G.element([3, 2]), G.element([3, 2])
    assert are_automorphic(G, x, y, method="snf")


def test_dimension_mismatch():
    G = make_group([2, 4])
    H = make_group([2, 4, 8])
    with pytest.raises(DimensionMismatch):
        are_automorphic(G, G.element([1, 1]), H.element([1, 1, 1]))


def test_equivalence_relation_properties():
    for G in groups_up_to(36):
        elems = list(G.elements())
        keys = {x.coords: quotient_key(G, x) for x in elems}
        for x in elems:
            assert are_automorphic(G, x, x)
        for x, y in itertools.combinations(elems, 2):
            assert are_automorphic(G, x, y) == are_automorphic(G, y, x)
        # transitivity on key classes: same key twice chains
        by_key = {}
        for x in elems:
            by_key.setdefault(keys[x.coords], []).append(x)
        for cls in by_key.values():
            for a, b in zip(cls, cls[1:]):
                assert are_automorphic(G, a, b)


def test_matches_exhaustive_orbit_search_small():
    for G in groups_up_to(32):
        if G.order ** G.rank > 10**7:
            continue
        orbit_id = {}
        for i, orbit in enumerate(brute_orbits(G)):
            for e in orbit:
                orbit_id[e.coords] = i
        elems = list(G.elements())
        keys = {x.coords: quotient_key(G, x) for x in elems}
        for x, y in itertools.combinations_with_replacement(elems, 2):
            same_orbit = orbit_id[x.coords] == orbit_id[y.coords]
            same_key = keys[x.coords] == keys[y.coords]
            assert same_orbit == same_key, (G, x, y)
            assert are_automorphic(G, x, y) == same_orbit


def test_maximal_order_elements_share_one_quotient():
    for G in groups_up_to(128):
        exp = G.exponent
        max_keys = {
            quotient_key(G, x) for x in G.elements() if element_order(x) == exp
        }
        assert len(max_keys) == 1, G


@given(
    st.lists(st.integers(2, 12), min_size=1, max_size=3),
    st.randoms(use_true_random=False),
)
def test_equivalence_implies_equal_order(mods, rng):
    G = make_group(mods)
    x = G.element([rng.randrange(d) for d in mods])
    y = G.element([rng.randrange(d) for d in mods])
    if are_automorphic(G, x, y):
        assert element_order(x) == element_order(y)
