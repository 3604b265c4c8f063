from fractions import Fraction
from itertools import combinations

import pytest

from pentagon.cotree import (
    Cotree,
    alpha_omega,
    build_cotree,
    cotree_from_json,
    is_cograph,
    rebuild,
)
from pentagon.errors import NotCograph
from pentagon.graph import complement, from_edge_list
from pentagon.testkit import GenSpec, alpha_omega_exact, generate, is_p4_free_bruteforce, make_rng

from conftest import complete, cycle, edgeless, path


def leaf(v):
    return Cotree("leaf", v)


def _canonical(T):
    stack = [T]
    while stack:
        t = stack.pop()
        if t.op == "leaf":
            continue
        assert len(t.children) >= 2
        assert all(ch.op != t.op for ch in t.children)
        mins = [min(ch.leaves) for ch in t.children]
        assert mins == sorted(mins)
        stack.extend(t.children)
    return True


def test_is_cograph_examples():
    assert not is_cograph(path(4))
    assert is_cograph(complete(4))
    assert not is_cograph(cycle(5))
    assert is_cograph(edgeless(1)) and is_cograph(edgeless(0))


def test_build_cotree_examples():
    T = build_cotree(edgeless(3))
    assert T == Cotree("union", None, (leaf(0), leaf(1), leaf(2)))
    T = build_cotree(complete(3))
    assert T == Cotree("join", None, (leaf(0), leaf(1), leaf(2)))
    T = build_cotree(path(3))
    assert T.op == "join"
    assert set(T.children) == {leaf(1), Cotree("union", None, (leaf(0), leaf(2)))}
    assert rebuild(T) == path(3)


def test_not_cograph_carries_p4():
    for G in (path(4), cycle(5), cycle(6)):
        with pytest.raises(NotCograph) as info:
            build_cotree(G)
        p4 = info.value.p4
        assert len(set(p4)) == 4 and not is_p4_free_bruteforce(G, p4)


def test_alpha_omega_examples():
    W = alpha_omega(leaf(7))
    assert W.stable == (7,) and W.clique == (7,)
    W = alpha_omega(build_cotree(complete(4)))
    assert len(W.stable) == 1 and len(W.clique) == 4
    k33 = Cotree("join", None, (
        Cotree("union", None, (leaf(0), leaf(1), leaf(2))),
        Cotree("union", None, (leaf(3), leaf(4), leaf(5))),
    ))
    W = alpha_omega(k33)
    assert (len(W.stable), len(W.clique)) == (3, 2)
    assert W.stable == (0, 1, 2)  # ties go to the child with the smaller least leaf


def test_json_round_trip():
    G = generate(GenSpec("cograph", 15, seed=3))
    T = build_cotree(G)
    assert cotree_from_json(T.to_json()) == T


def test_subset_cotree_keeps_labels():
    G = cycle(5)
    T = build_cotree(G, [0, 1, 2])
    assert T.leaves == (0, 1, 2)
    with pytest.raises(NotCograph):
        build_cotree(G, [0, 1, 2, 3])


@pytest.mark.parametrize("seed", range(60))
def test_recognition_matches_bruteforce(seed):
    rng = make_rng(seed)
    n = int(rng.integers(1, 26))
    fam = "cograph" if seed % 2 else "gnp"
    p = Fraction(int(rng.integers(1, 6)), 10)
    G = generate(GenSpec(fam, n, p, seed))
    assert is_cograph(G) == is_p4_free_bruteforce(G)


@pytest.mark.parametrize("seed", range(40))
def test_cograph_round_trip_and_dp(seed):
    n = 1 + seed % 25
    G = generate(GenSpec("cograph", n, seed=seed))
    T = build_cotree(G)
    assert _canonical(T)
    assert T.leaves == tuple(range(n))
    assert rebuild(T, n) == G
    assert rebuild(build_cotree(complement(G)), n) == complement(G)
    W = alpha_omega(T)
    st, cl = alpha_omega_exact(G)
    assert (len(W.stable), len(W.clique)) == (len(st), len(cl))
    assert all(not G.has_edge(u, v) for u, v in combinations(W.stable, 2))
    assert all(G.has_edge(u, v) for u, v in combinations(W.clique, 2))
    assert len(W.stable) * len(W.clique) >= n
