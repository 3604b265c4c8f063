from fractions import Fraction

import pytest

from pentagon.errors import InputContainsC5, PreconditionViolated
from pentagon.graph import density_between
from pentagon.sparsify import (
    MIN_SPARSE_SIZE,
    check_density_pair,
    density_pair,
    peel_to_sparse,
    verify_sparsifier,
)
from pentagon.testkit import GenSpec, generate, verify_induced_c5

from conftest import complete, cycle, edgeless, padded_petersen, petersen

C = Fraction(3, 10)


def test_peel_examples():
    rep = peel_to_sparse(edgeless(50), Fraction(1, 20))
    assert rep.X == tuple(range(50)) and rep.side == "graph" and rep.delta_hat == 1
    rep = peel_to_sparse(complete(100), Fraction(1, 20))
    assert rep.X == tuple(range(100)) and rep.side == "complement" and rep.delta_hat == 1
    assert rep.max_degree_in_side == 0


@pytest.mark.parametrize("seed", range(5))
def test_peel_random_rechecks(seed):
    G = generate(GenSpec("gnp", 100, Fraction(1, 2), seed))
    rep = peel_to_sparse(G, Fraction(1, 20))
    assert verify_sparsifier(G, rep)
    assert 0 < rep.delta_hat <= 1
    assert rep.max_degree_in_side * 20 <= len(rep.X)


def test_peel_rejects_bad_d():
    with pytest.raises(PreconditionViolated):
        peel_to_sparse(cycle(5), Fraction(0))


def test_density_pair_edgeless_and_complete():
    res = density_pair(edgeless(100), C)
    assert res.orientation == "sparse" and res.density == 0 and not res.trivial
    assert len(res.A) == 50 and len(res.B) == 50
    res = density_pair(complete(100), C)
    assert res.orientation == "dense" and res.density == 1
    assert check_density_pair(complete(100), C, res)


def test_petersen_trivial_branch():
    P = petersen()
    res = density_pair(P, Fraction(1, 2))
    assert res.trivial and res.branch == "trivial"
    assert res.A == (0,)
    assert len(res.B) == 6 and not any(P.has_edge(0, b) for b in res.B)
    assert res.orientation == "sparse" and res.density == 0
    assert check_density_pair(P, Fraction(1, 2), res)


def test_petersen_without_trivial_branch():
    P = petersen()
    with pytest.raises(InputContainsC5) as info:
        density_pair(P, Fraction(1, 2), trivial_branch=False)
    assert verify_induced_c5(P, info.value.cycle)


def test_padded_petersen():
    G = padded_petersen(200)
    c = Fraction(1, 2)
    try:
        res = density_pair(G, c)
    except InputContainsC5 as exc:
        assert verify_induced_c5(G, exc.cycle)
    else:
        assert check_density_pair(G, c, res)
        assert len(res.source.X) >= MIN_SPARSE_SIZE


def test_c5_in_complement_side_maps_back():
    # the complement of a pentagon-rich sparse graph is dense; the pentagon is
    # found on the complement side and must come back as an induced C5 of G
    from pentagon.graph import complement

    G = complement(generate(GenSpec("gnp", 2048, Fraction(1, 32), 0)))
    with pytest.raises(InputContainsC5) as info:
        density_pair(G, Fraction(1, 64))
    assert verify_induced_c5(G, info.value.cycle)


@pytest.mark.parametrize("family", ["chordal", "bipartite", "split", "cograph"])
def test_c5_free_never_raises(family):
    for seed in range(4):
        n = 300 + 50 * seed
        G = generate(GenSpec(family, n, Fraction(1, 6), seed, n // 16 - 1))
        for c in (Fraction(1, 32), Fraction(1, 2)):
            res = density_pair(G, c)
            assert check_density_pair(G, c, res)
            assert density_between(G, res.A, res.B) == res.density


def test_non_default_d_falls_back_to_trivial_when_needed():
    G = generate(GenSpec("chordal", 200, Fraction(1, 2), 1, 40))
    res = density_pair(G, Fraction(1, 4), d=Fraction(1, 4))
    assert check_density_pair(G, Fraction(1, 4), res)


def test_density_pair_preconditions():
    with pytest.raises(PreconditionViolated):
        density_pair(cycle(5), Fraction(0))
    with pytest.raises(PreconditionViolated):
        density_pair(edgeless(1), Fraction(1, 2))


def test_json():
    import json

    doc = density_pair(petersen(), Fraction(1, 2)).to_json()
    json.dumps(doc)
    assert doc["trivial"] is True and doc["source"]["side"] in ("graph", "complement")
