from fractions import Fraction

import pytest

from pentagon.graph import Graph, from_edge_list


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n):
    return from_edge_list(n, [])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def padded_petersen(n=200):
    """Petersen on vertices 0..9 plus a perfect matching on the rest."""
    P = petersen()
    edges = list(P.edges())
    edges += [(v, v + 1) for v in range(10, n - 1, 2)]
    return from_edge_list(n, edges)


@pytest.fixture
def C5():
    return cycle(5)


@pytest.fixture
def P():
    return petersen()


HALF = Fraction(1, 2)
