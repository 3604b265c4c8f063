"""Exhaustive reference computations.

These are deliberately independent of the constructive modules: they share
only the :class:`~pentagon.graph.Graph` representation.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from ..errors import SizeLimitExceeded
from ..graph import Graph, bits

# size caps; each oracle finishes in seconds at its cap
C5_COUNT_LIMIT = 400
MAX_COGRAPH_LIMIT = 20
ALPHA_OMEGA_LIMIT = 40


# -- pentagons -------------------------------------------------------------

def _c5_with_min(rows: Sequence[int], a: int, alive: int, count_only: bool):
    """Induced pentagons whose least vertex is ``a``.

    Returns the count, or the lexicographically least vertex set as a cycle
    ``(a, x, u, v, y)``; ``None`` when there is none.
    """
    gt = alive & ~((1 << (a + 1)) - 1)
    ra = rows[a]
    na = ra & gt
    total = 0
    best = None
    for x in bits(na):
        rx = rows[x]
        for y in bits(na & ~rx & ~((1 << (x + 1)) - 1)):
            ry = rows[y]
            U = rx & gt & ~ra & ~ry
            if not U:
                continue
            V = ry & gt & ~ra & ~rx
            if not V:
                continue
            for u in bits(U):
                W = rows[u] & V
                if not W:
                    continue
                if count_only:
                    total += W.bit_count()
                    continue
                v = (W & -W).bit_length() - 1
                key = (a,) + tuple(sorted((x, y, u, v)))
                if best is None or key < best[0]:
                    best = (key, (a, x, u, v, y))
    if count_only:
        return total
    return None if best is None else best[1]


def _alive_mask(rows: Sequence[int]) -> int:
    m = 0
    for v, r in enumerate(rows):
        if r.bit_count() >= 2:
            m |= 1 << v
    return m


def find_c5_rows(rows: Sequence[int]) -> Optional[tuple[int, ...]]:
    alive = _alive_mask(rows)
    for a in bits(alive):
        found = _c5_with_min(rows, a, alive, count_only=False)
        if found is not None:
            return found
    return None


def find_induced_c5(G: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically first induced pentagon (by sorted vertex set), in cyclic order."""
    return find_c5_rows(G.rows)


def count_induced_c5(G: Graph) -> int:
    if G.n > C5_COUNT_LIMIT:
        raise SizeLimitExceeded(f"C5 count is limited to n <= {C5_COUNT_LIMIT}")
    alive = _alive_mask(G.rows)
    return sum(_c5_with_min(G.rows, a, alive, count_only=True) for a in bits(alive))


def verify_induced_c5(G: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) != 5 or len(set(cycle)) != 5:
        return False
    if not all(0 <= v < G.n for v in cycle):
        return False
    for i in range(5):
        if not G.has_edge(cycle[i], cycle[(i + 1) % 5]):
            return False
        if G.has_edge(cycle[i], cycle[(i + 2) % 5]):
            return False
    return True


# -- four-vertex paths and cographs ----------------------------------------

def find_p4(G: Graph, mask: Optional[int] = None) -> Optional[tuple[int, int, int, int]]:
    """An induced P4 ``(a, b, c, d)`` inside ``mask`` (default: all vertices)."""
    return find_p4_rows(G.rows, G.full_mask if mask is None else mask)


def find_p4_rows(rows: Sequence[int], mask: int):
    for b in bits(mask):
        rb = rows[b]
        nb = rb & mask
        for c in bits(nb & ~((1 << (b + 1)) - 1)):
            rc = rows[c]
            # orient the middle edge both ways
            for (p, rp, q, rq) in ((b, rb, c, rc), (c, rc, b, rb)):
                A = rp & mask & ~rq & ~(1 << q)
                if not A:
                    continue
                D = rq & mask & ~rp & ~(1 << p)
                if not D:
                    continue
                for a in bits(A):
                    hit = D & ~rows[a]
                    if hit:
                        return (a, p, q, (hit & -hit).bit_length() - 1)
    return None


def is_p4_free_bruteforce(G: Graph, vertices: Optional[Sequence[int]] = None) -> bool:
    """Check every 4-subset; slow, used to cross-check the structural tests."""
    vs = list(range(G.n)) if vertices is None else sorted(vertices)
    for quad in combinations(vs, 4):
        degs = sorted(sum(G.has_edge(u, w) for w in quad if w != u) for u in quad)
        if degs == [1, 1, 2, 2]:
            return False
    return True


def max_cograph(G: Graph) -> tuple[int, ...]:
    """Largest vertex set inducing a P4-free graph; lexicographically least among ties.

    Breadth-first over the number of deleted vertices: every induced P4 of the
    current set must lose one of its four vertices, so level k holds every set
    obtainable by k such deletions, and the first level containing a P4-free
    set gives the optimum.
    """
    if G.n > MAX_COGRAPH_LIMIT:
        raise SizeLimitExceeded(f"max_cograph is limited to n <= {MAX_COGRAPH_LIMIT}")
    rows = G.rows
    frontier = {G.full_mask}
    while True:
        winners = []
        children = set()
        for m in frontier:
            p4 = find_p4_rows(rows, m)
            if p4 is None:
                winners.append(tuple(bits(m)))
            elif not winners:
                children.update(m & ~(1 << v) for v in p4)
        if winners:
            return min(winners)
        frontier = children


# -- stable sets and cliques -----------------------------------------------

def _max_clique(rows: Sequence[int], mask: int) -> tuple[int, ...]:
    best: list[int] = []

    def colour_bound(P: int) -> int:
        # greedy colouring of P; the number of classes bounds any clique in P
        classes = 0
        left = P
        while left:
            classes += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                left &= ~(1 << v)
                avail &= ~(1 << v) & ~rows[v]
        return classes

    def expand(R: list[int], P: int):
        nonlocal best
        if not P:
            if len(R) > len(best):
                best = list(R)
            return
        if len(R) + colour_bound(P) <= len(best):
            return
        while P:
            if len(R) + P.bit_count() <= len(best):
                return
            v = (P & -P).bit_length() - 1
            R.append(v)
            expand(R, P & rows[v])
            R.pop()
            P &= ~(1 << v)

    expand([], mask)
    return tuple(sorted(best))


def alpha_omega_exact(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Maximum stable set and maximum clique, by bitset branch and bound."""
    if G.n > ALPHA_OMEGA_LIMIT:
        raise SizeLimitExceeded(f"alpha_omega_exact is limited to n <= {ALPHA_OMEGA_LIMIT}")
    full = G.full_mask
    comp_rows = [full ^ r ^ (1 << v) for v, r in enumerate(G.rows)]
    return _max_clique(comp_rows, full), _max_clique(G.rows, full)


def alpha_omega_naive(G: Graph) -> tuple[int, int]:
    """Sizes of a maximum stable set and clique by plain enumeration (small n only)."""
    alpha = omega = min(G.n, 1)
    for k in range(2, G.n + 1):
        found_s = found_c = False
        for sub in combinations(range(G.n), k):
            pairs = [G.has_edge(u, v) for u, v in combinations(sub, 2)]
            found_c = found_c or all(pairs)
            found_s = found_s or not any(pairs)
            if found_s and found_c:
                break
        if found_s:
            alpha = k
        if found_c:
            omega = k
        if not found_s and not found_c:
            break
    return alpha, omega
