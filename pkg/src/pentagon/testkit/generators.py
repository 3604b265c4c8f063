"""Seeded random graph families.

All randomness comes from numpy's PCG64 generator seeded with ``GenSpec.seed``,
so an identical spec always yields an identical graph.  The chordal, bipartite,
split and cograph families exclude induced pentagons by construction;
``repair-c5free`` samples G(n, p) and then destroys pentagons one at a time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from ..errors import IterationCapExceeded, SizeLimitExceeded
from ..graph import Graph, from_edge_list, mask_from_indices
from .oracles import C5_COUNT_LIMIT, find_c5_rows

FAMILIES = ("gnp", "cograph", "bipartite", "chordal", "split", "repair-c5free")
C5_FREE_FAMILIES = ("cograph", "bipartite", "chordal", "split")
# repair gives up after REPAIR_CAP_PER_EDGE * |E| + REPAIR_CAP_BASE rounds
REPAIR_CAP_PER_EDGE = 10
REPAIR_CAP_BASE = 1000


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    p: Fraction = Fraction(1, 2)
    seed: int = 0
    degree_cap: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        object.__setattr__(self, "p", Fraction(self.p))
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.degree_cap is not None and self.degree_cap < 0:
            raise ValueError("degree_cap must be non-negative")

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "n": self.n,
                "p": {"num": self.p.numerator, "den": self.p.denominator},
                "seed": self.seed,
                "degree_cap": self.degree_cap,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        d = json.loads(text)
        return cls(d["family"], d["n"], Fraction(d["p"]["num"], d["p"]["den"]), d["seed"], d["degree_cap"])


def make_rng(seed: int) -> np.random.Generator:
    """The repository-wide generator: PCG64 seeded with an unsigned 64-bit integer."""
    return np.random.Generator(np.random.PCG64(seed))


class _Builder:
    """Edge accumulator enforcing an optional degree cap."""

    def __init__(self, n: int, cap: Optional[int]):
        self.n = n
        self.cap = cap
        self.deg = [0] * n
        self.edges: list[tuple[int, int]] = []

    def add(self, u: int, v: int) -> bool:
        if self.cap is not None and (self.deg[u] >= self.cap or self.deg[v] >= self.cap):
            return False
        self.deg[u] += 1
        self.deg[v] += 1
        self.edges.append((u, v))
        return True

    def graph(self) -> Graph:
        return from_edge_list(self.n, self.edges)


def _gnp(n, p, rng, cap) -> Graph:
    pf = float(p)
    if cap is None:
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for i in range(n - 1):
            js = (i + 1 + np.flatnonzero(rng.random(n - 1 - i) < pf)).tolist()
            nbrs[i].extend(js)
            for j in js:
                nbrs[j].append(i)
        return Graph(n, [mask_from_indices(nb, n) for nb in nbrs])
    b = _Builder(n, cap)
    for i in range(n - 1):
        for j in (i + 1 + np.flatnonzero(rng.random(n - 1 - i) < pf)).tolist():
            b.add(i, j)
    return b.graph()


def _cograph(n, rng, cap) -> Graph:
    rows = [0] * n
    stack = [list(rng.permutation(n).tolist())]
    while stack:
        vs = stack.pop()
        if len(vs) == 1:
            continue
        can_join = cap is None or len(vs) <= cap + 1
        join = can_join and rng.random() < 0.5
        k = int(rng.integers(2, min(len(vs), 4) + 1))
        cuts = sorted(rng.choice(np.arange(1, len(vs)), size=k - 1, replace=False).tolist())
        parts = [vs[a:b] for a, b in zip([0] + cuts, cuts + [len(vs)])]
        if join:
            # a join over at most cap+1 vertices keeps every degree within the cap
            whole = mask_from_indices(vs, n)
            for part in parts:
                pm = mask_from_indices(part, n)
                for v in part:
                    rows[v] |= whole & ~pm
        stack.extend(parts)
    return Graph(n, rows)


def _bipartite(n, p, rng, cap) -> Graph:
    side = rng.random(n) < 0.5
    left = np.flatnonzero(side).tolist()
    right = np.flatnonzero(~side)
    b = _Builder(n, cap)
    pf = float(p)
    for u in left:
        for v in right[rng.random(len(right)) < pf].tolist():
            b.add(u, v)
    return b.graph()


def _chordal(n, p, rng, cap) -> Graph:
    # each new vertex joins a subset of the clique {u} + (earlier neighbours of u),
    # so the reverse insertion order is a perfect elimination ordering
    b = _Builder(n, cap)
    earlier: list[list[int]] = [[] for _ in range(n)]
    pf = float(p)
    for i in range(1, n):
        u = int(rng.integers(i))
        clique = [u] + earlier[u]
        keep = rng.random(len(clique)) < pf
        for q, k in zip(clique, keep.tolist()):
            if k and b.add(q, i):
                earlier[i].append(q)
        earlier[i].sort()
    perm = rng.permutation(n).tolist()
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in b.edges])


def _split(n, p, rng, cap) -> Graph:
    k_max = n if cap is None else min(n, cap + 1)
    k = int(rng.integers(1, k_max + 1))
    order = rng.permutation(n).tolist()
    clique, indep = order[:k], order[k:]
    b = _Builder(n, cap)
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            b.add(u, v)
    pf = float(p)
    for u in indep:
        for v in np.asarray(clique)[rng.random(k) < pf].tolist():
            b.add(u, v)
    return b.graph()


def _repair(n, p, rng, cap) -> Graph:
    if n > C5_COUNT_LIMIT:
        raise SizeLimitExceeded(f"repair-c5free is limited to n <= {C5_COUNT_LIMIT}")
    G = _gnp(n, p, rng, cap)
    rows = list(G.rows)
    limit = REPAIR_CAP_PER_EDGE * G.num_edges + REPAIR_CAP_BASE
    for _ in range(limit):
        cyc = find_c5_rows(rows)
        if cyc is None:
            return Graph(n, rows)
        i = int(rng.integers(5))
        if rng.random() < 0.5:
            u, v = cyc[i], cyc[(i + 1) % 5]
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        else:
            u, v = cyc[i], cyc[(i + 2) % 5]
            if cap is not None and max(rows[u].bit_count(), rows[v].bit_count()) >= cap:
                # a chord would break the cap; drop a cycle edge instead
                v = cyc[(i + 1) % 5]
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            else:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    raise IterationCapExceeded(f"repair did not converge within {limit} iterations")


def generate(spec: GenSpec) -> Graph:
    rng = make_rng(spec.seed)
    fam, n, p, cap = spec.family, spec.n, spec.p, spec.degree_cap
    if fam == "gnp":
        return _gnp(n, p, rng, cap)
    if fam == "cograph":
        return _cograph(n, rng, cap)
    if fam == "bipartite":
        return _bipartite(n, p, rng, cap)
    if fam == "chordal":
        return _chordal(n, p, rng, cap)
    if fam == "split":
        return _split(n, p, rng, cap)
    return _repair(n, p, rng, cap)
