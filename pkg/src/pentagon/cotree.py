"""Cograph recognition, cotrees, and the stable-set / clique dynamic program.

A graph on two or more vertices is a cograph iff it or its complement is
disconnected and every part is again a cograph.  Decomposing along
components (union nodes) and co-components (join nodes) yields the canonical
cotree, with children ordered by their least vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InternalAssertionFailed, NotCograph
from .graph import Graph, bits, mask_of
from .testkit.oracles import find_p4_rows

__all__ = [
    "Cotree",
    "PerfectWitness",
    "is_cograph",
    "build_cotree",
    "rebuild",
    "alpha_omega",
    "cotree_from_json",
]


@dataclass(frozen=True)
class Cotree:
    op: str  # "leaf", "union" or "join"
    vertex: Optional[int] = None
    children: tuple["Cotree", ...] = ()

    @property
    def leaves(self) -> tuple[int, ...]:
        out = []
        stack = [self]
        while stack:
            t = stack.pop()
            if t.op == "leaf":
                out.append(t.vertex)
            else:
                stack.extend(t.children)
        return tuple(sorted(out))

    def to_json(self):
        if self.op == "leaf":
            return {"leaf": self.vertex}
        return {"op": self.op, "children": [ch.to_json() for ch in self.children]}


def cotree_from_json(obj) -> Cotree:
    if "leaf" in obj:
        return Cotree("leaf", int(obj["leaf"]))
    return Cotree(obj["op"], None, tuple(cotree_from_json(ch) for ch in obj["children"]))


@dataclass(frozen=True)
class PerfectWitness:
    stable: tuple[int, ...]
    clique: tuple[int, ...]


def _components(rows, M: int) -> list[int]:
    out = []
    rest = M
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def _co_components(rows, M: int) -> list[int]:
    out = []
    rest = M
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            left = rest & ~comp
            for v in bits(frontier):
                nxt |= left & ~rows[v]
                if nxt == left:
                    break
            frontier = nxt & left
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def _decompose(G: Graph, mask: int):
    """Map every node mask to (op, child masks); raises NotCograph on a prime part."""
    rows = G.rows
    plan = {}
    stack = [mask]
    while stack:
        M = stack.pop()
        if M & (M - 1) == 0:
            plan[M] = ("leaf", ())
            continue
        parts = _components(rows, M)
        op = "union"
        if len(parts) == 1:
            parts = _co_components(rows, M)
            op = "join"
            if len(parts) == 1:
                raise NotCograph(find_p4_rows(rows, M))
        parts.sort(key=lambda m: m & -m)
        plan[M] = (op, tuple(parts))
        stack.extend(parts)
    return plan


def is_cograph(G: Graph, vertices=None) -> bool:
    """True iff G (or G restricted to ``vertices``) has no induced P4."""
    mask = G.full_mask if vertices is None else mask_of(vertices, G.n)
    if mask.bit_count() <= 3:
        return True
    try:
        _decompose(G, mask)
    except NotCograph:
        return False
    return True


def build_cotree(G: Graph, vertices=None) -> Cotree:
    """Canonical cotree of a cograph; raises :class:`NotCograph` with a P4 otherwise.

    With ``vertices`` the cotree describes the induced subgraph on them, with
    leaves keeping their labels in G.
    """
    root = G.full_mask if vertices is None else mask_of(vertices, G.n)
    if root == 0:
        raise ValueError("the empty graph has no cotree")
    plan = _decompose(G, root)
    built: dict[int, Cotree] = {}
    # children have fewer bits than their parent, so build smallest first
    for M in sorted(plan, key=int.bit_count):
        op, parts = plan[M]
        if op == "leaf":
            built[M] = Cotree("leaf", M.bit_length() - 1)
        else:
            built[M] = Cotree(op, None, tuple(built[p] for p in parts))
    return built[root]


def rebuild(T: Cotree, n: Optional[int] = None) -> Graph:
    """The graph a cotree describes (union: no cross edges, join: all of them)."""
    leaves = T.leaves
    n = (max(leaves) + 1) if n is None else n
    rows = [0] * n
    stack = [T]
    while stack:
        t = stack.pop()
        if t.op == "leaf":
            continue
        stack.extend(t.children)
        if t.op == "join":
            masks = [sum(1 << v for v in ch.leaves) for ch in t.children]
            whole = 0
            for m in masks:
                whole |= m
            for m in masks:
                for v in bits(m):
                    rows[v] |= whole & ~m
    return Graph(n, rows)


def alpha_omega(T: Cotree) -> PerfectWitness:
    """Maximum stable set and clique of the cograph described by ``T``.

    Union: stable sets add up, the clique is the best child's.  Join: the
    reverse.  Ties go to the child with the smaller least vertex.
    """
    order = []
    stack = [T]
    while stack:
        t = stack.pop()
        order.append(t)
        stack.extend(t.children)
    best: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for t in reversed(order):
        if t.op == "leaf":
            best[id(t)] = ((t.vertex,), (t.vertex,))
            continue
        kids = [best[id(ch)] for ch in t.children]
        if t.op == "union":
            stable = tuple(sorted(v for s, _ in kids for v in s))
            clique = max((q for _, q in kids), key=len)
        else:
            stable = max((s for s, _ in kids), key=len)
            clique = tuple(sorted(v for _, q in kids for v in q))
        best[id(t)] = (stable, clique)
    stable, clique = best[id(T)]
    n = len(T.leaves)
    if len(stable) * len(clique) < n:
        raise InternalAssertionFailed("alpha * omega < n on a cotree")
    if max(len(stable), len(clique)) < math.isqrt(n - 1) + 1:
        raise InternalAssertionFailed("max(alpha, omega) < ceil(sqrt(n)) on a cotree")
    return PerfectWitness(tuple(sorted(stable)), tuple(sorted(clique)))
