"""Simple undirected graphs stored as bit-rows.

Vertices are ``0..n-1``.  Row ``v`` is a Python ``int`` whose bit ``u`` is set
iff ``u`` and ``v`` are adjacent.  Vertex sets are passed around as iterables
of indices at the public surface and as integer masks internally.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySide, IndexOutOfRange, NotDisjoint, SelfLoop

__all__ = [
    "Graph",
    "from_edge_list",
    "complement",
    "induced_subgraph",
    "closed_degree",
    "density_between",
    "is_anticomplete",
    "is_complete_to",
    "disjoint_union",
    "bits",
    "mask_of",
    "mask_from_indices",
]

# popcount above which numpy unpacking beats the low-bit loop
_NUMPY_BITS_THRESHOLD = 48


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask == 0:
        return []
    if mask.bit_count() < _NUMPY_BITS_THRESHOLD:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out
    return _bits_array(mask).tolist()


def _bits_array(mask: int) -> np.ndarray:
    raw = mask.to_bytes((mask.bit_length() + 7) // 8, "little")
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return np.flatnonzero(unpacked)


def mask_from_indices(indices, size: int) -> int:
    """Build an integer mask from an iterable or array of indices below ``size``."""
    idx = np.asarray(indices, dtype=np.int64)
    if idx.size == 0:
        return 0
    if idx.size < _NUMPY_BITS_THRESHOLD:
        m = 0
        for i in idx.tolist():
            m |= 1 << i
        return m
    flags = np.zeros(size, dtype=bool)
    flags[idx] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Validate ``vertices`` against ``[0, n)`` and return them as a mask."""
    m = 0
    for v in vertices:
        v = int(v)
        if v < 0 or v >= n:
            raise IndexOutOfRange(f"vertex {v} outside [0, {n})")
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __hash__ = None  # equality is structural; rows are exposed as a tuple

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        self.n = n
        self.rows = tuple(rows)

    # -- basic queries -------------------------------------------------

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __len__(self):
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @cached_property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    @cached_property
    def adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(bits(r)) for r in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, r in enumerate(self.rows):
            hi = r >> (u + 1)
            out.extend((u, u + 1 + w) for w in bits(hi))
        return out

    def check(self) -> None:
        """Full scan of symmetry and irreflexivity; raises ``AssertionError``."""
        full = self.full_mask
        for v, r in enumerate(self.rows):
            assert r & ~full == 0, f"row {v} has bits outside [0, n)"
            assert not r >> v & 1, f"loop at {v}"
            for u in bits(r):
                assert self.rows[u] >> v & 1, f"asymmetric pair {v},{u}"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from index pairs; duplicate edges collapse."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, [mask_from_indices(nb, n) for nb in nbrs])


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, [full ^ r ^ (1 << v) for v, r in enumerate(G.rows)])


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``S``, relabelled ``0..|S|-1`` in increasing order.

    Returns the subgraph and the list mapping new indices to original ones.
    """
    smask = mask_of(S, G.n)
    old = bits(smask)
    m = len(old)
    if m == G.n:
        return G, old
    pos = np.full(G.n, -1, dtype=np.int64)
    pos[old] = np.arange(m)
    full_m = (1 << m) - 1
    rows = []
    for i, v in enumerate(old):
        inside = G.rows[v] & smask
        if 2 * inside.bit_count() <= m:
            rows.append(mask_from_indices(pos[bits_np(inside)], m))
        else:
            # dense row: relabel the non-neighbours instead
            non = smask & ~inside & ~(1 << v)
            rows.append(full_m ^ (1 << i) ^ mask_from_indices(pos[bits_np(non)], m))
    return Graph(m, rows), old


def bits_np(mask: int) -> np.ndarray:
    if mask == 0:
        return np.empty(0, dtype=np.int64)
    if mask.bit_count() < _NUMPY_BITS_THRESHOLD:
        return np.asarray(bits(mask), dtype=np.int64)
    return _bits_array(mask)


def closed_degree(G: Graph, v: int) -> int:
    if not 0 <= v < G.n:
        raise IndexOutOfRange(f"vertex {v} outside [0, {G.n})")
    return G.rows[v].bit_count() + 1


def _pair_masks(G: Graph, A, B) -> tuple[int, int]:
    a = A if isinstance(A, int) and not isinstance(A, bool) else mask_of(A, G.n)
    b = B if isinstance(B, int) and not isinstance(B, bool) else mask_of(B, G.n)
    if a & b:
        raise NotDisjoint(f"sets share vertices {bits(a & b)}")
    return a, b


def crossing_edges(G: Graph, a: int, b: int) -> int:
    """Number of edges between two disjoint masks."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    rows = G.rows
    return sum((rows[v] & b).bit_count() for v in bits(a))


def density_between(G: Graph, A, B) -> Fraction:
    """Edge-density between disjoint nonempty vertex sets, as an exact fraction.

    ``A`` and ``B`` are iterables of vertex indices (integer masks are also
    accepted, for internal callers).
    """
    a, b = _pair_masks(G, A, B)
    if not a or not b:
        raise EmptySide("edge-density needs two nonempty sides")
    return Fraction(crossing_edges(G, a, b), a.bit_count() * b.bit_count())


def is_anticomplete(G: Graph, A, B) -> bool:
    """True iff no edge joins ``A`` and ``B`` (vacuously true for an empty side)."""
    a, b = _pair_masks(G, A, B)
    rows = G.rows
    return all(rows[v] & b == 0 for v in bits(a))


def is_complete_to(G: Graph, A, B) -> bool:
    """True iff every vertex of ``A`` is adjacent to every vertex of ``B``."""
    a, b = _pair_masks(G, A, B)
    rows = G.rows
    return all(rows[v] & b == b for v in bits(a))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union, with the vertices of ``graphs[i]`` shifted past those before it."""
    rows = []
    offset = 0
    for H in graphs:
        rows.extend(r << offset for r in H.rows)
        offset += H.n
    return Graph(offset, rows)
