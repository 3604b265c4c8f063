"""Induced pentagon or sparse pair, for graphs of small maximum degree.

Given a graph in which every closed degree is at most n/16 and a threshold
0 < c <= 1/2, :func:`find_c5_or_sparse_pair` walks the constructive argument
step by step.  Each step either finds a pair (A, B) with 2|A| >= cn,
16|B| >= n and edge-density strictly below c, or narrows the search until
five vertices inducing a pentagon can be read off.  Every comparison is an
exact integer comparison.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .errors import InternalAssertionFailed, PreconditionViolated
from .graph import Graph, bits, density_between, is_anticomplete

BRANCHES = ("W-N0", "W-cover", "W-v2", "W-D2edge", "W-v3", "W-C2edge")


@dataclass(frozen=True)
class C5Witness:
    cycle: tuple[int, ...]
    kind = "c5"

    def to_json(self) -> dict:
        return {"kind": "c5", "cycle": list(self.cycle)}


@dataclass(frozen=True)
class SparsePairWitness:
    A: tuple[int, ...]
    B: tuple[int, ...]
    density: Fraction
    branch: str
    kind = "pair"

    def to_json(self) -> dict:
        return {
            "kind": "pair",
            "A": list(self.A),
            "B": list(self.B),
            "density": {"num": self.density.numerator, "den": self.density.denominator},
            "branch": self.branch,
        }


DichotomyOutcome = Union[C5Witness, SparsePairWitness]


@dataclass
class DichotomyTrace:
    """Named sets and vertices of the argument, filled in as far as the run got.

    Sets are sorted tuples of vertex indices.
    """

    n: int = 0
    c: Fraction = Fraction(0)
    N0: Optional[tuple[int, ...]] = None
    v1: Optional[int] = None
    N1: Optional[tuple[int, ...]] = None
    Z2: Optional[tuple[int, ...]] = None
    B1: Optional[tuple[int, ...]] = None
    B2: Optional[tuple[int, ...]] = None
    A1: Optional[tuple[int, ...]] = None
    A2: Optional[tuple[int, ...]] = None
    v2: Optional[int] = None
    N2: Optional[tuple[int, ...]] = None
    C1: Optional[tuple[int, ...]] = None
    D2: Optional[tuple[int, ...]] = None
    D2prime: Optional[tuple[int, ...]] = None
    v3: Optional[int] = None
    Y2: Optional[tuple[int, ...]] = None
    N3: Optional[tuple[int, ...]] = None
    C2: Optional[tuple[int, ...]] = None
    C2prime: Optional[tuple[int, ...]] = None

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            val = getattr(self, f.name)
            if f.name == "c":
                out["c"] = {"num": val.numerator, "den": val.denominator}
            elif isinstance(val, tuple):
                out[f.name] = list(val)
            else:
                out[f.name] = val
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


@dataclass
class DichotomyConfig:
    """Knobs for robustness experiments; the defaults are deterministic.

    ``v1_rule`` picks the first pivot among vertices of degree >= cn/2:
    ``"max-degree"`` (highest degree, lowest index on ties) or ``"lowest"``.
    ``n0_seed`` replaces the first-half N0 by a seeded random half.
    """

    v1_rule: str = "max-degree"
    n0_seed: Optional[int] = None
    self_check: bool = field(default=True)


def _tup(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def check_precondition(G: Graph, c: Fraction) -> None:
    c = Fraction(c)
    if not (0 < c <= Fraction(1, 2)):
        raise PreconditionViolated(f"c = {c} is outside (0, 1/2]")
    n = G.n
    if n == 0:
        raise PreconditionViolated("graph has no vertices")
    for v, d in enumerate(G.degrees):
        if 16 * (d + 1) > n:
            raise PreconditionViolated(
                f"vertex {v} has closed degree {d + 1} > {n}/16", vertex=v
            )


def find_c5_or_sparse_pair(
    G: Graph, c, config: DichotomyConfig | None = None
) -> tuple[DichotomyOutcome, DichotomyTrace]:
    """Return an induced pentagon or a sparse pair, together with the trace."""
    config = config or DichotomyConfig()
    c = Fraction(c)
    check_precondition(G, c)
    outcome, trace = _run(G, c, config)
    if config.self_check:
        verdict = verify_outcome(G, c, outcome)
        if not verdict:
            raise InternalAssertionFailed(f"dichotomy produced a bad outcome: {verdict.reason}")
    return outcome, trace


def _run(G: Graph, c: Fraction, config: DichotomyConfig):
    n = G.n
    num, den = c.numerator, c.denominator
    rows = G.rows
    deg = G.degrees
    full = G.full_mask
    trace = DichotomyTrace(n=n, c=c)

    def pair(a_mask, b_mask, branch):
        return SparsePairWitness(
            _tup(a_mask), _tup(b_mask), density_between(G, a_mask, b_mask), branch
        ), trace

    def heavy_into(v, target, size):
        # at least c * size neighbours inside ``target``
        return (rows[v] & target).bit_count() * den >= num * size

    # step 1: N0 and a vertex of degree >= cn/2
    half = n // 2
    if config.n0_seed is None:
        n0 = (1 << half) - 1
    else:
        n0 = 0
        rng = np.random.Generator(np.random.PCG64(config.n0_seed))
        for v in rng.choice(n, size=half, replace=False):
            n0 |= 1 << int(v)
    trace.N0 = _tup(n0)
    if not any(2 * deg[v] * den >= num * n for v in bits(n0)):
        return pair(n0, full & ~n0, "W-N0")

    # step 2: pivot v1 and its neighbourhood
    qualifying = [v for v in range(n) if 2 * deg[v] * den >= num * n]
    if config.v1_rule == "lowest":
        v1 = qualifying[0]
    elif config.v1_rule == "max-degree":
        v1 = max(qualifying, key=lambda v: (deg[v], -v))
    else:
        raise ValueError(f"unknown v1 rule {config.v1_rule!r}")
    n1 = rows[v1]
    z2 = full & ~n1 & ~(1 << v1)
    trace.v1, trace.N1, trace.Z2 = v1, _tup(n1), _tup(z2)

    # step 3: vertices of Z2 seeing nothing of N1
    covered_all = 0
    for u in bits(n1):
        covered_all |= rows[u]
    uncovered = z2 & ~covered_all
    if 16 * uncovered.bit_count() >= n:
        return pair(n1, uncovered, "W-cover")

    # step 4: greedy cover B1 of at least 5n/16 vertices of Z2
    heap = [(-(rows[u] & z2).bit_count(), u) for u in bits(n1)]
    heapq.heapify(heap)
    b1 = 0
    b2 = 0
    while 16 * b2.bit_count() < 5 * n:
        if not heap:
            raise InternalAssertionFailed("cover of Z2 ran out of candidates")
        neg, u = heapq.heappop(heap)
        gain = (rows[u] & z2 & ~b2).bit_count()
        if gain != -neg:
            heapq.heappush(heap, (-gain, u))
            continue
        b1 |= 1 << u
        b2 |= rows[u] & z2
    a2 = z2 & ~b2
    a1 = n1 & ~b1
    trace.B1, trace.B2, trace.A1, trace.A2 = _tup(b1), _tup(b2), _tup(a1), _tup(a2)

    # step 5: v2 with at least c|A2| neighbours in A2
    size_a2 = a2.bit_count()
    v2 = next((v for v in bits(n1) if heavy_into(v, a2, size_a2)), None)
    if v2 is None:
        return pair(n1, a2, "W-v2")
    if not a1 >> v2 & 1:
        raise InternalAssertionFailed("v2 landed in B1, which is anticomplete to A2")
    n2 = rows[v2] & a2
    c1 = b1 & rows[v2]
    d2 = 0
    for u in bits(b1 & ~c1):
        d2 |= rows[u]
    d2 &= b2
    c2 = 0
    for u in bits(c1):
        c2 |= rows[u]
    c2 &= b2
    trace.v2, trace.N2, trace.C1 = v2, _tup(n2), _tup(c1)
    trace.D2, trace.C2 = _tup(d2), _tup(c2)

    # step 6: many vertices of B2 see B1 \ C1
    if 8 * d2.bit_count() >= n:
        d2p = d2 & ~rows[v2]
        trace.D2prime = _tup(d2p)
        for w in bits(n2):
            hit = rows[w] & d2p
            if hit:
                x2 = hit & -hit
                x1 = b1 & ~c1 & rows[x2.bit_length() - 1]
                d1 = (x1 & -x1).bit_length() - 1
                return C5Witness((d1, v1, v2, w, x2.bit_length() - 1)), trace
        return pair(n2, d2p, "W-D2edge")

    # step 7: otherwise C2 is large
    if 16 * c2.bit_count() < 3 * n:
        raise InternalAssertionFailed("neither D2 nor C2 is large")
    y2 = a2 & ~n2
    trace.Y2 = _tup(y2)
    size_y2 = y2.bit_count()
    v3 = next((v for v in bits(n2) if heavy_into(v, y2, size_y2)), None)
    if v3 is None:
        return pair(n2, y2, "W-v3")
    n3 = rows[v3] & y2
    c2p = c2 & ~rows[v2] & ~rows[v3]
    trace.v3, trace.N3, trace.C2prime = v3, _tup(n3), _tup(c2p)
    for w in bits(n3):
        hit = rows[w] & c2p
        if hit:
            x2 = hit & -hit
            x1 = c1 & rows[x2.bit_length() - 1]
            c1v = (x1 & -x1).bit_length() - 1
            return C5Witness((c1v, v2, v3, w, x2.bit_length() - 1)), trace
    return pair(n3, c2p, "W-C2edge")


def verify_outcome(G: Graph, c, outcome: DichotomyOutcome) -> Verdict:
    """Re-check an outcome from scratch using only graph primitives."""
    c = Fraction(c)
    n = G.n
    if isinstance(outcome, C5Witness):
        cyc = outcome.cycle
        if len(cyc) != 5 or len(set(cyc)) != 5 or not all(0 <= v < n for v in cyc):
            return Verdict(False, "not five distinct vertices")
        for i in range(5):
            if not G.has_edge(cyc[i], cyc[(i + 1) % 5]):
                return Verdict(False, "missing cycle edge")
            if G.has_edge(cyc[i], cyc[(i + 2) % 5]):
                return Verdict(False, "extra adjacency")
        return Verdict(True)
    if isinstance(outcome, SparsePairWitness):
        A, B = set(outcome.A), set(outcome.B)
        if not A or not B:
            return Verdict(False, "empty side")
        if A & B:
            return Verdict(False, "sides overlap")
        if 2 * len(A) * c.denominator < c.numerator * n:
            return Verdict(False, "A too small")
        if 16 * len(B) < n:
            return Verdict(False, "B too small")
        dens = density_between(G, A, B)
        if dens != outcome.density:
            return Verdict(False, "density mismatch")
        if not dens < c:
            return Verdict(False, "density not below c")
        return Verdict(True)
    return Verdict(False, "unknown outcome type")


def check_trace(G: Graph, trace: DichotomyTrace) -> list[str]:
    """Violated inequalities among the populated trace fields (empty when all hold)."""
    n, c = trace.n, trace.c
    bad = []
    if trace.Z2 is not None and 16 * len(trace.Z2) < 15 * n:
        bad.append("|Z2| < 15n/16")
    if trace.N1 is not None and 2 * len(trace.N1) * c.denominator < c.numerator * n:
        bad.append("|N1| < cn/2")
    if trace.B2 is not None:
        b2 = len(trace.B2)
        if 16 * b2 < 5 * n:
            bad.append("|B2| < 5n/16")
        if 8 * b2 > 3 * n:
            bad.append("|B2| > 3n/8")
    if trace.A2 is not None:
        if 16 * len(trace.A2) < 9 * n:
            bad.append("|A2| < 9n/16")
        if trace.B1 is not None and not is_anticomplete(G, trace.A2, trace.B1):
            bad.append("A2 not anticomplete to B1")
    if trace.N2 is not None and not set(trace.N2) <= set(trace.A2):
        bad.append("N2 not inside A2")
    if trace.Y2 is not None:
        if set(trace.Y2) != set(trace.A2) - set(trace.N2):
            bad.append("Y2 != A2 \\ N2")
        if 2 * len(trace.Y2) < n:
            bad.append("|Y2| < n/2")
    if trace.C2 is not None and trace.D2 is not None:
        if set(trace.C2) | set(trace.D2) != set(trace.B2):
            bad.append("C2 u D2 != B2")
    return bad
