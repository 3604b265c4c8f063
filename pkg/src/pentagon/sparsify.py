"""Sparse or dense pairs for general graphs.

The input is first peeled down to a set X on which either the graph or its
complement has maximum degree at most d|X|.  On that side the dichotomy of
:mod:`pentagon.dichotomy` applies; a sparse pair found in the complement is
a dense pair of the original graph.  Greedy peeling stands in for the
existence argument here: nothing downstream relies on how large X is, only
on its checked degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .dichotomy import C5Witness, DichotomyTrace, find_c5_or_sparse_pair
from .errors import InputContainsC5, InternalAssertionFailed, PreconditionViolated
from .graph import Graph, bits, bits_np, complement, density_between, induced_subgraph, mask_of
from .testkit.oracles import C5_COUNT_LIMIT, find_induced_c5, verify_induced_c5

DEFAULT_D = Fraction(1, 20)
# with integer degrees, degree <= |X|/20 gives closed degree <= |X|/16 once |X| >= 80
MIN_SPARSE_SIZE = 80


@dataclass(frozen=True)
class SparsifierReport:
    X: tuple[int, ...]
    side: str  # "graph" or "complement"
    d_target: Fraction
    max_degree_in_side: int
    delta_hat: float

    def to_json(self) -> dict:
        return {
            "X": list(self.X),
            "side": self.side,
            "d_target": {"num": self.d_target.numerator, "den": self.d_target.denominator},
            "max_degree_in_side": self.max_degree_in_side,
            "delta_hat": self.delta_hat,
        }


@dataclass(frozen=True)
class DensityPairResult:
    A: tuple[int, ...]
    B: tuple[int, ...]
    orientation: str  # "sparse" (density < c) or "dense" (density > 1 - c)
    density: Fraction
    source: SparsifierReport
    trivial: bool = False
    branch: str = "trivial"
    trace: Optional[DichotomyTrace] = None

    def to_json(self) -> dict:
        return {
            "A": list(self.A),
            "B": list(self.B),
            "orientation": self.orientation,
            "density": {"num": self.density.numerator, "den": self.density.denominator},
            "trivial": self.trivial,
            "branch": self.branch,
            "source": self.source.to_json(),
        }


def _peel(G: Graph, d: Fraction, on_complement: bool, stop_at: int = 0) -> tuple[int, int]:
    """Greedy peeling on one side; returns (surviving mask, its size).

    Gives up early (returning size 0) once the survivor drops to ``stop_at``.
    """
    n = G.n
    num, den = d.numerator, d.denominator
    deg = np.array(G.degrees, dtype=np.int64)
    alive = np.ones(n, dtype=bool)
    size = n
    big = np.int64(n + 1)
    while True:
        if on_complement:
            v = int(np.argmin(np.where(alive, deg, big)))
            worst = size - 1 - int(deg[v])
        else:
            v = int(np.argmax(np.where(alive, deg, -1)))
            worst = int(deg[v])
        if worst * den <= num * size:
            break
        alive[v] = False
        size -= 1
        if size <= stop_at:
            return 0, 0
        deg[bits_np(G.rows[v])] -= 1
    mask = int.from_bytes(np.packbits(alive, bitorder="little").tobytes(), "little")
    return mask, size


def side_max_degree(G: Graph, X: int, side: str) -> int:
    """Maximum degree inside X of G (side "graph") or of its complement."""
    size = X.bit_count()
    rows = G.rows
    if side == "graph":
        return max((rows[v] & X).bit_count() for v in bits(X))
    return max(size - 1 - (rows[v] & X).bit_count() for v in bits(X))


def peel_to_sparse(G: Graph, d=DEFAULT_D) -> SparsifierReport:
    """Largest greedy survivor on which G or its complement has degree <= d|X|.

    Peeling repeatedly removes a vertex of maximum degree (lowest index on
    ties) until the bound holds; this is run on G and on its complement and
    the larger survivor is kept (G on ties).
    """
    d = Fraction(d)
    if d <= 0:
        raise PreconditionViolated("d must be positive")
    if G.n < 1:
        raise PreconditionViolated("graph has no vertices")
    xg, sg = _peel(G, d, on_complement=False)
    xc, sc = _peel(G, d, on_complement=True, stop_at=sg)
    if sc > sg:
        X, side = xc, "complement"
    else:
        X, side = xg, "graph"
    return SparsifierReport(
        tuple(bits(X)), side, d, side_max_degree(G, X, side), X.bit_count() / G.n
    )


def verify_sparsifier(G: Graph, report: SparsifierReport) -> bool:
    """Independent full scan of the degree condition of a report."""
    X = set(report.X)
    if not X:
        return False
    d = report.d_target
    worst = 0
    for v in X:
        k = sum(1 for u in X if u != v and G.has_edge(u, v))
        if report.side == "complement":
            k = len(X) - 1 - k
        worst = max(worst, k)
    return worst * d.denominator <= d.numerator * len(X) and worst == report.max_degree_in_side


def _complement_cycle(cyc):
    # the complement of the pentagon a-b-c-d-e is the pentagon a-c-e-b-d
    return (cyc[0], cyc[2], cyc[4], cyc[1], cyc[3])


def density_pair(G: Graph, c, d=DEFAULT_D, trivial_branch: bool = True) -> DensityPairResult:
    """A pair with density < c or > 1 - c, or :class:`InputContainsC5`.

    When the sparse survivor is too small for the dichotomy, the pair is read
    off a single vertex: it is joined to at least (n-1)/2 other vertices or
    missing from at least as many.  With ``trivial_branch=False`` that
    shortcut is taken only after an exhaustive pentagon scan (n <= 400).
    """
    c = Fraction(c)
    if not 0 < c <= Fraction(1, 2):
        raise PreconditionViolated(f"c = {c} is outside (0, 1/2]")
    if G.n < 2:
        raise PreconditionViolated("density_pair needs at least two vertices")
    rep = peel_to_sparse(G, d)
    Xsize = len(rep.X)

    J = None
    if Xsize >= MIN_SPARSE_SIZE:
        H, idx = induced_subgraph(G, rep.X)
        J = complement(H) if rep.side == "complement" else H
        if any(16 * (k + 1) > Xsize for k in J.degrees):
            J = None  # only possible for a non-default d
    if J is None:
        if not trivial_branch and G.n <= C5_COUNT_LIMIT:
            cyc = find_induced_c5(G)
            if cyc is not None:
                raise InputContainsC5(cyc)
        return _trivial_pair(G, rep)

    outcome, trace = find_c5_or_sparse_pair(J, c)
    if isinstance(outcome, C5Witness):
        cyc = tuple(idx[v] for v in outcome.cycle)
        if rep.side == "complement":
            cyc = _complement_cycle(cyc)
        if not verify_induced_c5(G, cyc):
            raise InternalAssertionFailed("pentagon certificate failed to map back")
        raise InputContainsC5(cyc)
    A = tuple(idx[v] for v in outcome.A)
    B = tuple(idx[v] for v in outcome.B)
    dens = density_between(G, A, B)
    orientation = "sparse" if rep.side == "graph" else "dense"
    ok = dens < c if orientation == "sparse" else dens > 1 - c
    if not ok or 2 * len(A) * c.denominator < c.numerator * Xsize or 16 * len(B) < Xsize:
        raise InternalAssertionFailed("density pair failed its re-check in G")
    return DensityPairResult(A, B, orientation, dens, rep, False, outcome.branch, trace)


def _trivial_pair(G: Graph, rep: SparsifierReport) -> DensityPairResult:
    v = 0
    nbrs = G.rows[v]
    non = G.full_mask & ~nbrs & ~(1 << v)
    if nbrs.bit_count() > non.bit_count():
        B, orientation, dens = nbrs, "dense", Fraction(1)
    else:
        B, orientation, dens = non, "sparse", Fraction(0)
    return DensityPairResult((v,), tuple(bits(B)), orientation, dens, rep, True, "trivial", None)


def check_density_pair(G: Graph, c, res: DensityPairResult) -> bool:
    """Re-verify a result from scratch in G."""
    c = Fraction(c)
    A, B = set(res.A), set(res.B)
    if not A or not B or A & B:
        return False
    dens = density_between(G, mask_of(A, G.n), mask_of(B, G.n))
    if dens != res.density:
        return False
    if res.orientation == "sparse" and not dens < c:
        return False
    if res.orientation == "dense" and not dens > 1 - c:
        return False
    if res.trivial:
        return len(A) == 1 and 2 * len(B) >= G.n - 1
    X = len(res.source.X)
    return 2 * len(A) * c.denominator >= c.numerator * X and 16 * len(B) >= X
