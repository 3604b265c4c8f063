"""Recursive extraction of a large induced cograph, and the end-to-end pipeline.

One recursion node on a graph H:

* get a pair (A, B) from :func:`pentagon.sparsify.density_pair`;
* drop from A the vertices with at least 2c|B| neighbours in B (non-neighbours,
  for a dense pair), leaving A' with |A'| >= |A|/2;
* recurse on H[A'] to get a cograph A0;
* if |A0| > 1/(4c) stop with A0; otherwise keep the vertices B' of B with no
  neighbour in A0 (or complete to A0), |B'| >= |B|/2, recurse on H[B'] and
  return the union, which is a disjoint union (or a join) of two cographs.

The B' recursion is a tail call and runs as a loop.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .cotree import Cotree, NotCograph, alpha_omega, build_cotree
from .errors import InputContainsC5, InternalAssertionFailed, PreconditionViolated
from .graph import Graph, bits, induced_subgraph, is_anticomplete, is_complete_to, mask_of
from .schedule import ScheduleParams, choose_c, guarantee
from .sparsify import DEFAULT_D, density_pair
from .testkit.oracles import (
    C5_COUNT_LIMIT,
    find_induced_c5,
    find_p4,
    is_p4_free_bruteforce,
    max_cograph,
)

BASE_SIZE = 16


@dataclass
class NodeRecord:
    node: int
    parent: Optional[int]
    role: str  # "root", "A" (spawned by an A' recursion) or "B" (union continuation)
    n_local: int
    c: Fraction
    branch: str  # "base", "early-stop" or "union"
    orientation: Optional[str] = None
    trivial: Optional[bool] = None
    pair_branch: Optional[str] = None
    size_A: Optional[int] = None
    size_A_heavy: Optional[int] = None  # A''
    size_A_kept: Optional[int] = None  # A'
    size_A0: Optional[int] = None
    stop_threshold: Optional[Fraction] = None  # 1/(4c)
    size_B: Optional[int] = None
    size_B_kept: Optional[int] = None  # B'
    size_result: Optional[int] = None
    structure_ok: Optional[bool] = None
    floored: bool = False

    def to_json(self) -> dict:
        out = asdict(self)
        for key in ("c", "stop_threshold"):
            val = out[key]
            if val is not None:
                out[key] = {"num": val.numerator, "den": val.denominator}
        return out


@dataclass
class ExtractionTrace:
    nodes: list[NodeRecord] = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(nd.to_json()) + "\n" for nd in self.nodes)


class _Extractor:
    def __init__(self, c: Fraction, params: ScheduleParams, adaptive: bool, d, trivial_branch: bool):
        self.c = c
        self.params = params
        self.adaptive = adaptive
        self.d = d
        self.trivial_branch = trivial_branch
        self.trace = ExtractionTrace()

    def _new_node(self, parent, role, H, c, branch="union") -> NodeRecord:
        rec = NodeRecord(len(self.trace.nodes), parent, role, H.n, c, branch)
        self.trace.nodes.append(rec)
        return rec

    def run(self, H: Graph, parent: Optional[int], role: str) -> list[int]:
        """Cograph vertex set of H, as indices local to H."""
        entry = H
        to_entry = list(range(H.n))
        acc: list[int] = []
        unions = []  # (record, A0 in entry labels, len(acc) before the continuation)
        first = None
        while True:
            c = choose_c(H.n, self.params.mu) if self.adaptive and H.n >= 2 else self.c
            num, den = c.numerator, c.denominator
            if H.n <= BASE_SIZE:
                rec = self._new_node(parent, role, H, c, "base")
                local = list(max_cograph(H))
                rec.size_result = len(local)
                acc.extend(to_entry[v] for v in local)
                first = first if first is not None else rec
                break
            rec = self._new_node(parent, role, H, c)
            first = first if first is not None else rec
            res = density_pair(H, c, self.d, self.trivial_branch)
            rec.orientation, rec.trivial, rec.pair_branch = res.orientation, res.trivial, res.branch
            rows = H.rows
            bmask = mask_of(res.B, H.n)
            size_b = len(res.B)
            if res.orientation == "sparse":
                heavy = [a for a in res.A if (rows[a] & bmask).bit_count() * den >= 2 * num * size_b]
            else:
                heavy = [a for a in res.A if (size_b - (rows[a] & bmask).bit_count()) * den >= 2 * num * size_b]
            heavy_set = set(heavy)
            kept = [a for a in res.A if a not in heavy_set]
            rec.size_A, rec.size_A_heavy, rec.size_A_kept = len(res.A), len(heavy), len(kept)
            if 2 * len(kept) < len(res.A):
                raise InternalAssertionFailed(f"node {rec.node}: |A'| < |A|/2")

            HA, idxA = induced_subgraph(H, kept)
            A0 = [idxA[v] for v in self.run(HA, rec.node, "A")]
            rec.size_A0 = len(A0)
            rec.stop_threshold = Fraction(den, 4 * num)
            if 4 * num * len(A0) > den:
                rec.branch = "early-stop"
                rec.size_result = len(A0)
                acc.extend(to_entry[v] for v in A0)
                break

            a0mask = mask_of(A0, H.n)
            if res.orientation == "sparse":
                kept_b = [b for b in res.B if rows[b] & a0mask == 0]
            else:
                kept_b = [b for b in res.B if rows[b] & a0mask == a0mask]
            rec.size_B, rec.size_B_kept = size_b, len(kept_b)
            if 2 * len(kept_b) < size_b:
                raise InternalAssertionFailed(f"node {rec.node}: |B'| < |B|/2")
            a0_entry = [to_entry[v] for v in A0]
            acc.extend(a0_entry)
            unions.append((rec, a0_entry, len(acc)))
            HB, idxB = induced_subgraph(H, kept_b)
            to_entry = [to_entry[v] for v in idxB]
            H = HB
            parent, role = rec.node, "B"

        for rec, a0_entry, start in unions:
            rest = acc[start:]
            if rec.orientation == "sparse":
                ok = is_anticomplete(entry, a0_entry, rest)
            else:
                ok = is_complete_to(entry, a0_entry, rest)
            rec.structure_ok = ok
            rec.size_result = len(acc) - start + len(a0_entry)
            if not ok:
                raise InternalAssertionFailed(f"node {rec.node}: A0 not separated from the B' part")
        if len(acc) < 2 <= entry.n:
            # any two vertices induce a cograph
            first.floored = True
            acc = [0, 1]
        return sorted(acc)


def extract_cograph(
    G: Graph,
    c,
    params: ScheduleParams,
    *,
    adaptive: bool = False,
    d=DEFAULT_D,
    trivial_branch: bool = True,
) -> tuple[tuple[int, ...], ExtractionTrace]:
    """Vertex set of an induced cograph of G, with the per-node trace.

    ``c`` is used unchanged at every node unless ``adaptive`` is set, in
    which case each node recomputes it from its own size.
    """
    c = Fraction(c)
    if not 0 < c <= Fraction(1, 2):
        raise PreconditionViolated(f"c = {c} is outside (0, 1/2]")
    if G.n == 0:
        return (), ExtractionTrace()
    ex = _Extractor(c, params, adaptive, Fraction(d), trivial_branch)
    S = ex.run(G, None, "root")
    return tuple(S), ex.trace


@dataclass
class PipelineReport:
    n: int
    c: Fraction
    S: tuple[int, ...]
    stable: tuple[int, ...]
    clique: tuple[int, ...]
    guarantee_cograph: float
    guarantee_best: float
    vacuous: bool
    params: ScheduleParams
    trace: ExtractionTrace
    cotree: Cotree
    verify_level: str
    verified: bool
    checks: dict = field(default_factory=dict)

    @property
    def alpha(self) -> int:
        return len(self.stable)

    @property
    def omega(self) -> int:
        return len(self.clique)

    @property
    def best(self) -> int:
        return max(self.alpha, self.omega)

    def to_json(self, include_trace: bool = False) -> dict:
        out = {
            "n": self.n,
            "c": {"num": self.c.numerator, "den": self.c.denominator},
            "S": list(self.S),
            "size_S": len(self.S),
            "stable": list(self.stable),
            "clique": list(self.clique),
            "alpha": self.alpha,
            "omega": self.omega,
            "best": self.best,
            "guarantee_cograph": self.guarantee_cograph,
            "guarantee_best": self.guarantee_best,
            "guarantee_vacuous": self.vacuous,
            "params": self.params.to_json(),
            "nodes": len(self.trace.nodes),
            "verify_level": self.verify_level,
            "verified": self.verified,
            "checks": self.checks,
        }
        if include_trace:
            out["cotree"] = self.cotree.to_json()
            out["trace"] = [nd.to_json() for nd in self.trace.nodes]
        return out


def _clique_ok(G: Graph, vs, adjacent: bool) -> bool:
    vs = list(vs)
    return all(G.has_edge(u, v) == adjacent for i, u in enumerate(vs) for v in vs[i + 1:])


def pipeline(
    G: Graph,
    params: ScheduleParams,
    *,
    c=None,
    adaptive: bool = False,
    d=DEFAULT_D,
    trivial_branch: bool = True,
    verify_level: str = "cheap",
) -> PipelineReport:
    """Extract a cograph, then a maximum stable set and clique inside it.

    ``c`` defaults to the schedule's choice for n.  With ``trivial_branch``
    off (or ``verify_level="full"``) inputs with n <= 400 are first scanned
    for an induced pentagon.
    """
    if G.n < 2:
        raise PreconditionViolated("pipeline needs at least two vertices")
    if verify_level not in ("none", "cheap", "full"):
        raise ValueError(f"unknown verify level {verify_level!r}")
    if (not trivial_branch or verify_level == "full") and G.n <= C5_COUNT_LIMIT:
        cyc = find_induced_c5(G)
        if cyc is not None:
            raise InputContainsC5(cyc)
    c = choose_c(G.n, params.mu) if c is None else Fraction(c)
    S, trace = extract_cograph(G, c, params, adaptive=adaptive, d=d, trivial_branch=trivial_branch)
    try:
        T = build_cotree(G, S)
    except NotCograph as exc:
        raise InternalAssertionFailed(f"extracted set is not a cograph: {exc}") from exc
    W = alpha_omega(T)
    stable, clique = W.stable, W.clique
    g_cog, g_best = guarantee(G.n, params.kappa)

    checks = {}
    if verify_level != "none":
        smask = mask_of(S, G.n)
        checks["p4_free"] = find_p4(G, smask) is None
        checks["stable"] = _clique_ok(G, stable, False)
        checks["clique"] = _clique_ok(G, clique, True)
        checks["sqrt_bound"] = max(len(stable), len(clique)) >= math.isqrt(len(S) - 1) + 1
        checks["size_at_least_2"] = len(S) >= 2
        checks["node_structure"] = all(
            nd.structure_ok is not False for nd in trace.nodes
        )
        if verify_level == "full" and len(S) <= 40:
            checks["p4_free_bruteforce"] = is_p4_free_bruteforce(G, S)
    verified = bool(checks) and all(checks.values())
    return PipelineReport(
        G.n, c, S, stable, clique, g_cog, g_best, params.is_vacuous(G.n), params,
        trace, T, verify_level, verified, checks,
    )

