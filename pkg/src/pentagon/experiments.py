"""Seeded experiment grids that write one CSV row per trial.

Trial ``i`` of a run with base seed ``s`` draws everything from seed ``s + i``,
so any row can be reproduced on its own.  Rows are written in trial order
whatever the execution order.
"""

from __future__ import annotations

import csv
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Optional

from .dichotomy import check_trace, find_c5_or_sparse_pair, verify_outcome
from .errors import InputContainsC5
from .extract import pipeline
from .schedule import ScheduleParams, choose_c, guarantee
from .sparsify import peel_to_sparse, verify_sparsifier
from .testkit import GenSpec, generate, make_rng
from .testkit.oracles import alpha_omega_exact, max_cograph

EXPERIMENTS = ("soundness", "extraction-vs-oracle", "growth", "delta")
GROWTH_FAMILIES = ("chordal", "bipartite", "split")
SMALL_FAMILIES = ("chordal", "bipartite", "split", "cograph", "repair-c5free")
DELTA_DS = (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16), Fraction(1, 20), Fraction(1, 32), Fraction(1, 64))
DELTA_FAMILIES = ("gnp", "chordal", "bipartite", "split", "cograph")


@dataclass
class ExperimentRecord:
    experiment: str
    trial: int
    family: str
    n: int
    seed: int
    c_num: int
    c_den: int
    outcome: str = ""
    branch: str = ""
    size_A: Optional[int] = None
    size_B: Optional[int] = None
    density: str = ""
    size_S: Optional[int] = None
    alpha: Optional[int] = None
    omega: Optional[int] = None
    best: Optional[int] = None
    guarantee_cograph: Optional[float] = None
    guarantee_best: Optional[float] = None
    delta_hat: Optional[float] = None
    runtime_ms: Optional[float] = None
    verified: bool = False
    phi: Optional[int] = None


FIELDS = [f.name for f in fields(ExperimentRecord)]


@dataclass(frozen=True)
class Options:
    seed: int = 0
    trials: Optional[int] = None
    n_list: tuple[int, ...] = ()
    seeds_per_cell: int = 5
    c: Optional[Fraction] = None
    sigma: float = 5.0
    epsilon: Fraction = Fraction(1, 16)
    timing: bool = False


def _fmt(val) -> str:
    if val is None:
        return ""
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, float):
        return repr(val)
    return str(val)


def record_row(rec: ExperimentRecord) -> list[str]:
    return [_fmt(getattr(rec, k)) for k in FIELDS]


# -- trial plans ---------------------------------------------------------------

def plan(name: str, opts: Options) -> list[dict]:
    if name == "soundness":
        return [{"experiment": name, "trial": i} for i in range(opts.trials or 1000)]
    if name == "extraction-vs-oracle":
        return [{"experiment": name, "trial": i} for i in range(opts.trials or 100)]
    if name == "growth":
        ns = opts.n_list or tuple(2**k for k in range(8, 15))
        out = []
        for n in ns:
            for fam in GROWTH_FAMILIES:
                for rep in range(opts.seeds_per_cell):
                    out.append({"experiment": name, "trial": len(out), "n": n, "family": fam, "rep": rep})
        return out
    if name == "delta":
        ns = opts.n_list or (64, 128, 256, 512)
        out = []
        for n in ns:
            for fam in DELTA_FAMILIES:
                for d in DELTA_DS:
                    out.append({"experiment": name, "trial": len(out), "n": n, "family": fam, "d": d})
        return out
    raise ValueError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}")


def soundness_spec(seed: int) -> tuple[GenSpec, Fraction]:
    """Graph meeting the closed-degree <= n/16 bound, plus a threshold c."""
    rng = make_rng(seed)
    n = int(min(4096, max(16, round(2 ** rng.uniform(4, 12)))))
    c = Fraction(1, 2 ** int(rng.integers(1, 7)))
    cap = n // 16 - 1
    avg = rng.uniform(0, cap) if cap > 0 else 0.0
    p = Fraction(int(avg * 1000), 1000 * (n - 1))
    return GenSpec("gnp", n, p, seed, cap), c


def small_c5free_spec(seed: int) -> GenSpec:
    rng = make_rng(seed)
    fam = SMALL_FAMILIES[int(rng.integers(len(SMALL_FAMILIES)))]
    n = int(rng.integers(6, 19))
    p = Fraction(int(rng.integers(1, 8)), 8)
    if fam == "repair-c5free":
        p = Fraction(int(rng.integers(1, 4)), 8)
    return GenSpec(fam, n, p, seed)


def growth_spec(n: int, fam: str, seed: int) -> GenSpec:
    cap = max(0, n // 16 - 1)
    p = Fraction(1, 2) if fam == "chordal" else Fraction(min(cap, 8), n)
    return GenSpec(fam, n, p, seed, cap)


# -- trial execution -----------------------------------------------------------

def run_trial(task: dict, opts: Options) -> ExperimentRecord:
    name, i = task["experiment"], task["trial"]
    seed = opts.seed + i
    t0 = time.perf_counter()
    if name == "soundness":
        spec, c = soundness_spec(seed)
        c = opts.c or c
        G = generate(spec)
        outcome, trace = find_c5_or_sparse_pair(G, c)
        ok = bool(verify_outcome(G, c, outcome)) and not check_trace(G, trace)
        rec = ExperimentRecord(name, i, spec.family, G.n, seed, c.numerator, c.denominator, outcome.kind, verified=ok)
        if outcome.kind == "pair":
            rec.branch = outcome.branch
            rec.size_A, rec.size_B = len(outcome.A), len(outcome.B)
            rec.density = f"{outcome.density.numerator}/{outcome.density.denominator}"
        else:
            rec.branch = "C5"
    elif name in ("extraction-vs-oracle", "growth"):
        if name == "growth":
            spec = growth_spec(task["n"], task["family"], seed)
        else:
            spec = small_c5free_spec(seed)
        G = generate(spec)
        params = ScheduleParams.build(opts.sigma, opts.epsilon)
        c = opts.c or choose_c(G.n, params.mu)
        rec = ExperimentRecord(name, i, spec.family, G.n, seed, c.numerator, c.denominator)
        try:
            rep = pipeline(G, params, c=c)
        except InputContainsC5:
            rec.outcome, rec.branch = "c5", "C5"
        else:
            rec.outcome = "cograph"
            rec.branch = rep.trace.nodes[0].branch
            rec.size_S, rec.alpha, rec.omega, rec.best = len(rep.S), rep.alpha, rep.omega, rep.best
            rec.guarantee_cograph, rec.guarantee_best = guarantee(G.n, params.kappa)
            ok = rep.verified and rep.best >= math.isqrt(len(rep.S) - 1) + 1
            if name == "extraction-vs-oracle":
                rec.phi = len(max_cograph(G))
                st, cl = alpha_omega_exact(G)
                ok = ok and 2 <= len(rep.S) <= rec.phi and rep.best <= max(len(st), len(cl))
            rec.verified = ok
    elif name == "delta":
        spec = GenSpec(task["family"], task["n"], Fraction(1, 2) if task["family"] != "gnp" else Fraction(1, 4), seed)
        G = generate(spec)
        d = task["d"]
        rep = peel_to_sparse(G, d)
        rec = ExperimentRecord(name, i, spec.family, G.n, seed, d.numerator, d.denominator, "sparsifier", rep.side)
        rec.delta_hat = rep.delta_hat
        rec.verified = verify_sparsifier(G, rep)
    else:
        raise ValueError(f"unknown experiment {name!r}")
    if opts.timing:
        rec.runtime_ms = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def _run_one(args):
    task, opts = args
    return run_trial(task, opts)


def iter_records(name: str, opts: Options) -> Iterable[ExperimentRecord]:
    tasks = plan(name, opts)
    workers = int(os.environ.get("PENTAGON_THREADS", "1") or 1)
    if workers <= 1:
        for task in tasks:
            yield run_trial(task, opts)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps trial order regardless of completion order
        yield from pool.map(_run_one, [(t, opts) for t in tasks])


def run_experiment(name: str, opts: Options, out_path) -> int:
    """Write the CSV; returns the number of rows with verified = false."""
    failures = 0
    with open(out_path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(FIELDS)
        try:
            for rec in iter_records(name, opts):
                w.writerow(record_row(rec))
                fh.flush()
                failures += not rec.verified
        except KeyboardInterrupt:
            fh.flush()
            print("interrupted; partial results kept", file=sys.stderr)
            raise
    return failures


def recheck(name: str, opts: Options, out_path) -> list[str]:
    """Re-run every stored row and report rows that no longer verify or match."""
    with open(out_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    tasks = {t["trial"]: t for t in plan(name, opts)}
    problems = []
    for row in rows:
        i = int(row["trial"])
        if row["verified"] != "true":
            continue
        if i not in tasks or int(row["seed"]) != opts.seed + i:
            problems.append(f"trial {i}: not reproducible from these flags")
            continue
        fresh = dict(zip(FIELDS, record_row(run_trial(tasks[i], opts))))
        if fresh["verified"] != "true":
            problems.append(f"trial {i}: no longer verifies")
            continue
        diff = [k for k in FIELDS if k != "runtime_ms" and fresh[k] != row[k]]
        if diff:
            problems.append(f"trial {i}: fields differ: {', '.join(diff)}")
    return problems
