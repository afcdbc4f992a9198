"""Monte-Carlo check of the random-subgraph step of the crossing lemma, and removal audits.

Keeping every vertex independently with probability p keeps an edge with
probability p^2 and a crossing (four distinct endpoints, as adjacent edges
never cross) with probability p^4.  :func:`sample_induced` measures the
three means and compares them with p n, p^2 m and p^4 cr.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .bounds import Affine, naive_cr_lower, optimal_p  # noqa: F401  (optimal_p re-exported)
from .drawing import DegenerateDrawing, DrawnGraph, compute_crossings, greedy_uncross

PRNG_ALGORITHM = "philox4x64-10"
CHUNK = 4096  # trials per substream; part of the stream definition


class InvalidConfig(ValueError):
    pass


class AdjacentCrossingPresent(ValueError):
    pass


@dataclass(frozen=True)
class SamplingConfig:
    p: Fraction
    trials: int
    seed: int
    tolerance_crossings: Fraction = Fraction(5, 100)
    tolerance_counts: Fraction = Fraction(1, 100)

    def __post_init__(self):
        try:
            object.__setattr__(self, "p", Fraction(self.p))
        except (TypeError, ValueError) as exc:
            raise InvalidConfig(f"bad probability {self.p!r}") from exc
        if not 0 < self.p <= 1:
            raise InvalidConfig("p must lie in (0, 1]")
        if self.p.denominator > 2 ** 64:
            raise InvalidConfig("p needs a denominator of at most 2^64")
        if self.trials < 1:
            raise InvalidConfig("trials must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidConfig("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SamplingReport:
    config: SamplingConfig
    n: int
    m: int
    crossings: int
    mean_vertices: Fraction
    mean_edges: Fraction
    mean_crossings: Fraction
    per_trial: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @property
    def expected_vertices(self) -> Fraction:
        return self.config.p * self.n

    @property
    def expected_edges(self) -> Fraction:
        return self.config.p ** 2 * self.m

    @property
    def expected_crossings(self) -> Fraction:
        return self.config.p ** 4 * self.crossings

    @staticmethod
    def _rel(mean: Fraction, expected: Fraction) -> Fraction:
        if expected == 0:
            return Fraction(0) if mean == 0 else Fraction(1)
        return abs(mean - expected) / expected

    @property
    def relative_errors(self) -> dict[str, Fraction]:
        return {
            "vertices": self._rel(self.mean_vertices, self.expected_vertices),
            "edges": self._rel(self.mean_edges, self.expected_edges),
            "crossings": self._rel(self.mean_crossings, self.expected_crossings),
        }

    @property
    def within_tolerance(self) -> bool:
        e = self.relative_errors
        c = self.config
        return e["vertices"] <= c.tolerance_counts and e["edges"] <= c.tolerance_counts and e["crossings"] <= c.tolerance_crossings

    def to_json(self) -> dict:
        c = self.config
        return {
            "prng": PRNG_ALGORITHM,
            "seed": c.seed,
            "p": str(c.p),
            "trials": c.trials,
            "n": self.n,
            "m": self.m,
            "crossings": self.crossings,
            "mean": {"vertices": str(self.mean_vertices), "edges": str(self.mean_edges), "crossings": str(self.mean_crossings)},
            "expected": {
                "vertices": str(self.expected_vertices),
                "edges": str(self.expected_edges),
                "crossings": str(self.expected_crossings),
            },
            "relative_error": {k: float(v) for k, v in self.relative_errors.items()},
            "within_tolerance": self.within_tolerance,
        }

    def per_trial_csv(self) -> str:
        if self.per_trial is None:
            raise ValueError("per-trial statistics were not kept")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "vertices", "edges", "crossings"])
        for i, row in enumerate(self.per_trial.tolist()):
            w.writerow([i, *row])
        return buf.getvalue()


def _bernoulli(bg: np.random.Philox, shape: tuple[int, int], p: Fraction) -> np.ndarray:
    """Exact Bernoulli(p) draws: reject raw words above the largest multiple of the denominator."""
    a, b = p.numerator, p.denominator
    raw = bg.random_raw(shape)
    limit = (2 ** 64 // b) * b
    if limit < 2 ** 64:
        lim = np.uint64(limit)
        bad = raw >= lim
        while bad.any():
            raw[bad] = bg.random_raw(int(bad.sum()))
            bad = raw >= lim
    if b == 2 ** 64:
        return raw < np.uint64(a) if a < 2 ** 64 else np.ones(shape, dtype=bool)
    return (raw % np.uint64(b)) < np.uint64(a)


def sample_induced(d: DrawnGraph, cfg: SamplingConfig, keep_trials: bool = False) -> SamplingReport:
    try:
        crossings = compute_crossings(d)
    except DegenerateDrawing as exc:
        if exc.reason == "adjacent edges cross":
            raise AdjacentCrossingPresent(str(exc)) from exc
        raise
    g = d.graph
    ends_e = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    ends_x = np.array([g.edges[c.edge_a] + g.edges[c.edge_b] for c in crossings], dtype=np.int64).reshape(-1, 4)

    totals = np.zeros(3, dtype=object)
    rows = []
    done = 0
    chunk = 0
    while done < cfg.trials:
        size = min(CHUNK, cfg.trials - done)
        bg = np.random.Philox(key=[cfg.seed, chunk])
        keep = _bernoulli(bg, (CHUNK, g.n), cfg.p)[:size]
        kv = keep.sum(axis=1)
        ke = keep[:, ends_e].all(axis=2).sum(axis=1) if len(ends_e) else np.zeros(size, dtype=np.int64)
        kx = keep[:, ends_x].all(axis=2).sum(axis=1) if len(ends_x) else np.zeros(size, dtype=np.int64)
        totals += [int(kv.sum()), int(ke.sum()), int(kx.sum())]
        if keep_trials:
            rows.append(np.stack([kv, ke, kx], axis=1))
        done += size
        chunk += 1
    t = cfg.trials
    per = np.concatenate(rows) if keep_trials else None
    return SamplingReport(
        cfg, g.n, g.m, len(crossings),
        Fraction(int(totals[0]), t), Fraction(int(totals[1]), t), Fraction(int(totals[2]), t),
        per,
    )


@dataclass(frozen=True)
class AuditReport:
    k: int
    n: int
    m: int
    trace: tuple[tuple[int, int], ...]
    trace_total: int
    bound: Fraction
    passed: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "removed_edges": len(self.trace),
            "trace_total": self.trace_total,
            "naive_bound": str(self.bound),
            "pass": self.passed,
        }


def removal_audit(d: DrawnGraph, mu: Sequence[Affine]) -> AuditReport:
    """Greedy removal total against k m - sum mu_i(n), where k = len(mu)."""
    trace = greedy_uncross(d)
    total = sum(c for _, c in trace)
    k = len(mu)
    bound = naive_cr_lower(k, mu, d.graph.n, d.graph.m)
    return AuditReport(k, d.graph.n, d.graph.m, tuple(trace), total, bound, total >= bound)
