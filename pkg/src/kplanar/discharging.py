"""Charge ledger over the faces of a planarization and discharge feasibility.

Every face f gets charge ch(f) = |V(f)| + |f| - 4, where |f| counts all
planarization vertices on its boundary walk and |V(f)| only the original
ones.  Over all faces the charges sum to 4n - 8.  For a parameter alpha the
remaining charge is ch(f) - alpha |V(f)|; if it can be redistributed so
that no face ends negative, then m <= (2/alpha)(n - 2).

Instead of replaying a specific rule set, :func:`discharge_feasibility`
asks a max-flow oracle whether *some* transfer between nearby faces works.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional

import networkx as nx

from .drawing import Planarization, edge_crossing_counts

FACE_CLASSES = (
    "type1_triangle",
    "type2_triangle",
    "one_vertex_triangle",
    "zero_vertex_triangle",
    "quad",
    "big",
    "degenerate",
    "boundary",
)


class Infeasible(Exception):
    def __init__(self, unsatisfied: list[int], shortfall: Fraction):
        self.unsatisfied = unsatisfied
        self.shortfall = shortfall
        super().__init__(f"{len(unsatisfied)} faces left short by {shortfall} in total")


@dataclass(frozen=True)
class FaceCharge:
    face: int
    size: int
    original_count: int
    cell_size: int
    charge: int
    remaining: Fraction
    cls: str

    def to_json(self) -> dict:
        return {
            "face": self.face,
            "size": self.size,
            "original_count": self.original_count,
            "cell_size": self.cell_size,
            "charge": self.charge,
            "remaining": str(self.remaining),
            "class": self.cls,
        }


def classify_face(size: int, original: int, boundary: bool) -> str:
    if boundary:
        return "boundary"
    if size < 3:
        return "degenerate"
    if size == 3:
        return ("zero_vertex_triangle", "one_vertex_triangle", "type2_triangle", "type1_triangle")[original]
    return "quad" if size == 4 else "big"


@dataclass(frozen=True)
class ChargeLedger:
    planarization: Planarization
    alpha: Fraction
    rows: tuple[FaceCharge, ...]
    vbound_ok: Optional[bool]  # |V(f)| >= ceil(|f|/2) on every face; None unless the drawing is 1-plane

    @property
    def n(self) -> int:
        return self.planarization.n

    @property
    def m(self) -> int:
        return self.planarization.drawing.graph.m

    def census(self) -> dict[str, int]:
        c = Counter(r.cls for r in self.rows)
        return {k: c[k] for k in FACE_CLASSES if c[k]}

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "n": self.n,
            "m": self.m,
            "census": self.census(),
            "faces": [r.to_json() for r in self.rows],
        }


def build_ledger(p: Planarization, alpha) -> ChargeLedger:
    alpha = Fraction(alpha)
    rows = []
    for f in p.faces:
        ch = f.original_count + f.size - 4
        rows.append(
            FaceCharge(
                f.index,
                f.size,
                f.original_count,
                f.cell_size,
                ch,
                ch - alpha * f.original_count,
                classify_face(f.size, f.original_count, f.boundary),
            )
        )
    vbound = None
    if max(edge_crossing_counts(p.drawing, p.crossings), default=0) <= 1:
        # in a 1-plane drawing every piece has an original endpoint
        vbound = all(r.original_count >= -(-r.size // 2) for r in rows if r.cls != "boundary")
        if not vbound:
            raise AssertionError("1-plane drawing with a face having |V(f)| < |f|/2")
    return ChargeLedger(p, alpha, tuple(rows), vbound)


@dataclass(frozen=True)
class ChargeSum:
    lhs: int
    rhs: int
    passed: bool
    lhs_without_boundary: int

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "pass": self.passed, "lhs_without_boundary": self.lhs_without_boundary}


def charge_sum_check(ledger: ChargeLedger) -> ChargeSum:
    """Sum of ch(f) over all faces against 4n - 8.

    Cylinder drawings are traced on the sphere (the two caps are faces), so
    the identity is checked over every face there as well.
    """
    lhs = sum(r.charge for r in ledger.rows)
    inner = sum(r.charge for r in ledger.rows if r.cls != "boundary")
    rhs = 4 * ledger.n - 8
    return ChargeSum(lhs, rhs, lhs == rhs, inner)


@dataclass(frozen=True)
class DischargePlan:
    alpha: Fraction
    transfers: tuple[tuple[int, int, Fraction], ...]
    final: dict = field(repr=False)

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "transfers": [{"from": a, "to": b, "amount": str(x)} for a, b, x in self.transfers],
        }


def _dual_adjacency(p: Planarization, skip: set[int]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in p.faces]
    for f, g, _ in p.dual_edges():
        if f != g and f not in skip and g not in skip:
            adj[f].add(g)
            adj[g].add(f)
    return adj


def discharge_feasibility(ledger: ChargeLedger, relay_depth: int = 2) -> DischargePlan:
    """Witness plan moving remaining charge from surplus to deficit faces, or :class:`Infeasible`.

    A surplus face may send to a deficit face at dual distance at most
    ``relay_depth`` (boundary faces neither send, receive nor relay).
    """
    p = ledger.planarization
    boundary = {r.face for r in ledger.rows if r.cls == "boundary"}
    rem = {r.face: r.remaining for r in ledger.rows if r.face not in boundary}
    scale = reduce(lambda x, y: x * y // math.gcd(x, y), (v.denominator for v in rem.values()), 1)
    deficit = [f for f, v in rem.items() if v < 0]
    surplus = {f for f, v in rem.items() if v > 0}
    adj = _dual_adjacency(p, boundary)

    net = nx.DiGraph()
    need = 0
    for d in deficit:
        amount = int(-rem[d] * scale)
        need += amount
        net.add_edge(("d", d), "t", capacity=amount)
        seen = {d: 0}
        queue = deque([d])
        while queue:
            u = queue.popleft()
            if u in surplus:
                net.add_edge(("s", u), ("d", d))  # unbounded
            if seen[u] == relay_depth:
                continue
            for w in adj[u]:
                if w not in seen:
                    seen[w] = seen[u] + 1
                    queue.append(w)
    for s in surplus:
        if net.has_node(("s", s)):
            net.add_edge("s", ("s", s), capacity=int(rem[s] * scale))

    flow_value, flow = (0, {}) if not deficit or not net.has_node("s") else nx.maximum_flow(net, "s", "t")
    if flow_value < need:
        got = Counter()
        for node, out in flow.items():
            if isinstance(node, tuple) and node[0] == "d":
                got[node[1]] += out.get("t", 0)
        short = [d for d in deficit if got[d] < -rem[d] * scale]
        raise Infeasible(sorted(short), Fraction(need - flow_value, scale))

    transfers = []
    final = dict(rem)
    for node, out in flow.items():
        if isinstance(node, tuple) and node[0] == "s":
            for target, amount in out.items():
                if amount:
                    x = Fraction(amount, scale)
                    transfers.append((node[1], target[1], x))
                    final[node[1]] -= x
                    final[target[1]] += x
    transfers.sort()
    if any(v < 0 for v in final.values()):
        raise AssertionError("flow witness leaves a negative face")
    n, m = ledger.n, ledger.m
    if m > 2 / ledger.alpha * (n - 2):
        raise AssertionError("feasible discharge contradicts m <= (2/alpha)(n-2)")
    return DischargePlan(ledger.alpha, tuple(transfers), final)


@dataclass(frozen=True)
class DensityFormulaReport:
    t: int
    m: int
    rhs: Fraction
    passed: bool
    crossings: int
    cell_terms: tuple[Fraction, ...]
    cell_sizes: dict  # ||c|| -> number of cells
    # t = 3 specialization: 3(n-2) + |C5|/2 - |X| (cells of size >= 7 dropped), and the |C5| <= 2|X| check
    specialized_bound: Optional[Fraction] = None
    c5_credit_ok: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "t": self.t,
            "m": self.m,
            "rhs": str(self.rhs),
            "pass": self.passed,
            "crossings": self.crossings,
            "cell_sizes": {str(k): v for k, v in sorted(self.cell_sizes.items())},
        }
        if self.specialized_bound is not None:
            out["specialized_bound"] = str(self.specialized_bound)
            out["c5_credit_ok"] = self.c5_credit_ok
        return out


def density_formula_check(p: Planarization, t: int) -> DensityFormulaReport:
    """Evaluate t(n-2) - sum_c ((t-1)/4 ||c|| - t) - |X| and compare with m.

    ||c|| counts original vertices and edge segments on the boundary of
    cell c (crossing points are not counted as vertices).
    """
    if t < 1:
        raise ValueError("t >= 1 required")
    n, m = p.n, p.drawing.graph.m
    x = len(p.crossings)
    terms = tuple(Fraction(t - 1, 4) * f.cell_size - t for f in p.faces)
    rhs = t * (n - 2) - sum(terms, Fraction(0)) - x
    sizes = Counter(f.cell_size for f in p.faces)
    spec_bound = credit = None
    if t == 3:
        spec_bound = 3 * (n - 2) + Fraction(sizes[5], 2) - x
        credit = _c5_per_crossing_ok(p) and sizes[5] <= 2 * x
    return DensityFormulaReport(t, m, rhs, m <= rhs, x, terms, dict(sizes), spec_bound, credit)


def _c5_per_crossing_ok(p: Planarization) -> bool:
    per = Counter()
    for f in p.faces:
        if f.cell_size == 5:
            for node in {v for v, _ in f.boundary_walk}:
                if not p.is_original(node):
                    per[node] += 1
    return all(v <= 2 for v in per.values())
