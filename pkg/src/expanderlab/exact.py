"""Ground-truth solvers: minimum stable set, minimum target set, max clique.

These are oracles for small instances, not production solvers.  Enumeration
goes by subset size then lexicographic order, so the first witness found is
canonical and minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .dynamics import AlphaThreshold, RThreshold, ThresholdRule, blue_threshold
from .graph import Graph
from .monopoly import verify_target


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ExactResult:
    optimum: Optional[int]  # None when status != "optimal"
    witness: Optional[int]  # bitmask
    nodes_explored: int
    method: str  # enumeration | shortcut_ms1 | shortcut_girth
    status: str  # optimal | infeasible | cap_exceeded

    @property
    def feasible(self) -> bool:
        return self.status == "optimal"


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise InstanceTooLarge(
            f"{what}: n={g.n} exceeds cap {cap}; raise the cap explicitly "
            "if you accept the runtime")


def _enumerate_stable(g: Graph, rule: ThresholdRule,
                      max_size: int) -> ExactResult:
    need = [blue_threshold(rule, g.degrees[v]) for v in range(g.n)]
    masks = g.adj_mask
    bits = [1 << v for v in range(g.n)]
    # a node needing more internal neighbors than it has can never be stable
    candidates = [v for v in range(g.n) if need[v] <= g.degrees[v]]
    explored = 0
    for size in range(1, max_size + 1):
        for combo in combinations(candidates, size):
            explored += 1
            s = 0
            for v in combo:
                s |= bits[v]
            if all((masks[v] & s).bit_count() >= need[v] for v in combo):
                return ExactResult(optimum=size, witness=s,
                                   nodes_explored=explored,
                                   method="enumeration", status="optimal")
    status = "infeasible" if max_size >= len(candidates) else "cap_exceeded"
    return ExactResult(optimum=None, witness=None, nodes_explored=explored,
                       method="enumeration", status=status)


def min_stable_set(g: Graph, rule: ThresholdRule, cap: int = 20,
                   force_enumeration: bool = False,
                   max_size: int | None = None) -> ExactResult:
    """Minimum stable set size.

    r=1 and r=2 have closed forms (an edge / the girth); everything else is
    subset enumeration, optionally truncated at max_size (status
    "cap_exceeded" means no stable set of size <= max_size exists).
    """
    if not force_enumeration and isinstance(rule, RThreshold):
        if rule.r == 1:
            if g.m >= 1:
                u = next(v for v in range(g.n) if g.degrees[v] > 0)
                w = g.neighbors[u][0]
                return ExactResult(optimum=2, witness=(1 << u) | (1 << w),
                                   nodes_explored=0, method="shortcut_ms1",
                                   status="optimal")
            return ExactResult(optimum=None, witness=None, nodes_explored=0,
                               method="shortcut_ms1", status="infeasible")
        if rule.r == 2:
            girth = g.girth()
            if girth is None:
                return ExactResult(optimum=None, witness=None,
                                   nodes_explored=0, method="shortcut_girth",
                                   status="infeasible")
            witness = _shortest_cycle_witness(g, girth)
            return ExactResult(optimum=girth, witness=witness,
                               nodes_explored=0, method="shortcut_girth",
                               status="optimal")
    if max_size is None:
        _check_cap(g, cap, "min_stable_set")
        max_size = g.n
    return _enumerate_stable(g, rule, max_size)


def _shortest_cycle_witness(g: Graph, girth: int) -> int:
    # Smallest (lexicographic) node set inducing min degree 2 at the girth size
    # is a shortest cycle; girth <= n keeps this cheap on oracle-sized graphs.
    res = _enumerate_stable(g, RThreshold(2), girth)
    assert res.status == "optimal" and res.optimum == girth
    return res.witness


def min_target_set(g: Graph, rule: ThresholdRule, cap: int = 20,
                   max_rounds: int | None = None) -> ExactResult:
    """Minimum target set by size-ordered enumeration plus simulation."""
    _check_cap(g, cap, "min_target_set")
    if isinstance(rule, RThreshold) and g.min_degree < rule.r:
        # all-blue is not even a fixed point, so no target set exists
        return ExactResult(optimum=None, witness=None, nodes_explored=0,
                           method="enumeration", status="infeasible")
    bits = [1 << v for v in range(g.n)]
    explored = 0
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            explored += 1
            t = 0
            for v in combo:
                t |= bits[v]
            if verify_target(g, t, rule, max_rounds):
                return ExactResult(optimum=size, witness=t,
                                   nodes_explored=explored,
                                   method="enumeration", status="optimal")
    return ExactResult(optimum=None, witness=None, nodes_explored=explored,
                       method="enumeration", status="infeasible")


def max_clique(g: Graph, cap: int = 40) -> ExactResult:
    """Maximum clique via branch and bound with a greedy-coloring bound."""
    _check_cap(g, cap, "max_clique")
    masks = g.adj_mask
    best_size = 0
    best_mask = 0
    explored = 0

    def color_sort(cand: int):
        # Greedy coloring: nodes grouped into independent classes; a node in
        # class c can extend a clique to at most c more nodes.
        order, bounds = [], []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~masks[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(current: int, size: int, cand: int):
        nonlocal best_size, best_mask, explored
        explored += 1
        order, col = color_sort(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + col[i] <= best_size:
                return
            v = order[i]
            new_cand = cand & masks[v]
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = current | (1 << v)
            if new_cand:
                expand(current | (1 << v), size + 1, new_cand)
            cand &= ~(1 << v)

    if g.n:
        expand(0, 0, g.full_mask)
    return ExactResult(optimum=best_size, witness=best_mask,
                       nodes_explored=explored, method="enumeration",
                       status="optimal")
