"""Constructive stable-set / target-set machinery for regular expanders.

The stable set comes from a cut-reducing local search over partitions of the
nodes into floor(1/beta) parts of size roughly beta*n: while the largest part
contains a node with fewer than r internal neighbors, that node is moved to a
part where it has more neighbors, which strictly decreases the number of
cut edges.  The surviving largest part has induced minimum degree >= r and
size between floor(beta*n) and 2*beta*n + 1/beta (+1 slack for floors).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional

from .bounds import beta as beta_formula
from .dynamics import RunResult, ThresholdRule, RThreshold, blue_threshold, run
from .graph import Graph, iter_nodes, mask_of, nodes_of


class PreconditionError(ValueError):
    """Inputs violate the construction's preconditions."""


class ConstructionError(RuntimeError):
    """A mid-run guarantee failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CertifiedSet:
    nodes: int  # bitmask
    kind: str   # "stable" | "target"
    rule: ThresholdRule
    size: int
    size_bound: float  # 2*beta*n + 1/beta (+1 slack applied by callers)
    certificate: object  # stable: {node: internal degree}; target: RunResult


def verify_stable(g: Graph, s: int, rule: ThresholdRule) -> bool:
    """True iff every node of s keeps its threshold inside s.

    For the count rule this is induced min degree >= r; for the fraction rule
    each v needs ceil(alpha*d(v)) neighbors inside s.
    """
    return all(g.degree_in(v, s) >= blue_threshold(rule, g.degrees[v])
               for v in iter_nodes(s))


def verify_target(g: Graph, t: int, rule: ThresholdRule,
                  max_rounds: int | None = None) -> bool:
    """True iff seeding blue = t (rest red) drives the whole graph blue.

    By monotonicity of the update this single initialization suffices.
    """
    if t == 0:
        return False
    return run(g, t, rule, max_rounds).outcome == "all_blue"


def find_expandable_node(g: Graph, s: int, r: int) -> Optional[int]:
    """Smallest node outside s with at least r neighbors in s, if any."""
    for v in range(g.n):
        if not (s >> v & 1) and g.degree_in(v, s) >= r:
            return v
    return None


def _sizes_legal(sizes: List[int], base: int) -> bool:
    # Family membership: every part >= base, except at most one at base-1.
    small = sum(1 for s in sizes if s < base)
    return small == 0 or (small == 1 and min(sizes) == base - 1)


def construct_stable_set(g: Graph, r: int, sigma: float,
                         seed: int = 0, max_restarts: int = 20) -> CertifiedSet:
    """Stable set of size in [floor(beta*n), 2*beta*n + 1/beta + 1] for the
    count rule on a regular graph, via the cut-reducing partition search."""
    if not g.is_regular():
        raise PreconditionError("construction requires a regular graph")
    d = g.max_degree
    bet = beta_formula(r, d, sigma)
    if bet > 0.5:
        raise PreconditionError(
            f"beta={bet:.4f} > 1/2; the partition argument needs beta <= 1/2")
    k = int(1.0 / bet)
    if k < 2:
        raise PreconditionError("need at least two parts (1/beta >= 2)")
    n = g.n
    base = int(bet * n)
    if base < 1:
        raise PreconditionError(
            f"beta*n = {bet * n:.3f} < 1; instance too small for the "
            "partition construction")
    size_bound = 2.0 * bet * n + 1.0 / bet + 1.0
    rng = random.Random(seed)

    for _ in range(max_restarts):
        order = list(range(n))
        rng.shuffle(order)
        # k parts of size base; the remainder lands in part 0, keeping it
        # maximal.
        part_of = [0] * n
        idx = 0
        for j in range(k):
            take = base + (n - k * base if j == 0 else 0)
            for v in order[idx:idx + take]:
                part_of[v] = j
            idx += take
        part_masks = [0] * k
        for v, j in enumerate(part_of):
            part_masks[j] |= 1 << v
        sizes = [m.bit_count() for m in part_masks]

        moves = 0
        stuck = False
        while True:
            jmax = max(range(k), key=lambda j: (sizes[j], -j))
            vmax = part_masks[jmax]
            mover = None
            for u in iter_nodes(vmax):
                if g.degree_in(u, vmax) <= r - 1:
                    mover = u
                    break
            if mover is None:
                cert = {v: g.degree_in(v, vmax) for v in nodes_of(vmax)}
                size = sizes[jmax]
                if not (base <= size <= size_bound):
                    raise ConstructionError(
                        f"stable set size {size} outside "
                        f"[{base}, {size_bound:.2f}]")
                return CertifiedSet(nodes=vmax, kind="stable",
                                    rule=RThreshold(r), size=size,
                                    size_bound=size_bound, certificate=cert)
            deg_here = g.degree_in(mover, vmax)
            best_j, best_deg = None, deg_here
            for j in range(k):
                if j == jmax:
                    continue
                dj = g.degree_in(mover, part_masks[j])
                if dj > best_deg:
                    best_j, best_deg = j, dj
            if best_j is None:
                stuck = True
                break
            new_sizes = sizes.copy()
            new_sizes[jmax] -= 1
            new_sizes[best_j] += 1
            if not _sizes_legal(new_sizes, base):
                stuck = True
                break
            bit = 1 << mover
            part_masks[jmax] ^= bit
            part_masks[best_j] |= bit
            part_of[mover] = best_j
            sizes = new_sizes
            moves += 1
            if moves > g.m + k:
                raise ConstructionError(
                    "cut-reduction exceeded the edge count; progress "
                    "invariant violated")
        if stuck:
            continue
    raise ConstructionError(
        f"no legal improving move after {max_restarts} restarts; "
        "preconditions likely violated")


def build_target_set(g: Graph, r: int, sigma: float,
                     seed: int = 0) -> CertifiedSet:
    """Target set for the count rule: the constructed stable set, certified
    by simulating it to the all-blue state."""
    if g.min_degree < r:
        raise PreconditionError(
            f"min degree {g.min_degree} < r={r}: all-blue is not absorbing")
    stable = construct_stable_set(g, r, sigma, seed=seed)
    res: RunResult = run(g, stable.nodes, RThreshold(r))
    if res.outcome != "all_blue":
        raise ConstructionError(
            f"stable seed failed to take over (outcome {res.outcome}); "
            "this contradicts the expansion guarantee")
    return CertifiedSet(nodes=stable.nodes, kind="target",
                        rule=RThreshold(r), size=stable.size,
                        size_bound=stable.size_bound, certificate=res)
