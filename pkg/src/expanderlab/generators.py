"""Seeded construction of random and named graph families.

All generators are deterministic per (parameters, seed); the RNG is Python's
Mersenne Twister (`random.Random`), which has a documented, platform-stable
stream.
"""

from __future__ import annotations

import random
from typing import List, Tuple

from .graph import Graph, GraphError


def gen_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n,2) pairs kept independently with prob. p."""
    if not 0 < p < 1:
        raise GraphError(f"edge probability must be in (0,1), got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def _pairing_attempt(n: int, d: int, rng: random.Random) -> set | None:
    # One pass of the stub-pairing model: shuffle stubs, pair them up, feed
    # stubs from rejected pairs (loops / repeats) back in.  Returns None when
    # the leftover stubs cannot be completed to a simple graph.
    edges: set = set()
    stubs = list(range(n)) * d
    while stubs:
        rng.shuffle(stubs)
        leftover = []
        it = iter(stubs)
        for u, v in zip(it, it):
            if u > v:
                u, v = v, u
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                leftover.extend((u, v))
        if leftover:
            left_set = set(leftover)
            if not any(a != b and (min(a, b), max(a, b)) not in edges
                       for a in left_set for b in left_set):
                return None
        stubs = leftover
    return edges


def gen_random_regular(n: int, d: int, seed: int,
                       max_attempts: int | None = None) -> Graph:
    """Random simple d-regular graph via the stub-pairing model.

    Invalid pairings (self-loops / multi-edges) are repaired by re-pairing the
    offending stubs; a stuck attempt is discarded and restarted.  The output
    is always simple and exactly d-regular.
    """
    if (n * d) % 2 != 0:
        raise GraphError(f"n*d must be even, got n={n}, d={d}")
    if not 0 < d < n:
        raise GraphError(f"need 0 < d < n, got d={d}, n={n}")
    if max_attempts is None:
        max_attempts = 10 * d * n
    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            return Graph(n, sorted(edges))
    raise GraphError(f"random regular generation failed after "
                     f"{max_attempts} attempts (n={n}, d={d})")


def gen_complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_star(n: int) -> Graph:
    """Star on n nodes with center 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


def gen_petersen() -> Graph:
    """Standard Petersen graph: outer 5-cycle, inner pentagram, 5 spokes."""
    edges: List[Tuple[int, int]] = []
    edges += [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


_NAMED = {
    "complete": gen_complete,
    "cycle": gen_cycle,
    "path": gen_path,
    "star": gen_star,
}


def gen_named(kind: str, n: int | None = None) -> Graph:
    if kind == "petersen":
        return gen_petersen()
    if kind not in _NAMED:
        raise GraphError(f"unknown named graph kind {kind!r}")
    if n is None:
        raise GraphError(f"kind {kind!r} requires n")
    return _NAMED[kind](n)
