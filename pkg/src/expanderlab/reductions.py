"""Hardness-reduction gadgets built as concrete graph transformations.

Two constructions:
  * alpha_stable_gadget: four interleaved copies of the input plus four hub
    nodes; the output is n-regular on 4n+4 nodes, and its minimum fraction-rule
    stable set has size ceil(alpha*n)+1 exactly when the input has a clique of
    size >= alpha*n.
  * clique_to_alpha_clique: shifts a (graph, k) clique question to the
    "clique of size >= alpha*n'" form, by padding with isolates (k >= alpha*n)
    or with a universally-joined clique U (k < alpha*n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from .graph import Graph


@dataclass(frozen=True)
class GadgetOutput:
    gprime: Graph
    node_map: Dict[int, str]  # gadget node id -> role label
    params: dict


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def alpha_stable_gadget(g: Graph, alpha) -> GadgetOutput:
    """Gadget on 4n+4 nodes, n-regular by construction.

    Layout: copies V1..V4 occupy id blocks [0,n), [n,2n), [2n,3n), [3n,4n);
    hubs w1..w4 are 4n..4n+3.  V1 and V4 carry the input's edges, V2 and V3
    are internally empty; V1-V2 and V3-V4 get complement edges, V2-V3 gets
    the input's edges, and each hub w_j is joined to all of V_j.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    n = g.n
    edges = []
    # copies of the input inside V1 and V4
    for u, v in g.edges():
        edges.append((u, v))
        edges.append((3 * n + u, 3 * n + v))
    # hubs
    for j in range(4):
        w = 4 * n + j
        edges += [(j * n + i, w) for i in range(n)]
    # complement edges V1-V2 and V3-V4; input edges V2-V3
    for i in range(n):
        for i2 in range(n):
            if i == i2:
                continue
            if not g.has_edge(i, i2):
                edges.append((i, n + i2))
                edges.append((2 * n + i, 3 * n + i2))
            elif i < i2:
                edges.append((n + i, 2 * n + i2))
                edges.append((n + i2, 2 * n + i))
    gprime = Graph(4 * n + 4, edges)
    if gprime.min_degree != n or gprime.max_degree != n:
        raise AssertionError("gadget is not n-regular; construction bug")
    node_map = {}
    for j in range(4):
        for i in range(n):
            node_map[j * n + i] = f"v{j + 1}_{i}"
        node_map[4 * n + j] = f"w{j + 1}"
    return GadgetOutput(gprime=gprime, node_map=node_map,
                        params={"alpha": alpha, "n": n, "n_prime": 4 * n + 4,
                                "stable_target": _ceil_frac(alpha * n) + 1})


def clique_to_alpha_clique(g: Graph, k: int, alpha) -> GadgetOutput:
    """Rewrites "clique of size >= k in g" as "clique of size >= alpha * n'".

    Case k >= alpha*n adds floor(k/alpha - n) isolated nodes; case k < alpha*n
    adds a set U of ceil((alpha*n - k)/(1 - alpha)) nodes joined to each other
    and to everything.  When the relevant ratio is integral, the equivalence
    is exact in both directions.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    n = g.n
    edges = list(g.edges())
    node_map = {i: f"g_{i}" for i in range(n)}
    if k >= alpha * n:
        ratio = Fraction(k, 1) / alpha - n
        pad = _floor_frac(ratio)
        integral = ratio.denominator == 1
        for i in range(pad):
            node_map[n + i] = f"pad_{i}"
        gprime = Graph(n + pad, edges)
        case = "isolates"
        extra = pad
    else:
        ratio = (alpha * n - k) / (1 - alpha)
        u_size = _ceil_frac(ratio)
        integral = ratio.denominator == 1
        for i in range(u_size):
            u = n + i
            node_map[u] = f"u_{i}"
            edges += [(w, u) for w in range(u)]
        gprime = Graph(n + u_size, edges)
        case = "universal_clique"
        extra = u_size
    n_prime = gprime.n
    return GadgetOutput(
        gprime=gprime, node_map=node_map,
        params={"alpha": alpha, "k": k, "n": n, "n_prime": n_prime,
                "case": case, "extra_nodes": extra, "integral": integral,
                "clique_target": math.ceil(alpha * n_prime)})
