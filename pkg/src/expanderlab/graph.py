"""Immutable undirected simple graph with bitmask node sets."""

from __future__ import annotations

from typing import Iterable, Iterator, List, Sequence, Tuple


def mask_of(nodes: Iterable[int]) -> int:
    """Bitmask for a collection of node ids."""
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def nodes_of(mask: int) -> List[int]:
    """Sorted node ids present in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_nodes(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_size(mask: int) -> int:
    return mask.bit_count()


class GraphError(ValueError):
    pass


class Graph:
    """Undirected simple graph on nodes 0..n-1, read-only after construction.

    Adjacency is kept both as sorted neighbor tuples and as per-node bitmasks;
    set-restricted degree queries are popcounts.
    """

    __slots__ = ("n", "m", "neighbors", "adj_mask", "degrees", "min_degree",
                 "max_degree", "full_mask", "_girth")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 1:
            raise GraphError("graph needs at least one node")
        adj: List[set] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.neighbors: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj)
        self.adj_mask: Tuple[int, ...] = tuple(mask_of(s) for s in adj)
        self.degrees: Tuple[int, ...] = tuple(len(s) for s in adj)
        self.min_degree = min(self.degrees)
        self.max_degree = max(self.degrees)
        self.full_mask = (1 << n) - 1
        self._girth: int | None = -1  # -1 = not computed, None = acyclic

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u]
                if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def degree_in(self, v: int, s: int) -> int:
        """Number of neighbors of v inside the node set s (bitmask)."""
        if not 0 <= v < self.n:
            raise GraphError(f"node {v} out of range")
        return (self.adj_mask[v] & s).bit_count()

    def edge_boundary_count(self, a: int, b: int) -> int:
        """Ordered-pair edge count e(A,B).

        Pairs (v, u) with v in A, u in B and {v,u} an edge; overlapping sets
        double-count internal edges, so e(V,V) = 2m.
        """
        total = 0
        masks = self.adj_mask
        for v in iter_nodes(a):
            total += (masks[v] & b).bit_count()
        return total

    # -- traversal --------------------------------------------------------

    def bfs_distances(self, source: int) -> List[int]:
        """Hop distances from source; -1 for unreachable nodes."""
        dist = [-1] * self.n
        dist[source] = 0
        frontier = [source]
        while frontier:
            nxt = []
            for u in frontier:
                du = dist[u] + 1
                for w in self.neighbors[u]:
                    if dist[w] < 0:
                        dist[w] = du
                        nxt.append(w)
            frontier = nxt
        return dist

    def ball(self, v: int, radius: int) -> int:
        """Bitmask of nodes within the given hop distance of v."""
        if not 0 <= v < self.n:
            raise GraphError(f"node {v} out of range")
        dist = self.bfs_distances(v)
        return mask_of(u for u, d in enumerate(dist) if 0 <= d <= radius)

    def is_connected(self) -> bool:
        return all(d >= 0 for d in self.bfs_distances(0))

    def girth(self) -> int | None:
        """Length of the shortest cycle; None for forests.

        BFS from every node; the shortest cycle through the root is found when
        a non-tree edge closes between the current and previous/same level.
        """
        if self._girth != -1:
            return self._girth
        best = None
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            frontier = [s]
            while frontier:
                nxt = []
                stop = False
                for u in frontier:
                    for w in self.neighbors[u]:
                        if w == parent[u]:
                            continue
                        if dist[w] < 0:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        else:
                            cyc = dist[u] + dist[w] + 1
                            if best is None or cyc < best:
                                best = cyc
                            stop = True
                if stop or (best is not None and nxt
                            and 2 * dist[nxt[0]] >= best):
                    break
                frontier = nxt
        self._girth = best
        return best

    # -- serialization ----------------------------------------------------

    def to_edge_list_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(line)
        if not rows:
            raise GraphError("empty edge-list input")
        try:
            n, m = (int(x) for x in rows[0].split())
        except ValueError as exc:
            raise GraphError(f"bad header line: {rows[0]!r}") from exc
        if len(rows) - 1 != m:
            raise GraphError(f"header says m={m} but {len(rows) - 1} "
                             "edge lines present")
        edges = []
        for line in rows[1:]:
            try:
                u, v = (int(x) for x in line.split())
            except ValueError as exc:
                raise GraphError(f"bad edge line: {line!r}") from exc
            if not u < v:
                raise GraphError(f"edge line {line!r} must have u < v")
            edges.append((u, v))
        return cls(n, edges)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.adj_mask == other.adj_mask)

    def __hash__(self) -> int:
        return hash((self.n, self.adj_mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(g.to_edge_list_text())


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return Graph.from_edge_list_text(fh.read())
