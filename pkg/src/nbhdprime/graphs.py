"""Small simple graphs over bitmask adjacency.

Vertices carry the labels 1..n externally; internally vertex i occupies
bit i-1 of an integer mask, so set algebra on vertex sets and frontier
BFS are plain integer operations.  Every value here is immutable and can
be shared freely between threads.

The mask width is capped at ``MAX_VERTICES``; exceeding it is a hard
error rather than silent truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import inf

__all__ = [
    "INFINITE",
    "MAX_VERTICES",
    "VertexSet",
    "Graph",
    "cycle",
    "path",
    "complete",
    "circulant",
    "kneser",
    "kneser_vertex_subsets",
    "connected_graphs",
    "parse_graph_text",
    "format_graph_text",
]

MAX_VERTICES = 64

# Distance value for disconnected pairs; compares above every integer.
INFINITE = inf


def _bit(label: int) -> int:
    return 1 << (label - 1)


def _mask_members(mask: int) -> tuple[int, ...]:
    """1-based labels of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _mask_of(labels, n: int) -> int:
    mask = 0
    for v in labels:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} outside 1..{n}")
        mask |= 1 << (v - 1)
    return mask


@dataclass(frozen=True)
class VertexSet:
    """Subset of the vertex universe {1, ..., n}, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"universe size {self.n} outside 0..{MAX_VERTICES}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("membership mask has bits outside the universe")

    @classmethod
    def of(cls, labels, n: int) -> "VertexSet":
        return cls(_mask_of(labels, n), n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def members(self) -> tuple[int, ...]:
        return _mask_members(self.bits)

    def _check_universe(self, other: "VertexSet"):
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __iter__(self):
        return iter(self.members())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, label: int) -> bool:
        return 1 <= label <= self.n and self.bits >> (label - 1) & 1 == 1

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self) -> "VertexSet":
        return VertexSet(self.bits ^ ((1 << self.n) - 1), self.n)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members()) + "}"


def _as_mask(region, n: int) -> int:
    """Accept a VertexSet or any iterable of labels."""
    if isinstance(region, VertexSet):
        if region.n != n:
            raise ValueError(f"universe mismatch: {region.n} vs {n}")
        return region.bits
    return _mask_of(region, n)


def _frontier_expand(adj: tuple[int, ...], frontier: int) -> int:
    nxt = 0
    while frontier:
        low = frontier & -frontier
        nxt |= adj[low.bit_length() - 1]
        frontier ^= low
    return nxt


def _reach(adj: tuple[int, ...], start_bit: int, allowed: int) -> tuple[int, int]:
    """BFS from ``start_bit`` inside ``allowed``: (eccentricity, reached mask)."""
    seen = frontier = start_bit
    depth = 0
    while True:
        nxt = _frontier_expand(adj, frontier) & allowed & ~seen
        if not nxt:
            return depth, seen
        seen |= nxt
        frontier = nxt
        depth += 1


class Graph:
    """Simple undirected graph on the vertex set {1, ..., n}.

    Adjacency is a tuple of bitmasks; row i-1 holds the neighbors of
    vertex i.  No self-loops, symmetric by construction.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adjacency):
        adjacency = tuple(adjacency)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adjacency) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adjacency)}")
        full = (1 << n) - 1
        for i, row in enumerate(adjacency):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {i + 1} leaves the universe")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
        for i in range(n):
            for j in _mask_members(adjacency[i]):
                if adjacency[j - 1] >> i & 1 == 0:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", adjacency)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(cls, n: int, edges) -> "Graph":
        """Build from unordered pairs; duplicates collapse, self-loops are errors."""
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) has a label outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, adj)

    # -- basic views ----------------------------------------------------

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self._adj[v - 1], self.n)

    def closed_neighborhood(self, v: int) -> VertexSet:
        """The vertex together with all of its neighbors."""
        self._check_vertex(v)
        return VertexSet(self._adj[v - 1] | _bit(v), self.n)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v - 1].bit_count()

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(self.n):
            row = self._adj[i] >> (i + 1)
            for j in _mask_members(row):
                out.append((i + 1, i + 1 + j))
        return tuple(out)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return self._adj[u - 1] >> (v - 1) & 1 == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    # -- metric ----------------------------------------------------------

    def distance(self, u: int, v: int):
        """Shortest-path length between u and v; INFINITE when no path exists."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        full = (1 << self.n) - 1
        target = _bit(v)
        seen = frontier = _bit(u)
        depth = 0
        while frontier:
            nxt = _frontier_expand(self._adj, frontier) & full & ~seen
            depth += 1
            if nxt & target:
                return depth
            seen |= nxt
            frontier = nxt
        return INFINITE

    def eccentricity(self, v: int):
        self._check_vertex(v)
        full = (1 << self.n) - 1
        depth, reached = _reach(self._adj, _bit(v), full)
        return depth if reached == full else INFINITE

    def diameter(self):
        """Largest pairwise distance; 0 for a single vertex, INFINITE if disconnected."""
        if self.n == 1:
            return 0
        full = (1 << self.n) - 1
        _, reached = _reach(self._adj, 1, full)
        if reached != full:
            return INFINITE
        return max(_reach(self._adj, 1 << i, full)[0] for i in range(self.n))

    def is_connected(self) -> bool:
        full = (1 << self.n) - 1
        return _reach(self._adj, 1, full)[1] == full

    def contains_cycle(self) -> bool:
        """True iff some connected component has at least as many edges as vertices."""
        full = (1 << self.n) - 1
        remaining = full
        while remaining:
            start = remaining & -remaining
            _, comp = _reach(self._adj, start, remaining)
            comp_edges = sum((self._adj[v - 1] & comp).bit_count() for v in _mask_members(comp)) // 2
            if comp_edges >= comp.bit_count():
                return True
            remaining &= ~comp
        return False

    # -- subgraphs ---------------------------------------------------------

    def delete_vertex(self, v: int) -> tuple["Graph", tuple[int, ...]]:
        """Remove a vertex and its edges.

        Returns the reduced graph together with the original label of each
        new vertex, so results computed downstream can be reported in the
        labels of the starting graph.
        """
        self._check_vertex(v)
        if self.n == 1:
            raise ValueError("cannot delete the only vertex")
        keep = tuple(i for i in range(self.n) if i != v - 1)
        return self._restrict(keep)

    def induced_subgraph(self, region) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced on a nonempty vertex set, with the retained label map."""
        mask = _as_mask(region, self.n)
        if mask == 0:
            raise ValueError("induced subgraph needs a nonempty vertex set")
        keep = tuple(v - 1 for v in _mask_members(mask))
        return self._restrict(keep)

    def _restrict(self, keep: tuple[int, ...]) -> tuple["Graph", tuple[int, ...]]:
        index = {old: new for new, old in enumerate(keep)}
        adj = []
        for old in keep:
            row = 0
            rest = self._adj[old]
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if j in index:
                    row |= 1 << index[j]
                rest ^= low
            adj.append(row)
        labels = tuple(old + 1 for old in keep)
        return Graph(len(keep), adj), labels

    # -- criticality -------------------------------------------------------

    def is_vertex_diameter_critical(self, d: int) -> bool:
        """diameter equals d and deleting any vertex pushes it above d.

        Disconnecting the graph counts as pushing the diameter above d.
        Requires a connected graph on at least two vertices.
        """
        if self.n < 2 or not self.is_connected():
            raise ValueError("criticality is defined for connected graphs on >= 2 vertices")
        if self.diameter() != d:
            return False
        full = (1 << self.n) - 1
        for x in range(self.n):
            allowed = full ^ (1 << x)
            start = allowed & -allowed
            _, reached = _reach(self._adj, start, allowed)
            if reached != allowed:
                continue  # deletion disconnects: diameter is INFINITE
            worst = 0
            for v in _mask_members(allowed):
                depth, _ = _reach(self._adj, 1 << (v - 1), allowed)
                if depth > worst:
                    worst = depth
                    if worst > d:
                        break
            if worst <= d:
                return False
        return True


# -- generators -------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return Graph.from_edge_list(n, itertools.combinations(range(1, n + 1), 2))


def circulant(n: int, strides) -> Graph:
    """Vertices 1..n; i and j adjacent when their circular distance lies in ``strides``."""
    if n < 3:
        raise ValueError("a circulant graph needs at least 3 vertices")
    strides = sorted(set(strides))
    for s in strides:
        if not 1 <= s <= n // 2:
            raise ValueError(f"stride {s} outside 1..{n // 2}")
    edges = []
    for i in range(n):
        for s in strides:
            edges.append((i + 1, (i + s) % n + 1))
    return Graph.from_edge_list(n, edges)


def kneser_vertex_subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """The k-subsets of {1..n} in colexicographic order.

    This is the vertex order used by :func:`kneser`; vertex v corresponds
    to the v-th subset, so reports can name vertices by their subsets.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    combos = sorted(itertools.combinations(range(1, n + 1), k), key=lambda c: c[::-1])
    return tuple(combos)


def kneser(n: int, k: int) -> Graph:
    """Graph on the k-subsets of {1..n}, adjacent exactly when disjoint."""
    subsets = kneser_vertex_subsets(n, k)
    masks = [_mask_of(s, n) for s in subsets]
    m = len(masks)
    if m > MAX_VERTICES:
        raise ValueError(f"kneser({n},{k}) has {m} vertices, above the cap {MAX_VERTICES}")
    edges = [(i + 1, j + 1)
             for i in range(m) for j in range(i + 1, m)
             if masks[i] & masks[j] == 0]
    return Graph.from_edge_list(m, edges)


def connected_graphs(n: int):
    """Yield every labeled connected graph on {1..n}, in adjacency-mask order.

    The mask enumerates the pairs (1,2),(1,3),...,(n-1,n); bit t of the
    mask switches the t-th pair on.  Intended for exhaustive desk-scale
    sweeps (n <= 7 or so).
    """
    pairs = list(itertools.combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rest ^= low
        if _reach(tuple(adj), 1, full)[1] == full:
            yield Graph(n, adj)


# -- text format --------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse the plain text format: a "n m" header, then m lines "u v".

    Labels are 1-based; blank lines and '#' comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ValueError("empty graph file")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected integers in header 'n m'") from None
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected an edge 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integer labels") from None
        edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def format_graph_text(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
