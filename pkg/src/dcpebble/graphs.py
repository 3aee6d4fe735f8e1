"""Simple undirected connected graphs with precomputed metric data.

Vertices are dense integer indices 0..n-1.  Every graph is validated at
construction: simple, loop-free, connected.  The all-pairs distance matrix
and the diameter are computed eagerly because the graphs handled here are
tiny and metric queries are hot.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph input (bad vertex, malformed encoding, ...)."""


class DisconnectedGraphError(GraphError):
    """Disconnected input.  Pebbling values of disconnected graphs are
    undefined here: a component that can never receive a pebble makes
    every covering goal unreachable."""


class Graph6FormatError(GraphError):
    """Malformed graph6 text."""


class Graph:
    """Immutable simple connected graph.

    Attributes:
        n: number of vertices.
        edges: frozenset of (u, v) pairs with u < v.
        adj: per-vertex sorted neighbor tuples.
        dist: all-pairs hop distances, ``dist[u][v]``.
        diameter: max entry of ``dist``.
    """

    __slots__ = ("n", "edges", "adj", "adj_sets", "dist", "diameter",
                 "closed_masks", "full_mask", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise GraphError(f"graph order must be >= 1, got {n}")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)

        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self.adj_sets = tuple(frozenset(a) for a in self.adj)

        self.dist = tuple(self._bfs(v) for v in range(n))
        self.diameter = max(max(row) for row in self.dist)

        # closed_masks[v] covers v and its neighbors; used by hot
        # domination checks on support bitmasks.
        masks = []
        for v in range(n):
            m = 1 << v
            for w in self.adj[v]:
                m |= 1 << w
            masks.append(m)
        self.closed_masks = tuple(masks)
        self.full_mask = (1 << n) - 1
        self._hash = hash((n, self.edges))

    def _bfs(self, source: int) -> tuple[int, ...]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if any(d < 0 for d in dist):
            raise DisconnectedGraphError(
                f"graph on {self.n} vertices is not connected")
        return tuple(dist)

    def is_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min(len(a) for a in self.adj)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)}, diameter={self.diameter})"


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph; duplicate edges collapse, disconnected input
    and out-of-range or loop edges are rejected."""
    return Graph(order, edges)


# ---------------------------------------------------------------------------
# domination predicates
# ---------------------------------------------------------------------------

def support_mask(counts: Sequence[int]) -> int:
    mask = 0
    for v, c in enumerate(counts):
        if c > 0:
            mask |= 1 << v
    return mask


def dominated_mask(g: Graph, covered_mask: int) -> int:
    """Bitmask of vertices covered by or adjacent to ``covered_mask``."""
    out = 0
    m = covered_mask
    while m:
        low = m & -m
        out |= g.closed_masks[low.bit_length() - 1]
        m ^= low
    return out


def dominated_vertices(g: Graph, covered: Iterable[int]) -> frozenset[int]:
    """Closed neighborhood of ``covered``: every vertex that is covered or
    adjacent to a covered vertex."""
    mask = 0
    for v in covered:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        mask |= g.closed_masks[v]
    return frozenset(v for v in range(g.n) if mask >> v & 1)


def undominated_components(g: Graph, covered: Iterable[int]) -> list[int]:
    """Orders of the connected components of the subgraph induced by the
    vertices left undominated by ``covered``.  Sorted descending; empty
    when everything is dominated."""
    cov_mask = 0
    for v in covered:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        cov_mask |= 1 << v
    return undominated_component_sizes(g, cov_mask)


def undominated_component_sizes(g: Graph, covered_mask: int) -> list[int]:
    """Bitmask variant of :func:`undominated_components` (hot path)."""
    undom = g.full_mask & ~dominated_mask(g, covered_mask)
    sizes = []
    seen = 0
    while undom & ~seen:
        rem = undom & ~seen
        start = rem & -rem
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.closed_masks[low.bit_length() - 1]
                m ^= low
            nxt &= undom & ~comp
            comp |= nxt
            frontier = nxt
        sizes.append(comp.bit_count())
        seen |= comp
    sizes.sort(reverse=True)
    return sizes


def max_undominated_component(g: Graph, covered_mask: int) -> int:
    """Largest undominated component order, 0 when fully dominated."""
    sizes = undominated_component_sizes(g, covered_mask)
    return sizes[0] if sizes else 0


# ---------------------------------------------------------------------------
# graph6 encoding (orders up to 62, which is far beyond desk scale here)
# ---------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line into a connected :class:`Graph`.

    Raises :class:`Graph6FormatError` for malformed text and
    :class:`DisconnectedGraphError` for well-formed but disconnected input.
    """
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6FormatError("empty graph6 line")
    data = [ord(ch) - 63 for ch in line]
    if any(b < 0 or b > 63 for b in data):
        raise Graph6FormatError(f"character out of graph6 range in {line!r}")
    if data[0] == 63:
        raise Graph6FormatError("graph6 orders above 62 are not supported")
    n = data[0]
    body = data[1:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6FormatError(
            f"graph6 body has {len(body)} characters, expected {expect} for order {n}")
    bits = []
    for b in body:
        for shift in range(5, -1, -1):
            bits.append(b >> shift & 1)
    if any(bits[nbits:]):
        raise Graph6FormatError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (inverse of :func:`parse_graph6`)."""
    if g.n > 62:
        raise Graph6FormatError("graph6 orders above 62 are not supported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.is_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then m lines "u v"
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln]
    if not rows:
        raise GraphError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"edge-list header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"bad edge-list header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"edge-list declares {m} edges but has {len(rows) - 1} lines")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"bad edge line {ln!r}") from exc
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# induced subgraphs (used by the subversion solver)
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``.

    Returns the subgraph (with compacted labels) and the list mapping new
    indices back to old ones.  Raises DisconnectedGraphError if the induced
    subgraph is not connected.
    """
    old = sorted(set(keep))
    if not old:
        raise GraphError("cannot induce an empty subgraph")
    pos = {v: i for i, v in enumerate(old)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(old), edges), old


def iter_graph6_lines(text: str) -> Iterator[str]:
    for ln in text.splitlines():
        ln = ln.strip()
        if ln:
            yield ln
