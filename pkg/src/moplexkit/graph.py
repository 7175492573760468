"""Immutable simple graphs over dense integer vertex ids.

Vertices are always exactly 0..n-1.  Internally every vertex stores its
neighbourhood as an int bitmask, which is what the enumeration kernels
operate on; the public API speaks frozensets.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EdgeListParseError, GraphInputError

VertexSet = frozenset  # subset of {0..n-1}; exact set algebra via frozenset


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> VertexSet:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite, undirected, simple; immutable after construction."""

    __slots__ = ("n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphInputError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._hash = hash((n, self._adj))

    @classmethod
    def from_masks(cls, n: int, adj: Iterable[int]) -> "Graph":
        """Trusted fast path for generators: adj[v] is v's neighbour mask."""
        g = cls.__new__(cls)
        g.n = n
        g._adj = tuple(adj)
        g._hash = hash((n, g._adj))
        return g

    # -- basic queries ------------------------------------------------

    def vertices(self) -> VertexSet:
        return frozenset(range(self.n))

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self._adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbour bitmasks, the representation the kernels consume."""
        return self._adj

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphInputError(f"vertex id {v} out of range 0..{self.n - 1}")

    def _check_subset(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            if not (0 <= v < self.n):
                raise GraphInputError(f"vertex id {v} out of range 0..{self.n - 1}")
            m |= 1 << v
        return m

    # -- equality is structural --------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- neighbourhoods ---------------------------------------------------


def neighbors(g: Graph, v: int) -> VertexSet:
    """Open neighbourhood N(v)."""
    return set_of(g.neighbor_mask(v))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return set_of(g.neighbor_mask(v) | 1 << v)


def closed_neighborhood_of_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """N[X]: union of closed neighbourhoods over X."""
    xmask = g._check_subset(vertices)
    m = xmask
    for v in iter_bits(xmask):
        m |= g._adj[v]
    return set_of(m)


def open_neighborhood_of_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """N(X) = N[X] without X itself."""
    xmask = g._check_subset(vertices)
    m = 0
    for v in iter_bits(xmask):
        m |= g._adj[v]
    return set_of(m & ~xmask)


# -- components and induced subgraphs ---------------------------------


def components(g: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    """Connected components of the subgraph induced by `within`.

    Sorted by minimum vertex id.
    """
    from . import kernels

    if within is None:
        wmask = g.vertex_mask()
    else:
        wmask = g._check_subset(within)
    return [set_of(c) for c in kernels.components(g._adj, g.n, wmask)]


def is_connected(g: Graph) -> bool:
    from . import kernels

    return kernels.is_connected(g._adj, g.n)


def induced_subgraph(
    g: Graph, vertices: Iterable[int]
) -> tuple[Graph, dict[int, int]]:
    """Subgraph on `vertices` with dense relabeling; returns (graph, old->new)."""
    xmask = g._check_subset(vertices)
    old = list(iter_bits(xmask))
    vmap = {o: i for i, o in enumerate(old)}
    adj = []
    for o in old:
        m = 0
        rest = g._adj[o] & xmask
        for w in iter_bits(rest):
            m |= 1 << vmap[w]
        adj.append(m)
    return Graph.from_masks(len(old), adj), vmap


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    g._check_vertex(v)
    return induced_subgraph(g, set_of(g.vertex_mask() & ~(1 << v)))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph.from_masks(
        g.n, [~(g._adj[v] | 1 << v) & full for v in range(g.n)]
    )


# -- predicates --------------------------------------------------------


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    xmask = g._check_subset(vertices)
    for v in iter_bits(xmask):
        if xmask & ~(g._adj[v] | 1 << v):
            return False
    return True


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    xmask = g._check_subset(vertices)
    for v in iter_bits(xmask):
        if g._adj[v] & xmask:
            return False
    return True


def is_module(g: Graph, vertices: Iterable[int]) -> bool:
    """Every outside vertex sees all of X or none of it."""
    xmask = g._check_subset(vertices)
    outside = g.vertex_mask() & ~xmask
    for v in iter_bits(outside):
        seen = g._adj[v] & xmask
        if seen and seen != xmask:
            return False
    return True


# -- edge-list text format ---------------------------------------------
#
# Canonical wire format: line 1 is "n m", then m lines "u v" with
# 0 <= u < v < n.  ASCII, newline-terminated.


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListParseError(1, "missing header line 'n m'")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError(1, "header must be two integers 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError(1, "header must be two integers 'n m'") from None
    if n < 0 or m < 0:
        raise EdgeListParseError(1, "negative counts in header")
    edges = []
    seen = set()
    lineno = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"expected 'u v', got {raw!r}") from None
        if not (0 <= u < v < n):
            raise EdgeListParseError(
                lineno, f"edge ({u}, {v}) violates 0 <= u < v < n with n={n}"
            )
        if (u, v) in seen:
            raise EdgeListParseError(lineno, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(lineno, f"header announced {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def read_edgelist(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edgelist(fh.read())


def write_edgelist(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edgelist(g))
