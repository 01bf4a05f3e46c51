"""Undirected graphs on vertices 1..n.

Builders for the two structured families used throughout (paths and
perfect matchings), linear-time recognizers for both, induced subgraphs,
a small-graph isomorphism test, and edge-list / DOT serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapabilityError, ParseError

# Backtracking isomorphism is only offered at desk scale; larger targets
# must be certified structurally (is_path / is_matching).
ISOMORPHISM_VERTEX_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    """Loopless undirected graph; edges stored as (u, v) pairs with u < v."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.n:
                raise ValueError(f"edge {tuple(e)} has an endpoint outside 1..{self.n}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def _adjacency(self) -> tuple[int, ...]:
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor bitmasks indexed by vertex: bit v of masks[u] marks edge u-v."""
        return self._adjacency

    def degree(self, v: int) -> int:
        return self._adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def path_graph(n: int) -> Graph:
    """P_n: vertices 1..n in path order, edges {i, i+1}."""
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def matching_graph(r: int) -> Graph:
    """rK_2: r disjoint edges {2i-1, 2i} on vertices 1..2r."""
    if r < 1:
        raise ValueError(f"matching needs at least one edge, got r={r}")
    return Graph(2 * r, frozenset((2 * i - 1, 2 * i) for i in range(1, r + 1)))


def is_path(g: Graph) -> tuple[int, ...] | None:
    """Path ordering of g's vertices, or None if g is not a path.

    Deterministic: the walk starts at the smaller-labelled endpoint, so a
    path graph always yields the same ordering (of the two possible).
    """
    if g.n == 0:
        return None
    if g.n == 1:
        return (1,)
    if len(g.edges) != g.n - 1:
        return None
    masks = g.adjacency_masks()
    ends = []
    for v in range(1, g.n + 1):
        d = masks[v].bit_count()
        if d > 2:
            return None
        if d == 1:
            ends.append(v)
    if len(ends) != 2:
        return None
    order = [ends[0]]
    seen = 1 << ends[0]
    prev, cur = 0, ends[0]
    for _ in range(g.n - 1):
        cont = masks[cur] & ~(1 << prev) if prev else masks[cur]
        if cont == 0 or cont & (cont - 1):
            return None
        nxt = cont.bit_length() - 1
        if seen >> nxt & 1:
            return None
        order.append(nxt)
        seen |= 1 << nxt
        prev, cur = cur, nxt
    return tuple(order)


def is_matching(g: Graph) -> bool:
    """True iff every vertex has degree exactly 1 (g is a perfect matching)."""
    masks = g.adjacency_masks()
    return all(masks[v].bit_count() == 1 for v in range(1, g.n + 1))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by the given vertex set, relabelled 1..|S| by rank."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    rank = {v: i + 1 for i, v in enumerate(vs)}
    keep = set(vs)
    edges = frozenset(
        (rank[u], rank[v]) for u, v in g.edges if u in keep and v in keep
    )
    return Graph(len(vs), edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test, bounded at ISOMORPHISM_VERTEX_LIMIT."""
    for x in (g, h):
        if x.n > ISOMORPHISM_VERTEX_LIMIT:
            raise CapabilityError(
                f"isomorphism testing is bounded at {ISOMORPHISM_VERTEX_LIMIT} "
                f"vertices (got {x.n}); certify structured targets with "
                f"is_path or is_matching instead"
            )
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    n = g.n
    gm, hm = g.adjacency_masks(), h.adjacency_masks()
    gdeg = [gm[v].bit_count() for v in range(n + 1)]
    hdeg = [hm[v].bit_count() for v in range(n + 1)]
    if sorted(gdeg[1:]) != sorted(hdeg[1:]):
        return False
    # Most-constrained-first: high degree vertices get mapped early.
    order = sorted(range(1, n + 1), key=lambda v: (-gdeg[v], v))
    mapping = [0] * (n + 1)

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        row = gm[v]
        for w in range(1, n + 1):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for e in range(depth):
                u = order[e]
                if (row >> u & 1) != (hm[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                if extend(depth + 1, used | (1 << w)):
                    return True
        return False

    return extend(0, 0)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m "u v" lines; errors carry line numbers."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input, expected 'n m' header", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("expected header 'n m'", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header fields must be integers", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", line=1)
    if len(lines) - 1 != m:
        raise ParseError(
            f"expected {m} edge lines, found {len(lines) - 1}",
            line=min(len(lines), m + 1) + 1,
        )
    edges: set[tuple[int, int]] = set()
    for idx, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError("expected edge line 'u v'", line=idx)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line=idx) from None
        if u == v:
            raise ParseError(f"loop at vertex {u} not allowed", line=idx)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"endpoint outside 1..{n}", line=idx)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", line=idx)
        edges.add(key)
    return Graph(n, frozenset(edges))


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; edges emitted in sorted order."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines)


def to_dot(g: Graph) -> str:
    lines = ["graph {"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines)
