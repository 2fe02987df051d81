"""Immutable bitset graphs on at most 64 vertices.

Vertices are integers 0..n-1.  Adjacency is stored as one Python int per
vertex, bit u of ``adj[v]`` meaning the edge {v, u} is present.  Vertex
subsets passed to the functions below are iterables of vertex indices;
internally everything is a bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for {n}-vertex graph")
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitmask adjacency rows.

    ``labels``, when present, carries one short tag per vertex (used by the
    family builders to mark construction blocks).
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions out-of-range vertices")
            if row >> v & 1:
                raise ValueError(f"loop edge at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbor_mask(self, v: int) -> int:
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                   labels: Iterable[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    lab = tuple(labels) if labels is not None else None
    return Graph(n, tuple(rows), lab)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Complete bipartite graph; side A is vertices 0..a-1."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least 1 vertex")
    if a + b > MAX_VERTICES:
        raise ValueError(f"vertex count {a + b} exceeds {MAX_VERTICES}")
    amask = (1 << a) - 1
    bmask = ((1 << (a + b)) - 1) ^ amask
    rows = [bmask] * a + [amask] * b
    return Graph(a + b, tuple(rows))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with the center first: vertex 0 joined to 1..leaves."""
    if leaves < 1:
        raise ValueError("star needs at least 1 leaf")
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def standard_graph(kind: str, *params: int) -> Graph:
    """Dispatch for the stock constructions used in tests and scripts."""
    builders = {
        "complete": (complete_graph, 1),
        "complete_bipartite": (complete_bipartite_graph, 2),
        "path": (path_graph, 1),
        "star": (star_graph, 1),
    }
    if kind not in builders:
        raise ValueError(f"unknown standard graph kind {kind!r}")
    fn, arity = builders[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled to 0..k-1 preserving order."""
    mask = _mask_of(vertices, G.n)
    keep = list(_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _bits(G.adj[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    lab = tuple(G.labels[v] for v in keep) if G.labels is not None else None
    return Graph(len(keep), tuple(rows), lab)


def delete_vertex(G: Graph, v: int) -> Graph:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(G, [u for u in range(G.n) if u != v])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Disjoint union, H relabeled to start at G.n."""
    n = G.n + H.n
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
    rows = list(G.adj) + [row << G.n for row in H.adj]
    lab = None
    if G.labels is not None and H.labels is not None:
        lab = G.labels + H.labels
    return Graph(n, tuple(rows), lab)


def s_suspension(G: Graph, independent_vertices: Iterable[int]) -> Graph:
    """Add one new vertex adjacent to every vertex outside the given set.

    The given set must be independent in G.  The new vertex gets index G.n.
    """
    smask = _mask_of(independent_vertices, G.n)
    if not is_independent_set(G, _bits(smask)):
        raise ValueError("suspension set must be independent")
    if G.n + 1 > MAX_VERTICES:
        raise ValueError(f"vertex count {G.n + 1} exceeds {MAX_VERTICES}")
    wrow = G.vertex_mask & ~smask
    rows = [G.adj[v] | ((wrow >> v & 1) << G.n) for v in range(G.n)]
    rows.append(wrow)
    lab = G.labels + ("w",) if G.labels is not None else None
    return Graph(G.n + 1, tuple(rows), lab)


def is_independent_set(G: Graph, vertices: Iterable[int]) -> bool:
    mask = _mask_of(vertices, G.n)
    return all(not G.adj[v] & mask for v in _bits(mask))


def is_connected(G: Graph) -> bool:
    """Connectivity; graphs with fewer than 2 vertices count as connected."""
    if G.n <= 1:
        return True
    reach = 1
    while True:
        grown = reach
        for v in _bits(reach):
            grown |= G.adj[v]
        if grown == reach:
            break
        reach = grown
    return reach == G.vertex_mask


def connected_components(G: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        reach = 1 << v
        while True:
            grown = reach
            for u in _bits(reach):
                grown |= G.adj[u]
            if grown == reach:
                break
            reach = grown
        comps.append(reach)
        seen |= reach
    return comps


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    rows = tuple((full ^ G.adj[v]) & ~(1 << v) for v in range(G.n))
    return Graph(G.n, rows, G.labels)


def is_chordal(G: Graph) -> bool:
    """Chordality via maximum cardinality search + elimination-order check."""
    n = G.n
    if n <= 2:
        return True
    weight = [0] * n
    numbered = 0
    order = []  # filled in reverse elimination order
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        numbered |= 1 << best
        order.append(best)
        for u in _bits(G.adj[best] & ~numbered):
            weight[u] += 1
    order.reverse()  # now a candidate perfect elimination order
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    later = [0] * n  # mask of neighbors eliminated after v
    for i, v in enumerate(order):
        for u in _bits(G.adj[v]):
            if pos[u] > i:
                later[v] |= 1 << u
    for v in order:
        rn = later[v]
        if not rn:
            continue
        parent = min(_bits(rn), key=lambda u: pos[u])
        if rn & ~(1 << parent) & ~later[parent]:
            return False
    return True


def are_isomorphic(G: Graph, H: Graph) -> bool:
    """Backtracking isomorphism test with degree pruning; meant for n <= 10."""
    if G.n != H.n or G.edge_count != H.edge_count:
        return False
    n = G.n
    if sorted(G.degree(v) for v in range(n)) != sorted(H.degree(v) for v in range(n)):
        return False
    gorder = sorted(range(n), key=G.degree, reverse=True)
    mapping = [-1] * n  # gorder position -> H vertex
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = gorder[i]
        vdeg = G.degree(v)
        # neighbors of v already placed, as an H-side mask
        placed_nbrs = 0
        for j in range(i):
            if G.has_edge(v, gorder[j]):
                placed_nbrs |= 1 << mapping[j]
        for h in range(n):
            if used >> h & 1 or H.degree(h) != vdeg:
                continue
            if H.adj[h] & used != placed_nbrs:
                continue
            mapping[i] = h
            used |= 1 << h
            if extend(i + 1):
                return True
            used ^= 1 << h
            mapping[i] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# graph6 text format
# ---------------------------------------------------------------------------

def graph6_encode(G: Graph) -> str:
    """Encode in graph6: size header, then upper-triangle bits column-major."""
    n = G.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(G.adj[row] >> col & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(map(chr, head + body))


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string; strict about length and padding bits."""
    data = [ord(c) - 63 for c in text]
    if any(v < 0 or v > 63 for v in data):
        raise ValueError("invalid character in graph6 string")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise ValueError("graph6 size exceeds 64 vertices")
        if len(data) < 4:
            raise ValueError("truncated graph6 size header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 size {n} exceeds {MAX_VERTICES} vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} chars, expected {need}")
    bits = []
    for val in body:
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 string")
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    return Graph(n, tuple(rows))


def to_dot(G: Graph, name: str = "G") -> str:
    """GraphViz text; vertex labels include block tags when present."""
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        if G.labels is not None:
            lines.append(f'  {v} [label="{G.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
