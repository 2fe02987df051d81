"""Exact matching invariants.

Three numbers per graph:

* ``match_number``     -- maximum matching size (polynomial, blossom search)
* ``min_match_number`` -- minimum maximal matching size (NP-hard, exact
  branch and bound; a matching is maximal iff the uncovered vertices form
  an independent set)
* ``ind_match_number`` -- maximum induced matching size (NP-hard, exact
  branch and bound over edge conflict masks)

The branch-and-bound solvers are meant for desk scale (dozens of vertices
for sparse or clique-plus-pendant shapes, n <= ~16 in the worst case).
Certificate variants return the lexicographically first optimal matching
under the fixed (u, v)-sorted edge order, so repeated runs are identical.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import Graph, _bits, induced_subgraph


class InvariantTriple(NamedTuple):
    """(induced, minimum maximal, maximum) matching sizes of one graph."""

    ind_match: int
    min_match: int
    match: int


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, stored sorted."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered_mask(self) -> int:
        mask = 0
        for u, v in self.edges:
            mask |= (1 << u) | (1 << v)
        return mask


def _normalize_edges(G: Graph, M: Iterable[tuple[int, int]] | Matching) -> list[tuple[int, int]]:
    if isinstance(M, Matching):
        pairs = list(M.edges)
    else:
        pairs = [tuple(sorted(e)) for e in M]
    seen = set()
    out = []
    for u, v in pairs:
        if not G.has_edge(u, v):
            raise ValueError(f"pair ({u}, {v}) is not an edge of the graph")
        if (u, v) not in seen:
            seen.add((u, v))
            out.append((u, v))
    return sorted(out)


def is_matching(G: Graph, M: Iterable[tuple[int, int]] | Matching) -> bool:
    """True iff the edges are pairwise vertex-disjoint."""
    covered = 0
    for u, v in _normalize_edges(G, M):
        pair = (1 << u) | (1 << v)
        if covered & pair:
            return False
        covered |= pair
    return True


def is_maximal_matching(G: Graph, M: Iterable[tuple[int, int]] | Matching) -> bool:
    """True iff M is a matching and no edge of G can be added to it.

    Equivalently: the uncovered vertices form an independent set.
    """
    edges = _normalize_edges(G, M)
    if not is_matching(G, edges):
        raise ValueError("edge set is not a matching")
    covered = 0
    for u, v in edges:
        covered |= (1 << u) | (1 << v)
    free = G.vertex_mask & ~covered
    return all(not G.adj[v] & free for v in _bits(free))


def is_induced_matching(G: Graph, M: Iterable[tuple[int, int]] | Matching) -> bool:
    """True iff M is a matching and no single edge of G meets two of its edges."""
    edges = _normalize_edges(G, M)
    if not is_matching(G, edges):
        raise ValueError("edge set is not a matching")
    for i, (a, b) in enumerate(edges):
        reach = G.adj[a] | G.adj[b] | (1 << a) | (1 << b)
        for c, d in edges[i + 1:]:
            if reach >> c & 1 or reach >> d & 1:
                return False
    return True


# ---------------------------------------------------------------------------
# maximum matching (blossom augmentation)
# ---------------------------------------------------------------------------

def _blossom_matching(n: int, adj: tuple[int, ...]) -> list[int]:
    """Maximum matching as a mate array; standard contraction algorithm."""
    nbrs = [list(_bits(adj[v])) for v in range(n)]
    mate = [-1] * n
    for v in range(n):  # greedy seed
        if mate[v] == -1:
            for u in nbrs[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    def find_augmenting(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])

        def lowest_common_base(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, flag: list[bool]) -> None:
            while base[v] != b:
                flag[base[v]] = True
                flag[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle: contract the blossom down to its base
                    cur = lowest_common_base(v, to)
                    flag = [False] * n
                    mark_path(v, cur, to, flag)
                    mark_path(to, cur, v, flag)
                    for i in range(n):
                        if flag[base[i]]:
                            base[i] = cur
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        while to != -1:  # augment along the alternating path
                            prev = parent[to]
                            nxt = mate[prev]
                            mate[prev] = to
                            mate[to] = prev
                            to = nxt
                        return True
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            find_augmenting(v)
    return mate


def match_number(G: Graph) -> int:
    """Size of a maximum matching."""
    mate = _blossom_matching(G.n, G.adj)
    return sum(1 for v in range(G.n) if mate[v] != -1) // 2


# ---------------------------------------------------------------------------
# minimum maximal matching
# ---------------------------------------------------------------------------

def _greedy_maximal_size(adj: tuple[int, ...], vmask: int) -> int:
    """Size of the first-fit maximal matching inside the induced subgraph."""
    size = 0
    rem = vmask
    while rem:
        v = (rem & -rem).bit_length() - 1
        nb = adj[v] & rem
        if nb:
            u = (nb & -nb).bit_length() - 1
            rem &= ~((1 << v) | (1 << u))
            size += 1
        else:
            rem ^= 1 << v
    return size


def _clique_cover_bound(adj: tuple[int, ...], vmask: int) -> int:
    """Lower bound on min maximal matching of the induced subgraph.

    The uncovered vertices of a maximal matching are independent, so the
    matching covers at least |V'| - alpha vertices; a greedy clique cover
    bounds alpha from above.  Tight on cliques, paths and pendant shapes.
    """
    cliques = 0
    rem = vmask
    while rem:
        v = (rem & -rem).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & rem
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= adj[u]
        rem &= ~clique
        cliques += 1
    return (vmask.bit_count() - cliques + 1) // 2


def min_match_number(G: Graph) -> int:
    """Size of a minimum maximal matching (exact)."""
    adj = G.adj
    best = _greedy_maximal_size(adj, G.vertex_mask)

    def search(vmask: int, size: int) -> None:
        nonlocal best
        if size + _clique_cover_bound(adj, vmask) >= best:
            return
        # lowest edge of the induced subgraph, in (u, v) lexicographic order
        u = -1
        rem = vmask
        while rem:
            cand = (rem & -rem).bit_length() - 1
            if adj[cand] & vmask:
                u = cand
                break
            rem ^= 1 << cand
        if u == -1:
            best = size  # no edges left: the peeled set is maximal
            return
        nb = adj[u] & vmask
        v = (nb & -nb).bit_length() - 1
        # the edge {u, v} must be dominated by some edge meeting u or v;
        # peeling that edge's conflicts leaves exactly an induced subgraph
        for a, bmask in ((u, nb), (v, adj[v] & vmask & ~(1 << u))):
            for b in _bits(bmask):
                search(vmask & ~((1 << a) | (1 << b)), size + 1)

    search(G.vertex_mask, 0)
    return best


# ---------------------------------------------------------------------------
# maximum induced matching
# ---------------------------------------------------------------------------

def _edge_conflicts(G: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges in fixed order plus, per edge, the mask of incompatible edges.

    Two edges are incompatible for an induced matching when they share a
    vertex or some edge of G joins their endpoints.  Each conflict mask
    includes the edge itself.
    """
    edges = G.edges()
    m = len(edges)
    conflicts = [1 << i for i in range(m)]
    for i in range(m):
        a, b = edges[i]
        reach = G.adj[a] | G.adj[b] | (1 << a) | (1 << b)
        for j in range(i + 1, m):
            c, d = edges[j]
            if reach >> c & 1 or reach >> d & 1:
                conflicts[i] |= 1 << j
                conflicts[j] |= 1 << i
    return edges, conflicts


def _max_independent_edges(conflicts: list[int], cand: int, base: int = 0) -> int:
    """Max independent set size in the edge conflict structure, from cand."""
    best = base

    def search(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        rem = cand
        while rem:
            if size + rem.bit_count() <= best:
                return
            low = rem & -rem
            e = low.bit_length() - 1
            rem ^= low
            child = cand & ~conflicts[e] & ~(low | (low - 1))
            if size + 1 + child.bit_count() > best:
                search(child, size + 1)

    search(cand, base)
    return best


def ind_match_number(G: Graph) -> int:
    """Size of a maximum induced matching (exact)."""
    edges, conflicts = _edge_conflicts(G)
    if not edges:
        return 0
    return _max_independent_edges(conflicts, (1 << len(edges)) - 1)


def invariant_triple(G: Graph) -> InvariantTriple:
    """All three matching invariants of one graph."""
    return InvariantTriple(
        ind_match=ind_match_number(G),
        min_match=min_match_number(G),
        match=match_number(G),
    )


# ---------------------------------------------------------------------------
# lexicographically first optimal certificates
# ---------------------------------------------------------------------------

def max_matching(G: Graph) -> Matching:
    """Lexicographically first maximum matching under the sorted edge order."""
    target = match_number(G)
    chosen: list[tuple[int, int]] = []
    covered = 0
    start = 0
    edges = G.edges()
    while len(chosen) < target:
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            pair = (1 << u) | (1 << v)
            if covered & pair:
                continue
            rest = [w for w in range(G.n) if not (covered | pair) >> w & 1]
            if match_number(induced_subgraph(G, rest)) == target - len(chosen) - 1:
                chosen.append((u, v))
                covered |= pair
                start = idx + 1
                break
        else:  # pragma: no cover - target is always reachable
            raise RuntimeError("internal error: certificate search failed")
    return Matching(tuple(chosen))


def min_maximal_matching(G: Graph) -> Matching:
    """Lexicographically first minimum maximal matching."""
    target = min_match_number(G)
    chosen: list[tuple[int, int]] = []
    vmask = G.vertex_mask
    start = 0
    edges = G.edges()
    while len(chosen) < target:
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            pair = (1 << u) | (1 << v)
            if pair & ~vmask:
                continue
            rest = induced_subgraph(G, _bits(vmask & ~pair))
            if min_match_number(rest) == target - len(chosen) - 1:
                chosen.append((u, v))
                vmask &= ~pair
                start = idx + 1
                break
        else:  # pragma: no cover
            raise RuntimeError("internal error: certificate search failed")
    return Matching(tuple(chosen))


def max_induced_matching(G: Graph) -> Matching:
    """Lexicographically first maximum induced matching."""
    edges, conflicts = _edge_conflicts(G)
    target = _max_independent_edges(conflicts, (1 << len(edges)) - 1) if edges else 0
    chosen: list[int] = []
    cand = (1 << len(edges)) - 1
    start = 0
    while len(chosen) < target:
        for idx in range(start, len(edges)):
            if not cand >> idx & 1:
                continue
            child = cand & ~conflicts[idx] & ~((1 << (idx + 1)) - 1)
            if len(chosen) + 1 + _max_independent_edges(conflicts, child) == target:
                chosen.append(idx)
                cand = child
                start = idx + 1
                break
        else:  # pragma: no cover
            raise RuntimeError("internal error: certificate search failed")
    return Matching(tuple(edges[i] for i in chosen))
