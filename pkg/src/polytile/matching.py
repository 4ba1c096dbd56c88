"""Maximum-cardinality bipartite matching on cell graphs.

The backend is a Hopcroft-Karp style layered augmenting-path search with
unit capacities.  Both BFS and DFS phases are iterative: augmenting paths
in contracted pipe graphs can be much longer than Python's recursion
limit allows.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Hashable, Iterable, List, Tuple

INF = float("inf")


class BipartiteGraph:
    """Bipartite graph given as left-vertex adjacency lists.

    For cell graphs the left class is the cells with (i + j) even; the
    constructor only stores what it is given and never checks colors, so
    generic test graphs can use it too.
    """

    def __init__(self, adj: Dict[Hashable, List[Hashable]],
                 right: Iterable[Hashable] = ()):
        self.adj = adj
        right_set = set(right)
        for nbrs in adj.values():
            right_set.update(nbrs)
        self.left = sorted(adj)
        self.right = sorted(right_set)

    @property
    def vertex_count(self) -> int:
        return len(self.left) + len(self.right)

    @staticmethod
    def from_cells(cells: Iterable[tuple],
                   extra_edges: Iterable[tuple] = ()) -> "BipartiteGraph":
        """Build the cell-adjacency graph; extra_edges supplies additional
        cell pairs (used for pipe-contraction edges)."""
        cset = set(cells)
        adj: Dict[tuple, list] = {}
        right = []
        for c in cset:
            if (c[0] + c[1]) % 2 == 0:
                adj[c] = []
            else:
                right.append(c)
        for i, j in sorted(adj):
            for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if n in cset:
                    adj[(i, j)].append(n)
        for a, b in extra_edges:
            if (a[0] + a[1]) % 2 != 0:
                a, b = b, a
            if (a[0] + a[1]) % 2 == (b[0] + b[1]) % 2:
                raise ValueError(f"contraction edge {a}-{b} is not bipartite")
            adj[a].append(b)
        for nbrs in adj.values():
            nbrs.sort()
        return BipartiteGraph(adj, right)


def max_matching(g: BipartiteGraph) -> Dict[Hashable, Hashable]:
    """Maximum matching as a left -> right dict, deterministic for a fixed
    vertex ordering."""
    pair_l: Dict = {}
    pair_r: Dict = {}
    dist: Dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in g.left:
            if u not in pair_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in g.adj[u]:
                w = pair_r.get(v)
                if w is None:
                    found = min(found, dist[u] + 1)
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found is not INF

    def dfs(root) -> bool:
        # iterative alternating DFS along the BFS layering; each frame
        # keeps its own layer because dist[u] is overwritten with INF the
        # moment u enters the stack (to prevent revisits)
        dist[root] = INF
        stack: List[Tuple] = [(root, iter(g.adj[root]), 0)]
        trail: List[Tuple] = []  # (left, right) choices on the stack path
        while stack:
            u, it, layer = stack[-1]
            advanced = False
            for v in it:
                w = pair_r.get(v)
                if w is None:
                    trail.append((u, v))
                    for a, b in trail:
                        pair_l[a] = b
                        pair_r[b] = a
                    return True
                if dist.get(w) == layer + 1:
                    dist[w] = INF
                    trail.append((u, v))
                    stack.append((w, iter(g.adj[w]), layer + 1))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if trail and stack:
                    trail.pop()
        return False

    while bfs():
        for u in g.left:
            if u not in pair_l:
                dfs(u)
    return pair_l


def matching_deficiency(g: BipartiteGraph) -> int:
    """Number of vertices left unmatched by a maximum matching."""
    return g.vertex_count - 2 * len(max_matching(g))


def is_maximum_matching(g: BipartiteGraph, pair_l: Dict) -> bool:
    """Berge certificate: no augmenting path from any unmatched left vertex
    under the given matching."""
    pair_r = {v: u for u, v in pair_l.items()}
    if len(pair_r) != len(pair_l):
        return False  # not a matching at all
    for u, v in pair_l.items():
        if v not in g.adj[u]:
            return False
    frontier = [u for u in g.left if u not in pair_l]
    seen_r = set()
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if v in seen_r:
                    continue
                seen_r.add(v)
                w = pair_r.get(v)
                if w is None:
                    return False  # augmenting path found
                nxt.append(w)
        frontier = nxt
    return True


def brute_force_matching_size(edges: List[Tuple], limit: int = 24) -> int:
    """Exponential maximum matching for cross-checking tiny graphs.

    Branches on the smallest live vertex (leave it unmatched, or match it
    to each neighbour) with memoization on the live vertex set."""
    vertices = sorted({v for e in edges for v in e})
    if len(vertices) > limit:
        raise ValueError(f"brute force limited to {limit} vertices")
    index = {v: i for i, v in enumerate(vertices)}
    nbrs: List[List[int]] = [[] for _ in vertices]
    for a, b in edges:
        ia, ib = index[a], index[b]
        if ib not in nbrs[ia]:
            nbrs[ia].append(ib)
            nbrs[ib].append(ia)
    memo: Dict[int, int] = {}

    def rec(live: int) -> int:
        if live == 0:
            return 0
        got = memo.get(live)
        if got is not None:
            return got
        v = (live & -live).bit_length() - 1
        rest = live & ~(1 << v)
        best = rec(rest)
        for u in nbrs[v]:
            if rest >> u & 1:
                best = max(best, 1 + rec(rest & ~(1 << u)))
        memo[live] = best
        return best

    return rec((1 << len(vertices)) - 1)
