"""Simple undirected graphs on vertices 0..n-1 and the structural queries used
throughout the package.

A :class:`Graph` is immutable.  Build one with :meth:`Graph.from_edges`; every
other module treats graphs as read-only values.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Optional

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction (loops, parallel edges, bad vertex ids)."""


class GraphFormatError(ValueError):
    """Malformed serialized graph.  ``offset`` is the offending byte/line index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 0:
            raise GraphError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def relabel(self, perm: list[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def edge_subgraph(self, edges: Iterable[Edge]) -> tuple["Graph", list[int]]:
        """Graph induced by ``edges`` on its own vertices, compactly relabeled.

        Returns the subgraph and the map new id -> old id.
        """
        edges = [edge_key(u, v) for u, v in edges]
        old = sorted({x for e in edges for x in e})
        new = {v: i for i, v in enumerate(old)}
        return Graph.from_edges(len(old), ((new[u], new[v]) for u, v in edges)), old

    def edge_subgraph_vertices(self, verts: Iterable[int]) -> "Graph":
        """Induced subgraph on ``verts``, relabeled in increasing order."""
        verts = sorted(verts)
        new = {v: i for i, v in enumerate(verts)}
        return Graph.from_edges(len(verts), ((new[u], new[v]) for u, v in self.edges()
                                             if u in new and v in new))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- structural queries ------------------------------------------------------

def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        part = [s]
        stack = [s]
        while stack:
            for w in g.adj[stack.pop()]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    part.append(w)
                    stack.append(w)
        out.append(sorted(part))
    return out


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    BFS from every vertex; a non-tree edge x-y seen from root r closes a walk
    of length dist(x) + dist(y) + 1 containing a cycle no longer than that, and
    the shortest cycle is found exactly from any of its vertices.
    """
    best = math.inf
    for r in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_locally_irregular(g: Graph) -> bool:
    return all(len(g.adj[u]) != len(g.adj[v]) for u, v in g.edges())


def is_claw_free(g: Graph) -> bool:
    for v in range(g.n):
        for a, b, c in combinations(g.adj[v], 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def is_cactus(g: Graph) -> bool:
    """Connected and every edge on at most one cycle (blocks are edges or cycles)."""
    if not is_connected(g):
        return False
    for block in biconnected_edge_blocks(g):
        verts = {x for e in block for x in e}
        if len(block) > 1 and len(block) != len(verts):
            return False
    return True


def biconnected_edge_blocks(g: Graph) -> list[list[Edge]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[list[Edge]] = []
    estack: list[Edge] = []
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adj[root]))]
        while stack:
            x, px, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] < 0:
                    estack.append(edge_key(x, y))
                    disc[y] = low[y] = clock
                    clock += 1
                    stack.append((y, x, iter(g.adj[y])))
                    advanced = True
                    break
                if y != px and disc[y] < disc[x]:
                    estack.append(edge_key(x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if px >= 0:
                low[px] = min(low[px], low[x])
                if low[x] >= disc[px]:
                    block = []
                    key = edge_key(px, x)
                    while True:
                        e = estack.pop()
                        block.append(e)
                        if e == key:
                            break
                    blocks.append(block)
    return blocks


def find_diamond_pair(g: Graph) -> Optional[dict[str, int]]:
    """Two vertex-disjoint diamonds (K4 minus an edge) joined by an edge.

    The witness uses the labels of the two-diamond gadget: ``v1`` and ``u1``
    are the diamond tips joined by the connecting edge, ``v2 v3`` and
    ``u2 u3`` the diamond spines and ``v4``/``u4`` the opposite tips.
    Diamonds are looked for as subgraphs, not induced subgraphs.
    """
    tips: dict[int, list[tuple[int, int, int]]] = {}
    for a, b in g.edges():
        common = sorted(set(g.adj[a]) & set(g.adj[b]))
        for x, y in combinations(common, 2):
            tips.setdefault(x, []).append((a, b, y))
            tips.setdefault(y, []).append((a, b, x))
    for v1 in sorted(tips):
        for v2, v3, v4 in tips[v1]:
            dv = {v1, v2, v3, v4}
            for u1 in g.adj[v1]:
                if u1 in dv:
                    continue
                for u2, u3, u4 in tips.get(u1, []):
                    if dv.isdisjoint((u2, u3, u4)):
                        return {"u1": u1, "u2": u2, "u3": u3, "u4": u4,
                                "v1": v1, "v2": v2, "v3": v3, "v4": v4}
    return None


# -- serialization -----------------------------------------------------------

def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (short header form, n <= 62)."""
    if g.n > 62:
        raise GraphError(f"graph6 emitter supports n <= 62, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string", 0)
    data = []
    for i, ch in enumerate(s):
        b = ord(ch) - 63
        if not 0 <= b <= 63:
            raise GraphFormatError(f"byte {ch!r} outside the graph6 range 63..126", i)
        data.append(b)
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        raise GraphFormatError("unsupported or truncated graph6 size header", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos < need:
        raise GraphFormatError(f"truncated bit vector: expected {need} bytes", len(s))
    if len(data) - pos > need:
        raise GraphFormatError("trailing bytes after bit vector", pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Header line ``n m`` then one ``u v`` pair per line; ``#`` starts a comment."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].split()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise GraphFormatError("missing 'n m' header", 1)
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphFormatError("header must be two integers 'n m'", lineno) from None
    edges = []
    for lineno, body in rows[1:]:
        try:
            u, v = (int(x) for x in body)
        except ValueError:
            raise GraphFormatError("edge line must be two integers 'u v'", lineno) from None
        edges.append((u, v))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}", lineno)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc), lineno) from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- canonical form ------------------------------------------------------------

def _child_orders(g: Graph, fresh: list[int]) -> Iterator[list[int]]:
    """Orders of newly discovered children: ascending degree, free within ties."""
    groups: dict[int, list[int]] = {}
    for w in fresh:
        groups.setdefault(len(g.adj[w]), []).append(w)
    parts = [list(permutations(groups[d])) for d in sorted(groups)]
    for combo in product(*parts):
        yield [w for part in combo for w in part]


def bfs_code(g: Graph, root: int, bound: Optional[list] = None) -> Optional[list]:
    """Least BFS code of a connected graph rooted at ``root``.

    A BFS code lists, for each vertex in label order, the sorted labels of its
    neighbours with larger label.  Neighbours first discovered from the vertex
    being scanned get the next free labels, in ascending degree order; the
    order within a degree class is searched over.  With ``bound`` only codes
    strictly smaller than ``bound`` are reported (None if there is none).
    """
    best = [bound]
    updates = [0]
    label = [-1] * g.n
    label[root] = 0
    order = [root]
    code: list[tuple[int, ...]] = []

    def rec(i: int, less: bool) -> None:
        # less: the code so far is already strictly below best[0]
        if i == len(order):
            if len(order) != g.n:
                raise GraphError("bfs_code needs a connected graph")
            if best[0] is None or less:
                best[0] = list(code)
                updates[0] += 1
            return
        v = order[i]
        fresh = [w for w in g.adj[v] if label[w] < 0]
        row = tuple(sorted(label[w] for w in g.adj[v] if label[w] > i))
        row += tuple(range(len(order), len(order) + len(fresh)))
        if not less and best[0] is not None:
            if row > best[0][i]:
                return
            less = row < best[0][i]
        code.append(row)
        for perm in _child_orders(g, fresh):
            for w in perm:
                label[w] = len(order)
                order.append(w)
            seen = updates[0]
            rec(i + 1, less)
            if updates[0] != seen:
                less = False  # best now extends the current prefix
            for w in perm:
                label[w] = -1
                order.pop()
        code.pop()

    rec(0, False)
    return best[0] if best[0] is not bound else None


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant code of a connected graph.

    The least BFS code over all roots of minimum degree; two connected graphs
    are isomorphic iff their canonical forms are equal.
    """
    if g.n == 0:
        return (0,)
    if not is_connected(g):
        raise GraphError("canonical_form needs a connected graph")
    dmin = min(g.degrees())
    best = None
    for r in range(g.n):
        if len(g.adj[r]) == dmin:
            c = bfs_code(g, r, best)
            if c is not None:
                best = c
    return (g.n, tuple(best))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if (g.n, g.m, sorted(g.degrees())) != (h.n, h.m, sorted(h.degrees())):
        return False
    cg, ch = components(g), components(h)
    if len(cg) != len(ch):
        return False
    forms_g = sorted(canonical_form(g.edge_subgraph_vertices(c)) for c in cg)
    forms_h = sorted(canonical_form(h.edge_subgraph_vertices(c)) for c in ch)
    return forms_g == forms_h
