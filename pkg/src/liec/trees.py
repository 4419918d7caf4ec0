"""Constructive 2-colorings of trees.

Colors are 1 and 2 throughout.  The building block is the 2-ALIEC of a
shrub (a tree rooted at a leaf r): a 2-LIEC, or failing that a coloring that
is a 2-LIEC away from the root edge rr+ and in which rr+ is the only edge of
its color at r+.  The three colorers below turn that into genuine 2-LIECs
of trees with

* a leaf hanging on a degree-3 vertex,
* a pendant path of odd length ending at a degree-3 vertex,
* an odd number of consecutive degree-2 vertices between two degree-3 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Edge, Graph, GraphError, edge_key, is_tree
from .solver import EdgeColoring, verify_liec


class InvariantError(AssertionError):
    """A construction that is guaranteed to succeed did not."""


@dataclass(frozen=True)
class Shrub:
    tree: Graph
    root: int

    def __post_init__(self):
        if not is_tree(self.tree):
            raise GraphError("shrub must be a tree")
        if self.tree.degree(self.root) != 1:
            raise GraphError("shrub root must be a leaf")

    @property
    def r_plus(self) -> int:
        return self.tree.adj[self.root][0]


@dataclass(frozen=True)
class AliecResult:
    coloring: EdgeColoring
    almost_flag: bool


def _swap(color: dict[Edge, int], edges) -> None:
    for e in edges:
        color[e] = 3 - color[e]


def _side(t: Graph, start: int, blocked: int) -> set[int]:
    """Vertices reachable from ``start`` without entering ``blocked``."""
    seen = {start}
    stack = [start]
    while stack:
        for w in t.adj[stack.pop()]:
            if w != blocked and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _edges_within(t: Graph, verts: set[int]) -> list[Edge]:
    return [(u, v) for u, v in t.edges() if u in verts and v in verts]


def _checked(t: Graph, color: dict[Edge, int], what: str) -> EdgeColoring:
    col = EdgeColoring(2, dict(color))
    bad = verify_liec(t, col)
    if bad:
        raise InvariantError(f"{what}: invalid 2-LIEC, violations {bad[:3]}")
    return col


# -- shrub 2-ALIEC -----------------------------------------------------------

def shrub_2aliec(s: Shrub) -> AliecResult:
    """A 2-ALIEC of the shrub; a genuine 2-LIEC whenever one exists.

    Bottom-up DP: for every non-root vertex x and each color c of the edge to
    its parent, the set of values d^c(x) that some valid coloring of x's
    subtree achieves.  A child edge xw of color c' is valid when w can reach
    a value different from d^{c'}(x); the number of children taking color 1
    is then free in an interval, which settles x.
    """
    t, r = s.tree, s.root
    parent = [-1] * t.n
    order = [r]
    parent[r] = r
    for x in order:
        for w in t.adj[x]:
            if parent[w] < 0:
                parent[w] = x
                order.append(w)
    children = [[w for w in t.adj[x] if parent[w] == x and w != x] for x in range(t.n)]
    # states[x][c] = {d^c(x): number of children colored 1}
    states: list[dict[int, dict[int, int]]] = [dict() for _ in range(t.n)]

    def can_take(w: int, c: int, forbidden: int) -> bool:
        return any(k != forbidden for k in states[w].get(c, {}))

    for x in reversed(order[1:]):
        ch = children[x]
        for c in (1, 2):
            got: dict[int, int] = {}
            for x1 in range(len(ch) + 1):
                d1 = x1 + (c == 1)
                d2 = len(ch) - x1 + (c == 2)
                only1 = only2 = both = 0
                ok = True
                for w in ch:
                    a, b = can_take(w, 1, d1), can_take(w, 2, d2)
                    if a and b:
                        both += 1
                    elif a:
                        only1 += 1
                    elif b:
                        only2 += 1
                    else:
                        ok = False
                        break
                if ok and only1 <= x1 <= only1 + both:
                    got.setdefault(d1 if c == 1 else d2, x1)
            states[x][c] = got

    rp = s.r_plus
    choice = None
    for c in (1, 2):
        for k in sorted(states[rp][c]):
            if k >= 2:
                choice = (c, k, False)
                break
        if choice:
            break
    if choice is None:
        for c in (1, 2):
            if 1 in states[rp][c]:
                choice = (c, 1, True)
                break
    if choice is None:
        raise InvariantError("shrub without a 2-ALIEC")

    color: dict[Edge, int] = {}
    c0, k0, almost = choice
    color[edge_key(r, rp)] = c0
    stack = [(rp, c0, k0)]
    while stack:
        x, c, k = stack.pop()
        ch = children[x]
        x1 = states[x][c][k]
        d1 = x1 + (c == 1)
        d2 = len(ch) - x1 + (c == 2)
        picks = []
        for w in ch:
            picks.append((can_take(w, 1, d1), can_take(w, 2, d2), w))
        ones = sum(1 for a, b, _ in picks if a and not b)
        for a, b, w in picks:
            if a and b and ones < x1:
                cw = 1
                ones += 1
            else:
                cw = 1 if a and not b else 2
            need = d1 if cw == 1 else d2
            kw = min(v for v in states[w][cw] if v != need)
            color[edge_key(x, w)] = cw
            stack.append((w, cw, kw))

    col = EdgeColoring(2, color)
    _check_aliec(s, col, almost)
    return AliecResult(col, almost)


def _check_aliec(s: Shrub, col: EdgeColoring, almost: bool) -> None:
    t, r, rp = s.tree, s.root, s.r_plus
    bad = verify_liec(t, col)
    if not almost:
        if bad:
            raise InvariantError(f"2-LIEC of shrub expected, violations {bad[:3]}")
        return
    root_edge = edge_key(r, rp)
    c = col.color[root_edge]
    same = [w for w in t.adj[rp] if col.color[edge_key(rp, w)] == c]
    if same != [r]:
        raise InvariantError("root edge color is not unique at r+")
    if any((v.u, v.v) != root_edge for v in bad):
        raise InvariantError(f"2-ALIEC broken away from the root edge: {bad[:3]}")


def is_2aliec(s: Shrub, col: EdgeColoring) -> bool:
    """Definition check, independent of how the coloring was produced."""
    t, r, rp = s.tree, s.root, s.r_plus
    if set(col.color) != set(t.edges()) or any(c not in (1, 2) for c in col.color.values()):
        return False
    if not verify_liec(t, col):
        return True
    root_edge = edge_key(r, rp)
    c = col.color[root_edge]
    if [w for w in t.adj[rp] if col.color[edge_key(rp, w)] == c] != [r]:
        return False
    rest = {e: cc for e, cc in col.color.items() if e != root_edge}
    return not verify_liec(t, EdgeColoring(2, rest), total=False)


# -- the three tree colorers -------------------------------------------------

def tree_2liec_pendant_deg3(t: Graph, u: int, v: int) -> EdgeColoring:
    """2-LIEC of a tree with a leaf u on a degree-3 vertex v."""
    if not is_tree(t) or t.degree(u) != 1 or t.degree(v) != 3 or not t.has_edge(u, v):
        raise GraphError("needs a tree with a leaf u adjacent to a degree-3 vertex v")
    res = shrub_2aliec(Shrub(t, u))
    if not res.almost_flag:
        return res.coloring
    color = dict(res.coloring.color)
    uv = edge_key(u, v)
    first = color[uv]
    other = 3 - first
    v1, v2 = (w for w in t.adj[v] if w != u)
    # recoloring uv to the other color works unless a branch vertex already
    # carries three edges of that color
    color[uv] = other
    if not verify_liec(t, EdgeColoring(2, color)):
        return _checked(t, color, "pendant edge")
    color[uv] = first

    def full(w: int) -> bool:
        return sum(1 for x in t.adj[w] if color[edge_key(w, x)] == other) == 3

    pivot = min(w for w in (v1, v2) if full(w))
    _swap(color, _edges_within(t, _side(t, pivot, v) | {v}))
    if verify_liec(t, EdgeColoring(2, color)):
        color[uv] = other
    return _checked(t, color, "pendant edge")


def color_even_path(path: list[int], last_color: int) -> dict[Edge, int]:
    """Color an even-length path in 2-edge blocks of alternating color, the
    block at the end of ``path`` getting ``last_color``."""
    edges = len(path) - 1
    if edges % 2:
        raise GraphError("path length must be even")
    out = {}
    for i in range(edges):
        block_from_end = (edges - 1 - i) // 2
        out[edge_key(path[i], path[i + 1])] = last_color if block_from_end % 2 == 0 else 3 - last_color
    return out


def tree_2liec_pendant_oddpath(t: Graph, path: list[int]) -> EdgeColoring:
    """2-LIEC of a tree with a pendant path of odd length.

    ``path`` runs from the leaf to the attachment vertex, which must have
    degree 3; internal vertices have degree 2.
    """
    if not is_tree(t):
        raise GraphError("needs a tree")
    _check_pendant(t, path)
    if len(path) == 2:
        return tree_2liec_pendant_deg3(t, path[0], path[1])
    # split into the even path path[:-1] and the shrub rooted at path[-2]
    head = set(path[:-2])
    keep = [e for e in t.edges() if not (e[0] in head or e[1] in head)]
    sub, old = t.edge_subgraph(keep)
    new = {o: i for i, o in enumerate(old)}
    sub_col = tree_2liec_pendant_deg3(sub, new[path[-2]], new[path[-1]])
    color = {edge_key(old[a], old[b]): c for (a, b), c in sub_col.color.items()}
    junction = color[edge_key(path[-2], path[-1])]
    color.update(color_even_path(path[:-1], 3 - junction))
    return _checked(t, color, "pendant odd path")


def _check_pendant(t: Graph, path: list[int]) -> None:
    if len(path) < 2 or (len(path) - 1) % 2 == 0:
        raise GraphError("pendant path must have odd length")
    if any(not t.has_edge(a, b) for a, b in zip(path, path[1:])):
        raise GraphError("pendant path is not a path of the tree")
    if t.degree(path[0]) != 1 or any(t.degree(x) != 2 for x in path[1:-1]):
        raise GraphError("pendant path must start at a leaf and run through degree-2 vertices")
    if t.degree(path[-1]) != 3:
        raise GraphError("pendant path must end at a degree-3 vertex")


def tree_2liec_odd_thread(t: Graph, thread: list[int]) -> EdgeColoring:
    """2-LIEC of a tree with an odd number of consecutive degree-2 vertices
    between two degree-3 vertices; ``thread`` lists those degree-2 vertices."""
    if not is_tree(t) or len(thread) % 2 == 0:
        raise GraphError("needs a tree and a thread with an odd number of vertices")
    if any(t.degree(x) != 2 for x in thread):
        raise GraphError("thread vertices must have degree 2")
    if any(not t.has_edge(a, b) for a, b in zip(thread, thread[1:])):
        raise GraphError("thread is not a path")
    first, last = thread[0], thread[-1]
    inner = set(thread)
    (u1,) = [w for w in t.adj[first] if w not in inner] if len(thread) > 1 else [min(t.adj[first])]
    if len(thread) == 1:
        u2 = max(t.adj[first])
    else:
        (u2,) = [w for w in t.adj[last] if w not in inner]
    if t.degree(u1) != 3 or t.degree(u2) != 3:
        raise GraphError("thread must be flanked by degree-3 vertices")
    after_first = thread[1] if len(thread) > 1 else u2
    left = _side(t, u1, first) | {first}
    left_edges = _edges_within(t, left)
    right_edges = [e for e in t.edges() if e not in set(left_edges)]

    sub1, old1 = t.edge_subgraph(left_edges)
    n1 = {o: i for i, o in enumerate(old1)}
    col1 = tree_2liec_pendant_deg3(sub1, n1[first], n1[u1])
    sub2, old2 = t.edge_subgraph(right_edges)
    n2 = {o: i for i, o in enumerate(old2)}
    col2 = tree_2liec_pendant_oddpath(sub2, [n2[x] for x in [*thread, u2]])

    color = {edge_key(old1[a], old1[b]): c for (a, b), c in col1.color.items()}
    right = {edge_key(old2[a], old2[b]): c for (a, b), c in col2.color.items()}
    if right[edge_key(first, after_first)] == color[edge_key(u1, first)]:
        right = {e: 3 - c for e, c in right.items()}
    color.update(right)
    return _checked(t, color, "odd thread")


# -- finders -----------------------------------------------------------------

def find_pendant_deg3_edge(t: Graph) -> Optional[tuple[int, int]]:
    for u in range(t.n):
        if t.degree(u) == 1 and t.degree(t.adj[u][0]) == 3:
            return u, t.adj[u][0]
    return None


def _run(t: Graph, start: int, nxt: int) -> list[int]:
    path = [start, nxt]
    while t.degree(path[-1]) == 2:
        a, b = t.adj[path[-1]]
        path.append(a if a != path[-2] else b)
    return path


def find_pendant_odd_path(t: Graph) -> Optional[list[int]]:
    """Leaf-to-degree-3 path of odd length through degree-2 vertices."""
    for u in range(t.n):
        if t.degree(u) == 1:
            path = _run(t, u, t.adj[u][0])
            if t.degree(path[-1]) == 3 and (len(path) - 1) % 2 == 1:
                return path
    return None


def find_odd_thread(t: Graph) -> Optional[list[int]]:
    """Odd number of consecutive degree-2 vertices between two degree-3 vertices."""
    for x in range(t.n):
        if t.degree(x) != 3:
            continue
        for w in t.adj[x]:
            if t.degree(w) != 2:
                continue
            path = _run(t, x, w)
            inner = path[1:-1]
            if t.degree(path[-1]) == 3 and len(inner) % 2 == 1 and inner[0] <= inner[-1]:
                return inner
    return None


def path_order(t: Graph) -> Optional[list[int]]:
    """Vertices of ``t`` in path order if ``t`` is a path, else None."""
    if t.max_degree > 2 or not is_tree(t):
        return None
    if t.n == 1:
        return [0]
    start = min(v for v in range(t.n) if t.degree(v) == 1)
    return _run(t, start, t.adj[start][0]) if t.n > 2 else [start, t.adj[start][0]]


def tree_2liec(t: Graph) -> tuple[EdgeColoring, str]:
    """2-LIEC of a tree by the first applicable rule, in the order pendant
    edge on a degree-3 vertex, pendant odd path, odd thread, even path.

    Returns the coloring and the name of the rule used.
    """
    e = find_pendant_deg3_edge(t)
    if e is not None:
        return tree_2liec_pendant_deg3(t, *e), "pendant-edge"
    p = find_pendant_odd_path(t)
    if p is not None:
        return tree_2liec_pendant_oddpath(t, p), "pendant-odd-path"
    th = find_odd_thread(t)
    if th is not None:
        return tree_2liec_odd_thread(t, th), "odd-thread"
    order = path_order(t)
    if order is not None and (len(order) - 1) % 2 == 0 and len(order) > 1:
        return _checked(t, color_even_path(order, 1), "even path"), "even-path"
    raise InvariantError("no tree rule applies")
