"""Locally irregular edge-colorings: verification and exact search.

A k-LIEC colors every edge with one of 1..k so that each color class induces
a locally irregular graph, i.e. an edge uv of color c has d^c(u) != d^c(v),
where d^c(x) counts the edges of color c at x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Optional

from .graph import Edge, Graph, edge_key


class ColoringError(ValueError):
    """A coloring that does not fit its host graph."""


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search was decided."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    color: Mapping[Edge, int]

    @classmethod
    def from_pairs(cls, k: int, items) -> "EdgeColoring":
        return cls(k, {edge_key(u, v): c for (u, v), c in items})

    def classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {}
        for e, c in sorted(self.color.items()):
            out.setdefault(c, []).append(e)
        return out

    def to_json(self) -> dict:
        return {"k": self.k,
                "edges": [{"u": u, "v": v, "c": c} for (u, v), c in sorted(self.color.items())]}

    @classmethod
    def from_json(cls, data) -> "EdgeColoring":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["k"]), {edge_key(int(e["u"]), int(e["v"])): int(e["c"])
                                        for e in data["edges"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise ColoringError(f"malformed coloring JSON: {exc}") from None


@dataclass(frozen=True)
class Violation:
    """Edge uv of color c whose endpoints share color degree ``degree``."""
    u: int
    v: int
    color: int
    degree: int

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "c": self.color, "degree": self.degree}


def color_degrees(g: Graph, col: EdgeColoring) -> dict[tuple[int, int], int]:
    """The table (vertex, color) -> number of incident edges of that color."""
    d: dict[tuple[int, int], int] = {}
    for (u, v), c in col.color.items():
        d[u, c] = d.get((u, c), 0) + 1
        d[v, c] = d.get((v, c), 0) + 1
    return d


def check_coloring(g: Graph, col: EdgeColoring, total: bool = True) -> None:
    for (u, v), c in col.color.items():
        if not g.has_edge(u, v):
            raise ColoringError(f"coloring references non-edge ({u}, {v})")
        if not 1 <= c <= col.k:
            raise ColoringError(f"color {c} on ({u}, {v}) outside 1..{col.k}")
    if total and len(col.color) != g.m:
        missing = [e for e in g.edges() if e not in col.color]
        raise ColoringError(f"{len(missing)} uncolored edges, e.g. {missing[0]}")


def verify_liec(g: Graph, col: EdgeColoring, total: bool = True) -> list[Violation]:
    """Violations of local irregularity; empty means ``col`` is a k-LIEC.

    With ``total=False`` the coloring may leave edges uncolored; the check then
    applies to the colored subgraph only.
    """
    check_coloring(g, col, total)
    d = color_degrees(g, col)
    out = []
    for (u, v), c in sorted(col.color.items()):
        if d[u, c] == d[v, c]:
            out.append(Violation(u, v, c, d[u, c]))
    return out


def is_liec(g: Graph, col: EdgeColoring) -> bool:
    return not verify_liec(g, col)


# -- exact search ------------------------------------------------------------

def _edge_order(g: Graph) -> list[Edge]:
    """Static most-constrained-first order.

    Greedily take the edge that leaves its endpoints with the fewest uncolored
    edges, preferring edges touching already colored ones, so vertices become
    complete (and their color degrees checkable) as early as possible.
    """
    left = [len(a) for a in g.adj]
    touched = [False] * g.n
    remaining = set(g.edges())
    order = []
    while remaining:
        best = min(remaining, key=lambda e: (
            not (touched[e[0]] or touched[e[1]]),
            min(left[e[0]], left[e[1]]),
            left[e[0]] + left[e[1]],
            e))
        remaining.discard(best)
        order.append(best)
        for x in best:
            left[x] -= 1
            touched[x] = True
    return order


class _Search:
    def __init__(self, g: Graph, k: int, budget: Optional[int]):
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.order = _edge_order(g)
        self.index = {e: i for i, e in enumerate(self.order)}
        self.inc = [[self.index[edge_key(v, w)] for w in g.adj[v]] for v in range(g.n)]
        self.color = [0] * len(self.order)
        self.cnt = [[0] * (k + 1) for _ in range(g.n)]
        self.unc = [len(a) for a in g.adj]

    def feasible(self, y: int) -> bool:
        """Can vertex y still end with color degrees that differ from every
        complete neighbor joined to it by a colored edge?"""
        g, cnt, color, unc = self.g, self.cnt, self.color, self.unc
        forbidden: dict[int, set[int]] = {}
        for w, ei in zip(g.adj[y], self.inc[y]):
            c = color[ei]
            if c and unc[w] == 0:
                forbidden.setdefault(c, set()).add(cnt[w][c])
        if not forbidden:
            return True
        cy = cnt[y]
        free = unc[y]
        if free == 0:
            return all(cy[c] not in vals for c, vals in forbidden.items())
        if len(forbidden) == 1:
            (c, vals), = forbidden.items()
            return any(cy[c] + t not in vals for t in range(free + 1))
        if free > 6:
            return True
        # distribute the ``free`` remaining edges over the k colors
        for split in _compositions(free, self.k):
            if all(cy[c] + split[c - 1] not in vals for c, vals in forbidden.items()):
                return True
        return False

    def run(self) -> bool:
        if not self.order:
            return True
        return self._rec(0, 0)

    def _rec(self, i: int, used: int) -> bool:
        if i == len(self.order):
            return True
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.budget)
        u, v = self.order[i]
        cnt, unc, g, color = self.cnt, self.unc, self.g, self.color
        for c in range(1, min(used + 1, self.k) + 1):
            color[i] = c
            cnt[u][c] += 1
            cnt[v][c] += 1
            unc[u] -= 1
            unc[v] -= 1
            ok = True
            check = {u, v}
            for x in (u, v):
                if unc[x] == 0:
                    check.update(w for w, ei in zip(g.adj[x], self.inc[x]) if color[ei])
            for y in check:
                if not self.feasible(y):
                    ok = False
                    break
            if ok and self._rec(i + 1, max(used, c)):
                return True
            cnt[u][c] -= 1
            cnt[v][c] -= 1
            unc[u] += 1
            unc[v] += 1
        color[i] = 0
        return False

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.k, {e: self.color[i] for i, e in enumerate(self.order)})


_COMP_CACHE: dict[tuple[int, int], list[tuple[int, ...]]] = {}


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    key = (total, parts)
    if key not in _COMP_CACHE:
        _COMP_CACHE[key] = [p for p in product(range(total + 1), repeat=parts) if sum(p) == total]
    return _COMP_CACHE[key]


def exists_k_liec(g: Graph, k: int, budget: Optional[int] = None) -> Optional[EdgeColoring]:
    """A k-LIEC of ``g`` or None if there is none.

    ``budget`` caps the number of search nodes; running out raises
    :class:`SearchBudgetExceeded` rather than answering "no".
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    s = _Search(g, k, budget)
    if not s.run():
        return None
    col = s.coloring()
    bad = verify_liec(g, col)
    if bad:
        raise AssertionError(f"solver produced an invalid coloring: {bad[:3]}")
    return col


def chi_irr(g: Graph, k_max: int = 4, budget: Optional[int] = None) -> Optional[int]:
    """Least k <= k_max admitting a k-LIEC, or None.

    For graphs of maximum degree 3 ``k_max = 4`` decides decomposability:
    every decomposable subcubic graph has a 4-LIEC.  The budget applies to
    each value of k separately.
    """
    for k in range(1, k_max + 1):
        if exists_k_liec(g, k, budget) is not None:
            return k
    return None


def is_decomposable_oracle(g: Graph, max_edges: int = 14) -> bool:
    """Brute force: can E(g) be split into locally irregular subgraphs at all?

    Searches set partitions of the edge list (restricted growth strings) with
    no bound on the number of parts, pruning only when an edge's two endpoints
    have all their edges placed and equal degree in the edge's part.
    Exponential by design; meant as an independent check on small graphs.
    """
    edges = g.edges()
    m = len(edges)
    if m > max_edges:
        raise ValueError(f"oracle limited to {max_edges} edges, graph has {m}")
    block = [-1] * m
    deg_in: list[dict[int, int]] = [dict() for _ in range(g.n)]
    placed = [0] * g.n
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)

    def done_ok(x: int) -> bool:
        for i in incident[x]:
            a, b = edges[i]
            y = b if a == x else a
            if placed[y] == len(incident[y]):
                p = block[i]
                if deg_in[x].get(p, 0) == deg_in[y].get(p, 0):
                    return False
        return True

    def rec(i: int, parts: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        for p in range(parts + 1):
            block[i] = p
            for x in (u, v):
                deg_in[x][p] = deg_in[x].get(p, 0) + 1
                placed[x] += 1
            ok = all(placed[x] < len(incident[x]) or done_ok(x) for x in (u, v))
            if ok and rec(i + 1, max(parts, p + 1)):
                return True
            for x in (u, v):
                deg_in[x][p] -= 1
                placed[x] -= 1
        block[i] = -1
        return False

    return rec(0, 0)
