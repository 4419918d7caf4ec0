"""Transfer codes for 2-LIECs of XI_n.

XI_n splits into n blocks; block i holds v_{3i}, v_{3i+1}, v_{3i+2} and the
matching u's, seven internal edges, and four half-edges leaving it at
v_{3i}, u_{3i} (to the previous block) and v_{3i+2}, u_{3i+2} (to the next).
A 2-LIEC of a block is summarized by its code (p, q, r, s): for each of those
four vertices, in that order, the color of its half-edge and the number of
edges of that color at the vertex, half-edge included.  Colors are named a
and b; (a, 3) prints as a3.

Two consecutive blocks fit together when the half-edges they share agree in
color and their endpoints differ in color degree.  Gluing blocks around the
ring becomes a closed walk in a small digraph on codes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from .families import gen_xi
from .graph import GraphError, edge_key
from .solver import EdgeColoring, verify_liec

Half = tuple[str, int]
XiCode = tuple[Half, Half, Half, Half]

# block-local vertex ids
V0, U0, V1, U1, V2, U2 = range(6)
INTERNAL_EDGES = ((V0, V1), (V1, V2), (U0, U1), (U1, U2), (V0, U1), (V1, U0), (V2, U2))
HALF_EDGE_VERTICES = (V0, U0, V2, U2)

_RANK = {("a", 3): 6, ("a", 2): 5, ("a", 1): 4, ("b", 1): 3, ("b", 2): 2, ("b", 3): 1}

# the sixteen codes that occur in 2-LIECs of XI_n, in c_1..c_16 order
_LABELS = (
    "(a3,a3,a1,b3)", "(a2,b2,b1,b2)", "(a2,b2,a2,a1)", "(b3,b3,a3,b1)",
    "(a3,b2,a3,b2)", "(a2,b1,a2,b3)", "(a1,b2,a3,b2)", "(a2,b3,a2,b3)",
    "(a2,b1,b2,b3)", "(a3,b2,b2,b3)", "(a2,b3,a3,a2)", "(a1,b2,a3,a2)",
    "(b1,b1,a2,b2)", "(a3,b3,a3,a2)", "(a3,b3,b2,b3)", "(a1,a1,a2,b2)",
)


def format_code(code: XiCode) -> str:
    return "(" + ",".join(f"{c}{m}" for c, m in code) + ")"


def parse_code(text: str) -> XiCode:
    parts = text.strip().strip("()").split(",")
    if len(parts) != 4:
        raise ValueError(f"code needs four entries: {text!r}")
    out = []
    for p in parts:
        p = p.strip()
        if len(p) != 2 or p[0] not in "ab" or p[1] not in "123":
            raise ValueError(f"bad code entry {p!r}")
        out.append((p[0], int(p[1])))
    return tuple(out)  # type: ignore[return-value]


def order_code(code: XiCode) -> XiCode:
    """Representative with p >= q and r >= s in the order a3 > a2 > a1 > b1 > b2 > b3."""
    p, q, r, s = code
    if _RANK[p] < _RANK[q]:
        p, q = q, p
    if _RANK[r] < _RANK[s]:
        r, s = s, r
    return (p, q, r, s)


@lru_cache(maxsize=None)
def block_colorings() -> tuple[tuple[tuple[str, ...], tuple[str, ...], XiCode], ...]:
    """All 2-colorings of a block (internal edge colors, half-edge colors, code)
    that are locally irregular on the internal edges."""
    out = []
    for colors in product("ab", repeat=len(INTERNAL_EDGES) + 4):
        inner, halves = colors[:len(INTERNAL_EDGES)], colors[len(INTERNAL_EDGES):]
        deg: dict[tuple[int, str], int] = {}
        for (x, y), c in zip(INTERNAL_EDGES, inner):
            deg[x, c] = deg.get((x, c), 0) + 1
            deg[y, c] = deg.get((y, c), 0) + 1
        for x, c in zip(HALF_EDGE_VERTICES, halves):
            deg[x, c] = deg.get((x, c), 0) + 1
        if all(deg[x, c] != deg[y, c] for (x, y), c in zip(INTERNAL_EDGES, inner)):
            code = tuple((c, deg[x, c]) for x, c in zip(HALF_EDGE_VERTICES, halves))
            out.append((inner, halves, code))
    return tuple(out)


@lru_cache(maxsize=None)
def raw_codes() -> frozenset:
    return frozenset(code for _, _, code in block_colorings())


def enumerate_xi_codes() -> list[XiCode]:
    """The ordered codes, sorted by descending rank."""
    ordered = {order_code(c) for c in raw_codes()}
    return sorted(ordered, key=lambda c: [-_RANK[h] for h in c])


def _fits(x: Half, y: Half) -> bool:
    return x[0] == y[0] and x[1] != y[1]


def arc_kind(ci: XiCode, cj: XiCode) -> Optional[str]:
    """"straight" if r~p and s~q, "crossed" if r~q and s~p, else None."""
    r, s = ci[2], ci[3]
    p, q = cj[0], cj[1]
    if _fits(r, p) and _fits(s, q):
        return "straight"
    if _fits(r, q) and _fits(s, p):
        return "crossed"
    return None


@dataclass(frozen=True)
class CodeDigraph:
    codes: tuple[XiCode, ...]
    adjacency: np.ndarray
    scc: tuple[tuple[int, ...], ...]

    def label(self, i: int) -> str:
        return f"c{i + 1}"

    def arcs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.adjacency))]

    def scc_bipartite(self) -> list[bool]:
        """Is the undirected graph underlying each strong component bipartite?"""
        out = []
        for comp in self.scc:
            side = {comp[0]: 0}
            stack = [comp[0]]
            ok = True
            members = set(comp)
            while stack and ok:
                x = stack.pop()
                for y in members:
                    if self.adjacency[x, y] or self.adjacency[y, x]:
                        if y not in side:
                            side[y] = 1 - side[x]
                            stack.append(y)
                        elif side[y] == side[x]:
                            ok = False
                            break
            out.append(ok)
        return out

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": self.label(i), "code": format_code(c)}
                         for i, c in enumerate(self.codes)],
            "arcs": {self.label(i): [self.label(j) for j in np.nonzero(self.adjacency[i])[0]]
                     for i in range(len(self.codes))},
            "scc": [[self.label(i) for i in comp] for comp in self.scc],
            "scc_bipartite": self.scc_bipartite(),
        }

    def to_dot(self) -> str:
        lines = ["digraph D {"]
        for i, c in enumerate(self.codes):
            lines.append(f'  {self.label(i)} [label="{self.label(i)}\\n{format_code(c)}"];')
        for i, j in self.arcs():
            lines.append(f"  {self.label(i)} -> {self.label(j)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _strong_components(adj: np.ndarray) -> tuple[tuple[int, ...], ...]:
    size = adj.shape[0]
    reach = (adj | np.eye(size, dtype=bool)).astype(np.int64)
    for _ in range(size.bit_length() + 1):
        reach = np.minimum(reach @ reach, 1)
    mutual = (reach & reach.T).astype(bool)
    seen: set[int] = set()
    comps = []
    for i in range(size):
        if i not in seen:
            comp = tuple(int(j) for j in np.nonzero(mutual[i])[0])
            seen.update(comp)
            comps.append(comp)
    return tuple(comps)


def excluded_codes() -> list[XiCode]:
    """Ordered codes whose first two entries are equal with multiplicity 2.

    Both left vertices would then share color and color degree, and no code
    has a right pair that can feed them; they never occur in a 2-LIEC of XI_n.
    """
    return [c for c in enumerate_xi_codes() if c[0] == c[1] and c[0][1] == 2]


def code_labels() -> tuple[str, ...]:
    return _LABELS


@lru_cache(maxsize=None)
def build_code_digraph(full: bool = False) -> CodeDigraph:
    """Digraph on the retained codes (c_1..c_16), or with ``full=True`` on all
    ordered codes.  Arc i -> j when block j can follow block i."""
    if full:
        codes = tuple(enumerate_xi_codes())
    else:
        present = {format_code(c): c for c in enumerate_xi_codes()}
        missing = [s for s in _LABELS if s not in present]
        if missing:
            raise AssertionError(f"retained codes missing from enumeration: {missing}")
        codes = tuple(present[s] for s in _LABELS)
    size = len(codes)
    adj = np.zeros((size, size), dtype=bool)
    for i, ci in enumerate(codes):
        for j, cj in enumerate(codes):
            adj[i, j] = arc_kind(ci, cj) is not None
    return CodeDigraph(codes, adj, _strong_components(adj))


def xi_two_liec_exists(n: int) -> bool:
    """Does XI_n have a 2-LIEC, i.e. does the code digraph have a closed walk
    of length n?"""
    if n < 2:
        raise GraphError("XI_n needs n >= 2")
    return _closed_walk(n) is not None


def _closed_walk(n: int) -> Optional[list[int]]:
    adj = build_code_digraph().adjacency.astype(np.int64)
    size = adj.shape[0]
    # reach[t][i, j]: walk of length t from i to j
    reach = [np.eye(size, dtype=np.int64)]
    for _ in range(n):
        reach.append(np.minimum(reach[-1] @ adj, 1))
    starts = [i for i in range(size) if reach[n][i, i]]
    if not starts:
        return None
    start = starts[0]
    walk = [start]
    for t in range(n - 1, 0, -1):
        x = walk[-1]
        nxt = next(y for y in range(size) if adj[x, y] and reach[t][y, start])
        walk.append(nxt)
    return walk


def xi_coloring_from_walk(n: int) -> Optional[EdgeColoring]:
    """A 2-LIEC of gen_xi(n) assembled block by block from a closed walk, or
    None when no closed walk of length n exists.  Colors: a -> 1, b -> 2."""
    walk = _closed_walk(n)
    if walk is None:
        return None
    d = build_code_digraph()
    codes = [d.codes[i] for i in walk]
    # orientation of each block's left pair, forced by the junction before it
    left_swap = [False] * n
    for i in range(n):
        j = (i + 1) % n
        left_swap[j] = arc_kind(codes[i], codes[j]) == "crossed"
    by_code: dict[XiCode, tuple] = {}
    for inner, halves, code in block_colorings():
        by_code.setdefault(code, (inner, halves))
    color: dict = {}
    for i, code in enumerate(codes):
        p, q, r, s = code
        actual = (q, p, r, s) if left_swap[i] else (p, q, r, s)
        inner, halves = by_code[actual]
        ids = {V0: 3 * i, V1: 3 * i + 1, V2: 3 * i + 2,
               U0: 3 * n + 3 * i, U1: 3 * n + 3 * i + 1, U2: 3 * n + 3 * i + 2}
        for (x, y), c in zip(INTERNAL_EDGES, inner):
            color[edge_key(ids[x], ids[y])] = 1 if c == "a" else 2
        nv, nu = 3 * ((i + 1) % n), 3 * n + 3 * ((i + 1) % n)
        color[edge_key(ids[V2], nv)] = 1 if halves[2] == "a" else 2
        color[edge_key(ids[U2], nu)] = 1 if halves[3] == "a" else 2
    col = EdgeColoring(2, color)
    bad = verify_liec(gen_xi(n), col)
    if bad:
        raise AssertionError(f"walk did not lift to a 2-LIEC: {bad[:3]}")
    return col


def digraph_json() -> str:
    return json.dumps(build_code_digraph().to_json(), indent=2)
