"""Isomorph-free generation of small cubic and subcubic graphs, and the
harnesses built on it (non-2-LIEC cubic census, generalized Petersen scan).

Generation is orderly: graphs are grown in BFS label order (vertex v, when
scanned, is joined to some already labeled vertices above it and to fresh
vertices that take the next labels).  A finished graph is emitted only if its
labeling is the one that produces the least BFS code, so each isomorphism
class comes out exactly once without storing previously seen graphs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Optional

from .families import GPSpec, gen_generalized_petersen
from .graph import Graph, bfs_code, canonical_form, emit_graph6, girth

MAX_CUBIC_N = 16
MAX_SUBCUBIC_N = 11


def _leaf_code(adj: list[list[int]]) -> list[tuple[int, ...]]:
    return [tuple(sorted(w for w in adj[v] if w > v)) for v in range(len(adj))]


def _is_least(g: Graph, code: list) -> bool:
    dmin = min(g.degrees())
    return all(bfs_code(g, r, code) is None for r in range(g.n) if g.degree(r) == dmin)


def _local_invariant(adj, v: int) -> tuple[int, ...]:
    """Sizes of the first three BFS layers around v and edge counts inside them."""
    layer = {v: 0}
    frontier = [v]
    sizes = []
    for d in (1, 2, 3):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in layer:
                    layer[y] = d
                    nxt.append(y)
        sizes.append(len(nxt))
        frontier = nxt
    inner = [0, 0, 0]
    for x, d in layer.items():
        if 1 <= d <= 3:
            inner[d - 1] += sum(1 for y in adj[x] if layer.get(y) == d)
    return (*sizes, *inner)


def _is_least_cubic(g: Graph, code: list) -> bool:
    """Canonicity for regular graphs: roots restricted to the vertices with the
    least local invariant, then least BFS code among those roots."""
    inv = [_local_invariant(g.adj, v) for v in range(g.n)]
    low = min(inv)
    if inv[0] != low:
        return False
    return all(bfs_code(g, r, code) is None for r in range(g.n) if inv[r] == low)


def _within(adj: list[list[int]], u: int, w: int, limit: int) -> bool:
    """Is w at distance < limit from u?"""
    if limit <= 0:
        return False
    seen = {u}
    frontier = [u]
    for _ in range(limit - 1):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y == w:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    return False


def enumerate_cubic(n: int, girth_min: int = 3, part: Optional[tuple[int, int]] = None
                    ) -> Iterator[Graph]:
    """One graph per isomorphism class of connected cubic graphs on n vertices
    with girth >= girth_min.

    ``part=(i, jobs)`` restricts to the i-th of ``jobs`` disjoint slices of the
    search tree (split at a fixed depth); the union over i is the full output.
    """
    if n % 2:
        raise ValueError("cubic graphs need an even number of vertices")
    if not 4 <= n <= MAX_CUBIC_N:
        raise ValueError(f"n must lie in 4..{MAX_CUBIC_N}")
    adj: list[list[int]] = [[] for _ in range(n)]
    labeled = [1]
    split_depth = min(n, 6)
    counter = [0]

    def rec(v: int, lo: int, depth: int):
        while v < n and len(adj[v]) == 3:
            v += 1
            lo = v + 1
        if v == n:
            if labeled[0] == n:
                g = Graph(n, tuple(tuple(sorted(a)) for a in adj))
                if _is_least_cubic(g, _leaf_code(adj)):
                    yield g
            return
        if v >= labeled[0]:
            return
        if part is not None and depth == split_depth:
            counter[0] += 1
            if counter[0] % part[1] != part[0]:
                return
        # existing partners first, in increasing label order, then fresh ones
        for w in range(lo, labeled[0]):
            if len(adj[w]) < 3 and not _within(adj, v, w, girth_min - 1):
                adj[v].append(w)
                adj[w].append(v)
                yield from rec(v, w + 1, depth + 1)
                adj[v].pop()
                adj[w].pop()
        k = labeled[0]
        if k < n:
            adj[v].append(k)
            adj[k].append(v)
            labeled[0] += 1
            yield from rec(v, n, depth + 1)
            labeled[0] -= 1
            adj[v].pop()
            adj[k].pop()

    yield from rec(0, 1, 0)


def _claw_at(adj: list[list[int]], c: int) -> bool:
    for a, b, d in combinations(adj[c], 3):
        if b not in adj[a] and d not in adj[a] and d not in adj[b]:
            return True
    return False


def enumerate_subcubic_connected(n_max: int, n_min: int = 1, claw_free: bool = False,
                                 accept: Optional[Callable[[Graph], bool]] = None
                                 ) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs with maximum degree
    at most 3 and n_min..n_max vertices, in order of generation.

    ``claw_free`` prunes during generation (claw-freeness is inherited by the
    partial graphs); ``accept`` filters finished graphs.
    """
    if not 1 <= n_max <= MAX_SUBCUBIC_N:
        raise ValueError(f"n_max must lie in 1..{MAX_SUBCUBIC_N}")
    return subcubic_stream(n_max, n_min, claw_free, accept)


def subcubic_stream(n_max: int, n_min: int = 1, claw_free: bool = False,
                    accept: Optional[Callable[[Graph], bool]] = None,
                    hereditary: Optional[Callable[[Graph], bool]] = None,
                    max_degree: int = 3
                    ) -> Iterator[Graph]:
    """Generator behind :func:`enumerate_subcubic_connected`, without the size
    cap and with a configurable degree bound.  ``hereditary`` must be a
    property inherited by subgraphs; partial graphs failing it are pruned."""
    adj: list[list[int]] = [[] for _ in range(n_max)]
    parent = [-1] * n_max
    labeled = [1]

    def finalize_ok(x: int) -> bool:
        # x is scanned: its degree is final, and so is every edge between scanned vertices
        if len(adj[x]) < len(adj[0]):
            return False
        p = parent[x]
        if x > 1 and p >= 0 and parent[x - 1] == p and len(adj[x - 1]) > len(adj[x]):
            return False
        if claw_free:
            for c in [x, *adj[x]]:
                if c <= x and all(w <= x for w in adj[c]) and _claw_at(adj, c):
                    return False
        if hereditary is not None:
            nv = labeled[0]
            part = Graph(nv, tuple(tuple(sorted(a)) for a in adj[:nv]))
            if not hereditary(part):
                return False
        return True

    def rec(v: int):
        nv = labeled[0]
        if v == nv:
            if nv >= n_min:
                g = Graph(nv, tuple(tuple(sorted(a)) for a in adj[:nv]))
                if _is_least(g, _leaf_code(adj[:nv])) and (accept is None or accept(g)):
                    yield g
            return
        room = max_degree - len(adj[v])
        cands = [w for w in range(v + 1, nv) if len(adj[w]) < max_degree]
        for size in range(min(room, len(cands)) + 1):
            for chosen in combinations(cands, size):
                for w in chosen:
                    adj[v].append(w)
                    adj[w].append(v)
                for fresh in range(min(room - size, n_max - nv) + 1):
                    for t in range(fresh):
                        adj[v].append(nv + t)
                        adj[nv + t].append(v)
                        parent[nv + t] = v
                    labeled[0] = nv + fresh
                    if finalize_ok(v):
                        yield from rec(v + 1)
                    labeled[0] = nv
                    for t in range(fresh):
                        adj[v].pop()
                        adj[nv + t].clear()
                        parent[nv + t] = -1
                for w in chosen:
                    adj[v].pop()
                    adj[w].pop()

    yield from rec(0)


# -- census harnesses --------------------------------------------------------

@dataclass
class EnumerationReport:
    n: int
    girth_min: int
    total_graphs: int = 0
    non_two_liec_count: int = 0
    chi3_count: int = 0
    witnesses: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def merge(self, other: "EnumerationReport") -> "EnumerationReport":
        return EnumerationReport(self.n, self.girth_min,
                                 self.total_graphs + other.total_graphs,
                                 self.non_two_liec_count + other.non_two_liec_count,
                                 self.chi3_count + other.chi3_count,
                                 sorted(self.witnesses + other.witnesses))


def table1_row(n: int, girth_min: int, budget: Optional[int] = None,
               part: Optional[tuple[int, int]] = None) -> EnumerationReport:
    """Count cubic graphs on n vertices with girth >= girth_min that have no
    2-LIEC, and how many of those have a 3-LIEC."""
    from .solver import exists_k_liec

    rep = EnumerationReport(n, girth_min)
    for g in enumerate_cubic(n, girth_min, part):
        rep.total_graphs += 1
        if exists_k_liec(g, 2, budget) is None:
            rep.non_two_liec_count += 1
            rep.witnesses.append(emit_graph6(g))
            if exists_k_liec(g, 3, budget) is not None:
                rep.chi3_count += 1
    rep.witnesses.sort()
    return rep


def table1_row_parallel(n: int, girth_min: int, jobs: int,
                        budget: Optional[int] = None) -> EnumerationReport:
    """Same as :func:`table1_row`, split over ``jobs`` worker processes."""
    if jobs <= 1:
        return table1_row(n, girth_min, budget)
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(jobs) as ex:
        parts = list(ex.map(_row_part, [(n, girth_min, budget, (i, jobs)) for i in range(jobs)]))
    out = EnumerationReport(n, girth_min)
    for p in parts:
        out = out.merge(p)
    return out


def _row_part(args) -> EnumerationReport:
    n, girth_min, budget, part = args
    return table1_row(n, girth_min, budget, part)


def gp_specs(n_max: int, girth_min: int = 5) -> list[GPSpec]:
    """One spec per isomorphism class (smallest k wins), e.g. P(7,3) is
    dropped in favour of P(7,2)."""
    out = []
    for n in range(3, n_max + 1):
        seen = set()
        for k in range(1, (n - 1) // 2 + 1):
            spec = GPSpec(n, k)
            g = gen_generalized_petersen(spec)
            if girth(g) < girth_min:
                continue
            form = canonical_form(g)
            if form not in seen:
                seen.add(form)
                out.append(spec)
    return out


def scan_gp(n_max: int, girth_min: int = 5, budget: Optional[int] = None) -> list[GPSpec]:
    """Generalized Petersen graphs P(n,k), n <= n_max, girth >= girth_min,
    that admit no 2-LIEC."""
    from .solver import exists_k_liec

    return [s for s in gp_specs(n_max, girth_min)
            if exists_k_liec(gen_generalized_petersen(s), 2, budget) is None]


def format_table(reports: list[EnumerationReport]) -> str:
    """Text table laid out like the published census: girth rows, n columns."""
    ns = sorted({r.n for r in reports})
    girths = sorted({r.girth_min for r in reports})
    cell = {(r.girth_min, r.n): r.non_two_liec_count for r in reports}
    lines = ["g(G)\\n | " + " | ".join(f"{n:>3}" for n in ns)]
    for gm in girths:
        vals = [f"{cell[gm, n]:>3}" if (gm, n) in cell else "  -" for n in ns]
        lines.append(f">= {gm:<4} | " + " | ".join(vals))
    return "\n".join(lines)


def report_json(reports: list[EnumerationReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)
