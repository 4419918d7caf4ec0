"""Which connected graphs admit a locally irregular edge-coloring at all.

The exceptions are odd paths, odd cycles, and the family T: the triangle,
and every graph obtained from a member of T by hanging an appendage on a
degree-2 vertex that lies on a triangle.  An appendage is an even path, or an
odd path whose far end is glued to a triangle.  Membership in T is recognized
by peeling appendages off until a lone triangle remains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, edge_key, is_connected

DECOMPOSABLE = "Decomposable"
ODD_PATH = "OddPath"
ODD_CYCLE = "OddCycle"
FAMILY_T = "FamilyT"

EVEN_PATH = "even-path"
ODD_PATH_TRIANGLE = "odd-path-triangle"


@dataclass(frozen=True)
class PeelStep:
    """One appendage: ``path`` runs from the attachment vertex outwards.

    For ``odd-path-triangle`` the path ends at the triangle's attachment corner
    and ``triangle`` holds the two other corners.
    """
    attach: int
    shape: str
    path: tuple[int, ...]
    triangle: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def to_json(self) -> dict:
        return {"attach": self.attach, "shape": self.shape,
                "parity": "even" if self.length % 2 == 0 else "odd",
                "length": self.length, "path": list(self.path),
                "triangle": list(self.triangle)}


@dataclass(frozen=True)
class DecomposabilityVerdict:
    tag: str
    base_triangle: tuple[int, ...] = ()
    witness: tuple[PeelStep, ...] = field(default=())

    @property
    def decomposable(self) -> bool:
        return self.tag == DECOMPOSABLE

    def to_json(self) -> dict:
        out: dict = {"verdict": self.tag}
        if self.tag == FAMILY_T:
            out["base_triangle"] = list(self.base_triangle)
            out["witness"] = [s.to_json() for s in self.witness]
        return out


def classify(g: Graph) -> DecomposabilityVerdict:
    if not is_connected(g) or g.n == 0:
        raise GraphError("classify needs a connected graph")
    if g.n == 3 and g.m == 3:
        return DecomposabilityVerdict(FAMILY_T, (0, 1, 2))
    if g.max_degree <= 2 and g.m % 2 == 1:
        if g.m == g.n - 1:
            return DecomposabilityVerdict(ODD_PATH)
        return DecomposabilityVerdict(ODD_CYCLE)
    if g.max_degree == 3:
        found = _peel_to_triangle({v: set(a) for v, a in enumerate(g.adj)})
        if found is not None:
            base, steps = found
            return DecomposabilityVerdict(FAMILY_T, base, tuple(steps))
    return DecomposabilityVerdict(DECOMPOSABLE)


def _on_triangle(adj: dict[int, set[int]], x: int) -> bool:
    nb = sorted(adj[x])
    return any(b in adj[a] for i, a in enumerate(nb) for b in nb[i + 1:])


def _walk(adj: dict[int, set[int]], start: int, nxt: int) -> list[int]:
    """Follow degree-2 vertices from ``start`` through ``nxt`` until a vertex of
    another degree; returns the whole vertex sequence."""
    path = [start, nxt]
    while len(adj[path[-1]]) == 2:
        a, b = adj[path[-1]]
        step = a if a != path[-2] else b
        if step in path:
            return []
        path.append(step)
    return path


def _appendages(adj: dict[int, set[int]]) -> list[PeelStep]:
    """Every appendage that could have been the last one added."""
    found = []
    for v in sorted(adj):
        if len(adj[v]) == 1:
            path = _walk(adj, v, next(iter(adj[v])))
            if path and len(adj[path[-1]]) == 3 and (len(path) - 1) % 2 == 0:
                found.append(PeelStep(path[-1], EVEN_PATH, tuple(reversed(path))))
        elif len(adj[v]) == 3:
            for a in adj[v]:
                for b in adj[v]:
                    if a < b and b in adj[a] and len(adj[a]) == len(adj[b]) == 2:
                        (out,) = adj[v] - {a, b}
                        path = _walk(adj, v, out)
                        if path and len(adj[path[-1]]) == 3 and (len(path) - 1) % 2 == 1:
                            found.append(PeelStep(path[-1], ODD_PATH_TRIANGLE,
                                                  tuple(reversed(path)), (a, b)))
    found.sort(key=lambda s: (s.attach, s.shape, s.path))
    return found


def _remove(adj: dict[int, set[int]], step: PeelStep) -> dict[int, set[int]]:
    gone = set(step.path[1:]) | set(step.triangle)
    return {v: nb - gone for v, nb in adj.items() if v not in gone}


def _peel_to_triangle(adj: dict[int, set[int]]):
    if len(adj) == 3 and all(len(nb) == 2 for nb in adj.values()):
        return tuple(sorted(adj)), []
    for step in _appendages(adj):
        rest = _remove(adj, step)
        x = step.attach
        if len(rest[x]) == 2 and _on_triangle(rest, x):
            sub = _peel_to_triangle(rest)
            if sub is not None:
                base, steps = sub
                return base, [step] + steps
    return None


def replay_witness(n: int, base: tuple[int, ...], steps: tuple[PeelStep, ...]) -> Graph:
    """Rebuild the graph from a FamilyT witness by re-attaching appendages in
    reverse peeling order, checking each attachment is legal."""
    adj: dict[int, set[int]] = {v: set() for v in base}
    a, b, c = base
    for x, y in ((a, b), (a, c), (b, c)):
        adj[x].add(y)
        adj[y].add(x)
    for step in reversed(steps):
        x = step.attach
        if x not in adj or len(adj[x]) != 2 or not _on_triangle(adj, x):
            raise GraphError(f"illegal attachment at {x}")
        for p, q in zip(step.path, step.path[1:]):
            adj.setdefault(p, set()).add(q)
            adj.setdefault(q, set()).add(p)
        if step.shape == ODD_PATH_TRIANGLE:
            c0 = step.path[-1]
            t1, t2 = step.triangle
            for p, q in ((c0, t1), (c0, t2), (t1, t2)):
                adj.setdefault(p, set()).add(q)
                adj.setdefault(q, set()).add(p)
    edges = {edge_key(u, v) for u in adj for v in adj[u]}
    return Graph.from_edges(n, sorted(edges))


def is_decomposable(g: Graph) -> bool:
    """Componentwise: every component must be decomposable (isolated vertices are)."""
    from .graph import components

    for comp in components(g):
        if len(comp) > 1 and not classify(g.edge_subgraph_vertices(comp)).decomposable:
            return False
    return True


def classify_all_small(n_max: int) -> dict:
    """Run :func:`classify` against the brute-force partition oracle on every
    connected graph with maximum degree <= 3 and at most ``n_max`` vertices."""
    from .enumeration import enumerate_subcubic_connected
    from .graph import emit_graph6
    from .solver import is_decomposable_oracle

    if n_max > 9:
        raise ValueError("classify_all_small is limited to n_max <= 9")
    counts: dict[str, int] = {}
    members: list[str] = []
    disagreements: list[str] = []
    total = 0
    for g in enumerate_subcubic_connected(n_max, n_min=2):
        total += 1
        verdict = classify(g)
        counts[verdict.tag] = counts.get(verdict.tag, 0) + 1
        if verdict.tag == FAMILY_T:
            members.append(emit_graph6(g))
        if verdict.decomposable != is_decomposable_oracle(g):
            disagreements.append(emit_graph6(g))
    return {"n_max": n_max, "graphs": total, "counts": counts,
            "family_t": members, "disagreements": disagreements}


def verdict_or_none(g: Graph) -> Optional[str]:
    """Tag of a non-decomposable graph, None when decomposable."""
    v = classify(g)
    return None if v.decomposable else v.tag
