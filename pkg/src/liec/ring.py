"""Constructive 3-LIEC of ring permutation graphs.

Color 1 is a locally irregular spanning subgraph S' made of R-cycle edges,
some spokes and a single outer-cycle edge; what is left is a tree, which the
tree colorers split into colors 2 and 3.

Labels follow :func:`gen_ring_permutation`: outer vertex i is i, R-vertex j is
n + j.  Inside cycle i of R the vertices are v_{i,1}, ..., v_{i,l_i} with
1-based positions, as generated by :meth:`RingPermutationSpec.cycles`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .families import RingPermutationSpec, gen_ring_permutation
from .graph import Edge, Graph, edge_key, is_locally_irregular, is_tree
from .solver import EdgeColoring, verify_liec
from .trees import InvariantError, tree_2liec


@dataclass(frozen=True)
class SpanningPlan:
    """The color-1 subgraph S' = S + chosen_edge, with the outer-vertex
    classes X1 (untouched by S), X2 (spoke to the last vertex of an odd
    cycle) and X3 (the rest), all computed in S before any swap."""

    n: int
    S: tuple[Edge, ...]
    X1: tuple[int, ...]
    X2: tuple[int, ...]
    X3: tuple[int, ...]
    chosen_edge: Edge
    swap_record: Optional[tuple[Edge, Edge]] = None

    @property
    def s_prime(self) -> tuple[Edge, ...]:
        edges = set(self.S)
        if self.swap_record is not None:
            old, new = self.swap_record
            edges.discard(old)
            edges.add(new)
        edges.add(self.chosen_edge)
        return tuple(sorted(edges))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "S": [list(e) for e in self.S],
            "X1": list(self.X1), "X2": list(self.X2), "X3": list(self.X3),
            "chosen_edge": list(self.chosen_edge),
            "swap_record": None if self.swap_record is None else
            {"removed": list(self.swap_record[0]), "added": list(self.swap_record[1])},
            "S_prime": [list(e) for e in self.s_prime],
        }


def build_spanning_plan(spec: RingPermutationSpec) -> SpanningPlan:
    n = spec.n
    inv = spec.phi_inverse()

    def spoke(rv: int) -> Edge:
        return edge_key(inv[rv], n + rv)

    S: list[Edge] = []
    last_of_odd: dict[int, list[int]] = {}  # outer vertex -> its odd cycle
    for cyc in spec.cycles():
        length = len(cyc)
        # 1-based position p is cyc[p - 1]
        if length % 2 == 0:
            S += [edge_key(n + cyc[t], n + cyc[(t + 1) % length]) for t in range(length)]
            S += [spoke(cyc[p - 1]) for p in range(2, length + 1, 2)]
        else:
            S += [edge_key(n + cyc[t], n + cyc[t + 1]) for t in range(length - 1)]
            S += [spoke(cyc[p - 1]) for p in range(2, length, 2)]
            S.append(spoke(cyc[-1]))
            last_of_odd[inv[cyc[-1]]] = cyc
    S.sort()

    touched = {x for e in S for x in e if x < n}
    X1 = tuple(v for v in range(n) if v not in touched)
    X2 = tuple(sorted(last_of_odd))
    X3 = tuple(v for v in range(n) if v in touched and v not in last_of_odd)
    cls = {**{v: 1 for v in X1}, **{v: 2 for v in X2}, **{v: 3 for v in X3}}

    outer = [(i, (i + 1) % n) for i in range(n)]
    chosen = next((edge_key(a, b) for a, b in outer if {cls[a], cls[b]} == {1, 3}), None)
    swap = None
    if chosen is None:
        pick = next(((a, b) for a, b in outer if {cls[a], cls[b]} == {2, 3}), None)
        if pick is None:
            raise InvariantError("no X1-X3 or X2-X3 edge on the outer cycle")
        u = pick[0] if cls[pick[0]] == 2 else pick[1]
        cyc = last_of_odd[u]
        swap = (spoke(cyc[-1]), spoke(cyc[0]))
        chosen = edge_key(*pick)

    plan = SpanningPlan(n, tuple(S), X1, X2, X3, chosen, swap)
    g = gen_ring_permutation(spec)
    sub, _ = g.edge_subgraph(plan.s_prime)
    if not is_locally_irregular(sub):
        raise InvariantError("S' is not locally irregular")
    return plan


@dataclass(frozen=True)
class RingColoring:
    coloring: EdgeColoring
    plan: SpanningPlan
    tree_rule: str

    def to_json(self) -> dict:
        return {"plan": self.plan.to_json(), "tree_rule": self.tree_rule,
                "coloring": self.coloring.to_json()}


def color_ring_permutation_detailed(spec: RingPermutationSpec) -> RingColoring:
    g = gen_ring_permutation(spec)
    plan = build_spanning_plan(spec)
    first = set(plan.s_prime)
    rest = [e for e in g.edges() if e not in first]
    tree, old = g.edge_subgraph(rest)
    if not is_tree(tree):
        raise InvariantError("G - E(S') is not a tree")
    tcol, rule = tree_2liec(tree)
    color = {e: 1 for e in first}
    for (a, b), c in tcol.color.items():
        color[edge_key(old[a], old[b])] = c + 1
    col = EdgeColoring(3, color)
    bad = verify_liec(g, col)
    if bad:
        raise InvariantError(f"ring coloring invalid: {bad[:3]}")
    return RingColoring(col, plan, rule)


def color_ring_permutation(spec: RingPermutationSpec) -> EdgeColoring:
    """A 3-LIEC of the ring permutation graph, built without search."""
    return color_ring_permutation_detailed(spec).coloring


def random_ring_spec(n: int, rng) -> RingPermutationSpec:
    """Random partition of n into cycle lengths >= 3 and a random phi."""
    lengths = []
    left = n
    while left:
        if left < 6:
            lengths.append(left)
            break
        ell = rng.randint(3, left - 3) if rng.random() < 0.7 else left
        lengths.append(ell)
        left -= ell
    phi = list(range(n))
    rng.shuffle(phi)
    return RingPermutationSpec(n, tuple(lengths), tuple(phi))
