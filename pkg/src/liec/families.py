"""Generators for the graph families used in the experiments.

Every generator documents its vertex labeling so that colorings printed by
the CLI can be read back against the construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, parse_graph6


@dataclass(frozen=True)
class GPSpec:
    n: int
    k: int

    def __post_init__(self):
        if not (self.n >= 3 and 1 <= self.k and 2 * self.k < self.n):
            raise GraphError(f"generalized Petersen P({self.n},{self.k}) needs 1 <= k < n/2")


@dataclass(frozen=True)
class RingPermutationSpec:
    """Outer cycle C_n joined by a perfect matching to a 2-regular graph R.

    R is the disjoint union of cycles with the given lengths; its vertices are
    numbered 0..n-1 cycle after cycle, consecutively around each cycle.
    ``phi[i]`` is the R-vertex matched to outer vertex i.
    """

    n: int
    cycle_lengths: tuple[int, ...]
    phi: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "cycle_lengths", tuple(self.cycle_lengths))
        phi = tuple(self.phi) if self.phi else tuple(range(self.n))
        object.__setattr__(self, "phi", phi)
        if self.n < 3:
            raise GraphError("ring permutation graphs need n >= 3")
        if sum(self.cycle_lengths) != self.n or any(c < 3 for c in self.cycle_lengths):
            raise GraphError("cycle lengths must be >= 3 and sum to n")
        if sorted(phi) != list(range(self.n)):
            raise GraphError("phi must be a permutation of 0..n-1")

    def cycles(self) -> list[list[int]]:
        """R-vertex ids of each cycle, in cyclic order."""
        out, start = [], 0
        for length in self.cycle_lengths:
            out.append(list(range(start, start + length)))
            start += length
        return out

    def phi_inverse(self) -> list[int]:
        inv = [0] * self.n
        for i, r in enumerate(self.phi):
            inv[r] = i
        return inv

    @classmethod
    def from_gp(cls, spec: GPSpec) -> "RingPermutationSpec":
        """P(n,k): outer u_i, inner cycles of v_i v_{i+k}."""
        n, k = spec.n, spec.k
        phi = [0] * n
        seen = [False] * n
        lengths = []
        rid = 0
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            i = s
            while not seen[i]:
                seen[i] = True
                phi[i] = rid
                rid += 1
                length += 1
                i = (i + k) % n
            lengths.append(length)
        return cls(n, tuple(lengths), tuple(phi))

    @classmethod
    def from_xi(cls, n: int) -> "RingPermutationSpec":
        """XI_n as a cycle permutation graph (outer v_j, inner u_j)."""
        if n < 2:
            raise GraphError("XI_n needs n >= 2")
        return cls(3 * n, (3 * n,), tuple(_xi_spoke(j) for j in range(3 * n)))


def _xi_spoke(j: int) -> int:
    r = j % 3
    return j + 1 if r == 0 else j - 1 if r == 1 else j


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def gen_path(edges: int) -> Graph:
    """Path 0-1-...-edges."""
    if edges < 1:
        raise GraphError("path needs at least one edge")
    return Graph.from_edges(edges + 1, ((i, i + 1) for i in range(edges)))


def gen_star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def gen_generalized_petersen(spec: GPSpec) -> Graph:
    """Outer u_i -> i, inner v_i -> n + i."""
    n, k = spec.n, spec.k
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def gen_ring_permutation(spec: RingPermutationSpec) -> Graph:
    """Outer vertex i -> i, R-vertex j -> n + j."""
    n = spec.n
    edges = [(i, (i + 1) % n) for i in range(n)]
    for cyc in spec.cycles():
        edges += [(n + cyc[t], n + cyc[(t + 1) % len(cyc)]) for t in range(len(cyc))]
    edges += [(i, n + spec.phi[i]) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def gen_xi(n: int) -> Graph:
    """XI_n: cycles v_0..v_{3n-1} (ids 0..3n-1) and u_0..u_{3n-1} (ids 3n..6n-1),
    spokes v_{3i}u_{3i+1}, v_{3i+1}u_{3i}, v_{3i+2}u_{3i+2}."""
    return gen_ring_permutation(RingPermutationSpec.from_xi(n))


def gen_theta_family(k: int, t: int) -> Graph:
    """Adjacent u=0, v=1 joined by k further paths of length 4t+1.

    Path p (0-based) uses internal vertices 2 + 4tp .. 2 + 4t(p+1) - 1 in order
    from u to v.
    """
    if k < 2 or t < 1:
        raise GraphError("theta family needs k >= 2 and t >= 1")
    inner = 4 * t
    edges = [(0, 1)]
    for p in range(k):
        base = 2 + inner * p
        chain = [0] + list(range(base, base + inner)) + [1]
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(2 + k * inner, edges)


def gen_double_diamond_cubic() -> Graph:
    """Two diamonds with tips joined by the edge u1v1, opposite tips u4, v4
    joined to each other.

    Labels: u1..u4 -> 0..3, v1..v4 -> 4..7.  Diamond spines are u2u3, v2v3.
    """
    u1, u2, u3, u4, v1, v2, v3, v4 = range(8)
    edges = [(u1, u2), (u1, u3), (u2, u3), (u2, u4), (u3, u4),
             (v1, v2), (v1, v3), (v2, v3), (v2, v4), (v3, v4),
             (u1, v1), (u4, v4)]
    return Graph.from_edges(8, edges)


# H0: two bow-ties (pairs of triangles sharing a vertex) whose centers 0 and 5
# are joined by an edge.  It is the only cactus on at most 10 vertices without
# a 3-LIEC (scripts/find_h0.py reproduces the search).
_H0_EDGES: list[tuple[int, int]] = [
    (0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4),
    (0, 5),
    (5, 6), (5, 7), (6, 7), (5, 8), (5, 9), (8, 9),
]

_NAMED_G6 = {
    # girth-5 cubic graphs without a 2-LIEC that are not generalized Petersen
    # graphs; the only ones on 12 and 14 vertices (see scripts/reproduce_table1.py)
    "G5_12": "KsP@P?SCOR?q",
    "G5_14": "MsP@PGOC?P?b?g?S_",
}


def builtin_named(name: str) -> Graph:
    if name == "H0":
        return h0()
    if name.startswith("GP_"):
        try:
            _, n, k = name.split("_")
            return gen_generalized_petersen(GPSpec(int(n), int(k)))
        except ValueError:
            raise GraphError(f"bad generalized Petersen name {name!r}") from None
    if name == "Petersen":
        return gen_generalized_petersen(GPSpec(5, 2))
    if name in _NAMED_G6:
        return parse_graph6(_NAMED_G6[name])
    raise GraphError(f"unknown builtin graph {name!r}; known: {', '.join(builtin_names())}")


def builtin_names() -> list[str]:
    return ["H0", "Petersen", "GP_7_2", "GP_11_2", *sorted(_NAMED_G6)]


def h0() -> Graph:
    n = 1 + max(max(e) for e in _H0_EDGES)
    return Graph.from_edges(n, _H0_EDGES)
