from __future__ import annotations

import random

import pytest

from liec.decompose import (DECOMPOSABLE, FAMILY_T, ODD_CYCLE, ODD_PATH, classify,
                            classify_all_small, is_decomposable, replay_witness)
from liec.enumeration import enumerate_subcubic_connected
from liec.families import gen_cycle, gen_path
from liec.graph import Graph, GraphError, edge_key, parse_graph6
from liec.solver import is_decomposable_oracle


def grow_family_t(rng: random.Random, steps: int) -> Graph:
    """Random member of T: start from a triangle and hang appendages on
    degree-2 triangle vertices."""
    adj: dict[int, set[int]] = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    nxt = 3

    def link(a: int, b: int) -> None:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for _ in range(steps):
        spots = [x for x in adj if len(adj[x]) == 2
                 and any(b in adj[a] for a in adj[x] for b in adj[x] if a < b)]
        if not spots:
            break
        x = rng.choice(spots)
        if rng.random() < 0.5:
            length = 2 * rng.randint(1, 2)
            chain = [x] + list(range(nxt, nxt + length))
            nxt += length
            for a, b in zip(chain, chain[1:]):
                link(a, b)
        else:
            length = 2 * rng.randint(0, 1) + 1
            chain = [x] + list(range(nxt, nxt + length))
            nxt += length
            for a, b in zip(chain, chain[1:]):
                link(a, b)
            c, t1, t2 = chain[-1], nxt, nxt + 1
            nxt += 2
            link(c, t1)
            link(c, t2)
            link(t1, t2)
    return Graph.from_edges(nxt, sorted({edge_key(a, b) for a in adj for b in adj[a]}))


def test_basic_verdicts():
    assert classify(gen_cycle(3)).tag == FAMILY_T
    assert classify(gen_cycle(5)).tag == ODD_CYCLE
    assert classify(gen_cycle(6)).tag == DECOMPOSABLE
    assert classify(gen_path(3)).tag == ODD_PATH
    assert classify(gen_path(1)).tag == ODD_PATH
    assert classify(gen_path(2)).tag == DECOMPOSABLE
    assert classify(gen_cycle(3)).to_json() == {"verdict": "FamilyT", "base_triangle": [0, 1, 2],
                                                "witness": []}


def test_disconnected_input_is_rejected():
    with pytest.raises(GraphError):
        classify(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert not is_decomposable(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_decomposable(Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]))


def test_smallest_family_members():
    assert classify_all_small(4)["family_t"] == ["Bw"]
    five = classify_all_small(5)["family_t"]
    assert sorted(five) == ["Bw", "DhK"]
    # DhK: a triangle with a pendant path of length 2
    g = parse_graph6("DhK")
    assert sorted(g.degrees()) == [1, 2, 2, 2, 3]


def test_recognizer_matches_oracle_up_to_eight_vertices():
    report = classify_all_small(8)
    assert report["disagreements"] == []
    assert report["graphs"] == sum(1 for _ in enumerate_subcubic_connected(8, n_min=2))


def test_witness_replays_to_the_same_graph():
    for g in enumerate_subcubic_connected(9, n_min=3):
        v = classify(g)
        if v.tag == FAMILY_T:
            assert replay_witness(g.n, v.base_triangle, v.witness) == g
            for step in v.witness:
                assert step.to_json()["parity"] == ("even" if step.shape == "even-path" else "odd")


@pytest.mark.parametrize("seed", range(40))
def test_grown_members_are_recognized(seed):
    rng = random.Random(seed)
    g = grow_family_t(rng, rng.randint(1, 4))
    v = classify(g)
    assert v.tag == FAMILY_T
    assert replay_witness(g.n, v.base_triangle, v.witness) == g
    if g.m <= 14:
        assert not is_decomposable_oracle(g)


def test_appendage_on_wrong_vertex_is_decomposable():
    # a pendant edge (odd) on a triangle vertex breaks membership
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert classify(g).tag == DECOMPOSABLE
    assert is_decomposable_oracle(g)
