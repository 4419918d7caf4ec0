from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liec.families import GPSpec, RingPermutationSpec, gen_ring_permutation, gen_xi
from liec.graph import is_locally_irregular, is_tree
from liec.ring import (build_spanning_plan, color_ring_permutation,
                       color_ring_permutation_detailed, random_ring_spec)
from liec.solver import chi_irr, verify_liec


@st.composite
def ring_specs(draw, max_n: int = 24):
    n = draw(st.integers(3, max_n))
    lengths = []
    left = n
    while left:
        ell = left if left < 6 else draw(st.integers(3, left))
        if left - ell in (1, 2):
            ell = left
        lengths.append(ell)
        left -= ell
    phi = draw(st.permutations(range(n)))
    return RingPermutationSpec(n, tuple(lengths), tuple(phi))


def check_plan(spec: RingPermutationSpec) -> None:
    plan = build_spanning_plan(spec)
    n = spec.n
    xs = [set(plan.X1), set(plan.X2), set(plan.X3)]
    assert set().union(*xs) == set(range(n)) and sum(map(len, xs)) == n
    assert len(plan.X2) == sum(1 for ell in spec.cycle_lengths if ell % 2)
    a, b = plan.chosen_edge
    assert (b - a) % n in (1, n - 1)
    g = gen_ring_permutation(spec)
    sub, _ = g.edge_subgraph(plan.s_prime)
    assert is_locally_irregular(sub)
    rest, _ = g.edge_subgraph([e for e in g.edges() if e not in set(plan.s_prime)])
    assert is_tree(rest)


@settings(max_examples=200)
@given(ring_specs())
def test_plan_invariants(spec):
    check_plan(spec)


@settings(max_examples=200)
@given(ring_specs(max_n=20))
def test_coloring_is_a_3liec(spec):
    res = color_ring_permutation_detailed(spec)
    g = gen_ring_permutation(spec)
    assert verify_liec(g, res.coloring) == []
    classes = res.coloring.classes()
    assert sorted(classes[1]) == sorted(res.plan.s_prime)
    assert sum(len(v) for v in classes.values()) == g.m


@settings(max_examples=200)
@given(ring_specs(max_n=20))
def test_pendant_edge_rule_when_a_long_cycle_leaves_two_pendant_spokes(spec):
    # an even cycle of length >= 4 or an odd one of length >= 7 leaves at least
    # two X1 vertices whose spoke hangs off a degree-2 R-vertex, and the chosen
    # outer edge can only use one of them
    if any((ell >= 4 and ell % 2 == 0) or ell >= 7 for ell in spec.cycle_lengths):
        assert color_ring_permutation_detailed(spec).tree_rule == "pendant-edge"


def test_five_cycle_can_fall_through_to_the_odd_path_rule():
    spec = RingPermutationSpec(5, (5,), (3, 2, 0, 1, 4))
    res = color_ring_permutation_detailed(spec)
    assert res.tree_rule == "pendant-odd-path"
    assert verify_liec(gen_ring_permutation(spec), res.coloring) == []


def test_two_triangles_split_evenly():
    plan = build_spanning_plan(RingPermutationSpec(6, (3, 3)))
    assert (len(plan.X1), len(plan.X2), len(plan.X3)) == (2, 2, 2)


def test_all_even_cycles_need_no_swap():
    for lengths in [(4,), (6,), (4, 4), (8, 6)]:
        n = sum(lengths)
        plan = build_spanning_plan(RingPermutationSpec(n, lengths))
        assert plan.X2 == () and plan.swap_record is None


def test_swap_route():
    spec = RingPermutationSpec(6, (3, 3), (1, 2, 3, 0, 5, 4))
    plan = build_spanning_plan(spec)
    assert plan.swap_record == ((1, 8), (3, 6))
    assert (1, 8) not in plan.s_prime and (3, 6) in plan.s_prime
    assert verify_liec(gen_ring_permutation(spec), color_ring_permutation(spec)) == []
    js = plan.to_json()
    assert js["swap_record"] == {"removed": [1, 8], "added": [3, 6]}


def test_prism_leaves_an_even_path():
    res = color_ring_permutation_detailed(RingPermutationSpec(3, (3,)))
    assert res.tree_rule == "even-path"


@pytest.mark.parametrize("n", range(3, 21))
def test_every_generalized_petersen_graph(n):
    for k in range(1, (n - 1) // 2 + 1):
        spec = RingPermutationSpec.from_gp(GPSpec(n, k))
        assert verify_liec(gen_ring_permutation(spec), color_ring_permutation(spec)) == []


def test_xi3_coloring_is_optimal():
    spec = RingPermutationSpec.from_xi(3)
    g = gen_ring_permutation(spec)
    assert g == gen_xi(3)
    assert verify_liec(g, color_ring_permutation(spec)) == []
    assert chi_irr(g) == 3


def test_random_spec_helper():
    rng = random.Random(0)
    for _ in range(100):
        spec = random_ring_spec(rng.randint(3, 30), rng)
        assert sum(spec.cycle_lengths) == spec.n and min(spec.cycle_lengths) >= 3
