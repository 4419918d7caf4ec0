"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
without ``-s``).
"""

from __future__ import annotations

import itertools
import random
import time

import pytest

from liec.decompose import ODD_CYCLE, classify, classify_all_small, is_decomposable
from liec.enumeration import enumerate_subcubic_connected, scan_gp, table1_row
from liec.families import (GPSpec, builtin_named, gen_cycle,
                           gen_double_diamond_cubic, gen_generalized_petersen,
                           gen_ring_permutation, gen_theta_family, gen_xi)
from liec.graph import Graph, find_diamond_pair, parse_graph6
from liec.ring import color_ring_permutation_detailed, random_ring_spec
from liec.solver import chi_irr, exists_k_liec, verify_liec
from liec.trees import (Shrub, is_2aliec, shrub_2aliec, tree_2liec_odd_thread,
                        tree_2liec_pendant_deg3, tree_2liec_pendant_oddpath)
from liec.xi import build_code_digraph, enumerate_xi_codes, format_code, xi_two_liec_exists
from test_trees import (rule_edge_tree, rule_oddpath_tree, rule_thread_tree,
                        random_tree_edges)
from test_xi import COMPONENTS, PRINTED_ORDERED_CODES


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def test_criterion_01_h0(report):
    value, dt = timed(lambda: chi_irr(builtin_named("H0")))
    report(1, "chi_irr(H0) = 4 in under 10 s", value == 4 and dt < 10, f"{value}, {dt:.2f}s")


def test_criterion_02_petersen_pair(report):
    k72, dt72 = timed(lambda: chi_irr(gen_generalized_petersen(GPSpec(7, 2))))
    none112, dt112 = timed(lambda: exists_k_liec(gen_generalized_petersen(GPSpec(11, 2)), 2))
    ok = k72 == 3 and none112 is None and dt72 < 60 and dt112 < 60
    report(2, "chi_irr(GP(7,2)) = 3 and GP(11,2) has no 2-LIEC, each under 60 s", ok,
           f"{dt72:.2f}s, {dt112:.2f}s")


def test_criterion_03_gp_scan(report):
    found = {(s.n, s.k) for s in scan_gp(13)}
    report(3, "scan_gp(13) = {(7,2), (11,2)}", found == {(7, 2), (11, 2)}, str(sorted(found)))


def test_criterion_04_table1(report):
    expected = {(10, 4): 1, (12, 4): 2, (14, 4): 2, (12, 5): 1, (14, 5): 2}
    t0 = time.perf_counter()
    got = {}
    witnesses_ok = True
    for (n, gm) in expected:
        rep = table1_row(n, gm)
        got[n, gm] = rep.non_two_liec_count
        for w in rep.witnesses:
            g = parse_graph6(w)
            witnesses_ok &= exists_k_liec(g, 2) is None and exists_k_liec(g, 3) is not None
    dt = time.perf_counter() - t0
    report(4, "census rows at desk scale", got == expected and witnesses_ok and dt < 1800,
           f"{got}, {dt:.1f}s")


def test_criterion_05_ring_construction(report):
    rng = random.Random(20240601)
    failures = 0
    for _ in range(200):
        spec = random_ring_spec(rng.randint(3, 20), rng)
        res = color_ring_permutation_detailed(spec)
        g = gen_ring_permutation(spec)
        if res.coloring.k != 3 or verify_liec(g, res.coloring):
            failures += 1
    report(5, "200 random ring permutation graphs get a verified 3-LIEC", failures == 0,
           f"{failures} failures")


def test_criterion_06_xi_pipeline(report):
    codes = sorted(format_code(c) for c in enumerate_xi_codes())
    d = build_code_digraph()
    comps = sorted(({i + 1 for i in c} for c in d.scc), key=min)
    agree = all(xi_two_liec_exists(n) == (exists_k_liec(gen_xi(n), 2) is not None)
                for n in (2, 3, 4))
    odd = not any(xi_two_liec_exists(n) for n in range(3, 200, 2))
    ok = codes == sorted(PRINTED_ORDERED_CODES) and comps == COMPONENTS and agree and odd
    report(6, "XI codes, code digraph components, solver agreement, odd n", ok,
           f"{len(codes)} codes, {len(comps)} components")


def test_criterion_07_double_diamond(report):
    g = gen_double_diamond_cubic()
    none = exists_k_liec(g, 2) is None
    pair = find_diamond_pair(g)
    report(7, "double-diamond graph has no 2-LIEC and the gadget is located",
           none and pair is not None, str(pair))


def test_criterion_08_theta(report):
    values = [chi_irr(gen_theta_family(2, 1)), chi_irr(gen_theta_family(3, 1))]
    report(8, "theta graphs (2,1) and (3,1) need 3 colors", values == [3, 3], str(values))


def test_criterion_09_decomposability(report):
    res = classify_all_small(9)
    report(9, "recognizer matches the partition oracle on all subcubic graphs <= 9 vertices",
           res["disagreements"] == [], f"{res['graphs']} graphs")


def test_criterion_10_claw_free(report):
    checked = bad = 0
    for g in enumerate_subcubic_connected(11, n_min=2, claw_free=True):
        if not is_decomposable(g):
            continue
        checked += 1
        if chi_irr(g, 3) is None:
            bad += 1
    report(10, "claw-free decomposable subcubic graphs <= 11 vertices have chi_irr <= 3",
           bad == 0 and checked > 0, f"{checked} graphs, {bad} exceptions")


def test_criterion_11_trees(report):
    rng = random.Random(7)
    shrub_bad = 0
    for _ in range(1000):
        n = rng.randint(2, 30)
        t = Graph.from_edges(n, random_tree_edges(rng, n, None))
        root = rng.choice([v for v in range(n) if t.degree(v) == 1])
        s = Shrub(t, root)
        if not is_2aliec(s, shrub_2aliec(s).coloring):
            shrub_bad += 1
    rule_bad = [0, 0, 0]
    for _ in range(1000):
        t, u, v = rule_edge_tree(rng, rng.randint(1, 25))
        rule_bad[0] += bool(verify_liec(t, tree_2liec_pendant_deg3(t, u, v)))
        t, path = rule_oddpath_tree(rng, rng.randint(1, 20), rng.randint(1, 4))
        rule_bad[1] += bool(verify_liec(t, tree_2liec_pendant_oddpath(t, path)))
        t, thread = rule_thread_tree(rng, rng.randint(1, 12), rng.randint(1, 12),
                                      rng.randint(0, 3))
        rule_bad[2] += bool(verify_liec(t, tree_2liec_odd_thread(t, thread)))
    report(11, "1000 shrubs and 1000 trees per tree rule", shrub_bad == 0 and rule_bad == [0, 0, 0],
           f"shrub failures {shrub_bad}, rule failures {rule_bad}")


def segment_oracle(n: int, k_max: int = 4):
    """Least k for which C_n's edges can be colored so that every maximal
    monochromatic run has exactly two edges (the only locally irregular
    subgraphs of a cycle are disjoint 2-edge paths)."""
    for k in range(1, k_max + 1):
        for col in itertools.product(range(k), repeat=n):
            if len(set(col)) == 1:
                continue                      # a monochromatic cycle is regular
            start = next(i for i in range(n) if col[i] != col[i - 1])
            runs, length = [], 1
            for j in range(1, n + 1):
                if col[(start + j) % n] == col[(start + j - 1) % n] and j < n:
                    length += 1
                else:
                    runs.append(length)
                    length = 1
            if all(r == 2 for r in runs):
                return k
    return None


def test_criterion_12_cycles(report):
    got = {n: chi_irr(gen_cycle(n)) for n in (4, 6, 8)}
    oracle = {n: segment_oracle(n) for n in (4, 6, 8)}
    c5 = classify(gen_cycle(5)).tag == ODD_CYCLE and segment_oracle(5) is None
    ok = got == oracle == {4: 2, 6: 3, 8: 2} and c5
    report(12, "cycle series C4, C6, C8 and C5", ok, f"solver {got}, oracle {oracle}")
