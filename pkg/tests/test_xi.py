from __future__ import annotations

import pytest

from liec.families import gen_xi
from liec.solver import exists_k_liec, verify_liec
from liec.xi import (INTERNAL_EDGES, V0, U0, V2, U2, arc_kind, block_colorings,
                     build_code_digraph, code_labels, enumerate_xi_codes, excluded_codes,
                     format_code, order_code, parse_code, raw_codes, xi_coloring_from_walk,
                     xi_two_liec_exists)

PRINTED_ORDERED_CODES = """
(a3,a3,a1,b3) (a2,a2,a3,b1) (a2,a2,a2,a1) (a2,a2,a2,b2) (a2,a2,b1,b2) (a1,a1,a2,b2)
(a3,b2,a3,b2) (a3,b2,b2,b3) (a3,b3,a3,a2) (a3,b3,b2,b3) (a2,b1,a2,b3) (a2,b1,b2,b3)
(a2,b2,a2,a1) (a2,b2,b1,b2) (a2,b3,a3,a2) (a2,b3,a2,b3) (a1,b2,a3,a2) (a1,b2,a3,b2)
(b1,b1,a2,b2) (b2,b2,a2,a1) (b2,b2,a2,b2) (b2,b2,a1,b3) (b2,b2,b1,b2) (b3,b3,a3,b1)
""".split()

COMPONENTS = [{1, 2, 3, 4}, {5, 6, 7, 8}, {9}, {10}, {11}, {12}, {13, 14, 15, 16}]


def test_ordered_codes_match_printed_list():
    codes = enumerate_xi_codes()
    assert len(codes) == 24
    assert sorted(format_code(c) for c in codes) == sorted(PRINTED_ORDERED_CODES)


def test_code_membership_facts():
    fmt = {format_code(c) for c in enumerate_xi_codes()}
    assert "(a3,a3,a1,b3)" in fmt
    assert not any(c[0] == ("a", 3) and c[1] == ("a", 2) for c in raw_codes())
    for c in raw_codes():
        assert (c[2], c[3]) not in {(("a", 3), ("a", 1)), (("b", 1), ("b", 3))}
        assert c[2] != c[3]


def test_raw_codes_closed_under_block_symmetries():
    raw = raw_codes()
    for p, q, r, s in raw:
        assert {(p, q, s, r), (q, p, r, s), (q, p, s, r)} <= raw


def test_code_text_roundtrip():
    for c in enumerate_xi_codes():
        assert parse_code(format_code(c)) == c
        assert order_code(c) == c
    with pytest.raises(ValueError):
        parse_code("(a3,a3,c1,b3)")


def test_excluded_codes_have_no_predecessor():
    excluded = excluded_codes()
    assert len(excluded) == 8
    full = build_code_digraph(full=True)
    index = {c: i for i, c in enumerate(full.codes)}
    for c in excluded:
        assert not full.adjacency[:, index[c]].any()
    kept = {format_code(c) for c in enumerate_xi_codes()} - {format_code(c) for c in excluded}
    assert kept == set(code_labels())


def test_digraph_structure():
    d = build_code_digraph()
    assert len(d.codes) == 16
    assert d.adjacency[0, 2]                 # c1 -> c3
    assert arc_kind(d.codes[0], d.codes[2]) == "straight"
    comps = [{i + 1 for i in comp} for comp in d.scc]
    assert sorted(comps, key=min) == COMPONENTS
    assert all(d.scc_bipartite())
    assert not any(d.adjacency[i, i] for i in range(16))


def _realize(code):
    return next((inner, halves) for inner, halves, c in block_colorings() if c == code)


def test_every_arc_glues_two_concrete_blocks():
    d = build_code_digraph()
    for i, j in d.arcs():
        ci, cj = d.codes[i], d.codes[j]
        p, q, r, s = cj
        right = cj if arc_kind(ci, cj) == "straight" else (q, p, r, s)
        left_inner, left_halves = _realize(ci)
        right_inner, right_halves = _realize(right)
        # block A uses ids 0..5, block B 6..11; junctions V2-V0' and U2-U0'
        color = {}
        for (x, y), c in zip(INTERNAL_EDGES, left_inner):
            color[x, y] = c
        for (x, y), c in zip(INTERNAL_EDGES, right_inner):
            color[x + 6, y + 6] = c
        assert left_halves[2] == right_halves[0] and left_halves[3] == right_halves[1]
        color[V2, V0 + 6] = left_halves[2]
        color[U2, U0 + 6] = left_halves[3]
        deg = {}
        for (x, y), c in color.items():
            deg[x, c] = deg.get((x, c), 0) + 1
            deg[y, c] = deg.get((y, c), 0) + 1
        # the outer half-edges still count at their vertices
        for x, c in ((V0, left_halves[0]), (U0, left_halves[1]),
                     (V2 + 6, right_halves[2]), (U2 + 6, right_halves[3])):
            deg[x, c] = deg.get((x, c), 0) + 1
        for (x, y), c in color.items():
            assert deg[x, c] != deg[y, c], (format_code(ci), format_code(cj), (x, y))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_walk_criterion_matches_solver(n):
    assert xi_two_liec_exists(n) == (exists_k_liec(gen_xi(n), 2) is not None)


def test_parity():
    assert xi_two_liec_exists(2)
    assert not xi_two_liec_exists(3)
    assert not xi_two_liec_exists(99)
    assert all(not xi_two_liec_exists(n) for n in range(3, 200, 2))
    assert all(xi_two_liec_exists(n) for n in range(2, 60, 2))


@pytest.mark.parametrize("n", [2, 4, 6, 10, 16])
def test_walks_lift_to_colorings(n):
    col = xi_coloring_from_walk(n)
    assert col is not None and verify_liec(gen_xi(n), col) == []
    assert xi_coloring_from_walk(n + 1) is None


def test_exports(validate):
    d = build_code_digraph()
    dot = d.to_dot()
    assert dot.startswith("digraph D {") and "c1 -> c3;" in dot
    payload = d.to_json()
    validate(payload, "code_digraph.json")
    assert payload["vertices"][0] == {"id": "c1", "code": "(a3,a3,a1,b3)"}
