from __future__ import annotations

import json
import random
from importlib import resources

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from liec.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float, max_degree: int | None = None) -> Graph:
    deg = [0] * n
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p and (max_degree is None or (deg[u] < max_degree and deg[v] < max_degree)):
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, max_n: int = 12, max_degree: int | None = None):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if max_degree is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_degree and deg[v] < max_degree:
                kept.append((u, v))
                deg[u] += 1
                deg[v] += 1
        chosen = kept
    return Graph.from_edges(n, chosen)


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 30, max_degree: int | None = None):
    n = draw(st.integers(min_n, max_n))
    deg = [0] * n
    edges = []
    for v in range(1, n):
        options = [u for u in range(v) if max_degree is None or deg[u] < max_degree]
        u = draw(st.sampled_from(options))
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Graph.from_edges(n, edges)


def _schema_store() -> dict:
    store = {}
    for entry in resources.files("liec").joinpath("schemas").iterdir():
        if entry.name.endswith(".json"):
            store[entry.name] = json.loads(entry.read_text())
    return store


@pytest.fixture(scope="session")
def validate():
    """validate(payload, "chi_irr.json") raises on schema mismatch."""
    import jsonschema
    from referencing import Registry, Resource

    store = _schema_store()
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in store.items())

    def check(payload, name: str) -> None:
        jsonschema.Draft202012Validator(store[name], registry=registry).validate(payload)

    return check
