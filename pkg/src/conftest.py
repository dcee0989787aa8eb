import random
from itertools import combinations_with_replacement

import pytest

from data.cache import DEFAULT_CACHE_ENTRIES, get_cache
from graph.core import validate_graph
from graph.models import OMEGA, Graph

MULTIPLICITIES = (1, 2, OMEGA)


def make_graph(vertices, edges=(), name="graph") -> Graph:
    return validate_graph(Graph.from_edges(vertices, edges, name=name))


def exhaustive_small_graphs() -> list[Graph]:
    """Every graph on one or two vertices with at most three bundles over {1, 2, omega}."""
    graphs = []
    for vertices in (["v0"], ["v0", "v1"]):
        kinds = [(s, t, m) for s in vertices for t in vertices for m in MULTIPLICITIES]
        for count in range(4):
            for chosen in combinations_with_replacement(kinds, count):
                edges = [(f"b{i}", s, t, m) for i, (s, t, m) in enumerate(chosen)]
                graphs.append(make_graph(vertices, edges, name=f"small{len(graphs)}"))
    return graphs


def sampled_graphs(
    count: int = 150, seed: int = 20240601, sizes: tuple[int, int] = (1, 4), max_bundles: int = 5, prefix: str = "sample"
) -> list[Graph]:
    """Random graphs with a vertex count in ``sizes`` and up to ``max_bundles`` bundles, fixed seed."""
    rng = random.Random(seed)
    graphs = []
    for position in range(count):
        vertices = [f"v{i}" for i in range(rng.randint(*sizes))]
        edges = [
            (f"b{i}", rng.choice(vertices), rng.choice(vertices), rng.choice(MULTIPLICITIES))
            for i in range(rng.randint(0, max_bundles))
        ]
        graphs.append(make_graph(vertices, edges, name=f"{prefix}{position}"))
    return graphs


@pytest.fixture(autouse=True)
def clear_cache():
    get_cache().resize(DEFAULT_CACHE_ENTRIES)
    get_cache().clear()
    yield


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    four_vertex = sampled_graphs(400, seed=20240602, sizes=(4, 4), max_bundles=6, prefix="quad")
    return exhaustive_small_graphs() + sampled_graphs() + four_vertex


@pytest.fixture
def isolated_vertex() -> Graph:
    return make_graph(["v"], name="point")


@pytest.fixture
def line() -> Graph:
    return make_graph(["v", "w"], [("f", "v", "w", 1)], name="line")


@pytest.fixture
def single_loop() -> Graph:
    return make_graph(["v"], [("e", "v", "v", 1)], name="loop")


@pytest.fixture
def toeplitz() -> Graph:
    return make_graph(["v", "w"], [("e", "v", "v", 1), ("f", "v", "w", 1)], name="toeplitz")


@pytest.fixture
def two_cycle() -> Graph:
    return make_graph(["v", "w"], [("a", "v", "w", 1), ("b", "w", "v", 1)], name="two_cycle")


@pytest.fixture
def rose2() -> Graph:
    return make_graph(["v"], [("a", "v", "v", 1), ("b", "v", "v", 1)], name="rose2")


@pytest.fixture
def omega_rose() -> Graph:
    return make_graph(["v"], [("a", "v", "v", OMEGA)], name="omega_rose")


@pytest.fixture
def rose_with_source() -> Graph:
    """Two loops at v fed by a source w."""
    return make_graph(
        ["v", "w"], [("a", "v", "v", 1), ("b", "v", "v", 1), ("c", "w", "v", 1)], name="rose_with_source"
    )


@pytest.fixture
def looped_source() -> Graph:
    """Two loops at v fed by w, which carries a loop of its own."""
    return make_graph(
        ["v", "w"],
        [("a", "v", "v", 1), ("b", "v", "v", 1), ("c", "w", "v", 1), ("d", "w", "w", 1)],
        name="looped_source",
    )


@pytest.fixture
def omega_fork() -> Graph:
    """v sends infinitely many edges to w and one to u."""
    return make_graph(["u", "v", "w"], [("g", "v", "w", OMEGA), ("h", "v", "u", 1)], name="omega_fork")


@pytest.fixture
def fed_omega_fork() -> Graph:
    """omega_fork with an extra vertex x feeding v."""
    return make_graph(
        ["u", "v", "w", "x"],
        [("g", "v", "w", OMEGA), ("h", "v", "u", 1), ("k", "x", "v", 1)],
        name="fed_omega_fork",
    )


@pytest.fixture
def chained_roses() -> Graph:
    """A rose at r1 feeding a rose at r2."""
    return make_graph(
        ["r1", "r2"],
        [("a", "r1", "r1", 1), ("b", "r1", "r1", 1), ("c", "r1", "r2", 1), ("d", "r2", "r2", 1), ("e", "r2", "r2", 1)],
        name="chained_roses",
    )


@pytest.fixture
def build():
    """``build(vertices, edges, name)`` returns a validated graph."""
    return make_graph
