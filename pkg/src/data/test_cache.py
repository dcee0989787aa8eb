import pytest

from data.cache import Cache, get_cache
from graph.lattice import closure, enumerate_he


def test_oldest_entries_are_dropped_first():
    cache = Cache(max_entries=3)
    for position in range(5):
        cache.set_lattice(f"digest{position}", [frozenset()])
    assert len(cache) == 3
    assert cache.get_lattice("digest0") is None
    assert cache.get_lattice("digest1") is None
    assert cache.get_lattice("digest4") == [frozenset()]


def test_rewriting_an_entry_makes_it_newest():
    cache = Cache(max_entries=2)
    cache.set_closure("g", frozenset({"v"}), {"v": 0})
    cache.set_lattice("g", [frozenset()])
    cache.set_closure("g", frozenset({"v"}), {"v": 0, "w": 1})
    cache.set_lattice("h", [frozenset()])
    assert cache.get_lattice("g") is None
    assert cache.get_closure("g", frozenset({"v"})) == {"v": 0, "w": 1}


def test_resize_evicts():
    cache = Cache(max_entries=4)
    for position in range(4):
        cache.set_lattice(f"digest{position}", [])
    cache.resize(1)
    assert len(cache) == 1
    assert cache.get_lattice("digest3") == []
    with pytest.raises(ValueError):
        cache.resize(0)


def test_engine_stays_within_the_bound(corpus):
    get_cache().resize(8)
    for graph in corpus[:40]:
        enumerate_he(graph)
        for vertex in graph.vertices:
            closure(graph, [vertex])
        assert len(get_cache()) <= 8
