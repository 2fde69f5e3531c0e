import random

from anglecover.density import check_low_density, max_bipartite_matching
from anglecover.instances import gen_henneberg_laman, random_henneberg_steps
from anglecover.transform import BipartiteGraph, build_gmat
from conftest import complete_rotation_graph, random_rotation_graph, rotation_graph


def test_matching_small_bipartite():
    b = BipartiteGraph((0, 1), ("a", "b"), ((0, "a"), (1, "a"), (1, "b")))
    m = max_bipartite_matching(b)
    assert len(m) == 2
    assert set(m) == {0, 1} and len(set(m.values())) == 2


def test_matching_deficient_side():
    b = BipartiteGraph((0, 1, 2), ("a",), ((0, "a"), (1, "a"), (2, "a")))
    assert len(max_bipartite_matching(b)) == 1


def test_low_density_yes_cases():
    assert check_low_density(complete_rotation_graph(5)).low_density
    assert check_low_density(rotation_graph([(0, 1), (1, 2), (2, 0)])).low_density


def test_low_density_no_k6():
    rep = check_low_density(complete_rotation_graph(6))
    assert not rep.low_density
    assert rep.witness is not None
    s = rep.witness
    g = complete_rotation_graph(6)
    inside = sum(1 for u, v in g.edges.values() if u in s and v in s)
    assert inside > 2 * len(s)


def test_low_density_loops_count_once():
    # Two vertices, five parallel edges: 5 > 2*2.
    g = rotation_graph([(0, 1)] * 5)
    rep = check_low_density(g)
    assert not rep.low_density and rep.witness == frozenset({0, 1})


def test_laman_graphs_are_low_density():
    rng = random.Random(11)
    for seed in range(10):
        steps = random_henneberg_steps(rng.randint(2, 10), seed)
        g = gen_henneberg_laman(steps, seed)
        assert check_low_density(g).low_density


def test_random_witnesses_are_valid():
    rng = random.Random(5)
    for _ in range(200):
        g = random_rotation_graph(rng, n_max=6, e_max=14, loops=True)
        rep = check_low_density(g)
        if rep.low_density:
            assert len(rep.matching) == len(build_gmat(g).left)
        else:
            s = rep.witness
            inside = sum(
                1 for u, v in g.edges.values() if u in s and v in s
            )
            assert inside > 2 * len(s)
