import random

from anglecover.allocate import max_matching_general, optimal_allocation
from anglecover.core import CoverSpec, check_cover
from anglecover.solve import min_allocation_bruteforce
from anglecover.transform import medial_graph
from conftest import multigraph, random_rotation_graph, rotation_graph


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return rotation_graph(outer + inner + spokes)


def test_matching_sizes():
    assert len(max_matching_general(multigraph(3, [(0, 1), (1, 2), (2, 0)]))) == 1
    c6 = multigraph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert len(max_matching_general(c6)) == 3


def test_matching_petersen_medial():
    med, _ = medial_graph(petersen())
    assert len(max_matching_general(med)) == len(med.vertices) // 2


def test_allocation_size_formula():
    g = petersen()
    med, _ = medial_graph(g)
    asg, size = optimal_allocation(g)
    assert size == len(g.edges) - len(max_matching_general(med))
    spec = CoverSpec(len(g.edges), 2)
    assert check_cover(g, asg, spec).valid


def test_allocation_triangle():
    g = rotation_graph([(0, 1), (1, 2), (2, 0)])
    _, size = optimal_allocation(g)
    assert size == 2


def test_allocation_single_edge():
    g = rotation_graph([(0, 1)])
    asg, size = optimal_allocation(g)
    assert size == 1
    assert check_cover(g, asg, CoverSpec(1, 2)).valid


def test_allocation_matches_bruteforce():
    rng = random.Random(61)
    for _ in range(150):
        g = random_rotation_graph(rng, n_max=6, e_max=10, loops=True)
        if g.num_edges() == 0:
            continue
        asg, size = optimal_allocation(g)
        assert size == min_allocation_bruteforce(g)[0]
        spec = CoverSpec(max(1, len(g.edges)), 2)
        assert check_cover(g, asg, spec).valid
