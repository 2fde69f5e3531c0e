import itertools
import random

import pytest

from anglecover.core import BASIC_SPEC, CoverSpec, check_cover
from anglecover.instances import (
    gen_random_bounded_degree,
    gen_random_outerplane,
    gen_regular,
    get_instance,
)
from anglecover.solve import (
    min_allocation_bruteforce,
    min_arc_cover,
    oracle_solve,
    solve_deg4,
    solve_no_deg3,
    solve_outerplane,
    solve_sextet,
)
from conftest import (
    complete_rotation_graph,
    naive_cover_search,
    random_fixed_degree_graph,
    random_rotation_graph,
    rotation_graph,
)


def brute_arc_cover(deg, slots, m):
    pts = sorted(slots)
    for k in range(1, len(pts) + 1):
        for starts in itertools.combinations(range(deg), k):
            covered = {(s + t) % deg for s in starts for t in range(min(m, deg))}
            if all(p in covered for p in pts):
                return k
    return 0


def test_min_arc_cover_vs_bruteforce():
    rng = random.Random(17)
    for _ in range(1500):
        deg = rng.randint(1, 10)
        m = rng.randint(1, 4)
        k = rng.randint(0, deg)
        slots = set(rng.sample(range(deg), k))
        count, arcs = min_arc_cover(deg, slots, m)
        assert count == brute_arc_cover(deg, slots, m)
        covered = {(s + t) % deg for s in arcs for t in range(min(m, deg))}
        assert slots <= covered and len(arcs) == count


def test_min_arc_cover_wrapped_points():
    # Points straddling the wrap; first-start candidates must sweep cyclically.
    count, _ = min_arc_cover(8, {0, 3, 6}, 2)
    assert count == 3


def test_oracle_matches_naive_search():
    rng = random.Random(23)
    for _ in range(150):
        g = random_rotation_graph(rng, n_max=5, e_max=7, loops=True)
        a = rng.randint(1, 3)
        m = rng.randint(2, 3)
        spec = CoverSpec(a, m)
        cert = oracle_solve(g, spec)
        assert cert.verdict == naive_cover_search(g, spec)
        if cert.is_yes:
            assert check_cover(g, cert.assignment, spec).valid


def test_oracle_on_figure_corpus():
    for name in ("fig1", "fig2a", "fig2b", "fig3", "fig4-no", "fig4-yes"):
        inst = get_instance(name)
        cert = oracle_solve(inst.graph)
        assert cert.verdict == inst.expected, name
        if cert.is_yes:
            assert check_cover(inst.graph, cert.assignment, BASIC_SPEC).valid


def test_oracle_budget_indeterminate():
    g = complete_rotation_graph(8)
    assert oracle_solve(g, BASIC_SPEC, budget=1).verdict == "INDETERMINATE"


def test_oracle_forced_flips_verdict():
    spec = CoverSpec(1, 2)
    star = rotation_graph([(0, 1), (0, 2), (0, 3)])
    assert oracle_solve(star, spec).is_yes
    # Leaves are free; force all edges to the centre instead.
    forced = {e: 0 for e in star.edges}
    assert oracle_solve(star, spec, forced=forced).is_no


def test_solve_deg4_matches_oracle():
    rng = random.Random(31)
    for _ in range(200):
        g = random_fixed_degree_graph(rng, rng.randint(2, 9), (1, 2, 3, 4))
        cert = solve_deg4(g)
        assert cert.verdict == oracle_solve(g).verdict
        if cert.is_yes:
            assert check_cover(g, cert.assignment, BASIC_SPEC).valid


def test_solve_deg4_on_generator_output():
    for seed in range(20):
        g = gen_random_bounded_degree(40, 4, seed)
        cert = solve_deg4(g)
        assert cert.verdict in ("YES", "NO")
        if cert.is_yes:
            assert check_cover(g, cert.assignment, BASIC_SPEC).valid


def test_solve_no_deg3_matches_oracle():
    rng = random.Random(41)
    for _ in range(150):
        g = random_fixed_degree_graph(rng, rng.randint(2, 8), (1, 2, 4, 5))
        cert = solve_no_deg3(g)
        assert cert.verdict == oracle_solve(g).verdict
        if cert.is_yes:
            assert check_cover(g, cert.assignment, BASIC_SPEC).valid


def test_solve_sextet_produces_valid_cover():
    for delta in (6, 8, 12):
        spec = CoverSpec(delta // 2 - delta // 6, 2)
        for seed in range(10):
            g = gen_regular(18, delta, seed)
            cert = solve_sextet(g, delta)
            assert cert.is_yes
            assert check_cover(g, cert.assignment, spec).valid


def test_solve_outerplane_matches_oracle():
    for seed in range(30):
        g = gen_random_outerplane(9, seed)
        cert = solve_outerplane(g)
        assert cert.verdict == oracle_solve(g).verdict
        if cert.is_yes:
            assert check_cover(g, cert.assignment, BASIC_SPEC).valid


def test_min_allocation_bruteforce_triangle():
    g = rotation_graph([(0, 1), (1, 2), (2, 0)])
    size, asg = min_allocation_bruteforce(g)
    assert size == 2
    assert check_cover(g, asg, CoverSpec(3, 2)).valid


def test_min_allocation_bruteforce_cap():
    from anglecover.core import UnsupportedInputError

    g = complete_rotation_graph(7)
    with pytest.raises(UnsupportedInputError):
        min_allocation_bruteforce(g)
