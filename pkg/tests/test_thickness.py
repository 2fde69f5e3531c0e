import pytest

from anglecover.core import RotationGraph, UnsupportedInputError, trace_faces
from anglecover.instances import gen_random_plane_deg4
from anglecover.solve import solve_deg4
from anglecover.thickness import (
    BlowupDecomposition,
    blowup_decomposition,
    verify_decomposition,
)
from anglecover.transform import blowup2
from conftest import rotation_graph


def square():
    return rotation_graph(
        [(0, 1), (1, 2), (2, 3), (3, 0)],
        {0: (3, 0), 1: (0, 1), 2: (1, 2), 3: (2, 3)},
    )


def solved(g):
    cert = solve_deg4(g)
    assert cert.is_yes
    return cert.assignment


def test_square_decomposition():
    g = square()
    d = blowup_decomposition(g, solved(g))
    assert len(d.h.edges) == 2 * len(g.edges)
    assert trace_faces(d.h).genus == 0
    assert trace_faces(d.h_tilde).genus == 0
    chk = verify_decomposition(g, d)
    assert chk.valid, chk.violations


def test_decomposition_union_is_blowup():
    g = square()
    d = blowup_decomposition(g, solved(g))
    from collections import Counter

    union = Counter()
    for layer in (d.h, d.h_tilde):
        for u, v in layer.edges.values():
            union[frozenset((u, v))] += 1
    want = Counter(frozenset((u, v)) for u, v in blowup2(g).edges.values())
    assert union == want


def test_random_plane_graphs_decompose():
    for seed in range(25):
        g = gen_random_plane_deg4(18, seed)
        cert = solve_deg4(g)
        if not cert.is_yes:
            continue
        d = blowup_decomposition(g, cert.assignment)
        chk = verify_decomposition(g, d)
        assert chk.valid, (seed, chk.violations)


def test_rejects_nonplane_input():
    from conftest import complete_rotation_graph
    from anglecover.solve import oracle_solve

    g = complete_rotation_graph(5)
    cert = oracle_solve(g)
    assert cert.is_yes
    with pytest.raises(UnsupportedInputError):
        blowup_decomposition(g, cert.assignment)


def test_rejects_invalid_cover():
    from anglecover.core import Angle, AngleAssignment

    g = square()
    bad = AngleAssignment.build({0: [Angle(0, 0, 2)]})
    with pytest.raises(UnsupportedInputError):
        blowup_decomposition(g, bad)


def _drop_edge(layer: RotationGraph, eid: int) -> RotationGraph:
    edges = {e: uv for e, uv in layer.edges.items() if e != eid}
    rot = {
        v: [e for e in slots if e != eid]
        for v, slots in layer.rotation.items()
    }
    return RotationGraph.build(layer.vertices, edges, rot)


def test_verify_flags_missing_edge():
    g = square()
    d = blowup_decomposition(g, solved(g))
    tampered = BlowupDecomposition(_drop_edge(d.h, 0), d.h_tilde, d.iso)
    chk = verify_decomposition(g, tampered)
    assert not chk.valid
    assert any("missing" in v for v in chk.violations)


def test_verify_flags_broken_isomorphism():
    g = square()
    d = blowup_decomposition(g, solved(g))
    bad_iso = dict(d.iso)
    bad_iso[0] = bad_iso[2]  # two vertices now collide under the map
    chk = verify_decomposition(g, BlowupDecomposition(d.h, d.h_tilde, bad_iso))
    assert not chk.valid
    assert any("iso" in v for v in chk.violations)
