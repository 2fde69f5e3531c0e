"""Shared test helpers: small graph builders and random generators."""

from __future__ import annotations

import itertools
import random

from anglecover.core import RotationGraph
from anglecover.transform import Multigraph


def rotation_graph(edge_pairs, rotations=None, n=None):
    """RotationGraph from an edge list; default rotation is incidence
    order ascending by edge id."""
    edges = {i: tuple(e) for i, e in enumerate(edge_pairs)}
    if n is None:
        n = 1 + max((max(u, v) for u, v in edges.values()), default=-1)
    if rotations is None:
        rotations = {v: [] for v in range(n)}
        for e in sorted(edges):
            u, v = edges[e]
            rotations[u].append(e)
            if v != u:
                rotations[v].append(e)
            else:
                rotations[u].append(e)
    return RotationGraph.build(range(n), edges, rotations)


def multigraph(n, edge_pairs):
    return Multigraph(tuple(range(n)), {i: tuple(e) for i, e in enumerate(edge_pairs)})


def complete_graph(n):
    return multigraph(n, list(itertools.combinations(range(n), 2)))


def complete_rotation_graph(n):
    return rotation_graph(list(itertools.combinations(range(n), 2)))


def random_rotation_graph(rng, n_max=6, e_max=8, loops=False):
    """Small random multigraph with a random rotation system."""
    n = rng.randint(1, n_max)
    m = rng.randint(0, e_max)
    edges = {}
    for i in range(m):
        u = rng.randrange(n)
        if loops and n >= 1 and rng.random() < 0.15:
            v = u
        else:
            v = rng.randrange(n)
            if v == u and not loops:
                v = (u + 1) % n if n > 1 else u
        edges[i] = (u, v)
    incident = {v: [] for v in range(n)}
    for e, (u, v) in edges.items():
        incident[u].append(e)
        incident[v].append(e) if v != u else incident[u].append(e)
    for slots in incident.values():
        rng.shuffle(slots)
    return RotationGraph.build(range(n), edges, incident)


def random_fixed_degree_graph(rng, n, degree_choices):
    """Configuration-model multigraph whose degrees all come from
    `degree_choices` (the last vertex may be adjusted for parity within
    the choice set)."""
    while True:
        degs = [rng.choice(degree_choices) for _ in range(n)]
        if sum(degs) % 2 == 0:
            break
    stubs = [v for v, d in enumerate(degs) for _ in range(d)]
    rng.shuffle(stubs)
    edges = {i: (stubs[2 * i], stubs[2 * i + 1]) for i in range(len(stubs) // 2)}
    incident = {v: [] for v in range(n)}
    for e, (u, v) in edges.items():
        incident[u].append(e)
        if v != u:
            incident[v].append(e)
        else:
            incident[u].append(e)
    for slots in incident.values():
        rng.shuffle(slots)
    return RotationGraph.build(range(n), edges, incident)


def naive_cover_search(g, spec):
    """Complete search over every per-vertex covered-slot choice."""
    verts = sorted(g.vertices)
    per_vertex = []
    for v in verts:
        d = g.deg(v)
        if d == 0:
            per_vertex.append([frozenset()])
            continue
        w = min(spec.m, d)
        opts = {
            frozenset((s + t) % d for s in starts for t in range(w))
            for starts in itertools.combinations(range(d), min(spec.a, d))
        }
        per_vertex.append(sorted(opts, key=sorted))
    slot_of = {v: g.edge_slots(v) for v in verts}
    for combo in itertools.product(*per_vertex):
        chosen = dict(zip(verts, combo))
        if all(
            any(s in chosen[w2] for w2 in set(pair) for s in slot_of[w2].get(e, ()))
            for e, pair in g.edges.items()
        ):
            return "YES"
    return "NO"
