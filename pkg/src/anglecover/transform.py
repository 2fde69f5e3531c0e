"""Structure-preserving graph transforms.

Planarization of topological graphs (crossings become degree-4 vertices),
the medial graph, the bipartite edge/vertex-copies graph used by the
density test, and the 2-blowup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import RotationGraph, UnsupportedInputError


@dataclass(frozen=True)
class Multigraph:
    """A plain multigraph: no rotation system attached."""

    vertices: tuple[int, ...]
    edges: dict[int, tuple[int, int]]

    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple
    right: tuple
    edges: tuple[tuple, ...]  # (left node, right node) pairs


@dataclass(frozen=True)
class Crossing:
    """A crossing of two edge interiors.

    `bit` fixes the cyclic order of the four pieces around the crossing:
    0 means <toward e-source, toward f-source, toward e-target, toward
    f-target>, 1 swaps f's two ends.
    """

    e: int
    f: int
    bit: int


@dataclass(frozen=True)
class TopologicalGraph:
    """A rotation graph with a drawing's crossing data.

    `sequences` lists, for each edge, its crossing ids in order from the
    edge's first listed endpoint to its second.  Edges absent from the map
    are crossing-free.
    """

    base: RotationGraph
    crossings: dict[int, Crossing]
    sequences: dict[int, tuple[int, ...]]

    def validate(self) -> list[str]:
        issues = []
        seen: dict[int, int] = {x: 0 for x in self.crossings}
        for e, seq in self.sequences.items():
            if e not in self.base.edges:
                issues.append(f"sequence names unknown edge {e}")
                continue
            for x in seq:
                if x not in self.crossings:
                    issues.append(f"edge {e}: unknown crossing {x}")
                    continue
                cr = self.crossings[x]
                if e not in (cr.e, cr.f):
                    issues.append(f"edge {e}: crossing {x} does not involve it")
                seen[x] += 1
        for x, cr in sorted(self.crossings.items()):
            if cr.e == cr.f:
                issues.append(f"crossing {x}: an edge cannot cross itself")
                continue
            if cr.bit not in (0, 1):
                issues.append(f"crossing {x}: orientation bit must be 0 or 1")
            ends_e = set(self.base.edges.get(cr.e, ()))
            ends_f = set(self.base.edges.get(cr.f, ()))
            if ends_e & ends_f:
                issues.append(
                    f"crossing {x}: edges {cr.e} and {cr.f} share an endpoint"
                )
            if seen.get(x) != 2:
                issues.append(
                    f"crossing {x}: appears {seen.get(x, 0)} times in sequences,"
                    " expected 2"
                )
        return issues


def _piece_id(e: int, j: int) -> int:
    """Cantor pairing of (edge, piece index); injective and reproducible."""
    return (e + j) * (e + j + 1) // 2 + j


def planarize(tg: TopologicalGraph) -> RotationGraph:
    """Replace every crossing with a degree-4 vertex.

    Each edge with k crossings becomes a path of k+1 pieces; piece j of
    edge e receives id _piece_id(e, j).  The rotation at a crossing vertex
    follows the crossing's stored orientation bit; original rotations keep
    their order with first-piece ids substituted in place.
    """
    issues = tg.validate()
    if issues:
        raise UnsupportedInputError("; ".join(issues))
    g = tg.base
    seqs = {e: tuple(tg.sequences.get(e, ())) for e in g.edges}
    cross_vertex: dict[int, int] = {}
    next_v = max(g.vertices, default=-1) + 1
    for x in sorted(tg.crossings):
        cross_vertex[x] = next_v
        next_v += 1

    # Index of each crossing along each of its two edges.
    pos: dict[tuple[int, int], int] = {}
    for e, seq in seqs.items():
        for i, x in enumerate(seq):
            pos[(e, x)] = i

    edges: dict[int, tuple[int, int]] = {}
    for e, (u, v) in g.edges.items():
        seq = seqs[e]
        nodes = [u] + [cross_vertex[x] for x in seq] + [v]
        for j in range(len(seq) + 1):
            edges[_piece_id(e, j)] = (nodes[j], nodes[j + 1])

    rotation: dict[int, tuple[int, ...]] = {}
    for v in g.vertices:
        slots = []
        used_last: set[int] = set()
        for e in g.rotation.get(v, ()):
            ends = g.edges[e]
            k = len(seqs[e])
            if ends[0] == ends[1]:
                # Self-loops cannot cross anything here (a crossing's edges
                # must not share endpoints), so both slots stay pieces of e.
                j = k if e in used_last else 0
                used_last.add(e)
            else:
                j = 0 if v == ends[0] else k
            slots.append(_piece_id(e, j))
        rotation[v] = tuple(slots)
    for x in sorted(tg.crossings):
        cr = tg.crossings[x]
        i, j = pos[(cr.e, x)], pos[(cr.f, x)]
        toward = {
            "es": _piece_id(cr.e, i),
            "et": _piece_id(cr.e, i + 1),
            "fs": _piece_id(cr.f, j),
            "ft": _piece_id(cr.f, j + 1),
        }
        if cr.bit == 0:
            order = ("es", "fs", "et", "ft")
        else:
            order = ("es", "ft", "et", "fs")
        rotation[cross_vertex[x]] = tuple(toward[t] for t in order)

    vertices = tuple(sorted(set(g.vertices) | set(cross_vertex.values())))
    return RotationGraph.build(vertices, edges, rotation)


def medial_graph(
    g: RotationGraph,
) -> tuple[Multigraph, dict[int, tuple[int, tuple[int, int]]]]:
    """The medial graph plus provenance.

    One medial vertex per edge of g; one candidate medial edge per
    consecutive slot pair at each vertex (a degree-2 vertex contributes
    two parallel candidates, degree-1 a loop).  Loops are dropped and
    parallels deduplicated; the provenance maps each surviving medial edge
    to its (vertex, (slot, next slot)) origin.
    """
    edges: dict[int, tuple[int, int]] = {}
    provenance: dict[int, tuple[int, tuple[int, int]]] = {}
    seen_pairs: set[tuple[int, int]] = set()
    next_id = 0
    for v in sorted(g.vertices):
        rot = g.rotation.get(v, ())
        d = len(rot)
        if d < 2:
            continue
        for s in range(d):
            t = (s + 1) % d
            e1, e2 = rot[s], rot[t]
            if e1 == e2:
                continue  # medial loop
            key = (e1, e2) if e1 < e2 else (e2, e1)
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            edges[next_id] = key
            provenance[next_id] = (v, (s, t))
            next_id += 1
    return Multigraph(tuple(sorted(g.edges)), edges), provenance


def build_gmat(g: RotationGraph) -> BipartiteGraph:
    """Bipartite graph: edges of g on the left, two copies of each vertex
    on the right, (e, v-copy) adjacent iff v is an endpoint of e."""
    left = tuple(sorted(g.edges))
    right = tuple((v, c) for v in sorted(g.vertices) for c in (0, 1))
    pairs = []
    for e in left:
        u, v = g.edges[e]
        for w in sorted({u, v}):
            pairs.append((e, (w, 0)))
            pairs.append((e, (w, 1)))
    return BipartiteGraph(left, right, tuple(pairs))


def blowup_vertex(v: int, copy: int) -> int:
    """Id of copy 1 or 2 of source vertex v in the 2-blowup encoding."""
    assert copy in (1, 2)
    return 2 * v + (copy - 1)


def blowup2(g: RotationGraph) -> Multigraph:
    """The 2-blowup: both copies of every vertex, all four copies of every
    edge.  Copy a of vertex v is encoded as 2v + a - 1."""
    if g.has_loops():
        raise UnsupportedInputError("2-blowup requires a loop-free graph")
    vertices = tuple(sorted(blowup_vertex(v, c) for v in g.vertices for c in (1, 2)))
    edges: dict[int, tuple[int, int]] = {}
    next_id = 0
    for e in sorted(g.edges):
        u, v = g.edges[e]
        for cu in (1, 2):
            for cv in (1, 2):
                edges[next_id] = (blowup_vertex(u, cu), blowup_vertex(v, cv))
                next_id += 1
    return Multigraph(vertices, edges)
