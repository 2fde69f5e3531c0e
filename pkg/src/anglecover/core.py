"""Rotation-system multigraphs, angle-cover semantics, and face tracing.

A rotation system stores, for every vertex, the cyclic order of its
incident edge ends ("slots").  A self-loop occupies two distinct slots at
its vertex.  All functions here are pure: they never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class MalformedAssignmentError(ValueError):
    """An angle assignment references a vertex or slot that does not exist."""


class UnsupportedInputError(ValueError):
    """The input graph violates a precondition of the requested operation."""


@dataclass(frozen=True)
class RotationGraph:
    """A multigraph with a per-vertex cyclic ordering of incident edges.

    vertices: vertex identifiers (non-negative ints).
    edges:    edge id -> (u, v); u == v denotes a self-loop.
    rotation: vertex -> cyclic sequence of edge ids.  An edge (u, v) with
              u != v appears once in u's and once in v's rotation; a
              self-loop at v appears twice in v's rotation.
    """

    vertices: tuple[int, ...]
    edges: dict[int, tuple[int, int]]
    rotation: dict[int, tuple[int, ...]]

    @staticmethod
    def build(vertices, edges, rotation) -> "RotationGraph":
        return RotationGraph(
            vertices=tuple(vertices),
            edges={e: (u, v) for e, (u, v) in dict(edges).items()},
            rotation={v: tuple(rot) for v, rot in dict(rotation).items()},
        )

    def deg(self, v: int) -> int:
        return len(self.rotation.get(v, ()))

    def max_degree(self) -> int:
        return max((self.deg(v) for v in self.vertices), default=0)

    def num_edges(self) -> int:
        return len(self.edges)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges.values())

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges.values():
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def darts(self):
        """All (vertex, slot) pairs; there are exactly 2|E| of them."""
        for v in self.vertices:
            for s in range(self.deg(v)):
                yield (v, s)

    def twin_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map each dart to the other occurrence of its edge."""
        occ: dict[int, list[tuple[int, int]]] = {}
        for v in self.vertices:
            for s, e in enumerate(self.rotation.get(v, ())):
                occ.setdefault(e, []).append((v, s))
        twins: dict[tuple[int, int], tuple[int, int]] = {}
        for e, ds in occ.items():
            if len(ds) != 2:
                raise UnsupportedInputError(
                    f"edge {e} has {len(ds)} rotation occurrences, expected 2"
                )
            a, b = ds
            twins[a] = b
            twins[b] = a
        return twins

    def edge_slots(self, v: int) -> dict[int, list[int]]:
        """Slots at v keyed by edge id (a loop maps to both its slots)."""
        out: dict[int, list[int]] = {}
        for s, e in enumerate(self.rotation.get(v, ())):
            out.setdefault(e, []).append(s)
        return out


@dataclass(frozen=True)
class CoverSpec:
    """Problem parameters: at most `a` angles per vertex, each spanning
    `m` consecutive slots.  The basic angle cover is (a=1, m=2)."""

    a: int = 1
    m: int = 2

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("need a >= 1")
        if self.m < 2:
            raise ValueError("need m >= 2")


BASIC_SPEC = CoverSpec(1, 2)


@dataclass(frozen=True)
class Angle:
    """A contiguous arc of rotation slots at a vertex.

    Covers slots start, start+1, ..., start+width-1 (mod deg(vertex)).
    The effective width is min(m, deg), so a vertex of degree <= m covers
    all of its incident edges with one angle.
    """

    vertex: int
    start: int
    width: int

    def slots(self, deg: int) -> list[int]:
        return [(self.start + i) % deg for i in range(self.width)]


@dataclass(frozen=True)
class AngleAssignment:
    """Per-vertex lists of angles.  Vertices may be absent (zero angles)."""

    angles: dict[int, tuple[Angle, ...]]

    @staticmethod
    def build(angles: dict[int, list[Angle]]) -> "AngleAssignment":
        return AngleAssignment({v: tuple(a) for v, a in angles.items() if a})

    def total(self) -> int:
        return sum(len(a) for a in self.angles.values())

    def all_angles(self):
        for v in sorted(self.angles):
            yield from self.angles[v]


@dataclass(frozen=True)
class Certificate:
    """Solver verdict plus, for YES, a validating assignment."""

    verdict: str  # "YES", "NO" or "INDETERMINATE"
    assignment: AngleAssignment | None = None

    @property
    def is_yes(self) -> bool:
        return self.verdict == "YES"

    @property
    def is_no(self) -> bool:
        return self.verdict == "NO"


def validate_graph(g: RotationGraph) -> list[str]:
    """Check the RotationGraph invariants; returns one message per violation."""
    issues = []
    vset = set(g.vertices)
    for e, (u, v) in sorted(g.edges.items()):
        for w in {u, v}:
            if w not in vset:
                issues.append(f"edge {e}: endpoint {w} is not a vertex")
    for v in g.vertices:
        for e in g.rotation.get(v, ()):
            if e not in g.edges:
                issues.append(f"vertex {v}: rotation names unknown edge {e}")
            elif v not in g.edges[e]:
                issues.append(f"vertex {v}: rotation lists non-incident edge {e}")
    for e, (u, v) in sorted(g.edges.items()):
        if u not in vset or v not in vset:
            continue
        if u == v:
            count = sum(1 for x in g.rotation.get(u, ()) if x == e)
            if count != 2:
                issues.append(
                    f"self-loop {e} at {u} occurs {count} times in rotation, expected 2"
                )
        else:
            for w in (u, v):
                count = sum(1 for x in g.rotation.get(w, ()) if x == e)
                if count != 1:
                    issues.append(
                        f"edge {e}=({u},{v}) occurs {count} times in rotation of {w},"
                        " expected 1"
                    )
    for v in g.vertices:
        if v not in g.rotation and any(v in ends for ends in g.edges.values()):
            issues.append(f"vertex {v}: missing rotation")
    return issues


@dataclass(frozen=True)
class CoverCheck:
    valid: bool
    uncovered_edges: tuple[int, ...]
    violations: tuple[str, ...]


def check_cover(g: RotationGraph, asg: AngleAssignment, spec: CoverSpec) -> CoverCheck:
    """Validity of an angle assignment against a CoverSpec.

    Valid iff every vertex lists at most spec.a angles, every angle is a
    contiguous arc of width min(spec.m, deg), and every edge has a covered
    slot at one of its endpoints (either slot, for a self-loop).
    """
    vset = set(g.vertices)
    violations: list[str] = []
    covered_slots: dict[int, set[int]] = {}
    for v, angs in asg.angles.items():
        if v not in vset:
            raise MalformedAssignmentError(f"assignment names unknown vertex {v}")
        d = g.deg(v)
        if len(angs) > spec.a:
            violations.append(f"vertex {v}: {len(angs)} angles exceed limit {spec.a}")
        want = min(spec.m, d) if d else 0
        for ang in angs:
            if ang.vertex != v:
                raise MalformedAssignmentError(
                    f"angle at key {v} names vertex {ang.vertex}"
                )
            if d == 0 or not (0 <= ang.start < d):
                raise MalformedAssignmentError(
                    f"vertex {v}: angle start {ang.start} out of range for degree {d}"
                )
            if ang.width != want:
                violations.append(
                    f"vertex {v}: angle width {ang.width}, expected min(m, deg) = {want}"
                )
                continue
            covered_slots.setdefault(v, set()).update(ang.slots(d))
    uncovered = []
    for e, (u, v) in sorted(g.edges.items()):
        hit = False
        for w in {u, v}:
            slots = covered_slots.get(w)
            if slots and any(
                s in slots
                for s, x in enumerate(g.rotation.get(w, ()))
                if x == e
            ):
                hit = True
        if not hit:
            uncovered.append(e)
    valid = not violations and not uncovered
    return CoverCheck(valid, tuple(uncovered), tuple(violations))


@dataclass(frozen=True)
class FaceData:
    faces: tuple[tuple[tuple[int, int], ...], ...]
    component_genus: dict[int, int] = field(compare=False, default_factory=dict)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def is_plane(self) -> bool:
        return all(genus == 0 for genus in self.component_genus.values())

    @property
    def genus(self) -> int:
        return sum(self.component_genus.values())


def trace_faces(g: RotationGraph) -> FaceData:
    """Trace the faces of the combinatorial map and compute per-component genus.

    Faces are dart cycles under "cross the edge, then turn to the next
    rotation slot".  For each connected component,
    genus = (2 - V + E - F) / 2; isolated vertices count one face.
    """
    twins = g.twin_map()
    # Union-find over vertices to split Euler counts per component.
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges.values():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    faces: list[tuple[tuple[int, int], ...]] = []
    face_of_component: dict[int, int] = {}
    seen: set[tuple[int, int]] = set()
    for start in sorted(twins):
        if start in seen:
            continue
        cycle = []
        d = start
        while True:
            cycle.append(d)
            seen.add(d)
            w, s = twins[d]
            d = (w, (s + 1) % g.deg(w))
            if d == start:
                break
        faces.append(tuple(cycle))
        root = find(cycle[0][0])
        face_of_component[root] = face_of_component.get(root, 0) + 1

    counts: dict[int, list[int]] = {}
    for v in g.vertices:
        counts.setdefault(find(v), [0, 0])[0] += 1
    for u, _ in g.edges.values():
        counts[find(u)][1] += 1

    component_genus = {}
    for root, (nv, ne) in counts.items():
        nf = face_of_component.get(root, 1 if ne == 0 else 0)
        euler = nv - ne + nf
        assert (2 - euler) % 2 == 0, "face tracing produced an odd Euler defect"
        component_genus[root] = (2 - euler) // 2
    return FaceData(tuple(faces), component_genus)
