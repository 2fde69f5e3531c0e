"""Cover-finding algorithms.

Contains the exact backtracking oracle, the linear-time max-degree-4
solver, the 2-SAT solver for graphs without degree-3 vertices, the
sextet-based solver for even maximum degree, the outerplane ear solver,
and a brute-force minimum-allocation search used as a testing oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import (
    Angle,
    AngleAssignment,
    BASIC_SPEC,
    Certificate,
    CoverSpec,
    RotationGraph,
    UnsupportedInputError,
    trace_faces,
)

DEFAULT_BUDGET = int(os.environ.get("ANGLESET_BUDGET", "10000000"))


def min_arc_cover(deg: int, slots, m: int) -> tuple[int, list[int]]:
    """Minimum number of width-min(m, deg) cyclic arcs covering `slots`.

    Returns (count, arc start slots).  Exact: every optimal arc set can be
    normalised so each arc starts on a covered slot, so trying every slot
    as the first arc start and sweeping greedily is exhaustive.
    """
    pts = sorted(set(slots))
    if not pts:
        return 0, []
    if any(not 0 <= s < deg for s in pts):
        raise ValueError("slot out of range")
    w = min(m, deg)
    if w >= deg or len(pts) == 1:
        return 1, [pts[0]]
    best = None
    for first in pts:
        # Sweep the points in cyclic order from `first` so offsets are
        # monotone; sorted order would process wrapped points too early.
        ordered = [q for q in pts if q >= first] + [q for q in pts if q < first]
        arcs = [first]
        limit = first + w - 1
        for q in ordered:
            off = q if q >= first else q + deg
            if off > limit:
                arcs.append(q)
                limit = off + w - 1
        if best is None or len(arcs) < len(best):
            best = arcs
    return len(best), best


def _arcs_to_angles(v: int, deg: int, arcs, m: int) -> list[Angle]:
    w = min(m, deg)
    return [Angle(v, start, w) for start in arcs]


def oracle_solve(
    g: RotationGraph,
    spec: CoverSpec = BASIC_SPEC,
    budget: int | None = None,
    forced: dict[int, int] | None = None,
) -> Certificate:
    """Exhaustive decision of the (a, m) angle cover problem.

    Backtracks over per-edge coverer choices (each edge is covered from
    exactly one endpoint slot; double coverage is never needed) with unit
    propagation and per-vertex feasibility pruning via min_arc_cover.
    `forced` optionally pins edges to a covering endpoint.  Exceeding the
    node budget yields an INDETERMINATE certificate, never a wrong verdict.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    a, m = spec.a, spec.m
    deg = {v: g.deg(v) for v in g.vertices}
    free = {v for v in g.vertices if 0 < deg[v] <= m}

    # Options per edge: (vertex, slot) darts.  Edges with a free endpoint
    # are covered there for free (a dominance-preserving simplification).
    options: dict[int, list[tuple[int, int]]] = {}
    free_used: set[int] = set()
    for e, (u, v) in sorted(g.edges.items()):
        darts = []
        for w in (u, v) if u != v else (u,):
            for s, x in enumerate(g.rotation[w]):
                if x == e:
                    darts.append((w, s))
        if forced and e in forced:
            darts = [d for d in darts if d[0] == forced[e]]
            if not darts:
                raise ValueError(f"edge {e} cannot be forced to vertex {forced[e]}")
        free_side = [d for d in darts if d[0] in free]
        if free_side:
            free_used.add(free_side[0][0])
            continue
        options[e] = darts

    committed: dict[int, set[int]] = {v: set() for v in g.vertices}
    assigned: dict[int, tuple[int, int]] = {}
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for e, darts in options.items():
        for w, _ in darts:
            if e not in incident[w]:
                incident[w].append(e)

    nodes = 0
    out_of_budget = False

    def feasible(v: int, extra: int) -> bool:
        count, _ = min_arc_cover(deg[v], committed[v] | {extra}, m)
        return count <= a

    def viable(e: int) -> list[tuple[int, int]]:
        return [d for d in options[e] if feasible(*d)]

    def search(undecided: list[int]) -> bool:
        nonlocal nodes, out_of_budget
        if out_of_budget:
            return False
        trail: list[tuple[int, tuple[int, int]]] = []

        def do_assign(e, d):
            assigned[e] = d
            committed[d[0]].add(d[1])
            trail.append((e, d))

        def undo_all():
            for e, (v, s) in reversed(trail):
                committed[v].discard(s)
                del assigned[e]

        # Unit propagation to fixpoint.
        pending = list(undecided)
        remaining = set(undecided)
        changed = True
        while changed:
            changed = False
            for e in list(remaining):
                opts = viable(e)
                if not opts:
                    undo_all()
                    return False
                if len(opts) == 1:
                    nodes += 1
                    do_assign(e, opts[0])
                    remaining.discard(e)
                    changed = True
            if nodes > budget:
                out_of_budget = True
                undo_all()
                return False
        if not remaining:
            return True
        # Branch on an edge at the most constrained vertex.
        branch = min(
            remaining,
            key=lambda e: (
                min(
                    min_arc_cover(deg[v], committed[v], m)[0] * g.deg(v)
                    - len(committed[v])
                    for v, _ in options[e]
                ),
                e,
            ),
        )
        rest = [e for e in remaining if e != branch]
        for d in options[branch]:
            if not feasible(*d):
                continue
            nodes += 1
            if nodes > budget:
                out_of_budget = True
                break
            assigned[branch] = d
            committed[d[0]].add(d[1])
            if search(rest):
                return True
            committed[d[0]].discard(d[1])
            del assigned[branch]
        undo_all()
        return False

    ok = search(sorted(options))
    if ok:
        assert len(assigned) == len(options), (
            f"search succeeded with {len(options) - len(assigned)} edges"
            " undecided"
        )
        angles: dict[int, list[Angle]] = {}
        for v in sorted(free_used):
            angles[v] = [Angle(v, 0, min(m, deg[v]))]
        for v in sorted(g.vertices):
            if committed[v]:
                _, arcs = min_arc_cover(deg[v], committed[v], m)
                angles.setdefault(v, []).extend(_arcs_to_angles(v, deg[v], arcs, m))
        return Certificate("YES", AngleAssignment.build(angles))
    if out_of_budget:
        return Certificate("INDETERMINATE")
    return Certificate("NO")


# ---------------------------------------------------------------------------
# Regularisation helpers shared by the traversal solvers.


@dataclass
class _Regularized:
    rotation: dict[int, list[int]]
    orig_deg: dict[int, int]
    twins: dict[tuple[int, int], tuple[int, int]]
    edge_at: dict[tuple[int, int], int]


def _regularize(g: RotationGraph, target: int) -> _Regularized:
    """Pad every vertex to degree `target` with dummy edges.

    Per connected component, vertices of deficient degree are paired
    greedily by lowest id; a single leftover vertex receives self-loops.
    Dummy slots are appended at the end of each rotation so original
    cyclic adjacencies survive projection.
    """
    rot = {v: list(g.rotation.get(v, ())) for v in g.vertices}
    orig_deg = {v: len(rot[v]) for v in g.vertices}
    next_edge = max(g.edges, default=-1) + 1

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

    comps: dict[int, list[int]] = {}
    for v in sorted(g.vertices):
        comps.setdefault(find(v), []).append(v)

    for members in comps.values():
        deficient = [v for v in members if len(rot[v]) < target]
        while True:
            deficient = [v for v in deficient if len(rot[v]) < target]
            if len(deficient) < 2:
                break
            u, v = deficient[0], deficient[1]
            rot[u].append(next_edge)
            rot[v].append(next_edge)
            next_edge += 1
        if deficient:
            v = deficient[0]
            need = target - len(rot[v])
            assert need % 2 == 0, "component degree parity broken"
            for _ in range(need // 2):
                rot[v].extend([next_edge, next_edge])
                next_edge += 1

    occ: dict[int, list[tuple[int, int]]] = {}
    edge_at: dict[tuple[int, int], int] = {}
    for v in sorted(g.vertices):
        for s, e in enumerate(rot[v]):
            occ.setdefault(e, []).append((v, s))
            edge_at[(v, s)] = e
    twins = {}
    for ds in occ.values():
        a, b = ds
        twins[a] = b
        twins[b] = a
    return _Regularized(rot, orig_deg, twins, edge_at)


def _project_groups(
    v: int, groups: list[list[int]], orig_deg: int, m: int
) -> list[Angle]:
    """Map slot groups of the padded graph back to original angles.

    Dummy slots sit past the original degree, so surviving slots keep
    their indices and stay cyclically adjacent.
    """
    angles = []
    for group in groups:
        # Keep the group's cyclic order: for a wrap pair like (3, 0) the
        # angle must start at the first member, not the smallest.
        survivors = [s for s in group if s < orig_deg]
        if not survivors:
            continue
        start = survivors[0]
        angles.append(Angle(v, start, min(m, orig_deg)))
    return angles


def solve_deg4(g: RotationGraph) -> Certificate:
    """Linear-time cover for maximum degree 4 (always YES).

    Pads to a 4-regular multigraph, partitions darts into closed walks
    that exit each vertex on the slot opposite the entry slot, and covers
    each vertex's two (always consecutive) outgoing slots with one angle.
    """
    if g.max_degree() > 4:
        raise UnsupportedInputError("solve_deg4 requires maximum degree <= 4")
    reg = _regularize(g, 4)
    traversed: set[int] = set()
    out_slots: dict[int, list[int]] = {v: [] for v in g.vertices}

    for v in sorted(g.vertices):
        for s in range(4):
            if reg.edge_at[(v, s)] in traversed:
                continue
            d0 = (v, s)
            d = d0
            while True:
                traversed.add(reg.edge_at[d])
                out_slots[d[0]].append(d[1])
                w, t = reg.twins[d]
                nxt = (w, (t + 2) % 4)
                if reg.edge_at[nxt] in traversed:
                    assert nxt == d0, "walk hit a directed edge before closing"
                    break
                d = nxt

    angles: dict[int, list[Angle]] = {}
    for v in sorted(g.vertices):
        outs = sorted(out_slots[v])
        assert len(outs) == 2
        s1, s2 = outs
        assert (s2 - s1) % 4 in (1, 3), "outgoing slots not consecutive"
        if (s1 + 1) % 4 != s2:
            s1, s2 = s2, s1  # wrap pair (3, 0)
        projected = _project_groups(v, [[s1, s2]], reg.orig_deg[v], 2)
        if projected:
            angles[v] = projected
    return Certificate("YES", AngleAssignment.build(angles))


def solve_sextet(g: RotationGraph, delta: int) -> Certificate:
    """a-angle cover for even maximum degree `delta`, a = delta/2 - delta//6.

    Pads to a delta-regular multigraph and routes closed walks so that
    each block of six consecutive slots (a sextet) ends up with two
    adjacent outgoing slots sharing one angle; every other outgoing slot
    gets a single-edge angle.
    """
    if delta <= 0 or delta % 2:
        raise UnsupportedInputError("delta must be a positive even integer")
    if g.max_degree() > delta:
        raise UnsupportedInputError(f"graph has degree above {delta}")
    a_target = delta // 2 - delta // 6
    k = delta // 6
    reg = _regularize(g, delta)
    traversed: set[int] = set()
    # Per (vertex, sextet): outgoing slot offsets (0..5), first two adjacent.
    sextet_out: dict[int, list[list[int]]] = {v: [[] for _ in range(k)] for v in g.vertices}
    leftover_out: dict[int, list[int]] = {v: [] for v in g.vertices}

    def undirected(v, s):
        return reg.edge_at[(v, s)] not in traversed

    def spill_exit(v):
        for s in range(6 * k, delta):
            if undirected(v, s):
                return s
        for sx in range(k):
            outs = sextet_out[v][sx]
            if len(outs) == 1:
                q = outs[0]
                for nb in (q - 1, q + 1):
                    if 0 <= nb < 6 and undirected(v, 6 * sx + nb):
                        return 6 * sx + nb
        for sx in range(k):
            if len(sextet_out[v][sx]) >= 2:
                for off in range(6):
                    if undirected(v, 6 * sx + off):
                        return 6 * sx + off
        for sx in range(k):
            if not sextet_out[v][sx]:
                for off in range(1, 5):
                    if (
                        undirected(v, 6 * sx + off)
                        and undirected(v, 6 * sx + off - 1)
                        and undirected(v, 6 * sx + off + 1)
                    ):
                        return 6 * sx + off
        raise AssertionError("no undirected slot available for exit")

    def choose_exit(v, entry_slot):
        if entry_slot is not None and entry_slot < 6 * k:
            sx, p = divmod(entry_slot, 6)
            outs = sextet_out[v][sx]
            if not outs:
                q = p + 2 if p <= 2 else p - 2
                assert undirected(v, 6 * sx + q - 1) and undirected(v, 6 * sx + q + 1)
                return 6 * sx + q
            if len(outs) == 1:
                q = outs[0]
                for nb in (q - 1, q + 1):
                    if 0 <= nb < 6 and undirected(v, 6 * sx + nb):
                        return 6 * sx + nb
                raise AssertionError("second sextet exit has no adjacent slot")
        return spill_exit(v)

    def record_out(v, s):
        if s < 6 * k:
            sextet_out[v][s // 6].append(s % 6)
        else:
            leftover_out[v].append(s)

    for v0 in sorted(g.vertices):
        for s0 in range(delta):
            if reg.edge_at[(v0, s0)] in traversed:
                continue
            start = v0
            d = (v0, choose_exit(v0, None))
            while True:
                traversed.add(reg.edge_at[d])
                record_out(*d)
                w, t = reg.twins[d]
                if not any(undirected(w, s) for s in range(delta)):
                    assert w == start, "walk stuck away from its start vertex"
                    break
                d = (w, choose_exit(w, t))

    angles: dict[int, list[Angle]] = {}
    for v in sorted(g.vertices):
        groups: list[list[int]] = []
        for sx in range(k):
            outs = sorted(sextet_out[v][sx])
            assert len(outs) >= 2, "sextet finished with fewer than two exits"
            pair = None
            for i in range(len(outs) - 1):
                if outs[i + 1] == outs[i] + 1:
                    pair = (outs[i], outs[i + 1])
                    break
            assert pair is not None, "sextet has no adjacent outgoing pair"
            groups.append([6 * sx + pair[0], 6 * sx + pair[1]])
            for q in outs:
                if q not in pair:
                    groups.append([6 * sx + q])
        for s in sorted(leftover_out[v]):
            groups.append([s])
        assert len(groups) <= a_target, "angle budget exceeded"
        projected = _project_groups(v, groups, reg.orig_deg[v], 2)
        if projected:
            angles[v] = projected
    return Certificate("YES", AngleAssignment.build(angles))


def solve_no_deg3(g: RotationGraph, budget: int | None = None) -> Certificate:
    """2-SAT decision for graphs with no degree-3 vertex.

    One variable per slot of each vertex of degree >= 4 ("this slot is
    covered here"); a coverage clause per edge between such vertices and
    an exclusion clause per non-consecutive slot pair.  Vertices of
    degree <= 2 cover all of their edges outright.
    """
    if any(g.deg(v) == 3 for v in g.vertices):
        raise UnsupportedInputError("graph has a degree-3 vertex")
    high = [v for v in g.vertices if g.deg(v) >= 4]
    var_index: dict[tuple[int, int], int] = {}
    for v in sorted(high):
        for s in range(g.deg(v)):
            var_index[(v, s)] = len(var_index)
    n_vars = len(var_index)

    # Literal encoding: 2k for x_k, 2k + 1 for its negation.
    adj: list[list[int]] = [[] for _ in range(2 * n_vars)]

    def add_clause(l1: int, l2: int):
        adj[l1 ^ 1].append(l2)
        adj[l2 ^ 1].append(l1)

    for e, (u, v) in sorted(g.edges.items()):
        darts = [
            (w, s)
            for w in ((u, v) if u != v else (u,))
            for s, x in enumerate(g.rotation[w])
            if x == e
        ]
        lits = [2 * var_index[d] for d in darts if d in var_index]
        if len(lits) < len(darts):
            continue  # a low-degree endpoint covers this edge for free
        if len(lits) == 1:
            add_clause(lits[0], lits[0])
        else:
            add_clause(lits[0], lits[1])
    for v in sorted(high):
        d = g.deg(v)
        for i in range(d):
            for j in range(i + 1, d):
                if (i + 1) % d == j or (j + 1) % d == i:
                    continue
                add_clause(2 * var_index[(v, i)] + 1, 2 * var_index[(v, j)] + 1)

    comp = _tarjan_scc(adj)
    model = []
    for x in range(n_vars):
        if comp[2 * x] == comp[2 * x + 1]:
            return Certificate("NO")
        model.append(comp[2 * x] < comp[2 * x + 1])

    angles: dict[int, list[Angle]] = {}
    for v in sorted(g.vertices):
        d = g.deg(v)
        if d == 0:
            continue
        if d <= 2:
            angles[v] = [Angle(v, 0, min(2, d))]
            continue
        true_slots = sorted(s for s in range(d) if model[var_index[(v, s)]])
        if not true_slots:
            continue
        if len(true_slots) == 1:
            start = true_slots[0]
        else:
            s1, s2 = true_slots
            assert (s1 + 1) % d == s2 or (s2 + 1) % d == s1
            start = s1 if (s1 + 1) % d == s2 else s2
        angles[v] = [Angle(v, start, 2)]
    return Certificate("YES", AngleAssignment.build(angles))


def _tarjan_scc(adj: list[list[int]]) -> list[int]:
    """Iterative Tarjan; returns component ids in reverse topological order
    (sinks get lower ids)."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comps = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ptr = work[-1]
            if ptr == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            if ptr < len(adj[node]):
                work[-1] = (node, ptr + 1)
                nxt = adj[node][ptr]
                if index[nxt] == -1:
                    work.append((nxt, 0))
                elif on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[node])
                if low[node] == index[node]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = n_comps
                        if w == node:
                            break
                    n_comps += 1
    return comp


def solve_outerplane(g: RotationGraph, budget: int | None = None) -> Certificate:
    """Cover an outerplane graph by peeling an ear decomposition in reverse.

    Repeatedly removes a vertex whose remaining edges number at most two
    and sit on consecutive slots of its original rotation, assigning it
    the angle over those slots.  Backtracks over peel choices and falls
    back to the oracle if peeling fails outright.
    """
    faces = trace_faces(g)
    non_isolated = {v for v in g.vertices if g.deg(v) > 0}
    on_one_face = any(
        non_isolated <= {v for v, _ in face} for face in faces.faces
    ) or not non_isolated
    if not faces.is_plane or not on_one_face:
        raise UnsupportedInputError("input is not outerplane")
    if g.has_loops():
        return oracle_solve(g, BASIC_SPEC, budget)

    remaining: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e, (u, v) in g.edges.items():
        remaining[u].add(e)
        remaining[v].add(e)
    slot_of = {v: {e: s for s, e in enumerate(g.rotation.get(v, ()))} for v in g.vertices}
    angles: dict[int, list[Angle]] = {}
    alive = set(g.vertices)

    def ear_angle(v) -> Angle | None:
        edges = remaining[v]
        d = g.deg(v)
        if len(edges) > 2:
            return None
        if not edges:
            return "none"  # sentinel: peelable without an angle
        slots = sorted(slot_of[v][e] for e in edges)
        if len(slots) == 1:
            return Angle(v, slots[0], min(2, d))
        s1, s2 = slots
        if (s1 + 1) % d == s2:
            return Angle(v, s1, 2)
        if (s2 + 1) % d == s1:
            return Angle(v, s2, 2)
        return None

    def peel() -> bool:
        if not alive:
            return True
        candidates = sorted(v for v in alive if ear_angle(v) is not None)
        for v in candidates:
            ang = ear_angle(v)
            removed = list(remaining[v])
            alive.discard(v)
            for e in removed:
                for w in g.edges[e]:
                    remaining[w].discard(e)
            if ang != "none":
                angles[v] = [ang]
            if peel():
                return True
            if ang != "none":
                del angles[v]
            alive.add(v)
            for e in removed:
                for w in g.edges[e]:
                    if w in alive or w == v:
                        remaining[w].add(e)
        return False

    if peel():
        return Certificate("YES", AngleAssignment.build(angles))
    return oracle_solve(g, BASIC_SPEC, budget)


def min_allocation_bruteforce(
    g: RotationGraph, m: int = 2, cap: int = 18
) -> tuple[int, AngleAssignment]:
    """Exact minimum total angle count over all allocations (testing oracle).

    Branch-and-bound over per-edge coverer choices; assigning each edge to
    exactly one endpoint is optimal because min_arc_cover is monotone.
    """
    if g.num_edges() > cap:
        raise UnsupportedInputError(f"instance above brute-force cap ({cap} edges)")
    deg = {v: g.deg(v) for v in g.vertices}
    edge_ids = sorted(g.edges)
    options: dict[int, list[tuple[int, int]]] = {}
    for e in edge_ids:
        u, v = g.edges[e]
        options[e] = [
            (w, s)
            for w in ((u, v) if u != v else (u,))
            for s, x in enumerate(g.rotation[w])
            if x == e
        ]
    committed: dict[int, set[int]] = {v: set() for v in g.vertices}
    mac: dict[int, int] = {v: 0 for v in g.vertices}
    best_size = [g.num_edges() + 1]
    best_slots: list[dict[int, set[int]] | None] = [None]

    def dfs(i: int, bound: int):
        if bound >= best_size[0]:
            return
        if i == len(edge_ids):
            best_size[0] = bound
            best_slots[0] = {v: set(s) for v, s in committed.items() if s}
            return
        e = edge_ids[i]
        for v, s in options[e]:
            old = mac[v]
            committed[v].add(s)
            new, _ = min_arc_cover(deg[v], committed[v], m)
            mac[v] = new
            dfs(i + 1, bound - old + new)
            mac[v] = old
            committed[v].discard(s)

    dfs(0, 0)
    slots = best_slots[0] or {}
    angles: dict[int, list[Angle]] = {}
    for v in sorted(slots):
        _, arcs = min_arc_cover(deg[v], slots[v], m)
        angles[v] = _arcs_to_angles(v, deg[v], arcs, m)
    return best_size[0], AngleAssignment.build(angles)
