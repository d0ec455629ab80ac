"""Schedules realizing the constructive upper bounds, and the reverse extraction.

* :func:`clear_via_decomposition` walks a proper path decomposition bag by bag
  with ``width + 1`` lions, guarding each bag intersection.
* :func:`clear_monotone_via_connected_decomposition` does the same along a
  decomposition with connected prefixes, never leaving the cleared region.
* :func:`decomposition_from_monotone` turns a polite monotone clearing back into
  a path decomposition.
* :func:`counterexample_family` builds the trees T_i, their universal-vertex
  supergraphs G_i and a three-lion clearing of G_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import Schedule, ScheduleBuilder, Trace
from .errors import (DecompositionError, DomainError, InvalidParameterError,
                     PreconditionError, SizeGuardError, SynthesisError)
from .graph import Graph, add_universal_vertex, bfs_distances, boundary, complete_binary_tree, shortest_path
from .width import PathDecomposition, connected_ordering, normalize_proper, validate_decomposition


def clear_via_decomposition(g: Graph, d: PathDecomposition) -> Schedule:
    """Clear g with ``width(d) + 1`` lions by occupying the bags in order.

    Lions on the intersection of the current and next bag stay put; every
    other lion is matched greedily (by distance) to an unoccupied vertex of the
    next bag and walks there along a shortest path, waiting once it arrives.
    ``notes["phases"]`` lists ``(i, start, end)``: during times start..end the
    intersection of bags i and i+1 is guarded.
    """
    if not g.connected:
        raise DomainError("graph must be connected")
    d = normalize_proper(g, d)
    bags = [sorted(b) for b in d.bags]
    k = d.width + 1
    first = bags[0]
    positions = first + [first[0]] * (k - len(first))
    builder = ScheduleBuilder(positions)
    phases = []
    for i in range(len(bags) - 1):
        cur, nxt = set(bags[i]), set(bags[i + 1])
        keep = cur & nxt
        guards: dict[int, int] = {}
        for lion, v in enumerate(builder.current):
            if v in keep and v not in guards:
                guards[v] = lion
        free = [lion for lion in range(k) if lion not in guards.values()]
        targets = sorted(nxt - cur)
        if len(free) < len(targets):
            raise SynthesisError(f"bag {i + 1}: {len(targets)} targets but {len(free)} free lions")
        dist = {x: bfs_distances(g, x) for x in targets}
        pairs = sorted((dist[x][builder.current[lion]], x, lion) for x in targets for lion in free)
        assigned: dict[int, int] = {}
        used_targets = set()
        for _, x, lion in pairs:
            if lion in assigned or x in used_targets:
                continue
            assigned[lion] = x
            used_targets.add(x)
        routes = {lion: shortest_path(g, builder.current[lion], x) for lion, x in assigned.items()}
        start = builder.time
        longest = max(len(r) for r in routes.values())
        for s in range(1, longest):
            builder.move({lion: r[min(s, len(r) - 1)] for lion, r in routes.items()})
        phases.append((i, start, builder.time))
    return builder.build(strategy="bag-sweep", phases=phases, bags=[list(b) for b in bags])


def clear_monotone_via_connected_decomposition(g: Graph, d: PathDecomposition) -> Schedule:
    """Monotone, polite clearing with ``width(d) + 1`` lions from a connected-prefix decomposition.

    Vertices are cleared one at a time in a connected order.  The boundary of
    the cleared region always keeps a lion; a spare lion walks inside the
    cleared region to a boundary vertex next to the new vertex and steps onto it.
    """
    if not g.connected:
        raise DomainError("graph must be connected")
    bad = validate_decomposition(g, d)
    if bad:
        raise DecompositionError(f"invalid path decomposition: {bad[:3]}", bad)
    if not d.has_connected_prefixes(g):
        raise SynthesisError("bag prefixes are not connected; no route stays inside the cleared region")
    order = connected_ordering(g, d)
    k = d.width + 1
    builder = ScheduleBuilder([order[0]] * k)
    cleared = {order[0]}
    for x in order[1:]:
        guard_set = boundary(g, cleared)
        pos = builder.current
        load: dict[int, int] = {}
        for v in pos:
            load[v] = load.get(v, 0) + 1
        spares = [lion for lion, v in enumerate(pos) if v not in guard_set or load[v] >= 2]
        if not spares:
            raise SynthesisError(f"no spare lion to clear vertex {x}")
        entries = sorted(v for v in g.adjacency[x] if v in cleared)
        best = None
        for lion in spares:
            dist = bfs_distances(g, pos[lion], frozenset(cleared))
            for y in entries:
                if y in dist and (best is None or (dist[y], lion, y) < best):
                    best = (dist[y], lion, y)
        if best is None:
            raise SynthesisError(f"vertex {x} unreachable inside the cleared region")
        _, lion, y = best
        builder.walk(lion, shortest_path(g, pos[lion], y, frozenset(cleared)) + [x])
        cleared.add(x)
    return builder.build(strategy="connected-sweep", order=order)


def _movers(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def decomposition_from_monotone(g: Graph, trace: Trace) -> PathDecomposition:
    """Path decomposition read off a recorded polite monotone clearing.

    Bag 0 is the initial lion set; bag t joins the boundary of the cleared set
    at t-1 with the lions that newly clear a vertex at t.  Consecutive duplicate
    bags, and the empty bags after the graph is clear, are dropped.
    """
    states = trace.states
    if len(states) != trace.steps + 1:
        raise PreconditionError("trace was recorded without intermediate states")
    for t in range(1, len(states)):
        if states[t].contaminated - states[t - 1].contaminated:
            raise PreconditionError("recontamination", t)
        if _movers(states[t - 1].lions, states[t].lions) > 1:
            raise PreconditionError("more than one lion moves", t)
    if not trace.cleared:
        raise PreconditionError("trace does not clear the graph")
    bags = [frozenset(states[0].lions)]
    for t in range(1, len(states)):
        prev, cur = states[t - 1], states[t]
        bags.append(boundary(g, prev.cleared) | (cur.lion_set & prev.contaminated))
    while len(bags) > 1 and not bags[-1]:
        bags.pop()
    dedup = [bags[0]]
    for b in bags[1:]:
        if b != dedup[-1]:
            dedup.append(b)
    out = PathDecomposition(tuple(dedup))
    bad = validate_decomposition(g, out)
    if bad:
        raise DecompositionError(f"extracted bags are not a path decomposition: {bad[:3]}", bad)
    return out


# --- monotone clearing of complete binary trees ------------------------------

def complete_binary_tree_monotone_schedule(h: int) -> Schedule:
    """Polite monotone clearing of the height-h complete binary tree with h lions.

    One lion parks on the root while the others clear the left subtree the
    same way; then everybody gathers and sweeps the right subtree from its
    root, keeping a blocker on each subtree root entered.
    """
    if h < 1:
        raise InvalidParameterError("h must be >= 1")
    n = 2 ** (h + 1) - 1

    def left(v):
        return 2 * v + 1

    def right(v):
        return 2 * v + 2

    start: dict[int, int] = {}

    def place(v, height, team):
        # initial positions of the free-start recursion
        if height == 1:
            start[team[0]] = left(v)
            return
        start[team[0]] = v
        place(left(v), height - 1, team[1:])

    team = list(range(h))
    place(0, h, team)
    builder = ScheduleBuilder([start[i] for i in team])

    def one_by_one(lions, target):
        for lion in lions:
            builder.move({lion: target})

    def root_start(v, height, lions):
        # all lions on v; v's outside neighbours are clear or guarded
        if height == 0:
            return
        helpers = lions[1:]
        for child in (left(v), right(v)):
            one_by_one(helpers, child)
            root_start(child, height - 1, helpers)
            one_by_one(helpers, v)

    def free_start(v, height, lions):
        if height == 1:
            builder.walk(lions[0], [left(v), v, right(v)])
            return
        free_start(left(v), height - 1, lions[1:])
        for lion in lions[1:]:
            builder.walk(lion, _tree_path(builder.current[lion], v))
        one_by_one(lions, right(v))
        root_start(right(v), height - 1, lions)

    free_start(0, h, team)
    sched = builder.build(strategy="binary-root-blocker", h=h)
    assert max(max(f) for f in builder.frames) < n
    return sched


def _tree_path(a: int, b: int) -> list[int]:
    """Path between two heap-indexed vertices of a complete binary tree."""
    up_a, up_b = [a], [b]
    while up_a[-1] != up_b[-1]:
        if up_a[-1] > up_b[-1]:
            up_a.append((up_a[-1] - 1) // 2)
        else:
            up_b.append((up_b[-1] - 1) // 2)
    return up_a + up_b[-2::-1]


# --- subgraph counterexample -------------------------------------------------

UNIVERSAL = -1


@dataclass
class CounterexampleInstance:
    index: int
    tree: Graph
    supergraph: Graph
    schedule: Schedule
    duration: int
    root: int
    timing: list[tuple[int, int, int]] = field(default_factory=list)
    """Per level: (level, steps the left path is unguarded, path length to the left subtree)."""


def counterexample_sizes(i: int) -> tuple[int, int]:
    """(vertex count of T_i, clearing duration t_i) without building anything."""
    if i < 1:
        raise InvalidParameterError("index must be >= 1")
    n, t = 3, 1
    for _ in range(i - 1):
        m = t + 5
        n, t = 2 * n + 2 * m + 1, 2 * t + 2 * m + 5
    return n, t


def counterexample_family(i: int, *, max_vertices: int = 50_000) -> CounterexampleInstance:
    """T_i, G_i = T_i + universal vertex, and a three-lion clearing of G_i.

    One lion sits on the universal vertex for the whole schedule.  The other
    two clear the left copy of T_{i-1}, climb its path, hop out via the
    universal vertex, clear the right copy, and then one of them returns to
    the left copy's root through the universal vertex before both climb to the
    new root.
    """
    need, _ = counterexample_sizes(i)
    if need > max_vertices:
        raise SizeGuardError(f"T_{i} has {need} vertices, above max_vertices={max_vertices}")
    n, edges, labels, root = 3, [(0, 1), (0, 2)], ["r", "a", "b"], 0
    frames: list[tuple[int, int]] = [(1, 2), (0, 0)]
    timing = []
    for level in range(2, i + 1):
        t_prev = len(frames) - 1
        m = t_prev + 5
        off_r = n
        ql = [2 * n + j for j in range(m)]
        qr = [2 * n + m + j for j in range(m)]
        new_root = 2 * n + 2 * m
        new_edges = list(edges) + [(a + off_r, b + off_r) for a, b in edges]
        new_edges += [(root, ql[0]), (root + off_r, qr[0])]
        new_edges += [(ql[j], ql[j + 1]) for j in range(m - 1)]
        new_edges += [(qr[j], qr[j + 1]) for j in range(m - 1)]
        new_edges += [(ql[-1], new_root), (qr[-1], new_root)]
        new_labels = (["L." + s for s in labels] + ["R." + s for s in labels]
                      + [f"pL{j + 1}" for j in range(m)] + [f"pR{j + 1}" for j in range(m)] + ["r"])

        def shift(f, off):
            return tuple(p if p == UNIVERSAL else p + off for p in f)

        root_l, root_r = root, root + off_r
        out = [shift(f, 0) for f in frames]                      # mimic on the left copy
        out += [(q, q) for q in ql]                              # climb the left path
        vacate = len(out) - 1
        out.append((UNIVERSAL, UNIVERSAL))                       # hop to the universal vertex
        out.append(shift(frames[0], off_r))                      # drop into the right copy
        out += [shift(f, off_r) for f in frames[1:]]             # mimic on the right copy
        out.append((UNIVERSAL, root_r))                          # one lion back via u ...
        out.append((root_l, root_r))                             # ... to the left root
        back = len(out) - 1
        out += list(zip(ql + [new_root], qr + [new_root]))       # both climb to the new root
        gap, distance = back - vacate, m + 1
        if gap != t_prev + 4 or not gap < distance:
            raise SynthesisError(f"level {level}: unguarded for {gap} steps over a path of {distance}")
        timing.append((level, gap, distance))
        n, edges, labels, root, frames = 2 * n + 2 * m + 1, new_edges, new_labels, new_root, out
    tree = Graph.from_edges(n, edges, labels)
    sup = add_universal_vertex(tree)
    u = n
    positions = [(u, u if a == UNIVERSAL else a, u if b == UNIVERSAL else b) for a, b in frames]
    builder = ScheduleBuilder(positions[0])
    for p in positions[1:]:
        builder.move(dict(enumerate(p)))
    sched = builder.build(strategy="subgraph-counterexample", index=i)
    return CounterexampleInstance(i, tree, sup, sched, len(frames) - 1, root, timing)
