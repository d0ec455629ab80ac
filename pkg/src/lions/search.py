"""Exhaustive state-space search for lion numbers.

A search node is ``(lions, contaminated)``: the sorted lion multiset and a
bitmask of contaminated vertices.  Nodes are explored breadth first.  A node is
skipped when a visited node with the same lions has a contaminated set contained
in its own; replaying the same moves from the smaller set can only keep the
contaminated set smaller, so nothing reachable is lost.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter, deque
from dataclasses import dataclass, field

from .engine import Move, Schedule, StepAction
from .errors import BudgetExceeded, DomainError, InvalidParameterError, SizeGuardError
from .graph import Graph

DEFAULT_MAX_N = 12


@dataclass
class SolveResult:
    value: int
    witness: Schedule
    monotone: bool = False
    polite: bool = False
    stats: dict = field(default_factory=dict)


@dataclass
class Clearability:
    """Outcome of :func:`clearable`; ``witness`` is set exactly when ``clearable`` is true."""

    clearable: bool
    witness: Schedule | None
    nodes: int


def _require(g: Graph, max_n: int | None) -> None:
    if not g.connected:
        raise DomainError("graph must be connected")
    if max_n is not None and g.n > max_n:
        raise SizeGuardError(f"n={g.n} exceeds the search guard {max_n}; raise max_n to override")


def _neighborhood_mask(masks, w: int) -> int:
    out = 0
    x = w
    while x:
        low = x & -x
        out |= masks[low.bit_length() - 1]
        x ^= low
    return out & ~w


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def after_moves(g: Graph, w: int, moves) -> int:
    """Contaminated mask after one step; ``moves`` is a sequence of (src, dst)."""
    masks = g.masks
    occupied = _mask(d for _, d in moves)
    dests: dict[int, int] = {}
    for s, d in moves:
        dests[s] = dests.get(s, 0) | (1 << d)
    protected = 0
    for s, dm in dests.items():
        if masks[s] & w & ~dm == 0:
            protected |= 1 << s
    return (w | _neighborhood_mask(masks, w)) & ~(occupied | protected)


def _group_options(g: Graph, v: int, count: int, w: int):
    """Ways the ``count`` lions on v can move: (sorted destinations, v stays clear on its own)."""
    closed = (v, *sorted(g.adjacency[v]))
    threat = g.masks[v] & w
    for dest in itertools.combinations_with_replacement(closed, count):
        yield dest, threat & ~_mask(dest) == 0


def _successors_full(g: Graph, lions: tuple[int, ...], w: int):
    """All distinct (lions', contaminated') reachable in one step; simultaneous moves."""
    partial: dict[tuple[int, ...], list[int]] = {(): [0]}
    for v, c in sorted(Counter(lions).items()):
        nxt: dict[tuple[int, ...], list[int]] = {}
        for dest, safe in _group_options(g, v, c, w):
            bit = (1 << v) if safe else 0
            for key, prots in partial.items():
                merged = tuple(sorted(key + dest))
                bucket = nxt.setdefault(merged, [])
                for p in prots:
                    q = p | bit
                    if any(q & ~o == 0 for o in bucket):
                        continue
                    bucket[:] = [o for o in bucket if o & ~q != 0]
                    bucket.append(q)
        partial = nxt
    base = w | _neighborhood_mask(g.masks, w)
    for dest, prots in partial.items():
        occ = _mask(dest)
        for p in prots:
            yield dest, base & ~(occ | p)


def _successors_polite(g: Graph, lions: tuple[int, ...], w: int):
    """Successors where exactly one lion moves along an edge."""
    masks = g.masks
    base = w | _neighborhood_mask(masks, w)
    counts = Counter(lions)
    for v in sorted(counts):
        rest = list(lions)
        rest.remove(v)
        for x in sorted(g.adjacency[v]):
            new = tuple(sorted(rest + [x]))
            occ = _mask(new)
            prot = (1 << v) if masks[v] & w & ~(1 << x) == 0 else 0
            yield new, base & ~(occ | prot)


def _moves_between(g, lions, w, target_lions, target_w, polite):
    """A roster-aligned move tuple taking (lions, w) to exactly (target_lions, target_w)."""
    if polite:
        candidates = ([(v, v) if j != i else (v, x) for j, v in enumerate(lions)]
                      for i, v in enumerate(lions) for x in sorted(g.adjacency[v]))
    else:
        options = [[(v, v)] + [(v, x) for x in sorted(g.adjacency[v])] for v in lions]
        candidates = itertools.product(*options)
    for moves in candidates:
        if tuple(sorted(d for _, d in moves)) != target_lions:
            continue
        if after_moves(g, w, moves) == target_w:
            return list(moves)
    raise AssertionError("parent link does not correspond to a legal step")


class _Visited:
    def __init__(self):
        self.by_lions: dict[tuple[int, ...], list[int]] = {}

    def add_if_new(self, lions, w) -> bool:
        seen = self.by_lions.setdefault(lions, [])
        for o in seen:
            if o & ~w == 0:
                return False
        seen.append(w)
        return True


def clearable(g: Graph, k: int, *, monotone: bool = False, polite: bool = False,
              budget: int | None = None, max_n: int | None = DEFAULT_MAX_N) -> Clearability:
    """Decide whether k lions can clear g, optionally restricted to monotone/polite play.

    Raises :class:`BudgetExceeded` when more than ``budget`` nodes would be
    expanded; that outcome is unknown, never "not clearable".
    """
    _require(g, max_n)
    if k < 1:
        raise InvalidParameterError("k must be >= 1")
    full = g.full_mask
    visited = _Visited()
    parent: dict[tuple, tuple | None] = {}
    queue = deque()
    for start in itertools.combinations_with_replacement(range(g.n), k):
        w0 = full & ~_mask(start)
        if visited.add_if_new(start, w0):
            parent[(start, w0)] = None
            queue.append((start, w0))
    succ = _successors_polite if polite else _successors_full
    nodes = 0
    while queue:
        node = queue.popleft()
        lions, w = node
        if w == 0:
            return Clearability(True, _witness(g, node, parent, polite), nodes)
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"budget of {budget} nodes exhausted at k={k}", nodes)
        for nl, nw in succ(g, lions, w):
            if monotone and nw & ~w:
                continue
            if visited.add_if_new(nl, nw):
                parent[(nl, nw)] = node
                if nw == 0:
                    return Clearability(True, _witness(g, (nl, nw), parent, polite), nodes)
                queue.append((nl, nw))
    return Clearability(False, None, nodes)


def _witness(g, goal, parent, polite) -> Schedule:
    chain = [goal]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()
    roster = list(chain[0][0])
    steps = []
    for (lions, w), (nl, nw) in zip(chain, chain[1:]):
        moves = _moves_between(g, lions, w, nl, nw, polite)
        pool: dict[int, list[tuple[int, int]]] = {}
        for s, d in moves:
            pool.setdefault(s, []).append((s, d))
        step_moves = []
        for i, at in enumerate(roster):
            s, d = pool[at].pop(0)
            step_moves.append(Move(s, d))
            roster[i] = d
        steps.append(StepAction(tuple(step_moves)))
    return Schedule(tuple(chain[0][0]), tuple(steps))


def _minimal(g: Graph, monotone: bool, polite: bool, budget, max_n) -> SolveResult:
    _require(g, max_n)
    started = time.perf_counter()
    per_k = []
    for k in range(1, g.n + 1):
        res = clearable(g, k, monotone=monotone, polite=polite, budget=budget, max_n=max_n)
        per_k.append({"k": k, "clearable": res.clearable, "nodes": res.nodes})
        if res.clearable:
            return SolveResult(k, res.witness, monotone, polite, {
                "nodes": sum(p["nodes"] for p in per_k),
                "elapsed": time.perf_counter() - started,
                "per_k": per_k,
            })
    raise AssertionError("n lions always clear a graph")


def lion_number(g: Graph, *, budget: int | None = None,
                max_n: int | None = DEFAULT_MAX_N) -> SolveResult:
    """Exact lion number with a witness schedule."""
    return _minimal(g, False, False, budget, max_n)


def monotone_lion_number(g: Graph, *, polite: bool = True, budget: int | None = None,
                         max_n: int | None = DEFAULT_MAX_N) -> SolveResult:
    """Exact monotone lion number; by default only polite schedules are searched."""
    return _minimal(g, True, polite, budget, max_n)
