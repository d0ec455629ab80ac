"""Zero-visibility cops and robber, and translations to and from lion schedules.

Dirt spreads to every neighbor with no edge blocking, then cops clean the
vertices they stand on:

    R_{t+1} = (S_t | N(S_t)) - P_t,    S_{t+1} = R_{t+1} - P_{t+1},    S_0 = V - P_0.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .engine import Move, Schedule, StepAction, simulate
from .errors import BudgetExceeded, IllegalMoveError, InvalidParameterError, PreconditionError
from .graph import Graph, _check, neighborhood
from .search import DEFAULT_MAX_N, SolveResult, _mask, _neighborhood_mask, _require


@dataclass(frozen=True)
class CopState:
    cops: tuple[int, ...]
    dirty_post: frozenset[int]
    dirty_pre: frozenset[int]


@dataclass(frozen=True)
class CopSchedule:
    initial: tuple[int, ...]
    steps: tuple[tuple[Move, ...], ...] = ()

    @property
    def cop_count(self) -> int:
        return len(self.initial)

    def positions(self) -> list[tuple[int, ...]]:
        out = [tuple(self.initial)]
        for moves in self.steps:
            out.append(tuple(m.dst for m in moves))
        return out


def cop_initial(g: Graph, cops: Sequence[int]) -> CopState:
    cops = tuple(cops)
    dirty = frozenset(range(g.n)) - _check(g, cops)
    return CopState(cops, dirty, dirty)


def cop_step(g: Graph, state: CopState, moves: Sequence[Move]) -> CopState:
    """Spread from the current cops, then capture at the new ones."""
    if len(moves) != len(state.cops):
        raise IllegalMoveError(f"{len(moves)} moves for {len(state.cops)} cops")
    for i, ((src, dst), at) in enumerate(zip(moves, state.cops)):
        if src != at:
            raise IllegalMoveError(f"cop {i} moves from {src} but stands on {at}", lion=i)
        if not (0 <= dst < g.n) or (dst != src and dst not in g.adjacency[src]):
            raise IllegalMoveError(f"cop {i} cannot move {src} -> {dst}", lion=i)
    s = state.dirty_post
    pre = (s | neighborhood(g, s)) - frozenset(state.cops)
    cops = tuple(m.dst for m in moves)
    return CopState(cops, pre - frozenset(cops), pre)


def simulate_cops(g: Graph, cs: CopSchedule) -> list[CopState]:
    states = [cop_initial(g, cs.initial)]
    for t, moves in enumerate(cs.steps, start=1):
        try:
            states.append(cop_step(g, states[-1], moves))
        except IllegalMoveError as exc:
            raise IllegalMoveError(str(exc), t, exc.lion) from None
    return states


def cops_clear(g: Graph, cs: CopSchedule) -> bool:
    return not simulate_cops(g, cs)[-1].dirty_post


def _cop_successors(g: Graph, cops: tuple[int, ...], s: int):
    # only the new positions matter, so enumerate distinct destination multisets
    pre = (s | _neighborhood_mask(g.masks, s)) & ~_mask(cops)
    groups = []
    for v, c in sorted(Counter(cops).items()):
        closed = (v, *sorted(g.adjacency[v]))
        groups.append(list(itertools.combinations_with_replacement(closed, c)))
    seen = set()
    for combo in itertools.product(*groups):
        new = tuple(sorted(itertools.chain.from_iterable(combo)))
        if new not in seen:
            seen.add(new)
            yield new, pre & ~_mask(new)


def _cop_moves(g, cops, target):
    remaining = Counter(target)
    out = []
    # match each cop to a reachable destination; small instances, so backtrack
    def assign(i):
        if i == len(cops):
            return True
        v = cops[i]
        for d in (v, *sorted(g.adjacency[v])):
            if remaining[d]:
                remaining[d] -= 1
                out.append(Move(v, d))
                if assign(i + 1):
                    return True
                out.pop()
                remaining[d] += 1
        return False

    if not assign(0):
        raise AssertionError("no cop assignment realizes the parent link")
    return tuple(out)


def cops_can_clear(g: Graph, k: int, *, budget: int | None = None,
                   max_n: int | None = DEFAULT_MAX_N) -> CopSchedule | None:
    """Witness schedule for k cops, or None when k cops cannot clear g."""
    _require(g, max_n)
    if k < 1:
        raise InvalidParameterError("k must be >= 1")
    full = g.full_mask
    seen: dict[tuple[int, ...], list[int]] = {}
    parent = {}

    def fresh(p, s):
        bucket = seen.setdefault(p, [])
        if any(o & ~s == 0 for o in bucket):
            return False
        bucket.append(s)
        return True

    queue = deque()
    for start in itertools.combinations_with_replacement(range(g.n), k):
        node = (start, full & ~_mask(start))
        if fresh(*node):
            parent[node] = None
            queue.append(node)
    nodes = 0
    while queue:
        node = queue.popleft()
        if node[1] == 0:
            return _cop_witness(g, node, parent)
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"budget of {budget} nodes exhausted at k={k}", nodes)
        for nxt in _cop_successors(g, *node):
            if fresh(*nxt):
                parent[nxt] = node
                if nxt[1] == 0:
                    return _cop_witness(g, nxt, parent)
                queue.append(nxt)
    return None


def _cop_witness(g, goal, parent) -> CopSchedule:
    chain = [goal]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()
    roster = list(chain[0][0])
    steps = []
    for (cops, _), (new, _) in zip(chain, chain[1:]):
        moves = _cop_moves(g, tuple(roster), new)
        roster = [m.dst for m in moves]
        steps.append(moves)
    return CopSchedule(tuple(chain[0][0]), tuple(steps))


def cop_number_exact(g: Graph, *, budget: int | None = None,
                     max_n: int | None = DEFAULT_MAX_N) -> SolveResult:
    """Zero-visibility cop number with a witness :class:`CopSchedule`."""
    _require(g, max_n)
    started = time.perf_counter()
    for k in range(1, g.n + 1):
        cs = cops_can_clear(g, k, budget=budget, max_n=max_n)
        if cs is not None:
            return SolveResult(k, cs, stats={"elapsed": time.perf_counter() - started})
    raise AssertionError("n cops always clear a graph")


def lions_from_cops(g: Graph, cs: CopSchedule) -> Schedule:
    """Two lions per cop: at step t the pair stands on the cop's positions at t-1 and t."""
    if not cops_clear(g, cs):
        raise PreconditionError("cop schedule does not clear the graph")
    paths = list(zip(*cs.positions()))  # per cop: v_0, v_1, ...
    initial = tuple(v for p in paths for v in (p[0], p[0]))
    steps = []
    for t in range(1, len(cs.steps) + 1):
        moves = []
        for p in paths:
            moves.append(Move(p[max(t - 2, 0)], p[t - 1]))
            moves.append(Move(p[t - 1], p[t]))
        steps.append(StepAction(tuple(moves)))
    return Schedule(initial, tuple(steps), notes={"strategy": "cop-trail", "cops": cs.cop_count})


def cops_from_lions(g: Graph, s: Schedule) -> CopSchedule:
    """Cops walking exactly the lion trajectories."""
    if s.analytical:
        raise PreconditionError("schedule uses remote clears or contaminations")
    if not simulate(g, s, record=False).cleared:
        raise PreconditionError("lion schedule does not clear the graph")
    return CopSchedule(tuple(s.initial_positions), tuple(tuple(st.moves) for st in s.steps))
