"""Contamination dynamics of the lions game, schedule replay and runtime checks.

One time step applies every lion move simultaneously.  A vertex is contaminated
at time t when it is not occupied and either was contaminated at t-1, or has a
neighbor contaminated at t-1 joined by an edge no lion crossed (either way)
during step t.  Remote operations are applied after that rule.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import IllegalMoveError, InvalidSetError, RestrictionError
from .graph import Graph, _check, components, induced_subgraph, neighborhood


class Move(NamedTuple):
    src: int
    dst: int


@dataclass(frozen=True)
class StepAction:
    moves: tuple[Move, ...]
    remote_clears: frozenset[int] = frozenset()
    remote_contaminations: frozenset[int] = frozenset()

    @property
    def analytical(self) -> bool:
        return bool(self.remote_clears or self.remote_contaminations)

    @property
    def movers(self) -> int:
        return sum(1 for m in self.moves if m.src != m.dst)


@dataclass(frozen=True)
class Schedule:
    """Replayable lion schedule.

    ``steps[t-1]`` holds the moves of time step t, index-aligned with the lion
    roster fixed by ``initial_positions``.  ``initial_remote_clears`` is applied
    to the t=0 state (analytical use only).
    """

    initial_positions: tuple[int, ...]
    steps: tuple[StepAction, ...] = ()
    initial_remote_clears: frozenset[int] = frozenset()
    notes: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def lion_count(self) -> int:
        return len(self.initial_positions)

    @property
    def analytical(self) -> bool:
        return bool(self.initial_remote_clears) or any(s.analytical for s in self.steps)

    @property
    def polite(self) -> bool:
        return all(s.movers <= 1 for s in self.steps)

    def positions(self) -> list[tuple[int, ...]]:
        """Lion positions at every time step, following the moves."""
        pos = [tuple(self.initial_positions)]
        for s in self.steps:
            pos.append(tuple(m.dst for m in s.moves))
        return pos

    def without_remote_operations(self) -> "Schedule":
        return Schedule(self.initial_positions,
                        tuple(StepAction(s.moves) for s in self.steps), frozenset(), dict(self.notes))


def schedule_from_positions(frames: Sequence[Sequence[int]], **notes) -> Schedule:
    """Build a schedule from consecutive roster-aligned position tuples."""
    frames = [tuple(f) for f in frames]
    steps = []
    for prev, cur in zip(frames, frames[1:]):
        if len(prev) != len(cur):
            raise IllegalMoveError("frames disagree on the lion count")
        steps.append(StepAction(tuple(Move(a, b) for a, b in zip(prev, cur))))
    return Schedule(frames[0], tuple(steps), notes=notes)


class ScheduleBuilder:
    """Accumulates roster-aligned frames; used by the strategy synthesizers."""

    def __init__(self, positions: Iterable[int]):
        self.frames: list[tuple[int, ...]] = [tuple(positions)]

    @property
    def current(self) -> tuple[int, ...]:
        return self.frames[-1]

    @property
    def time(self) -> int:
        return len(self.frames) - 1

    def move(self, targets: dict[int, int]) -> None:
        """One time step: lion ``i`` goes to ``targets[i]``, everyone else stays."""
        cur = list(self.current)
        for lion, dst in targets.items():
            cur[lion] = dst
        self.frames.append(tuple(cur))

    def walk(self, lion: int, path: Sequence[int]) -> None:
        """Move a single lion along ``path`` (which starts at its position), one edge per step."""
        if path and path[0] != self.current[lion]:
            raise IllegalMoveError(f"lion {lion} is at {self.current[lion]}, not {path[0]}")
        for v in path[1:]:
            self.move({lion: v})

    def walk_together(self, lions: Sequence[int], path: Sequence[int]) -> None:
        for v in path[1:]:
            self.move({lion: v for lion in lions})

    def build(self, **notes) -> Schedule:
        return schedule_from_positions(self.frames, **notes)


@dataclass(frozen=True)
class GameState:
    lions: tuple[int, ...]
    contaminated: frozenset[int]
    cleared: frozenset[int]

    @property
    def lion_set(self) -> frozenset[int]:
        return frozenset(self.lions)


@dataclass
class Trace:
    states: list[GameState]
    monotone: bool
    violations: list[tuple[int, str]]
    cleared: bool
    clear_time: int | None
    lions: int
    steps: int
    final: GameState
    first_recontamination: int | None = None

    def contaminated_sets(self) -> list[frozenset[int]]:
        return [s.contaminated for s in self.states]


def initial_state(g: Graph, positions: Iterable[int],
                  remote_clears: Iterable[int] = ()) -> GameState:
    lions = tuple(positions)
    _check(g, lions)
    occupied = frozenset(lions)
    w = frozenset(range(g.n)) - occupied - _check(g, remote_clears)
    return GameState(lions, w, frozenset(range(g.n)) - w)


def _validate_moves(g: Graph, lions: Sequence[int], moves: Sequence[Move], step: int | None):
    if len(moves) != len(lions):
        raise IllegalMoveError(f"{len(moves)} moves for {len(lions)} lions", step)
    for i, (mv, at) in enumerate(zip(moves, lions)):
        src, dst = mv
        if src != at:
            raise IllegalMoveError(f"lion {i} moves from {src} but stands on {at}", step, i)
        if not (0 <= dst < g.n):
            raise IllegalMoveError(f"lion {i} moves to unknown vertex {dst}", step, i)
        if dst != src and dst not in g.adjacency[src]:
            raise IllegalMoveError(f"lion {i} moves along non-edge ({src}, {dst})", step, i)


def step(g: Graph, state: GameState, action: StepAction) -> GameState:
    """Apply one time step by direct evaluation of the contamination rule."""
    _validate_moves(g, state.lions, action.moves, None)
    occupied = frozenset(m.dst for m in action.moves)
    traversed = {frozenset(m) for m in action.moves if m.src != m.dst}
    prev = state.contaminated
    spread = {v for v in range(g.n) if v not in occupied
              and any(w in prev and frozenset((v, w)) not in traversed for w in g.adjacency[v])}
    w = (prev - occupied) | spread
    w = _apply_remote(g, w, occupied, action.remote_clears, action.remote_contaminations)
    return GameState(tuple(m.dst for m in action.moves), frozenset(w), frozenset(range(g.n)) - w)


def _apply_remote(g, w, occupied, clears, contaminations):
    clears = _check(g, clears)
    contaminations = _check(g, contaminations)
    if contaminations & occupied:
        raise InvalidSetError(f"remote contamination of occupied vertices {sorted(contaminations & occupied)}")
    return (set(w) - clears) | contaminations


class _Replayer:
    """Incremental replay; per-step cost tracks the contamination frontier, not n."""

    def __init__(self, g: Graph, positions: Sequence[int], remote_clears=frozenset()):
        self.g = g
        self.lions = list(positions)
        _check(g, self.lions)
        self.wcount = [0] * g.n
        self.w: set[int] = set()
        self.frontier: set[int] = set()
        start = set(range(g.n)) - set(self.lions) - set(_check(g, remote_clears))
        self._set_contaminated(start, ())

    def _set_contaminated(self, added: Iterable[int], removed: Iterable[int]) -> None:
        adj = self.g.adjacency
        touched = set()
        for v in removed:
            self.w.discard(v)
            touched.add(v)
            for x in adj[v]:
                self.wcount[x] -= 1
                touched.add(x)
        for v in added:
            self.w.add(v)
            touched.add(v)
            for x in adj[v]:
                self.wcount[x] += 1
                touched.add(x)
        for x in touched:
            if x not in self.w and self.wcount[x] > 0:
                self.frontier.add(x)
            else:
                self.frontier.discard(x)

    def advance(self, action: StepAction, t: int) -> tuple[set[int], set[int]]:
        g = self.g
        _validate_moves(g, self.lions, action.moves, t)
        occupied = {m.dst for m in action.moves}
        blocked: Counter[int] = Counter()
        seen_edges = set()
        for src, dst in action.moves:
            if src == dst:
                continue
            edge = (src, dst) if src < dst else (dst, src)
            if edge in seen_edges:
                continue
            seen_edges.add(edge)
            # an edge only shields a clear endpoint from a contaminated one
            if dst in self.w and src not in self.w:
                blocked[src] += 1
            elif src in self.w and dst not in self.w:
                blocked[dst] += 1
        added = {v for v in self.frontier
                 if v not in occupied and self.wcount[v] > blocked[v]}
        removed = self.w & occupied
        rc = _check(g, action.remote_clears)
        rx = _check(g, action.remote_contaminations)
        if rx & occupied:
            raise InvalidSetError(f"step {t}: remote contamination of occupied vertices")
        removed = (removed | (rc & self.w)) - rx
        added = (added - rc) | (rx - self.w)
        self._set_contaminated(added, removed)
        self.lions = [m.dst for m in action.moves]
        return added, removed

    def state(self) -> GameState:
        w = frozenset(self.w)
        return GameState(tuple(self.lions), w, frozenset(range(self.g.n)) - w)


def simulate(g: Graph, schedule: Schedule, *, record: bool = True,
             check_invariants: bool = False) -> Trace:
    """Replay a schedule.

    With ``record=False`` only the final state is kept, which is what large
    instances (tens of thousands of vertices and steps) need.  With
    ``check_invariants=True`` the component-adjacency invariant is checked at
    every step and failures are logged in ``Trace.violations``.
    """
    rep = _Replayer(g, schedule.initial_positions, schedule.initial_remote_clears)
    states = [rep.state()] if record else []
    violations: list[tuple[int, str]] = []
    monotone = True
    first_recontamination = None
    clear_time = 0 if not rep.w else None

    def check(t, st):
        for item in check_component_invariant(g, st):
            violations.append((t, item))
        if not st.lion_set <= st.cleared:
            violations.append((t, "lion-on-contaminated-vertex"))

    if check_invariants:
        check(0, states[0] if record else rep.state())
    for t, action in enumerate(schedule.steps, start=1):
        added, _ = rep.advance(action, t)
        if added and monotone:
            monotone = False
            first_recontamination = t
        if clear_time is None and not rep.w:
            clear_time = t
        if record or check_invariants:
            st = rep.state()
            if record:
                states.append(st)
            if check_invariants:
                check(t, st)
    final = states[-1] if record else rep.state()
    if not record:
        states = [final]
    return Trace(states, monotone, violations, not final.contaminated, clear_time,
                 schedule.lion_count, len(schedule.steps), final, first_recontamination)


def check_component_invariant(g: Graph, state: GameState) -> list[str]:
    """Contaminated components whose neighborhood is clear must touch a lion.

    Returns one description per offending component; empty when the invariant holds.
    """
    out = []
    occupied = state.lion_set
    for comp in components(g, state.contaminated):
        nb = neighborhood(g, comp)
        if nb <= state.cleared and not nb & occupied:
            out.append(f"component-adjacency:{min(comp)}")
    return out


def boundary_violations(g: Graph, trace: Trace) -> list[tuple[int, frozenset[int]]]:
    """Steps where some boundary vertex of the cleared set carries no lion."""
    from .graph import boundary

    out = []
    for t, st in enumerate(trace.states):
        missing = boundary(g, st.cleared) - st.lion_set
        if missing:
            out.append((t, missing))
    return out


def restrict_to_subgraph(schedule: Schedule, g: Graph, h_vertices: Iterable[int]) -> Schedule:
    """Reinterpret a schedule on the subgraph induced by ``h_vertices``.

    Remote clears outside H are dropped; everything else is re-indexed to the
    vertex numbering of :func:`lions.graph.induced_subgraph`.
    """
    hv = _check(g, h_vertices)
    _, old = induced_subgraph(g, hv)
    index = {v: i for i, v in enumerate(old)}
    for v in schedule.initial_positions:
        if v not in hv:
            raise RestrictionError(f"lion starts outside H at {v}")
    steps = []
    for t, s in enumerate(schedule.steps, start=1):
        for src, dst in s.moves:
            if src not in hv or dst not in hv:
                raise RestrictionError(f"step {t}: move ({src}, {dst}) leaves H")
        if s.remote_contaminations - hv:
            raise RestrictionError(f"step {t}: remote contamination outside H")
        steps.append(StepAction(tuple(Move(index[a], index[b]) for a, b in s.moves),
                                frozenset(index[v] for v in s.remote_clears if v in hv),
                                frozenset(index[v] for v in s.remote_contaminations)))
    return Schedule(tuple(index[v] for v in schedule.initial_positions), tuple(steps),
                    frozenset(index[v] for v in schedule.initial_remote_clears if v in hv))


def extend_with_remote_clears(schedule: Schedule, g: Graph, h_vertices: Iterable[int]) -> Schedule:
    """Lift a schedule on the induced subgraph H to G, remotely clearing V(G)-V(H) at every step.

    ``schedule`` is indexed like :func:`lions.graph.induced_subgraph` numbers H.
    """
    hv = _check(g, h_vertices)
    _, old = induced_subgraph(g, hv)
    outside = frozenset(range(g.n)) - hv

    def lift(vs):
        return frozenset(old[v] for v in vs)

    steps = tuple(StepAction(tuple(Move(old[a], old[b]) for a, b in s.moves),
                             lift(s.remote_clears) | outside, lift(s.remote_contaminations))
                  for s in schedule.steps)
    return Schedule(tuple(old[v] for v in schedule.initial_positions), steps,
                    lift(schedule.initial_remote_clears) | outside)
