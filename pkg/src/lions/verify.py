"""Named cross-oracle suites, runnable from the CLI and from the test-suite.

Every suite returns a :class:`SuiteResult`; ``failures`` lists one line per
counterexample found.  Solver results are memoized per graph so suites that
share a census (upper bound, cops, boundary) pay for each search once.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .cops import cop_number_exact, cops_from_lions, lions_from_cops, simulate_cops
from .engine import (GameState, Move, Schedule, StepAction, boundary_violations,
                     extend_with_remote_clears, restrict_to_subgraph, simulate, step)
from .graph import (Graph, complete, complete_binary_tree, components, from_networkx,
                    induced_subgraph, is_isometric_subgraph)
from .search import lion_number, monotone_lion_number
from .synthesis import (clear_monotone_via_connected_decomposition, clear_via_decomposition,
                        complete_binary_tree_monotone_schedule, counterexample_family,
                        decomposition_from_monotone)
from .trees import tree_clearing_strategy, tree_lion_number, tree_pathwidth
from .width import connected_pathwidth_exact, pathwidth_exact, validate_decomposition

DEFAULT_SEED = 20240611


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", first failure: {self.failures[0]}" if self.failures else ""
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures{extra}"


# --- censuses and memoized oracles ------------------------------------------

@lru_cache(maxsize=None)
def connected_graphs(max_n: int = 7) -> tuple[Graph, ...]:
    """Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    return tuple(from_networkx(G) for G in nx.graph_atlas_g()[1:]
                 if G.number_of_nodes() <= max_n and nx.is_connected(G))


@lru_cache(maxsize=None)
def trees(max_n: int = 9) -> tuple[Graph, ...]:
    """Every tree on 1..max_n vertices up to isomorphism."""
    import networkx as nx

    out = [Graph.from_edges(1, [])]
    for n in range(2, max_n + 1):
        out.extend(from_networkx(T) for T in nx.nonisomorphic_trees(n))
    return tuple(out)


@lru_cache(maxsize=None)
def solved(g: Graph):
    return lion_number(g, max_n=None)


@lru_cache(maxsize=None)
def solved_monotone(g: Graph):
    return monotone_lion_number(g, max_n=None)


@lru_cache(maxsize=None)
def pw(g: Graph):
    return pathwidth_exact(g)


@lru_cache(maxsize=None)
def cpw(g: Graph):
    return connected_pathwidth_exact(g)


@lru_cache(maxsize=None)
def cops(g: Graph):
    return cop_number_exact(g, max_n=None)


def _edges(g: Graph) -> str:
    return f"n={g.n} edges={list(g.edges)}"


def boundary_ok(g: Graph, schedule: Schedule) -> bool:
    """Monotone replay keeps a lion on every boundary vertex of the cleared set."""
    tr = simulate(g, schedule)
    return tr.monotone and not boundary_violations(g, tr)


# --- suites -------------------------------------------------------------------

def suite_trees(max_n: int = 9, **_) -> SuiteResult:
    r = SuiteResult("tree sandwich")
    for t in trees(max_n):
        exact = solved(t).value
        lt, pt = tree_lion_number(t).value, tree_pathwidth(t).value
        r.expect(exact == lt, f"L={exact} but recursion gives {lt} on {_edges(t)}")
        r.expect(pt <= exact <= pt + 1, f"pw={pt}, L={exact} on {_edges(t)}")
        r.expect(pt == max(pw(t)[0], 0), f"tree pw {pt} vs DP {pw(t)[0]} on {_edges(t)}")
    return r


def suite_tightness(max_h: int = 8, **_) -> SuiteResult:
    r = SuiteResult("complete binary tree values")
    lions = {h: tree_lion_number(complete_binary_tree(h)).value for h in range(max_h + 1)}
    for h in range(3, max_h + 1):
        r.expect(lions[h] == lions[h - 2] + 1, f"L(T_{h})={lions[h]}, L(T_{h - 2})={lions[h - 2]}")
    for h in range(1, max_h + 1):
        p = tree_pathwidth(complete_binary_tree(h)).value
        r.expect(p == math.ceil(h / 2), f"pw(T_{h})={p}")
    r.info["lion_numbers"] = lions
    return r


def _census(max_n: int, sample: int | None, seed: int) -> list[Graph]:
    gs = list(connected_graphs(min(max_n, 7)))
    if sample is not None and sample < len(gs):
        gs = random.Random(seed).sample(gs, sample)
    return gs


def suite_upper_bound(max_n: int = 7, sample: int | None = None, seed: int = DEFAULT_SEED, **_) -> SuiteResult:
    r = SuiteResult("decomposition upper bound")
    for g in _census(max_n, sample, seed):
        w, d = pw(g)
        s = clear_via_decomposition(g, d)
        tr = simulate(g, s)
        r.expect(tr.cleared and s.lion_count <= w + 1,
                 f"bag sweep with {s.lion_count} lions, cleared={tr.cleared}, pw={w} on {_edges(g)}")
        r.expect(solved(g).value <= w + 1, f"L={solved(g).value} > pw+1={w + 1} on {_edges(g)}")
    return r


def suite_counterexample(max_index: int = 7, **_) -> SuiteResult:
    r = SuiteResult("subgraph counterexample")
    for i in range(1, max_index + 1):
        inst = counterexample_family(i)
        tr = simulate(inst.supergraph, inst.schedule, record=False)
        r.expect(tr.cleared and inst.schedule.lion_count == 3,
                 f"G_{i}: cleared={tr.cleared} with {inst.schedule.lion_count} lions")
        r.expect(tr.clear_time == inst.duration, f"G_{i}: clears at {tr.clear_time}, duration {inst.duration}")
        for level, gap, dist in inst.timing:
            r.expect(gap < dist, f"level {level}: gap {gap} >= distance {dist}")
        if i == max_index:
            p = tree_pathwidth(inst.tree).value
            lt = tree_lion_number(inst.tree).value
            r.info.update(index=i, vertices=inst.tree.n, pathwidth=p, lion_number=lt)
            r.expect(p >= 4 and lt >= 4 > 3, f"T_{i}: pw={p}, L={lt}")
    return r


def suite_monotone(max_n: int = 7, **_) -> SuiteResult:
    r = SuiteResult("monotone sandwich")
    for g in connected_graphs(min(max_n, 7)):
        w = pw(g)[0]
        res = solved_monotone(g)
        lm = res.value
        r.expect(w <= lm <= 2 * w + 2, f"pw={w}, Lm={lm} on {_edges(g)}")
        tr = simulate(g, res.witness)
        d = decomposition_from_monotone(g, tr)
        r.expect(not validate_decomposition(g, d) and d.width <= lm,
                 f"extracted width {d.width} > Lm={lm} on {_edges(g)}")
        cw, cd = cpw(g)
        s = clear_monotone_via_connected_decomposition(g, cd)
        st = simulate(g, s)
        r.expect(st.cleared and st.monotone and s.lion_count <= cw + 1 <= 2 * w + 2,
                 f"connected sweep: {s.lion_count} lions, cpw={cw}, pw={w} on {_edges(g)}")
    return r


def suite_boundary(max_n: int = 7, max_h: int = 8, **_) -> SuiteResult:
    r = SuiteResult("boundary occupancy")
    for g in connected_graphs(min(max_n, 7)):
        r.expect(boundary_ok(g, solved_monotone(g).witness), f"solver witness on {_edges(g)}")
        s = clear_monotone_via_connected_decomposition(g, cpw(g)[1])
        r.expect(boundary_ok(g, s), f"connected sweep on {_edges(g)}")
        plain = solved(g).witness
        tr = simulate(g, plain)
        if tr.monotone:
            r.expect(not boundary_violations(g, tr), f"monotone plain witness on {_edges(g)}")
    for h in range(1, max_h + 1):
        g = complete_binary_tree(h)
        r.expect(boundary_ok(g, complete_binary_tree_monotone_schedule(h)), f"binary schedule h={h}")
    return r


def suite_complete(max_m: int = 5, **_) -> SuiteResult:
    """Monotone lion number and pathwidth of K_m.

    K_1 is reported in ``info`` only: one lion is needed to cover its single
    vertex while its pathwidth is 0, so the identity starts at m = 2.
    """
    r = SuiteResult("complete graphs")
    for m in range(1, max_m + 1):
        g = complete(m)
        lm, w = solved_monotone(g).value, pw(g)[0]
        r.info[m] = (lm, w)
        if m >= 2:
            r.expect(lm == m - 1 == w, f"K_{m}: Lm={lm}, pw={w}")
    return r


def suite_binary_monotone(brute_h: int = 3, max_h: int = 8, **_) -> SuiteResult:
    r = SuiteResult("binary tree monotone number")
    for h in range(1, brute_h + 1):
        v = solved_monotone(complete_binary_tree(h)).value
        r.expect(v == h, f"Lm(T_{h}) = {v}")
    for h in range(1, max_h + 1):
        s = complete_binary_tree_monotone_schedule(h)
        tr = simulate(complete_binary_tree(h), s)
        r.expect(tr.cleared and tr.monotone and s.polite and s.lion_count == h,
                 f"T_{h}: {s.lion_count} lions, cleared={tr.cleared}, monotone={tr.monotone}")
    return r


def _aligned(a, b, sub) -> bool:
    return len(a) == len(b) and all(sub(x, y) for x, y in zip(a, b))


def suite_cops(max_n: int = 7, tree_n: int = 9, **_) -> SuiteResult:
    """Cop/lion sandwich and both transforms; tree bounds skip K_1 (c0 = 1 > pw = 0)."""
    r = SuiteResult("zero-visibility cops")
    for g in connected_graphs(min(max_n, 7)):
        c, lions = cops(g), solved(g)
        r.expect(c.value <= lions.value <= 2 * c.value, f"c0={c.value}, L={lions.value} on {_edges(g)}")
        ls = lions_from_cops(g, c.witness)
        tr = simulate(g, ls)
        cs = simulate_cops(g, c.witness)
        r.expect(tr.cleared, f"lions from cops fail on {_edges(g)}")
        r.expect(_aligned(tr.states, cs, lambda w, s: w.contaminated <= s.dirty_post),
                 f"W_t not inside S_t on {_edges(g)}")
        back = cops_from_lions(g, lions.witness)
        cs = simulate_cops(g, back)
        tr = simulate(g, lions.witness)
        r.expect(not cs[-1].dirty_post, f"cops from lions fail on {_edges(g)}")
        r.expect(_aligned(tr.states, cs, lambda w, s: s.dirty_post <= w.contaminated),
                 f"S_t not inside W_t on {_edges(g)}")
    for t in trees(tree_n):
        if t.n == 1:
            r.info["K_1"] = (cops(t).value, tree_pathwidth(t).value)
            continue
        p, c = tree_pathwidth(t).value, cops(t).value
        r.expect(math.ceil(p / 2) <= c <= p, f"pw={p}, c0={c} on {_edges(t)}")
    return r


# --- randomized engine properties -----------------------------------------------

def _random_connected(rng: random.Random, n_max: int = 7) -> Graph:
    n = rng.randint(1, n_max)
    edges = {(rng.randrange(i), i) for i in range(1, n)}  # random spanning tree
    p = rng.random() * 0.6
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def _random_schedule(rng: random.Random, g: Graph, allowed=None, max_lions=3, max_steps=10) -> Schedule:
    pool = sorted(allowed) if allowed is not None else list(range(g.n))
    pos = [rng.choice(pool) for _ in range(rng.randint(1, max_lions))]
    init = tuple(pos)
    steps = []
    for _ in range(rng.randint(0, max_steps)):
        moves = []
        for i, v in enumerate(pos):
            opts = [v] + [w for w in sorted(g.adjacency[v]) if allowed is None or w in allowed]
            d = rng.choice(opts)
            moves.append(Move(v, d))
            pos[i] = d
        steps.append(StepAction(tuple(moves)))
    return Schedule(init, tuple(steps))


def _with_remote(s: Schedule, rng: random.Random, g: Graph, kind: str) -> Schedule:
    pos = s.positions()
    steps = []
    for t, st in enumerate(s.steps, start=1):
        extra = frozenset(v for v in range(g.n) if rng.random() < 0.2)
        if kind == "contaminate":
            extra -= frozenset(pos[t])
            steps.append(StepAction(st.moves, st.remote_clears, extra))
        else:
            steps.append(StepAction(st.moves, extra, st.remote_contaminations))
    return Schedule(s.initial_positions, tuple(steps), s.initial_remote_clears, dict(s.notes))


def _subset(rng, vs):
    return frozenset(v for v in vs if rng.random() < 0.5)


def suite_engine(cases: int = 1000, seed: int = DEFAULT_SEED, **_) -> SuiteResult:
    r = SuiteResult("engine properties")
    rng = random.Random(seed)
    counts = dict.fromkeys(["subset", "remote-clear", "remote-contaminate", "constant-remote",
                            "separating-set", "isometric", "component"], 0)

    # contamination subset: smaller W at time t stays smaller under the same moves
    for _ in range(cases):
        g = _random_connected(rng)
        s = _random_schedule(rng, g)
        tr = simulate(g, s)
        t = rng.randint(0, len(s.steps))
        st = tr.states[t]
        alt = GameState(st.lions, _subset(rng, st.contaminated), frozenset())
        alt = GameState(alt.lions, alt.contaminated, frozenset(range(g.n)) - alt.contaminated)
        ok = True
        for k, action in enumerate(s.steps[t:], start=t + 1):
            alt = step(g, alt, action)
            ok &= alt.contaminated <= tr.states[k].contaminated
        r.expect(ok, f"contamination subset property on {_edges(g)}")
        counts["subset"] += 1

    for kind, key in (("clear", "remote-clear"), ("contaminate", "remote-contaminate")):
        for _ in range(cases):
            g = _random_connected(rng)
            s = _random_schedule(rng, g)
            s2 = _with_remote(s, rng, g, kind)
            a, b = simulate(g, s), simulate(g, s2)
            if kind == "clear":
                ok = _aligned(b.states, a.states, lambda x, y: x.contaminated <= y.contaminated)
                ok &= b.cleared or not a.cleared
            else:
                ok = _aligned(a.states, b.states, lambda x, y: x.contaminated <= y.contaminated)
                ok &= a.cleared or not b.cleared
            r.expect(ok, f"{key} on {_edges(g)}")
            counts[key] += 1

    # constant remote clears outside H reproduce H's own play
    done = 0
    while done < cases:
        g = _random_connected(rng)
        hv = frozenset(v for v in range(g.n) if rng.random() < 0.7)
        if not hv or len(components(g, hv)) != 1:
            continue
        h, old = induced_subgraph(g, hv)
        s = _random_schedule(rng, g, allowed=hv)
        on_h = restrict_to_subgraph(s, g, hv)
        lifted = extend_with_remote_clears(on_h, g, hv)
        a, b = simulate(h, on_h), simulate(g, lifted)
        ok = _aligned(a.states, b.states,
                      lambda x, y: frozenset(old[v] for v in x.contaminated) == y.contaminated)
        r.expect(ok and a.cleared == b.cleared, f"constant remote on {_edges(g)} H={sorted(hv)}")
        counts["constant-remote"] += 1
        done += 1

    # contaminating a lion-free component behind a contaminated separator changes nothing final
    small = [g for g in connected_graphs(6) if g.n >= 3]
    done = tries = 0
    while done < cases and tries < 50 * cases:
        tries += 1
        g = rng.choice(small)
        wit = solved(g).witness
        tr = simulate(g, wit)
        if not wit.steps:
            continue
        t = rng.randint(1, len(wit.steps))
        st = tr.states[t]
        sep = _subset(rng, st.contaminated)
        if not sep:
            continue
        rest = frozenset(range(g.n)) - sep
        free = [c for c in components(g, rest) if not c & st.lion_set]
        if len(components(g, rest)) < 2 or not free:
            continue
        hcomp = rng.choice(free)
        steps = list(wit.steps)
        a = steps[t - 1]
        steps[t - 1] = StepAction(a.moves, a.remote_clears, a.remote_contaminations | hcomp)
        after = simulate(g, Schedule(wit.initial_positions, tuple(steps)))
        r.expect(after.cleared, f"separating set {sorted(sep)} at t={t} on {_edges(g)}")
        counts["separating-set"] += 1
        done += 1

    # isometric subgraphs never need more lions
    graphs = connected_graphs(7)
    done = 0
    while done < cases:
        g = rng.choice(graphs)
        hv = frozenset(v for v in range(g.n) if rng.random() < 0.6)
        if not hv or len(components(g, hv)) != 1:
            continue
        h, old = induced_subgraph(g, hv)
        h_edges = [(old[a], old[b]) for a, b in h.edges]
        if not is_isometric_subgraph(g, hv, h_edges):
            continue
        r.expect(solved(h).value <= solved(g).value,
                 f"L(H)={solved(h).value} > L(G)={solved(g).value} on {_edges(g)} H={sorted(hv)}")
        counts["isometric"] += 1
        done += 1

    # every contaminated component with a clear neighbourhood touches a lion
    for _ in range(cases):
        g = _random_connected(rng)
        tr = simulate(g, _random_schedule(rng, g), check_invariants=True)
        r.expect(not tr.violations, f"component invariant {tr.violations[:2]} on {_edges(g)}")
        counts["component"] += 1

    r.info["cases"] = counts
    return r


def suite_strategies(max_n: int = 9, **_) -> SuiteResult:
    """Tree strategies replay with exactly the lion number."""
    r = SuiteResult("tree strategies")
    for t in trees(max_n):
        s = tree_clearing_strategy(t)
        r.expect(simulate(t, s, record=False).cleared and s.lion_count == tree_lion_number(t).value,
                 f"tree strategy on {_edges(t)}")
    return r


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "trees": suite_trees,
    "tightness": suite_tightness,
    "upper-bound": suite_upper_bound,
    "counterexample": suite_counterexample,
    "monotone": suite_monotone,
    "boundary": suite_boundary,
    "complete": suite_complete,
    "binary-monotone": suite_binary_monotone,
    "cops": suite_cops,
    "engine": suite_engine,
    "strategies": suite_strategies,
}


def run_suite(name: str, **params) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](**{k: v for k, v in params.items() if v is not None})
