"""JSON documents for graphs, schedules, traces and solver results; DOT export.

Vertices are referred to by their string ids everywhere in documents.  The
order of ``vertices`` fixes the internal indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .engine import GameState, Move, Schedule, StepAction, Trace, simulate
from .errors import ParseError
from .graph import Graph
from .search import SolveResult
from .width import PathDecomposition


@dataclass
class GraphDocument:
    graph: Graph
    metadata: dict = field(default_factory=dict)


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def graph_from_data(data: Any) -> GraphDocument:
    if not isinstance(data, dict):
        raise ParseError("graph document must be a JSON object", "$")
    verts = data.get("vertices")
    if not isinstance(verts, list):
        raise ParseError("missing list 'vertices'", "$.vertices")
    ids: dict[str, int] = {}
    for i, v in enumerate(verts):
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise ParseError(f"vertex id must be a string, got {v!r}", f"$.vertices[{i}]")
        v = str(v)
        if v in ids:
            raise ParseError(f"duplicate vertex id {v!r}", f"$.vertices[{i}]")
        ids[v] = i
    edges = []
    seen = set()
    for j, e in enumerate(data.get("edges", [])):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("edge must be a pair of ids", f"$.edges[{j}]")
        a, b = (str(x) for x in e)
        for x in (a, b):
            if x not in ids:
                raise ParseError(f"edge endpoint {x!r} is not a declared vertex", f"$.edges[{j}]")
        if a == b:
            raise ParseError(f"self-loop at {a!r}", f"$.edges[{j}]")
        key = (min(ids[a], ids[b]), max(ids[a], ids[b]))
        if key not in seen:
            seen.add(key)
            edges.append(key)
    meta = data.get("metadata", {})
    if not isinstance(meta, dict):
        raise ParseError("metadata must be an object", "$.metadata")
    return GraphDocument(Graph.from_edges(len(ids), edges, list(ids)), dict(meta))


def parse_graph(text: str) -> Graph:
    return parse_graph_document(text).graph


def parse_graph_document(text: str) -> GraphDocument:
    return graph_from_data(_load(text))


def graph_to_data(g: Graph, metadata: dict | None = None) -> dict:
    lab = g.label
    out = {"vertices": [lab(v) for v in range(g.n)],
           "edges": [[lab(u), lab(v)] for u, v in g.edges]}
    if metadata:
        out["metadata"] = dict(metadata)
    return out


def serialize_graph(g: Graph, metadata: dict | None = None) -> str:
    """Canonical text: declared vertex order, edges sorted by index, no duplicates."""
    return json.dumps(graph_to_data(g, metadata), indent=2, sort_keys=True) + "\n"


def canonical(text: str) -> str:
    doc = parse_graph_document(text)
    return serialize_graph(doc.graph, doc.metadata)


# --- schedules ------------------------------------------------------------

def _ids(g: Graph, vs) -> list[str]:
    return [g.label(v) for v in vs]


def _index(g: Graph, where: str):
    table = {g.label(v): v for v in range(g.n)}

    def look(x, loc):
        key = str(x)
        if key not in table:
            raise ParseError(f"unknown vertex {key!r}", f"{where}{loc}")
        return table[key]

    return look


def schedule_to_data(g: Graph, s: Schedule) -> dict:
    steps = []
    for st in s.steps:
        item: dict[str, Any] = {"moves": [[g.label(a), g.label(b)] for a, b in st.moves]}
        if st.remote_clears:
            item["remote_clears"] = _ids(g, sorted(st.remote_clears))
        if st.remote_contaminations:
            item["remote_contaminations"] = _ids(g, sorted(st.remote_contaminations))
        steps.append(item)
    out: dict[str, Any] = {"initial": _ids(g, s.initial_positions), "steps": steps}
    if s.initial_remote_clears:
        out["initial_remote_clears"] = _ids(g, sorted(s.initial_remote_clears))
    if s.notes:
        out["notes"] = _jsonable(s.notes)
    return out


def schedule_from_data(g: Graph, data: Any) -> Schedule:
    if not isinstance(data, dict) or not isinstance(data.get("initial"), list):
        raise ParseError("schedule needs a list 'initial'", "$.initial")
    look = _index(g, "$")
    initial = tuple(look(x, f".initial[{i}]") for i, x in enumerate(data["initial"]))
    steps = []
    for t, st in enumerate(data.get("steps", [])):
        loc = f".steps[{t}]"
        if not isinstance(st, dict) or not isinstance(st.get("moves"), list):
            raise ParseError("step needs a list 'moves'", "$" + loc)
        moves = []
        for j, mv in enumerate(st["moves"]):
            if not isinstance(mv, list) or len(mv) != 2:
                raise ParseError("move must be a [from, to] pair", f"${loc}.moves[{j}]")
            moves.append(Move(look(mv[0], f"{loc}.moves[{j}]"), look(mv[1], f"{loc}.moves[{j}]")))
        rc = frozenset(look(x, loc) for x in st.get("remote_clears", []))
        rx = frozenset(look(x, loc) for x in st.get("remote_contaminations", []))
        steps.append(StepAction(tuple(moves), rc, rx))
    irc = frozenset(look(x, ".initial_remote_clears") for x in data.get("initial_remote_clears", []))
    return Schedule(initial, tuple(steps), irc, dict(data.get("notes", {})))


def parse_schedule(g: Graph, text: str) -> Schedule:
    return schedule_from_data(g, _load(text))


def serialize_schedule(g: Graph, s: Schedule) -> str:
    return json.dumps(schedule_to_data(g, s), indent=2, sort_keys=True) + "\n"


# --- traces ---------------------------------------------------------------

def _state_record(g: Graph, t: int, st: GameState, moves=None) -> dict:
    rec = {"time": t,
           "lions": _ids(g, st.lions),
           "cleared": _ids(g, sorted(st.cleared)),
           "contaminated": _ids(g, sorted(st.contaminated))}
    rec["moves"] = [] if moves is None else [[g.label(a), g.label(b)] for a, b in moves]
    return rec


def trace_to_data(g: Graph, schedule: Schedule, trace: Trace | None = None) -> dict:
    """Trace document, re-validated against a fresh replay of ``schedule``."""
    fresh = simulate(g, schedule)
    if trace is not None:
        if len(trace.states) != len(fresh.states) or any(
                a != b for a, b in zip(trace.states, fresh.states)):
            raise ValueError("trace disagrees with a fresh replay of its schedule")
    records = [_state_record(g, 0, fresh.states[0])]
    for t, (st, action) in enumerate(zip(fresh.states[1:], schedule.steps), start=1):
        records.append(_state_record(g, t, st, action.moves))
    return {
        "schedule": schedule_to_data(g, schedule),
        "steps": records,
        "summary": {"cleared": fresh.cleared, "monotone": fresh.monotone,
                    "lions": fresh.lions, "steps": fresh.steps,
                    "clear_time": fresh.clear_time},
    }


def serialize_trace(g: Graph, schedule: Schedule, trace: Trace | None = None) -> str:
    return json.dumps(trace_to_data(g, schedule, trace), indent=2, sort_keys=True) + "\n"


# --- results and decompositions ----------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    return x


def decomposition_to_data(g: Graph, d: PathDecomposition) -> dict:
    return {"width": d.width, "bags": [_ids(g, sorted(b)) for b in d.bags]}


def decomposition_from_data(g: Graph, data: Any) -> PathDecomposition:
    bags = data.get("bags") if isinstance(data, dict) else data
    if not isinstance(bags, list):
        raise ParseError("decomposition needs a list 'bags'", "$.bags")
    look = _index(g, "$")
    return PathDecomposition.of([look(x, f".bags[{i}]") for x in b] for i, b in enumerate(bags))


def solve_result_to_data(g: Graph, r: SolveResult, key: str = "lion_number") -> dict:
    out = {key: r.value, "monotone": r.monotone, "polite": r.polite,
           "stats": _jsonable({k: v for k, v in r.stats.items()})}
    if isinstance(r.witness, Schedule):
        out["witness"] = schedule_to_data(g, r.witness)
    return out


# --- DOT ------------------------------------------------------------------

_STYLE = {
    "lion": 'style=filled fillcolor="#f4b400" shape=doublecircle',
    "cleared": 'style=filled fillcolor="#a8d5a2" shape=circle',
    "contaminated": 'style=filled fillcolor="#e57373" shape=circle',
}


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, state: GameState | None = None, name: str = "G") -> str:
    """Undirected DOT; with a state, nodes carry class lion, cleared or contaminated."""
    lines = [f"graph {_q(name)} {{"]
    for v in range(g.n):
        attrs = ""
        if state is not None:
            cls = ("lion" if v in state.lion_set
                   else "contaminated" if v in state.contaminated else "cleared")
            attrs = f' [class="{cls}" {_STYLE[cls]}]'
        lines.append(f"  {_q(g.label(v))}{attrs};")
    for u, v in g.edges:
        lines.append(f"  {_q(g.label(u))} -- {_q(g.label(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
