import json

import pydot
import pytest
from hypothesis import given

from lions.engine import Schedule, initial_state, simulate
from lions.errors import ParseError
from lions.graph import path_graph
from lions.io import (canonical, decomposition_from_data, decomposition_to_data, export_dot,
                      parse_graph, parse_graph_document, parse_schedule, serialize_graph,
                      serialize_schedule, serialize_trace, trace_to_data)
from lions.search import lion_number
from lions.synthesis import counterexample_family
from lions.width import pathwidth_exact

from conftest import connected_graphs


def test_parse_pair():
    g = parse_graph('{"vertices":["a","b"],"edges":[["a","b"]]}')
    assert g == path_graph(2) and g.labels == ("a", "b")


@pytest.mark.parametrize("text, needle", [
    ('{"vertices":["a"],"edges":[["a","z"]]}', "'z'"),
    ('{"vertices":["a","a"]}', "duplicate vertex id 'a'"),
    ('{"vertices":["a"],"edges":[["a","a"]]}', "self-loop"),
    ('{"vertices": ["a",', "line 1"),
    ('[1, 2]', "JSON object"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse_graph(text)


def test_canonical_round_trip():
    doc = '{"vertices":["x","y","z"],"edges":[["z","y"],["y","x"],["x","y"]],"metadata":{"k":1}}'
    text = canonical(doc)
    assert json.loads(text) == {"vertices": ["x", "y", "z"], "edges": [["x", "y"], ["y", "z"]],
                                "metadata": {"k": 1}}
    assert canonical(text) == text
    assert parse_graph_document(text).metadata == {"k": 1}


@given(connected_graphs())
def test_graph_and_schedule_round_trip(g):
    text = serialize_graph(g)
    h = parse_graph(text)
    assert h == g and serialize_graph(h) == text
    s = lion_number(g).witness
    assert parse_schedule(h, serialize_schedule(h, s)) == s
    w, d = pathwidth_exact(g)
    assert decomposition_from_data(h, decomposition_to_data(h, d)) == d


def test_trace_document_matches_replay():
    g = path_graph(3)
    s = lion_number(g).witness
    doc = json.loads(serialize_trace(g, s, simulate(g, s)))
    assert doc["summary"] == {"cleared": True, "monotone": True, "lions": 1,
                              "steps": len(s.steps), "clear_time": len(s.steps)}
    assert doc["steps"][-1]["contaminated"] == []
    other = simulate(g, Schedule((1,)))
    with pytest.raises(ValueError):
        trace_to_data(g, s, other)


def test_dot_export():
    one = parse_graph('{"vertices":["v"]}')
    assert export_dot(one).count(";") == 1
    g = parse_graph('{"vertices":["a","b"],"edges":[["a","b"]]}')
    text = export_dot(g, initial_state(g, [0]))
    assert '"a" [class="lion"' in text and '"b" [class="contaminated"' in text
    p3 = path_graph(3)
    text = export_dot(p3, initial_state(p3, [1], remote_clears=[0]))
    styles = [line.split("[", 1)[1] for line in text.splitlines() if "class=" in line]
    assert len(set(styles)) == 3


def test_counterexample_dot_parses():
    inst = counterexample_family(2)
    graphs = pydot.graph_from_dot_data(export_dot(inst.supergraph, name="G2"))
    assert len(graphs) == 1
    assert len(graphs[0].get_edges()) == inst.supergraph.m
