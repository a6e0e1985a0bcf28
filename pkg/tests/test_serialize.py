import json

import numpy as np
import pytest

from orbimgs.diagrams import OrbifoldParams, build_diagram, rank3_example
from orbimgs.mutation import frame, mutate_at
from orbimgs.serialize import VERSION, DocumentError, dumps, loads, to_dot


def test_json_round_trip(grid_params):
    m = build_diagram(grid_params)
    text = dumps(m, grid_params)
    back, P = loads(text)
    assert back == m and P == grid_params
    assert dumps(back, P) == text


def test_dot_is_deterministic(grid_params):
    assert to_dot(build_diagram(grid_params)) == to_dot(build_diagram(grid_params))


def test_framed_round_trip():
    s = mutate_at(frame(rank3_example()), "b")
    back, P = loads(dumps(s))
    assert back == s and P is None


def test_document_stores_pairs():
    doc = json.loads(dumps(rank3_example()))
    assert doc["version"] == VERSION and doc["params"] == "custom"
    assert {"from": "b", "to": "a", "b_forward": 2, "b_backward": -1} in doc["arrows"]
    assert doc["vertices"][0] == {"name": "a", "symmetrizer_d": 2}


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(version="other/9"),
        lambda d: d["vertices"][0].update(symmetrizer_d=1),
        lambda d: d["arrows"].append(dict(d["arrows"][0])),
        lambda d: d["arrows"][0].update(to="zz"),
        lambda d: d.pop("vertices"),
        lambda d: d.update(frozen=[[1, 0]]),
    ],
)
def test_invalid_documents(mutate):
    doc = json.loads(dumps(rank3_example()))
    mutate(doc)
    with pytest.raises(DocumentError):
        loads(json.dumps(doc))


def test_not_json():
    with pytest.raises(DocumentError):
        loads("{nope")


def test_dot_styles():
    m = build_diagram(OrbifoldParams(1, 2, 1))
    plain = to_dot(m)
    assert plain.startswith('digraph "D" {') and plain.rstrip().endswith("}")
    assert '"f_1" -> "f_2" [label="4"];' in plain
    assert "fillcolor" not in plain
    framed = to_dot(frame(m))
    assert framed.count("fillcolor=palegreen") == 8 and "shape=box" not in framed
    boxed = to_dot(frame(m), frozen=True)
    assert boxed.count("shape=box") == 8
    assert '"g_1" -> "g_1\'" [label="1"];' in boxed
    s = mutate_at(frame(m), "h_2")
    assert "fillcolor=lightcoral" in to_dot(s)


def test_dot_frozen_weights_use_symmetrizer():
    s = mutate_at(frame(build_diagram(OrbifoldParams(1, 2, 1))), "g_1")
    # g_1 red with c-row -e_g1: arrow g_1' -> g_1 of weight 1
    assert '"g_1\'" -> "g_1" [label="1"];' in to_dot(s, frozen=True)
    assert np.array_equal(s.c_row("g_1")[:1], [-1])
