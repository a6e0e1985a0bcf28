import numpy as np
import pytest

from orbimgs.diagrams import OrbifoldParams, rank3_example
from orbimgs.errors import UnknownVertex
from orbimgs.mutation import VertexColor, frame, seed_from_superscripts
from orbimgs.verify import (
    OutcomeKind,
    StateAssertion,
    apply_sequence,
    assert_state,
    render_state,
    render_trace,
    run_prefix,
    verify_mgs,
)

GOLDEN_TRACE = """\
# 3 vertices, 4 steps, superscript style
1 μ_b | a: green {a} | b: red {b} | c: green {c,b}
2 μ_a | a: red {a} | b: red {b} | c: green {c,b}
3 μ_c | a: red {a} | b: green {c} | c: red {c,b}
4 μ_b | a: red {a} | b: red {c} | c: red {b}
"""


def test_golden_trace():
    _, rep = apply_sequence(frame(rank3_example()), "bacb")
    assert rep.valid
    assert render_trace(rep) == GOLDEN_TRACE


def test_matrix_trace_and_empty_sequence():
    _, rep = apply_sequence(frame(rank3_example()), "b")
    assert render_trace(rep, "matrix").splitlines()[1] == "1 μ_b | a: [1 0 0] | b: [0 -1 0] | c: [0 1 1]"
    _, empty = apply_sequence(frame(rank3_example()), [])
    assert render_trace(empty) == "# 3 vertices, 0 steps, superscript style\n"
    with pytest.raises(ValueError):
        render_trace(empty, "fancy")


def test_strict_stops_at_red_vertex():
    _, rep = apply_sequence(frame(rank3_example()), "bb")
    assert rep.outcome.kind is OutcomeKind.NOT_GREEN_AT and rep.outcome.step == 2
    assert len(rep.steps) == 2


def test_permissive_records_all_violations():
    _, rep = apply_sequence(frame(rank3_example()), "bbab", mode="permissive")
    assert rep.violations == [2]
    assert str(rep.outcome) == "NotGreenAt(2)"
    assert len(rep.steps) == 4


def test_not_all_red():
    _, rep = apply_sequence(frame(rank3_example()), "ba")
    assert rep.outcome.kind is OutcomeKind.NOT_ALL_RED_AT_END
    assert rep.summary() == "NotAllRedAtEnd, 0 violations, final C = not −permutation"


def test_engine_fault_on_mixed_row():
    s = seed_from_superscripts(rank3_example(), {"a": {"a": 1, "b": -1}, "b": {"b": 1}, "c": {"c": 1}})
    _, rep = apply_sequence(s, "a")
    assert rep.outcome.kind is OutcomeKind.ENGINE_FAULT


def test_unknown_vertex_is_reported_before_replay():
    with pytest.raises(UnknownVertex):
        apply_sequence(frame(rank3_example()), ["b", "zz"])


def test_bad_mode():
    with pytest.raises(ValueError):
        apply_sequence(frame(rank3_example()), "b", mode="lenient")


def test_verify_grid_point(grid_params):
    rep = verify_mgs(grid_params)
    assert rep.valid and rep.final_is_negative_permutation()
    assert rep.summary() == "Valid, 0 violations, final C = −permutation"


def test_final_c_is_negative_permutation_of_rank3():
    final, rep = apply_sequence(frame(rank3_example()), "bacb")
    assert rep.final_c.tolist() == [[-1, 0, 0], [0, 0, -1], [0, -1, 0]]
    assert np.array_equal(final.cblock, rep.final_c)


def test_assert_state_and_parse():
    s = run_prefix(OrbifoldParams(1, 2, 1), "step 2")
    ok = assert_state(s, StateAssertion.parse({"g_1": "green g_1 2h_2", "h_1": "red h_1"}))
    assert ok
    bad = assert_state(s, StateAssertion.parse({"g_1": "red g_1"}))
    assert not bad and len(bad.mismatches) == 2
    assert "expected red" in str(bad)
    colour_only = assert_state(s, StateAssertion({"m_1": (VertexColor.RED, None)}))
    assert colour_only.ok
    with pytest.raises(UnknownVertex):
        assert_state(s, StateAssertion.parse({"x_9": "red x_9"}))
    with pytest.raises(UnknownVertex):
        assert_state(s, StateAssertion.parse({"g_1": "green x_9"}))


def test_render_state():
    assert render_state(frame(rank3_example())) == "a: green {a} | b: green {b} | c: green {c}"
