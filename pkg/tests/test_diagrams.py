import pytest

from orbimgs.diagrams import (
    FAMILY_ORDER,
    OrbifoldParams,
    PUNCTURE_ONE_TEXT,
    Rejection,
    VertexLabel,
    build_diagram,
    label_index,
    normalize_label,
    require_supported,
    validate_params,
    vertex_count,
)
from orbimgs.errors import UnknownVertex, UnsupportedParams
from orbimgs.mutation import diagram_view


def test_vertex_counts_on_grid(grid_params):
    m = build_diagram(grid_params)
    assert m.n == vertex_count(grid_params)


def test_labels_in_canonical_order(grid_params):
    keys = [VertexLabel.parse(v).sort_key() for v in build_diagram(grid_params).labels]
    assert keys == sorted(keys)


def test_pending_vertices_have_double_symmetrizer(grid_params):
    m = build_diagram(grid_params)
    for v, d in zip(m.labels, m.symmetrizer):
        assert d == (2 if v.startswith("g_") else 1)


def test_121_diagram():
    d = diagram_view(build_diagram(OrbifoldParams(1, 2, 1)))
    assert d.vertices == ("g_1", "h_1", "h_2", "m_1", "l_1", "r_1", "f_1", "f_2")
    assert d.weight("f_1", "f_2") == 4
    assert d.weight("h_1", "g_1") == 2 and d.weight("g_1", "h_2") == 2
    assert len(d.arrows) == 14


def test_closed_band_for_two_punctures_genus_zero():
    d = diagram_view(build_diagram(OrbifoldParams(0, 2, 3)))
    assert set(d.vertices) == {"g_1", "g_2", "g_3", "h_1", "h_2", "h_3"}
    assert d.weight("g_3", "h_1") == 2


def test_two_cycle_cancellation_for_0_2_2():
    d = diagram_view(build_diagram(OrbifoldParams(0, 2, 2)))
    # h_2 -> h_1 and h_1 -> h_2 from the two band triangles cancel
    assert d.weight("h_1", "h_2") == 0


@pytest.mark.parametrize(
    "params, reason",
    [
        ((0, 1, 4), Rejection.PUNCTURE_ONE),
        ((9, 1, 1), Rejection.PUNCTURE_ONE),
        ((1, 1, 0), Rejection.PUNCTURE_ONE),
        ((1, 2, 0), Rejection.NO_ORBIFOLD_POINTS),
        ((0, 2, 1), Rejection.TOO_SMALL),
        ((0, 3, 0), Rejection.NO_ORBIFOLD_POINTS),
    ],
)
def test_rejections(params, reason):
    P = OrbifoldParams(*params)
    assert validate_params(P) is reason
    with pytest.raises(UnsupportedParams) as exc:
        build_diagram(P)
    assert exc.value.reason is reason


def test_puncture_one_text():
    assert Rejection.PUNCTURE_ONE.message == PUNCTURE_ONE_TEXT
    with pytest.raises(UnsupportedParams, match="once-punctured"):
        require_supported(OrbifoldParams(3, 1, 2))


def test_bad_params():
    with pytest.raises(ValueError):
        OrbifoldParams(-1, 2, 1)
    with pytest.raises(ValueError):
        OrbifoldParams(0, 0, 1)


def test_label_helpers():
    assert normalize_label("h_{2}") == normalize_label("h2") == "h_2"
    assert str(VertexLabel.parse("s")) == "s"
    assert FAMILY_ORDER[0] == "g"
    m = build_diagram(OrbifoldParams(1, 2, 1))
    assert label_index(m, "f_2") == 7
    with pytest.raises(UnknownVertex):
        label_index(m, "z_1")
