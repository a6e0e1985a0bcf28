import numpy as np
import pytest

from orbimgs import _fallback
from orbimgs.diagrams import rank3_example
from orbimgs.errors import (
    DuplicatePair,
    MixedSign,
    NoSymmetrizer,
    NonIntegerWeight,
    SelfLoop,
    UnknownVertex,
    ZeroRow,
)
from orbimgs.mutation import (
    Arrow,
    ExchangeMatrix,
    FramedSeed,
    VertexColor,
    color_of,
    colors,
    diagram_mutate,
    diagram_view,
    format_superscript,
    frame,
    frozen_weight,
    is_final,
    is_negative_permutation,
    matrix_from_arrows,
    mutate_at,
    seed_from_superscripts,
    superscript,
)

try:
    from orbimgs import _kernel
except ImportError:  # pragma: no cover
    _kernel = None

KERNELS = [_fallback] + ([_kernel] if _kernel else [])


def test_rank3_entries_and_symmetrizer():
    m = rank3_example()
    assert m.symmetrizer == (2, 1, 1)
    assert m.entries.tolist() == [[0, -1, 1], [2, 0, -1], [-2, 1, 0]]


def test_single_mutation_formula():
    # the path c -> b -> a cancels the arrow a -> c
    s = mutate_at(frame(rank3_example()), "b")
    assert s.block.tolist() == [
        [0, 1, 0, 1, 0, 0],
        [-2, 0, 1, 0, -1, 0],
        [0, -1, 0, 0, 1, 1],
    ]


def test_mutation_is_involution_on_rank3():
    s = frame(rank3_example())
    for v in "abc":
        assert mutate_at(mutate_at(s, v), v) == s


def test_seed_is_read_only():
    s = frame(rank3_example())
    with pytest.raises(ValueError):
        s.block[0, 0] = 5


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_overflow_guard(kernel):
    big = 2**20
    block = np.array([[0, big, 1, 0], [-big, 0, 0, 1]], dtype=np.int64)
    block[0, 2] = big
    block[1, 0] = -big
    block = np.ascontiguousarray(block)
    with pytest.raises(OverflowError):
        for _ in range(4):
            kernel.mutate_inplace(block, 0)
            kernel.mutate_inplace(block, 1)


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_row_signs_codes(kernel):
    block = np.array([[0, 1, 2, 0], [-1, 0, 0, 0], [0, 0, -1, 3], [0, 0, -1, -2]], dtype=np.int64)
    block = np.ascontiguousarray(block[:, :])
    out = np.empty(4, dtype=np.int8)
    kernel.row_signs(block, 2, out)
    assert out.tolist() == [1, 0, 2, -1]


def test_matrix_from_arrows_errors():
    with pytest.raises(DuplicatePair):
        matrix_from_arrows("ab", [("a", "b", 1, -1), ("b", "a", 1, -1)])
    with pytest.raises(SelfLoop):
        matrix_from_arrows("ab", [("a", "a", 1, -1)])
    with pytest.raises(NoSymmetrizer):
        matrix_from_arrows("abc", [("a", "b", 2, -1), ("b", "c", 1, -1), ("c", "a", 1, -1)])
    with pytest.raises(UnknownVertex):
        matrix_from_arrows("ab", [("a", "z", 1, -1)])


def test_symmetrizer_is_minimal_per_component():
    m = matrix_from_arrows(["x", "y", "u", "v"], [("x", "y", 4, -2), ("u", "v", 1, -1)])
    assert m.symmetrizer == (1, 2, 1, 1)


def test_exchange_matrix_rejects_non_symmetrizable():
    with pytest.raises(NoSymmetrizer):
        ExchangeMatrix(("a", "b"), np.array([[0, 1], [1, 0]]), (1, 1))


def test_colors_and_faults():
    m = rank3_example()
    s = seed_from_superscripts(m, {"a": {"a": 1}, "b": {"b": -1}, "c": {"a": 1, "b": -1}})
    assert color_of(s, "a") is VertexColor.GREEN
    assert color_of(s, "b") is VertexColor.RED
    with pytest.raises(MixedSign):
        color_of(s, "c")
    z = seed_from_superscripts(m, {"a": {"a": 1}})
    with pytest.raises(ZeroRow):
        colors(z)


def test_empty_seed_is_final():
    m = ExchangeMatrix((), np.zeros((0, 0), dtype=np.int64), ())
    assert is_final(frame(m))


def test_negative_permutation():
    assert is_negative_permutation(-np.eye(3, dtype=int)[[1, 0, 2]])
    assert not is_negative_permutation(-2 * np.eye(2, dtype=int))
    assert not is_negative_permutation(np.eye(2, dtype=int))


def test_frozen_weight_and_superscripts():
    assert frozen_weight(2, 2, 1) == 8
    with pytest.raises(NonIntegerWeight):
        frozen_weight(1, 1, 2)
    s = mutate_at(frame(rank3_example()), "b")
    assert superscript(s, "c") == {"b": 1, "c": 1}
    assert format_superscript(s, "c") == "{c,b}"


def test_diagram_view_frozen_arrows():
    d = diagram_view(frame(rank3_example()))
    assert d.frozen == ("a'", "b'", "c'")
    assert Arrow("a", "a'", 1) in d.arrows
    assert d.weight("a", "c") == 2 and d.weight("c", "a") == -2


def test_diagram_mutation_weight_four_path():
    # x -> k weight 2, k -> y weight 2, no x-y arrow: new arrow x -> y weight 4
    m = matrix_from_arrows("xky", [("x", "k", 1, -2), ("k", "y", 2, -1)])
    d = diagram_mutate(diagram_view(m), "k")
    assert d.same_as(diagram_view(mutate_at(frame(m), "k").base))
    assert d.weight("x", "y") == 4


def test_diagram_mutation_unknown_vertex():
    with pytest.raises(UnknownVertex):
        diagram_mutate(diagram_view(rank3_example()), "z")


def test_unknown_vertex_in_seed():
    with pytest.raises(UnknownVertex):
        mutate_at(frame(rank3_example()), "q")


def test_from_parts_shape_check():
    with pytest.raises(ValueError):
        FramedSeed.from_parts(rank3_example(), np.eye(2, dtype=np.int64))
