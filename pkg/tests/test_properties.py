"""Randomised invariants over grid diagrams and random green prefixes."""

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import GRID
from orbimgs.diagrams import build_diagram
from orbimgs.mutation import colors, diagram_mutate, diagram_view, frame, mutate_at, VertexColor

_MATRICES = {P: build_diagram(P) for P in GRID}

SETTINGS = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def green_walks(draw, max_len=25):
    """A grid seed after a random green-respecting prefix, plus one more vertex."""
    P = draw(st.sampled_from(GRID))
    seed = frame(_MATRICES[P])
    for _ in range(draw(st.integers(0, max_len))):
        greens = [v for v, c in zip(seed.labels, colors(seed)) if c is VertexColor.GREEN]
        if not greens:
            break
        seed = mutate_at(seed, draw(st.sampled_from(greens)))
    return seed, draw(st.sampled_from(seed.labels))


@SETTINGS
@given(green_walks())
def test_involution(walk):
    seed, k = walk
    assert np.array_equal(mutate_at(mutate_at(seed, k), k).block, seed.block)


@SETTINGS
@given(green_walks())
def test_symmetrizer_preserved(walk):
    seed, k = walk
    b = mutate_at(seed, k).base  # construction re-checks skew-symmetrizability
    d = np.array(seed.symmetrizer)
    db = d[:, None] * b.entries
    assert np.array_equal(db, -db.T)


@SETTINGS
@given(green_walks())
def test_diagram_and_matrix_mutation_commute(walk):
    seed, k = walk
    assert diagram_mutate(diagram_view(seed), k).same_as(diagram_view(mutate_at(seed, k)))


@SETTINGS
@given(green_walks(max_len=40))
def test_sign_coherence(walk):
    seed, _ = walk
    c = seed.cblock
    assert not (((c > 0).any(axis=1)) & ((c < 0).any(axis=1))).any()
    assert (c != 0).any(axis=1).all()
