import os
import subprocess
import sys

import numpy as np
import pytest

from orbimgs import _backend, _fallback
from orbimgs.diagrams import OrbifoldParams, build_diagram
from orbimgs.mutation import frame
from orbimgs.sequences import delta

kernel = pytest.importorskip("orbimgs._kernel")


def _env(value):
    return dict(os.environ, ORBIMGS_BACKEND=value)


def test_backend_selection_by_environment():
    code = "import orbimgs; print(orbimgs.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=_env("python"), capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    out = subprocess.run([sys.executable, "-c", code], env=_env("cython"), capture_output=True, text=True)
    assert out.stdout.strip() == "cython"


def test_default_prefers_compiled():
    if os.environ.get("ORBIMGS_BACKEND", "") == "":
        assert _backend.BACKEND == "cython"


@pytest.mark.parametrize("params", [(1, 2, 1), (2, 3, 2), (0, 5, 3)])
def test_kernels_agree_along_a_sequence(params):
    P = OrbifoldParams(*params)
    seed = frame(build_diagram(P))
    a = seed.block.copy()
    b = seed.block.copy()
    sa = np.empty(seed.n, dtype=np.int8)
    sb = np.empty(seed.n, dtype=np.int8)
    for v in delta(P).steps:
        k = seed.index(v)
        kernel.mutate_inplace(a, k)
        _fallback.mutate_inplace(b, k)
        assert np.array_equal(a, b)
        kernel.row_signs(a, seed.n, sa)
        _fallback.row_signs(b, seed.n, sb)
        assert np.array_equal(sa, sb)


def test_index_errors():
    block = np.zeros((2, 4), dtype=np.int64)
    with pytest.raises(IndexError):
        _fallback.mutate_inplace(block, 2)
    with pytest.raises(IndexError):
        kernel.mutate_inplace(block, 2)
