"""Compare the compiled kernel with the numpy fallback.

    python3 benchmarks/bench_kernel.py [--repeat 5] [--skip-search]

Three workloads: a raw mutation round trip on the largest grid diagram, the
full verification grid, and the breadth-first search on the (0,2,3) diagram.
"""

from __future__ import annotations

import argparse
import statistics
import time
from contextlib import contextmanager

import numpy as np

from orbimgs import _backend, _fallback
from orbimgs.cli import grid_points
from orbimgs.diagrams import OrbifoldParams, build_diagram
from orbimgs.mutation import frame
from orbimgs.search import SearchConfig, search_mgs
from orbimgs.sequences import delta
from orbimgs.verify import verify_mgs

try:
    from orbimgs import _kernel
except ImportError:
    _kernel = None


@contextmanager
def use(impl):
    saved = _backend.mutate_inplace, _backend.row_signs
    _backend.mutate_inplace, _backend.row_signs = impl.mutate_inplace, impl.row_signs
    try:
        yield
    finally:
        _backend.mutate_inplace, _backend.row_signs = saved


def round_trip(rounds=50):
    P = OrbifoldParams(4, 7, 4)
    block = frame(build_diagram(P)).block.copy()
    start = block.copy()
    idx = [frame(build_diagram(P)).index(v) for v in delta(P).steps]
    path = idx + idx[::-1]  # mutation is an involution, so this returns to start
    for _ in range(rounds):
        for k in path:
            _backend.mutate_inplace(block, k)
    assert np.array_equal(block, start)
    return len(path) * rounds


def grid():
    for key in grid_points():
        assert verify_mgs(OrbifoldParams(*key)).valid
    return 0


def search():
    res = search_mgs(build_diagram(OrbifoldParams(0, 2, 3)), SearchConfig(14))
    assert res.found
    return res.states


def timed(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-search", action="store_true")
    args = ap.parse_args(argv)

    impls = [("numpy", _fallback)]
    if _kernel is not None:
        impls.insert(0, ("cython", _kernel))
    else:
        print("compiled kernel not built; only the fallback is timed")

    work = [("mutation round trip (4,7,4)", round_trip, args.repeat), ("verification grid", grid, args.repeat)]
    if not args.skip_search:
        work.append(("search (0,2,3) depth 14", search, 1))

    print(f"{'workload':32} {'backend':8} {'best s':>9} {'median s':>9}")
    for name, fn, rep in work:
        best = {}
        for label, impl in impls:
            with use(impl):
                lo, med = timed(fn, rep)
            best[label] = lo
            print(f"{name:32} {label:8} {lo:9.4f} {med:9.4f}")
        if len(best) == 2:
            print(f"{'':32} speedup  {best['numpy'] / best['cython']:9.2f}x")


if __name__ == "__main__":
    main()
