"""Bounded exhaustive search for maximal green sequences on small diagrams."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import MixedSign, RankTooLarge, ZeroRow
from .mutation import ExchangeMatrix, frame

MAX_ENUM_RANK = 4


@dataclass(frozen=True)
class SearchConfig:
    max_depth: int
    max_states: int = 1_000_000
    mode: str = "first"
    dedup: bool = True

    def __post_init__(self):
        if self.max_depth < 0 or self.max_states < 1:
            raise ValueError("max_depth must be >= 0 and max_states >= 1")
        if self.mode not in ("first", "all"):
            raise ValueError("mode must be 'first' or 'all'")


@dataclass
class SearchResult:
    status: str  # found | exhausted | budget_exceeded
    sequences: list = field(default_factory=list)
    states: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def sequence(self):
        return self.sequences[0] if self.sequences else None


def _signs(block, n):
    out = np.empty(n, dtype=np.int8)
    _backend.row_signs(block, n, out)
    if ((out == 0) | (out == 2)).any():
        bad = int(np.flatnonzero((out == 0) | (out == 2))[0])
        raise (ZeroRow if out[bad] == 0 else MixedSign)(f"row {bad} lost sign coherence")
    return out


def search_mgs(m: ExchangeMatrix, cfg: SearchConfig) -> SearchResult:
    """Breadth-first search over framed seeds, branching on green vertices.

    With ``dedup`` the exact ``[B|C]`` block is the state key; breadth-first
    order reaches every state first at its minimal depth, so pruning repeats
    never hides a shorter sequence. ``mode="all"`` delegates to
    :func:`enumerate_all`.
    """
    if cfg.mode == "all":
        seqs = enumerate_all(m, cfg.max_depth, max_states=cfg.max_states)
        if seqs is None:
            return SearchResult("budget_exceeded", [], cfg.max_states)
        return SearchResult("found" if seqs else "exhausted", seqs, len(seqs))

    n = m.n
    start = frame(m).block.copy()
    if n == 0:
        return SearchResult("found", [()], 1)
    parent = {start.tobytes(): None}
    frontier = deque([(start, 0)])
    states = 1
    while frontier:
        block, depth = frontier.popleft()
        if depth >= cfg.max_depth:
            continue
        signs = _signs(block, n)
        key = block.tobytes()
        for k in np.flatnonzero(signs == 1):
            child = block.copy()
            _backend.mutate_inplace(child, int(k))
            ck = child.tobytes()
            if cfg.dedup and ck in parent:
                continue
            if (_signs(child, n) == -1).all():
                path = [m.labels[int(k)]]
                cur = key
                while parent[cur] is not None:
                    cur, v = parent[cur]
                    path.append(v)
                return SearchResult("found", [tuple(reversed(path))], states + 1)
            if states >= cfg.max_states:
                return SearchResult("budget_exceeded", [], states)
            parent.setdefault(ck, (key, m.labels[int(k)]))
            states += 1
            frontier.append((child, depth + 1))
    return SearchResult("exhausted", [], states)


def enumerate_all(m: ExchangeMatrix, max_len: int, max_states: int | None = None):
    """Every maximal green sequence of length <= ``max_len``, sorted by labels.

    Plain depth-first enumeration of green paths (no state merging, since
    distinct paths to one state are distinct sequences). Returns None when
    ``max_states`` expansions are exceeded.
    """
    if m.n > MAX_ENUM_RANK:
        raise RankTooLarge(f"rank {m.n} > {MAX_ENUM_RANK}")
    n = m.n
    found = []
    if n == 0:
        return [()]
    budget = [max_states]

    def walk(block, path):
        if budget[0] is not None:
            budget[0] -= 1
            if budget[0] < 0:
                raise _Budget
        signs = _signs(block, n)
        if (signs == -1).all():
            found.append(tuple(path))
            return
        if len(path) >= max_len:
            return
        for k in np.flatnonzero(signs == 1):
            child = block.copy()
            _backend.mutate_inplace(child, int(k))
            path.append(m.labels[int(k)])
            walk(child, path)
            path.pop()

    try:
        walk(frame(m).block.copy(), [])
    except _Budget:
        return None
    return sorted(found)


class _Budget(Exception):
    pass
