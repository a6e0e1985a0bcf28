"""Skew-symmetrisable exchange matrices, framed seeds and their diagrams.

Matrices are exact int64 arrays. A framed seed stores the ``n x 2n`` block
``[B | C]`` of mutable rows; the frozen rows are never materialised since
frozen vertices are never mutated.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _backend
from .errors import (
    DuplicatePair,
    MixedSign,
    NoSymmetrizer,
    NonIntegerWeight,
    SelfLoop,
    UnknownVertex,
    ZeroRow,
)

FROZEN_MARK = "'"


def _frozen_view(arr):
    arr = np.array(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _index_of(labels, v):
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        if 0 <= v < len(labels):
            return int(v)
        raise UnknownVertex(f"vertex index {v} out of range")
    try:
        return labels.index(str(v))
    except ValueError:
        raise UnknownVertex(f"unknown vertex {v}") from None


@dataclass(frozen=True, eq=False)
class ExchangeMatrix:
    labels: tuple
    entries: np.ndarray
    symmetrizer: tuple

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", _frozen_view(self.entries))
        object.__setattr__(self, "symmetrizer", tuple(int(x) for x in self.symmetrizer))
        n = len(labels)
        b, d = self.entries, np.array(self.symmetrizer, dtype=np.int64)
        if b.shape != (n, n) or d.shape != (n,):
            raise ValueError("shape mismatch between labels, entries and symmetrizer")
        if len(set(labels)) != n:
            raise ValueError("labels must be unique")
        if n and (d <= 0).any():
            raise ValueError("symmetrizer entries must be positive")
        if n and np.diagonal(b).any():
            raise SelfLoop("nonzero diagonal entry")
        db = d[:, None] * b
        if not np.array_equal(db, -db.T):
            raise NoSymmetrizer("diag(d)*B is not skew-symmetric")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, v) -> int:
        return _index_of(self.labels, v)

    def __eq__(self, other):
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.symmetrizer == other.symmetrizer
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.labels, self.symmetrizer, self.entries.tobytes()))

    def pairs(self):
        """Yield ``(i, j, b_ij, b_ji)`` for every arrow i -> j, in index order."""
        b = self.entries
        for i in range(self.n):
            for j in range(self.n):
                if b[i, j] > 0:
                    yield self.labels[i], self.labels[j], int(b[i, j]), int(b[j, i])


def _solve_symmetrizer(n, pairs):
    ratio = [None] * n
    adj = [[] for _ in range(n)]
    for i, j, bf, bb in pairs:
        # d_i*bf = -d_j*bb  =>  d_j = d_i * bf / (-bb)
        adj[i].append((j, Fraction(bf, -bb)))
        adj[j].append((i, Fraction(-bb, bf)))
    d = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        comp = [root]
        ratio[root] = Fraction(1)
        stack = [root]
        while stack:
            u = stack.pop()
            for v, r in adj[u]:
                want = ratio[u] * r
                if ratio[v] is None:
                    ratio[v] = want
                    comp.append(v)
                    stack.append(v)
                elif ratio[v] != want:
                    raise NoSymmetrizer(f"inconsistent ratios around vertex index {v}")
        scale = math.lcm(*(ratio[v].denominator for v in comp))
        ints = [int(ratio[v] * scale) for v in comp]
        g = math.gcd(*ints)
        for v, x in zip(comp, ints):
            d[v] = x // g
    return d


def matrix_from_arrows(labels: Sequence[str], pairs: Iterable) -> ExchangeMatrix:
    """Assemble B from ``(i, j, b_forward, b_backward)`` pairs.

    ``b_forward`` must be positive and ``b_backward`` negative. The
    symmetrizer is the minimal positive integer solution on each connected
    component.
    """
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be unique")
    n = len(labels)
    b = np.zeros((n, n), dtype=np.int64)
    seen = set()
    idx_pairs = []
    for i, j, bf, bb in pairs:
        a, c = _index_of(labels, i), _index_of(labels, j)
        if a == c:
            raise SelfLoop(f"self loop at {labels[a]}")
        key = frozenset((a, c))
        if key in seen:
            raise DuplicatePair(f"pair {labels[a]},{labels[c]} given twice")
        seen.add(key)
        bf, bb = int(bf), int(bb)
        if bf <= 0 or bb >= 0:
            raise ValueError("b_forward must be positive and b_backward negative")
        b[a, c], b[c, a] = bf, bb
        idx_pairs.append((a, c, bf, bb))
    d = _solve_symmetrizer(n, idx_pairs)
    return ExchangeMatrix(labels, b, d)


class VertexColor(enum.Enum):
    GREEN = "green"
    RED = "red"

    def __str__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class FramedSeed:
    """Mutable rows ``[B | C]`` plus labels and symmetrizer."""

    labels: tuple
    symmetrizer: tuple
    block: np.ndarray
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._index is None:
            object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.labels)})
        if self.block.flags.writeable:
            self.block.setflags(write=False)

    @classmethod
    def from_parts(cls, base: ExchangeMatrix, cblock) -> "FramedSeed":
        c = np.asarray(cblock, dtype=np.int64)
        if c.shape != (base.n, base.n):
            raise ValueError("C block must be n x n")
        block = np.ascontiguousarray(np.hstack([base.entries, c]), dtype=np.int64)
        return cls(base.labels, base.symmetrizer, block)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def base(self) -> ExchangeMatrix:
        return ExchangeMatrix(self.labels, self.block[:, : self.n], self.symmetrizer)

    @property
    def cblock(self) -> np.ndarray:
        return self.block[:, self.n :]

    def index(self, v) -> int:
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise UnknownVertex(f"unknown vertex {v}") from None
        return _index_of(self.labels, v)

    def c_row(self, v) -> np.ndarray:
        return self.block[self.index(v), self.n :]

    def key(self) -> bytes:
        """Exact state key used for deduplication."""
        return self.block.tobytes()

    def __eq__(self, other):
        if not isinstance(other, FramedSeed):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.symmetrizer == other.symmetrizer
            and np.array_equal(self.block, other.block)
        )

    def __hash__(self):
        return hash((self.labels, self.key()))


def frame(m: ExchangeMatrix) -> FramedSeed:
    return FramedSeed.from_parts(m, np.eye(m.n, dtype=np.int64))


def mutate_at(seed: FramedSeed, k) -> FramedSeed:
    i = seed.index(k)
    block = seed.block.copy()
    _backend.mutate_inplace(block, i)
    return FramedSeed(seed.labels, seed.symmetrizer, block, seed._index)


def _color_from_row(row, label):
    pos = (row > 0).any()
    neg = (row < 0).any()
    if pos and neg:
        raise MixedSign(f"c-row of {label} has mixed signs: {row.tolist()}")
    if pos:
        return VertexColor.GREEN
    if neg:
        return VertexColor.RED
    raise ZeroRow(f"c-row of {label} is zero")


def color_of(seed: FramedSeed, v) -> VertexColor:
    i = seed.index(v)
    return _color_from_row(seed.block[i, seed.n :], seed.labels[i])


def colors(seed: FramedSeed) -> list:
    """Colour of every mutable vertex, in index order."""
    out = np.empty(seed.n, dtype=np.int8)
    _backend.row_signs(seed.block, seed.n, out)
    res = []
    for i, s in enumerate(out):
        if s == 1:
            res.append(VertexColor.GREEN)
        elif s == -1:
            res.append(VertexColor.RED)
        else:
            _color_from_row(seed.block[i, seed.n :], seed.labels[i])
    return res


def is_final(seed: FramedSeed) -> bool:
    """True iff every mutable vertex is red; vacuously true for n = 0."""
    return all(c is VertexColor.RED for c in colors(seed))


def is_negative_permutation(c) -> bool:
    c = np.asarray(c)
    n = c.shape[0]
    if c.shape != (n, n):
        return False
    if not ((c == 0) | (c == -1)).all():
        return False
    return bool((c.sum(axis=0) == -1).all() and (c.sum(axis=1) == -1).all())


# -- diagrams -----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Arrow:
    src: str
    tgt: str
    weight: int


@dataclass(frozen=True)
class Diagram:
    """Weighted quiver. ``frozen`` lists vertices that are never mutated."""

    vertices: tuple
    arrows: tuple
    frozen: tuple = ()

    def arrow_set(self):
        return frozenset(self.arrows)

    def same_as(self, other: "Diagram") -> bool:
        return (
            set(self.vertices) == set(other.vertices)
            and set(self.frozen) == set(other.frozen)
            and self.arrow_set() == other.arrow_set()
        )

    def weight(self, a, b) -> int:
        """Signed weight: positive for a -> b, negative for b -> a, 0 if absent."""
        for arr in self.arrows:
            if arr.src == a and arr.tgt == b:
                return arr.weight
            if arr.src == b and arr.tgt == a:
                return -arr.weight
        return 0


def frozen_name(label: str) -> str:
    return label + FROZEN_MARK


def frozen_weight(c: int, d_i: int, d_j: int) -> int:
    """Weight of the arrow between mutable i and frozen j' for entry c = b_{i j'}.

    The frozen companion j' inherits d_j, so b_{j' i} = -c * d_i / d_j and the
    weight is c^2 d_i / d_j.
    """
    num = c * c * d_i
    if num % d_j:
        raise NonIntegerWeight(f"frozen weight {num}/{d_j} is not an integer")
    return num // d_j


def diagram_view(m) -> Diagram:
    if isinstance(m, FramedSeed):
        base, c, labels = m.block[:, : m.n], m.block[:, m.n :], m.labels
    else:
        base, c, labels = m.entries, None, m.labels
    n = len(labels)
    d = m.symmetrizer
    arrows = []
    for i in range(n):
        for j in range(n):
            if base[i, j] > 0:
                arrows.append(Arrow(labels[i], labels[j], int(-base[i, j] * base[j, i])))
    frozen = ()
    if c is not None:
        frozen = tuple(frozen_name(v) for v in labels)
        for i in range(n):
            for j in range(n):
                x = int(c[i, j])
                if x == 0:
                    continue
                w = frozen_weight(x, d[i], d[j])
                if x > 0:
                    arrows.append(Arrow(labels[i], frozen[j], w))
                else:
                    arrows.append(Arrow(frozen[j], labels[i], w))
    return Diagram(tuple(labels) + frozen, tuple(arrows), frozen)


def _sqrt_form(w: int):
    """Write sqrt(w) as (coef, radical) with radical squarefree."""
    if w == 0:
        return 0, 1
    coef, rad, f = 1, 1, 2
    rest = w
    while f * f <= rest:
        while rest % (f * f) == 0:
            coef *= f
            rest //= f * f
        f += 1
    rad = rest
    return coef, rad


def diagram_mutate(d: Diagram, k: str, orientation_data=None) -> Diagram:
    """Mutate a diagram at ``k`` using the square-root rule.

    Writing signed root weights s(i,j) = +sqrt(w) for i -> j, the rule
    ``±sqrt(c) ± sqrt(d) = sqrt(ab)`` with signs fixed by oriented cycles
    becomes s'(i,j) = s(i,j) + sqrt(ab) for every path i -a-> k -b-> j.
    ``orientation_data`` is accepted for interface symmetry; orientation is
    read from the arrows themselves.
    """
    if k not in d.vertices:
        raise UnknownVertex(f"unknown vertex {k}")
    if k in d.frozen:
        raise ValueError(f"cannot mutate frozen vertex {k}")
    frozen = set(d.frozen)
    into = {a.src: a.weight for a in d.arrows if a.tgt == k}
    out = {a.tgt: a.weight for a in d.arrows if a.src == k}
    # signed root weights keyed by ordered pair (i, j) with i -> j positive
    roots = {}
    for a in d.arrows:
        if k in (a.src, a.tgt):
            continue
        coef, rad = _sqrt_form(a.weight)
        roots[(a.src, a.tgt)] = (coef, rad)
    new_arrows = []
    touched = set()
    for i, wa in into.items():
        for j, wb in out.items():
            if i == j or (i in frozen and j in frozen):
                continue
            pc, pr = _sqrt_form(wa * wb)
            if (i, j) in roots:
                oc, orad = roots[(i, j)]
            elif (j, i) in roots:
                oc, orad = roots[(j, i)]
                oc = -oc
            else:
                oc, orad = 0, pr
            if oc and orad != pr:
                raise NonIntegerWeight(f"weight between {i} and {j} is irrational")
            s = oc + pc
            touched.add((i, j))
            touched.add((j, i))
            if s > 0:
                new_arrows.append(Arrow(i, j, s * s * pr))
            elif s < 0:
                new_arrows.append(Arrow(j, i, s * s * pr))
    for a in d.arrows:
        if a.src == k:
            new_arrows.append(Arrow(a.tgt, k, a.weight))
        elif a.tgt == k:
            new_arrows.append(Arrow(k, a.src, a.weight))
        elif (a.src, a.tgt) not in touched:
            new_arrows.append(a)
    return Diagram(d.vertices, tuple(sorted(new_arrows)), d.frozen)


# -- superscripts ---------------------------------------------------------------


def superscript(seed: FramedSeed, v) -> dict:
    """Frozen companions of ``v`` with multiplicities (diagram weights)."""
    i = seed.index(v)
    row = seed.block[i, seed.n :]
    d = seed.symmetrizer
    return {
        seed.labels[j]: frozen_weight(int(row[j]), d[i], d[j])
        for j in np.flatnonzero(row)
    }


def format_superscript(seed: FramedSeed, v) -> str:
    """Render ``{v, 2h_2}``: own companion first, the rest in index order."""
    i = seed.index(v)
    sup = superscript(seed, v)
    own = seed.labels[i]
    order = ([own] if own in sup else []) + [x for x in seed.labels if x in sup and x != own]
    parts = [(f"{sup[x]}{x}" if sup[x] != 1 else x) for x in order]
    return "{" + ",".join(parts) + "}"


def seed_from_superscripts(
    base: ExchangeMatrix, rows: Mapping[str, Mapping[str, int]]
) -> FramedSeed:
    """Hand-build a framed seed from raw signed c-entries per vertex (testing aid)."""
    c = np.zeros((base.n, base.n), dtype=np.int64)
    for v, entries in rows.items():
        i = base.index(v)
        for u, x in entries.items():
            c[i, base.index(u)] = x
    return FramedSeed.from_parts(base, c)
