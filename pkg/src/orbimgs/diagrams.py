"""Exchange matrices of the fixed triangulations T(n, p, q).

Vertices are named ``<family>_<index>`` (``s`` has no index). Pending
vertices (family ``g``) carry symmetrizer 2. An arrow i -> j is stored as
b_ij = 2 if j is pending else 1 and b_ji = -(2 if i is pending else 1);
the weight-4 arrows between ordinary vertices are stored as (2, -2).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import UnknownVertex, UnsupportedParams
from .mutation import ExchangeMatrix, matrix_from_arrows

PUNCTURE_ONE_TEXT = (
    "no triangulation of a once-punctured closed orbifold admits an MGS"
)

# canonical family order: core, ladder, then tail families alphabetically
FAMILY_ORDER = ("g", "h", "m", "l", "r", "a", "b", "c", "d", "e", "f", "s")
PENDING = frozenset({"g"})

_LABEL_RE = re.compile(r"^([a-z])(?:_\{?(\d+)\}?)?$")


@dataclass(frozen=True)
class VertexLabel:
    family: str
    index: int | None = None

    def __post_init__(self):
        if self.family not in FAMILY_ORDER:
            raise ValueError(f"unknown family {self.family!r}")
        if self.index is not None and self.index < 1:
            raise ValueError("indices start at 1")

    def __str__(self):
        return self.family if self.index is None else f"{self.family}_{self.index}"

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse vertex label {text!r}")
        return cls(m.group(1), int(m.group(2)) if m.group(2) else None)

    def sort_key(self):
        return (FAMILY_ORDER.index(self.family), self.index or 0)


def normalize_label(text: str) -> str:
    """``h_{2}``, ``h2`` and ``h_2`` all become ``h_2``."""
    t = text.strip().replace("{", "").replace("}", "")
    m = re.match(r"^([a-z])_?(\d+)$", t)
    if m:
        return f"{m.group(1)}_{int(m.group(2))}"
    return t


class Rejection(enum.Enum):
    PUNCTURE_ONE = ("PunctureOne", PUNCTURE_ONE_TEXT)
    TOO_SMALL = ("TooSmall", "genus 0 requires p + q >= 4")
    NO_ORBIFOLD_POINTS = ("NoOrbifoldPoints", "the construction needs q >= 1")

    @property
    def code(self) -> str:
        return self.value[0]

    @property
    def message(self) -> str:
        return self.value[1]


@dataclass(frozen=True)
class OrbifoldParams:
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 0 or self.p < 1 or self.q < 0:
            raise ValueError(f"need n >= 0, p >= 1, q >= 0; got {self}")

    def __str__(self):
        return f"({self.n},{self.p},{self.q})"


def validate_params(P: OrbifoldParams) -> Rejection | None:
    """None when supported, otherwise the rejection reason."""
    if P.p == 1:
        return Rejection.PUNCTURE_ONE
    if P.q == 0:
        return Rejection.NO_ORBIFOLD_POINTS
    if P.n == 0 and P.p + P.q < 4:
        return Rejection.TOO_SMALL
    return None


def require_supported(P: OrbifoldParams) -> None:
    reason = validate_params(P)
    if reason is not None:
        raise UnsupportedParams(reason)


class _Quiver:
    """Arrow accumulator; an arrow and its reverse cancel (2-cycle removal)."""

    def __init__(self):
        self.vertices = []
        self.arrows = {}

    def add_vertices(self, family, count):
        for i in range(1, count + 1):
            self.vertices.append(f"{family}_{i}")

    def arrow(self, a, b, mult=1):
        if (b, a) in self.arrows:
            left = self.arrows.pop((b, a)) - mult
            if left > 0:
                self.arrows[(b, a)] = left
            elif left < 0:
                self.arrows[(a, b)] = -left
        else:
            self.arrows[(a, b)] = self.arrows.get((a, b), 0) + mult

    def cycle(self, *vs):
        for a, b in zip(vs, vs[1:] + vs[:1]):
            self.arrow(a, b)

    def build(self):
        order = sorted(self.vertices, key=lambda v: VertexLabel.parse(v).sort_key())
        pairs = []
        for (a, b), mult in self.arrows.items():
            fa, fb = a[0] in PENDING, b[0] in PENDING
            pairs.append((a, b, mult * (2 if fb else 1), -mult * (2 if fa else 1)))
        return matrix_from_arrows(order, pairs)


def _band(Q, q, closed):
    """Pending arcs g_i between consecutive h's."""
    for i in range(1, q + 1):
        nxt = 1 if (closed and i == q) else i + 1
        Q.arrow(f"h_{i}", f"g_{i}")
        Q.arrow(f"g_{i}", f"h_{nxt}")
        Q.arrow(f"h_{nxt}", f"h_{i}")


def _ladder(Q, q, top, l_end=None, r_end=None):
    """Rungs k = 0..top with l_0 = h_1, r_0 = h_{q+1}; optional renames at top+1."""

    def l(k):
        if k == 0:
            return "h_1"
        return l_end if (k == top + 1 and l_end) else f"l_{k}"

    def r(k):
        if k == 0:
            return f"h_{q + 1}"
        return r_end if (k == top + 1 and r_end) else f"r_{k}"

    for k in range(0, top + 1):
        m = f"m_{k + 1}"
        Q.cycle(l(k), m, l(k + 1))
        Q.cycle(m, r(k), r(k + 1))


def _pentagon(Q, k):
    a, b, c, d, e = (f"{x}_{k}" for x in "abcde")
    Q.cycle(d, e, a)
    Q.arrow(d, c)
    Q.arrow(a, c)
    Q.arrow(c, b, 2)
    Q.arrow(b, a)
    Q.arrow(b, d)


def build_diagram(P: OrbifoldParams) -> ExchangeMatrix:
    require_supported(P)
    n, p, q = P.n, P.p, P.q
    Q = _Quiver()
    Q.add_vertices("g", q)
    if n == 0 and p == 2:
        Q.add_vertices("h", q)
        _band(Q, q, closed=True)
        return Q.build()

    Q.add_vertices("h", q + 1)
    _band(Q, q, closed=False)
    if n == 0:
        Q.add_vertices("m", p - 2)
        Q.add_vertices("l", p - 3)
        Q.add_vertices("r", p - 3)
        Q.vertices.append("s")
        _ladder(Q, q, p - 4)
        lk = "h_1" if p == 3 else f"l_{p - 3}"
        rk = f"h_{q + 1}" if p == 3 else f"r_{p - 3}"
        Q.arrow(lk, f"m_{p - 2}")
        Q.arrow(f"m_{p - 2}", rk)
        Q.arrow(rk, "s")
        Q.arrow("s", lk)
    elif n == 1:
        Q.add_vertices("m", p - 1)
        Q.add_vertices("l", p - 1)
        Q.add_vertices("r", p - 1)
        Q.add_vertices("f", 2)
        _ladder(Q, q, p - 2)
        end_l, end_r = f"l_{p - 1}", f"r_{p - 1}"
        Q.arrow(end_l, "f_1")
        Q.arrow(end_r, "f_1")
        Q.arrow("f_1", "f_2", 2)
        Q.arrow("f_2", end_l)
        Q.arrow("f_2", end_r)
    else:
        Q.add_vertices("m", p - 1)
        Q.add_vertices("l", p - 2)
        Q.add_vertices("r", p - 2)
        for fam in "abcde":
            Q.add_vertices(fam, n)
        Q.add_vertices("f", n - 2)
        _ladder(Q, q, p - 2, l_end="e_1", r_end="e_2" if n == 2 else "f_1")
        for k in range(1, n + 1):
            _pentagon(Q, k)
        for k in range(1, n - 2):
            Q.cycle(f"f_{k}", f"e_{k + 1}", f"f_{k + 1}")
        if n > 2:
            Q.cycle(f"f_{n - 2}", f"e_{n - 1}", f"e_{n}")
    return Q.build()


def vertex_count(P: OrbifoldParams) -> int:
    """Expected number of mutable vertices (independent of the builder)."""
    n, p, q = P.n, P.p, P.q
    if n == 0:
        return 2 * q if p == 2 else 2 * q + 3 * p - 6
    if n == 1:
        return 2 * q + 3 * p
    return 6 * n - 6 + 3 * p + 2 * q


def label_index(m: ExchangeMatrix, v) -> int:
    key = str(v)
    try:
        return m.labels.index(key)
    except ValueError:
        raise UnknownVertex(f"unknown vertex {key}") from None


def rank3_example() -> ExchangeMatrix:
    """Rank-3 diagram a -> c (weight 2), b -> a (weight 2), c -> b; d_a = 2."""
    return matrix_from_arrows("abc", [("a", "c", 1, -2), ("b", "a", 2, -1), ("c", "b", 1, -1)])
