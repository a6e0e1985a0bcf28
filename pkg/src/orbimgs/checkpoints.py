"""Intermediate-state expectations at step boundaries of the explicit sequences.

Each checkpoint names a step id and builds a :class:`StateAssertion` from the
states already reached, so abstract frozen sets (written W, Y below) are
instantiated with the run's own values. ``None`` as a superscript means only
the colour is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .diagrams import OrbifoldParams, build_diagram, require_supported
from .mutation import VertexColor, frame, superscript
from .sequences import delta
from .verify import AssertionResult, StateAssertion, apply_sequence, assert_state

GREEN, RED = VertexColor.GREEN, VertexColor.RED


@dataclass(frozen=True)
class Checkpoint:
    name: str
    step: str
    expect: Callable  # states -> {vertex: (color, sup or None)}


def _sup(*items):
    """``_sup("g_1", (2, "h_2"))`` -> {"g_1": 1, "h_2": 2}."""
    out = {}
    for it in items:
        mult, v = (1, it) if isinstance(it, str) else it
        out[v] = out.get(v, 0) + mult
    return out


def _hs(lo, hi):
    return [f"h_{i}" for i in range(lo, hi + 1)]


def _gs2(q):
    return [(2, f"g_{i}") for i in range(1, q + 1)]


def _pentagon_away(k):
    return {
        f"a_{k}": (RED, _sup(f"a_{k}")),
        f"c_{k}": (RED, _sup(f"d_{k}")),
        f"d_{k}": (RED, _sup(f"c_{k}")),
        f"e_{k}": (RED, _sup(f"b_{k}")),
    }


def _pentagon_back(k):
    return {
        f"a_{k}": (RED, _sup(f"b_{k}")),
        f"c_{k}": (RED, _sup(f"c_{k}")),
        f"d_{k}": (RED, _sup(f"d_{k}")),
        f"e_{k}": (RED, _sup(f"a_{k}")),
    }


def _big_e(k):
    return [(4, f"{x}_{k}") for x in "eacbd"]


def _corner_names(p, q):
    """(w, x, y, z, X) around the corner for ladder parameter p."""
    if p == 2:
        return "h_2", "h_1", "m_1", f"h_{q + 1}", "h_1"
    w = {3: "m_2", 4: "m_1"}.get(p, f"r_{p - 4}")
    return w, f"m_{p - 2}", f"l_{p - 2}", f"r_{p - 2}", f"l_{p - 2}"


# -- genus 1 ---------------------------------------------------------------------


def _first_puncture(q):
    def expect(states):
        e = {f"g_{i}": (GREEN, _sup(f"g_{i}", (2, f"h_{i + 1}"))) for i in range(1, q + 1)}
        e["h_1"] = (RED, _sup("h_1"))
        for i in range(2, q + 1):
            e[f"h_{i}"] = (RED, _sup(f"h_{i + 1}"))
        e[f"h_{q + 1}"] = (RED, _sup("m_1"))
        e["m_1"] = (RED, _sup("h_2"))
        e["l_1"] = (GREEN, _sup("l_1", "h_1"))
        e["r_1"] = (GREEN, _sup("r_1", "m_1"))
        e["f_1"] = (GREEN, _sup("f_1"))
        e["f_2"] = (GREEN, _sup("f_2"))
        return e

    return Checkpoint("first interior puncture", "step 2", expect)


def _core_away_p4(q):
    big_y = ["l_1", *_hs(1, q + 1), *_gs2(q), "r_1", "r_2"]

    def expect(states):
        e = {f"g_{i}": (RED, _sup(f"g_{i}", (2, f"h_{i + 1}"))) for i in range(1, q + 1)}
        for i in range(2, q + 2):
            e[f"h_{i}"] = (GREEN, _sup(f"h_{i}", (2, f"g_{i - 1}")))
        e["m_1"] = (RED, _sup(*_hs(2, q + 1), *_gs2(q), "r_1", "r_2"))
        e["r_1"] = (GREEN, _sup("r_1"))
        e["l_1"] = (RED, _sup("h_1"))
        e["r_2"] = (RED, _sup("m_3"))
        e["l_2"] = (GREEN, _sup(*big_y))
        e["m_2"] = (RED, _sup("l_2"))
        e["l_3"] = (GREEN, _sup("l_3", "l_2"))
        e["r_3"] = (GREEN, _sup("r_3", "m_3"))
        return e

    return Checkpoint("core arcs away, p = 4", "step 4(a)", expect)


def _corner_p4(q):
    def expect(states):
        before = states["step 4(b)"]
        big_w, big_y = superscript(before, "m_1"), superscript(before, "l_2")
        y_minus_w = {v: k for v, k in big_y.items() if v not in big_w}
        return {
            "m_1": (GREEN, y_minus_w),
            "m_2": (RED, _sup("m_3")),
            "l_2": (RED, big_y),
            "r_2": (RED, _sup("l_2")),
            "l_3": (RED, _sup("l_3")),
            "r_3": (RED, _sup("r_3")),
            "f_1": (RED, _sup("f_1")),
            "f_2": (RED, _sup("f_2")),
        }

    return Checkpoint("corner", "step 6(a)", expect)


def _core_away_p3(q):
    def expect(states):
        e = {f"g_{i}": (RED, _sup(f"g_{i}", (2, f"h_{i + 1}"))) for i in range(1, q)}
        e[f"g_{q}"] = (GREEN, _sup(f"g_{q}", (2, f"h_{q + 1}")))
        e["m_2"] = (RED, _sup(*_hs(2, q + 1), *_gs2(q), "r_1"))
        for i in range(2, q + 1):
            e[f"h_{i}"] = (GREEN, _sup(f"h_{i}", (2, f"g_{i - 1}")))
        e[f"h_{q + 1}"] = (RED, _sup(f"h_{q + 1}"))
        e["h_1"] = (RED, _sup("h_1", "m_1"))
        e["l_1"] = (GREEN, _sup("r_1", *_hs(1, q + 1), *_gs2(q)))
        return e

    return Checkpoint("core arcs away, p = 3", "step 4(a)", expect)


def _walk_121():
    def after5(states):
        return {
            "h_1": (RED, _sup((4, "r_1"), "m_1", "f_1", "f_2")),
            "h_2": (RED, _sup((4, "l_1"), "f_1", "f_2", "h_1")),
            "f_1": (GREEN, _sup("r_1", "f_1", "f_2")),
            "f_2": (GREEN, _sup("l_1", "f_1", "f_2")),
            "g_1": (GREEN, _sup("g_1")),
            "m_1": (RED, _sup("h_2", (2, "g_1"))),
        }

    def after4c(states):
        return {
            "h_2": (GREEN, _sup((4, "r_1"), "f_1", "f_2", "m_1")),
            "h_1": (GREEN, _sup((4, "l_1"), "f_1", "f_2", "h_1")),
            "l_1": (RED, _sup("f_2")),
            "r_1": (RED, _sup("f_1")),
            "f_1": (RED, _sup("r_1", "m_1")),
            "f_2": (RED, _sup("l_1", "h_1")),
        }

    return [
        Checkpoint("outer arcs away, (1,2,1)", "step 4(c)", after4c),
        Checkpoint("corner notched, (1,2,1)", "step 5", after5),
    ]


# -- genus >= 2 ------------------------------------------------------------------


def _pentagons(n, p, q):
    w, x, y, z, big_x = _corner_names(p, q)
    mp = f"m_{p - 1}"
    f_desc = [f"f_{i}" for i in range(n - 2, 0, -1)]

    def away(states):
        e = {}
        for k in range(1, n + 1):
            e.update(_pentagon_away(k))
        e["b_1"] = (RED, _sup("e_1", big_x))
        e[x] = (GREEN, _sup(*_big_e(1), big_x))
        e[y] = (GREEN, superscript(states["step 4(b)"], y))
        e[w] = (RED, superscript(states["step 4(b)"], w))
        if n == 2:
            e[z] = (GREEN, _sup(*_big_e(2), mp))
            e["b_2"] = (RED, _sup("e_2", mp))
        else:
            e[z] = (GREEN, _sup(*_big_e(2), "f_1"))
            e[f"f_{n - 2}"] = (GREEN, _sup(*_big_e(n), *f_desc, mp))
            for k in range(1, n - 2):
                e[f"f_{k}"] = (GREEN, _sup(*_big_e(k + 2), f"f_{k + 1}"))
            e[f"b_{n}"] = (RED, _sup(f"e_{n}", *f_desc, mp))
            for k in range(2, n):
                e[f"b_{k}"] = (RED, _sup(f"e_{k}"))
        return e

    def back(states):
        big_y = superscript(states["step 4(b)"], y)
        big_w = superscript(states["step 4(b)"], w)
        e = {}
        for k in range(1, n + 1):
            e.update(_pentagon_back(k))
        e["b_1"] = (RED, _sup("e_1"))
        e[z] = (RED, _sup(big_x))
        e[y] = (RED, big_y)
        e[w] = (GREEN, {v: m for v, m in big_y.items() if v not in big_w})
        if n == 2:
            e[x] = (RED, _sup(mp))
            e["b_2"] = (RED, _sup("e_2"))
        else:
            e[x] = (RED, _sup(*f_desc, mp))
            for k in range(1, n - 1):
                e[f"f_{k}"] = (GREEN, _sup(f"f_{k}"))
            e[f"b_{n}"] = (RED, _sup(f"e_{n}"))
            for k in range(2, n):
                e[f"b_{k}"] = (RED, _sup(f"e_{k}", f"f_{k - 1}"))
        return e

    return [
        Checkpoint("pentagons away", "step 4(d)", away),
        Checkpoint("pentagons back", "step 6(b)", back),
    ]


# -- the shared front part ------------------------------------------------------


def _front_summary(n, p, q):
    """State after step 4(b); ``p`` is the ladder parameter."""
    w, x, y, z, big_x = _corner_names(p, q)
    mp = f"m_{p - 1}"
    if n == 0:
        u_tail = None
    elif n == 2:
        u_tail = ("e_1", "e_2")
    else:
        u_tail = ("e_1", "f_1")

    def expect(states):
        if p == 2 and q == 1:
            e = {
                "g_1": (RED, _sup("g_1", (2, "h_2"))),
                "m_1": (GREEN, _sup("h_2", (2, "g_1"))),
                "h_2": (RED, _sup("m_1")),
                "h_1": (RED, _sup("h_1")),
            }
        else:
            e = {
                w: (RED, None),
                y: (GREEN, None),
                z: (RED, _sup(mp)),
                x: (RED, _sup(big_x)),
            }
        if u_tail is None:
            e["s"] = (GREEN, _sup("s", big_x, mp))
        else:
            u, v = u_tail
            e[u] = (GREEN, _sup(u, big_x))
            e[v] = (GREEN, _sup(v, mp))
        return e

    return Checkpoint("one puncture summary", "step 4(b)", expect)


def checkpoints_for(P: OrbifoldParams) -> list:
    """Every checkpoint that applies to ``P`` (possibly none)."""
    require_supported(P)
    n, p, q = P.n, P.p, P.q
    out = []
    if n == 1:
        if p == 2:
            out.append(_first_puncture(q))
            if q == 1:
                out.extend(_walk_121())
        elif p == 3 and q >= 2:
            out.append(_core_away_p3(q))
        elif p == 4:
            out.append(_core_away_p4(q))
            out.append(_corner_p4(q))
    elif n == 0 and p > 2:
        out.append(_front_summary(0, p - 1, q))
    elif n >= 2 and (p > 2 or q > 1):
        out.append(_front_summary(n, p, q))
        out.extend(_pentagons(n, p, q))
    return out


def boundary_states(P: OrbifoldParams) -> dict:
    """Seed at the end of every step of ``delta(P)``, keyed by step id."""
    seq = delta(P)
    seed = frame(build_diagram(P))
    states = {}
    done = 0
    for start, stop, sid in seq.provenance:
        seed, report = apply_sequence(seed, seq.steps[done:stop], "permissive")
        if report.violations:
            raise RuntimeError(f"{P}: non-green mutation inside {sid}")
        done = stop
        states[sid] = seed
    return states


@dataclass
class CheckpointResult:
    name: str
    step: str
    result: AssertionResult

    @property
    def ok(self):
        return self.result.ok


def run_checkpoints(P: OrbifoldParams) -> list:
    cps = checkpoints_for(P)
    if not cps:
        return []
    states = boundary_states(P)
    out = []
    for cp in cps:
        expected = cp.expect(states)
        out.append(CheckpointResult(cp.name, cp.step, assert_state(states[cp.step], StateAssertion(expected))))
    return out
