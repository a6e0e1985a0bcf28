"""Explicit maximal green sequences for the diagrams of ``diagrams.py``.

Each sequence is a concatenation of named steps. Provenance records which
step produced which slice, so replays can pause at step boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import OrbifoldParams, build_diagram, require_supported
from .errors import OutOfRange


@dataclass(frozen=True)
class MutationSequence:
    steps: tuple
    provenance: tuple  # ((start, stop, step_id), ...) partitioning range(len(steps))
    family: str = ""

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def step_ids(self):
        return [sid for _, _, sid in self.provenance]

    def slice_of(self, step_id):
        for start, stop, sid in self.provenance:
            if sid == step_id:
                return start, stop
        raise KeyError(step_id)

    def through(self, step_id) -> tuple:
        """Labels up to and including the named step."""
        return self.steps[: self.slice_of(step_id)[1]]

    def annotations(self):
        """Step id for every position."""
        out = [None] * len(self.steps)
        for start, stop, sid in self.provenance:
            for i in range(start, stop):
                out[i] = sid
        return out


class _Builder:
    def __init__(self, family):
        self.family = family
        self.steps = []
        self.prov = []

    def add(self, step_id, labels):
        start = len(self.steps)
        self.steps.extend(labels)
        self.prov.append((start, len(self.steps), step_id))

    def done(self):
        return MutationSequence(tuple(self.steps), tuple(self.prov), self.family)


def _v(fam, i):
    return f"{fam}_{i}"


def _seq(fam, lo, hi):
    """fam_lo, ..., fam_hi ascending; empty when lo > hi."""
    return [_v(fam, i) for i in range(lo, hi + 1)]


def _down(fam, hi, lo):
    """fam_hi, ..., fam_lo descending; empty when hi < lo."""
    return [_v(fam, i) for i in range(hi, lo - 1, -1)]


def _every_other_down(hi, lo):
    """hi, hi-2, ..., down to lo (inclusive); empty if hi < lo."""
    return list(range(hi, lo - 1, -2)) if hi >= lo else []


def _sgn(x):
    return (x > 0) - (x < 0)


# -- named subsequences (p is the effective ladder parameter) ---------------------


def alpha(k):
    return [_v("r", k), _v("l", k), _v("m", k + 1), _v("m", k), _v("l", k), _v("r", k)]


def beta(k):
    last = _v("m", k - 1) if k > 1 else "h_1"
    return [_v("r", k), _v("l", k), _v("m", k + 2), last]


def delta_k(k):
    return [_v("r", k), _v("r", k + 1), _v("l", k), _v("l", k + 1)]


def iota(k):
    return [f"{x}_{k}" for x in ("a", "e", "c", "b", "a", "d", "e", "c", "b")]


def pi(k):
    return [f"{x}_{k}" for x in ("b", "c", "e", "d", "b", "a", "c", "e", "b")]


def mu(p):
    return [_v("m", p + 1 - 2 * (p // 2))] if p > 2 else []


def gamma(p, q):
    if p > 2:
        return [_v("m", p - 2), _v("l", p - 2), _v("r", p - 2), _v("m", p - 2)]
    return ["h_1", "m_1", _v("h", q + 1), "h_1"]


def gamma0(p, q):
    """Corner step on genus 0 (p is the true puncture count, p > 2)."""
    if p > 3:
        return ["s", _v("l", p - 3), _v("r", p - 3), _v("m", p - 3)]
    return ["s", "m_1", _v("h", q + 1), "h_1"]


def epsilon(p, q):
    top = q + 1 if (p % 2 == 0 and p > 2) else q
    return _seq("h", 2, top)


def omega(p, q):
    return [_v("h", q + 1), _v("g", q)] if p % 2 == 1 else []


_KINDS = {"alpha", "beta", "gamma", "delta", "epsilon", "mu", "omega", "iota", "pi"}
_INDEXED = {"alpha", "beta", "delta", "iota", "pi"}


def subsequence(kind: str, k, P: OrbifoldParams) -> list:
    """One named subsequence for the diagram of ``P``.

    Genus 0 uses the ladder parameter p - 1 except for ``gamma``.
    Raises OutOfRange when a label would not exist in the diagram.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown subsequence kind {kind!r}")
    require_supported(P)
    if kind in _INDEXED and (k is None or k < 1):
        raise OutOfRange(f"{kind} needs an index >= 1")
    p = P.p - 1 if P.n == 0 else P.p
    q = P.q
    if kind == "alpha":
        out = alpha(k)
    elif kind == "beta":
        out = beta(k)
    elif kind == "delta":
        out = delta_k(k)
    elif kind == "iota":
        out = iota(k)
    elif kind == "pi":
        out = pi(k)
    elif kind == "mu":
        out = mu(p)
    elif kind == "gamma":
        out = gamma0(P.p, q) if P.n == 0 else gamma(p, q)
    elif kind == "epsilon":
        out = epsilon(p, q)
    else:
        out = omega(p, q)
    labels = set(build_diagram(P).labels)
    missing = [x for x in out if x not in labels]
    if missing:
        raise OutOfRange(f"{kind}({k}) uses {missing} absent from {P}")
    return out


# -- genus 1, generic form ---------------------------------------------------------


def _front(B, p, q):
    """Steps 1 to 4(b), shared by genus >= 1 and (with p shifted) genus 0."""
    B.add("step 1", [x for k in _every_other_down(p - 2, p - 2 * ((p - 1) // 2)) for x in alpha(k)])
    B.add(
        "step 2",
        _down("h", q + 1, 1)
        + [_v("m", p + 1 - 2 * (p // 2))]
        + _seq("h", 2, q + 1 - p + 2 * (p // 2)),
    )
    B.add("step 3", [x for k in _every_other_down(p - 3, p + 1 - 2 * (p // 2)) for x in beta(k)])
    B.add("step 4(a)", _seq("g", 1, q) + _down("h", q + _sgn(p - 2), 2) + mu(p))
    lo = p - 2 * ((p - 1) // 2)
    B.add("step 4(b)", [x for j in range(lo, p - 3, 2) for x in (_v("l", j), _v("r", j))])


def _back(B, p, q, d_id, core_id):
    """Inner arcs and core arcs back to the corner."""
    B.add(d_id, [x for k in _every_other_down(p - 4, p - 2 * ((p - 1) // 2)) for x in delta_k(k)])
    B.add(core_id, mu(p) + epsilon(p, q) + _seq("g", 1, q) + omega(p, q))


def _outer(p):
    lp, rp = _v("l", p - 1), _v("r", p - 1)
    return [lp, "f_1", rp, "f_2", lp, "f_1"], ["f_1", lp, "f_2", rp, "f_1", lp]


def delta1_generic(p: int, q: int) -> MutationSequence:
    """Genus-1 sequence from the floor-formula form (cross-check only)."""
    B = _Builder("delta1")
    _front(B, p, q)
    away, back = _outer(p)
    B.add("step 4(c)", away)
    B.add("step 5", gamma(p, q))
    B.add("step 6(a)", back)
    _back(B, p, q, "step 6(b)", "step 6(c)")
    B.add("step 6(d)", ["l_1", "r_1"] if (p > 2 and p % 2 == 0) else [])
    return B.done()


# -- genus 1, per-case lists ---------------------------------------------------------


_P21 = (
    "h_2 h_1 m_1 h_2 g_1 l_1 f_1 r_1 f_2 l_1 f_1 h_1 m_1 h_2 h_1 "
    "f_1 l_1 f_2 r_1 f_1 l_1 g_1"
).split()


def delta1_cases(p: int, q: int) -> MutationSequence:
    """Genus-1 sequence from the per-case translated lists."""
    B = _Builder("delta1")
    G = _seq("g", 1, q)
    if p == 2 and q == 1:
        ids = ["step 2"] * 4 + ["step 4(a)"] + ["step 4(c)"] * 6 + ["step 5"] * 4
        ids += ["step 6(a)"] * 6 + ["step 6(c)"]
        for sid in ("step 1", "step 2", "step 3", "step 4(a)", "step 4(b)", "step 4(c)",
                    "step 5", "step 6(a)", "step 6(b)", "step 6(c)", "step 6(d)"):
            B.add(sid, [x for x, i in zip(_P21, ids) if i == sid])
        return B.done()

    away, back = _outer(p)
    if p == 2:
        B.add("step 1", [])
        B.add("step 2", _down("h", q + 1, 1) + ["m_1"] + _seq("h", 2, q + 1))
        B.add("step 3", [])
        B.add("step 4(a)", G + _down("h", q, 2))
        B.add("step 4(b)", [])
        B.add("step 4(c)", away)
        B.add("step 5", ["h_1", "m_1", _v("h", q + 1), "h_1"])
        B.add("step 6(a)", back)
        B.add("step 6(b)", [])
        B.add("step 6(c)", _seq("h", 2, q) + G)
        B.add("step 6(d)", [])
    elif p == 3:
        B.add("step 1", ["r_1", "l_1", "m_2", "m_1", "l_1", "r_1"])
        B.add("step 2", _down("h", q + 1, 1) + ["m_2"] + _seq("h", 2, q))
        B.add("step 3", [])
        B.add("step 4(a)", G + _down("h", q + 1, 2) + ["m_2"])
        B.add("step 4(b)", [])
        B.add("step 4(c)", away)
        B.add("step 5", ["m_1", "l_1", "r_1", "m_1"])
        B.add("step 6(a)", back)
        B.add("step 6(b)", [])
        B.add("step 6(c)", ["m_2"] + _seq("h", 2, q) + G + [_v("h", q + 1), _v("g", q)])
        B.add("step 6(d)", [])
    elif p % 2 == 0:
        # p = 4 and p > 4 even share one template; for p = 4 the ranges are empty
        B.add("step 1", [x for k in range(p - 2, 1, -2) for x in alpha(k)])
        B.add("step 2", _down("h", q + 1, 1) + ["m_1"] + _seq("h", 2, q + 1))
        B.add("step 3", [x for k in range(p - 3, 0, -2) for x in beta(k)])
        B.add("step 4(a)", G + _down("h", q + 1, 2) + ["m_1"])
        B.add("step 4(b)", [x for j in range(2, p - 3, 2) for x in (_v("l", j), _v("r", j))])
        B.add("step 4(c)", away)
        B.add("step 5", [_v("m", p - 2), _v("l", p - 2), _v("r", p - 2), _v("m", p - 2)])
        B.add("step 6(a)", back)
        B.add("step 6(b)", [x for k in range(p - 4, 1, -2) for x in delta_k(k)])
        B.add("step 6(c)", ["m_1"] + _seq("h", 2, q + 1) + G)
        B.add("step 6(d)", ["l_1", "r_1"])
    else:
        B.add("step 1", [x for k in range(p - 2, 0, -2) for x in alpha(k)])
        B.add("step 2", _down("h", q + 1, 1) + ["m_2"] + _seq("h", 2, q))
        B.add("step 3", [x for k in range(p - 3, 1, -2) for x in beta(k)])
        B.add("step 4(a)", G + _down("h", q + 1, 2) + ["m_2"])
        B.add("step 4(b)", [x for j in range(1, p - 3, 2) for x in (_v("l", j), _v("r", j))])
        B.add("step 4(c)", away)
        B.add("step 5", [_v("m", p - 2), _v("l", p - 2), _v("r", p - 2), _v("m", p - 2)])
        B.add("step 6(a)", back)
        B.add("step 6(b)", [x for k in range(p - 4, 0, -2) for x in delta_k(k)])
        B.add("step 6(c)", ["m_2"] + _seq("h", 2, q) + G + [_v("h", q + 1), _v("g", q)])
        B.add("step 6(d)", [])
    return B.done()


# -- genus 0 ----------------------------------------------------------------------


def delta0_p2_literal(q: int) -> MutationSequence:
    """Genus 0 with two punctures, literal substitution into the step list.

    Not maximal green for q = 2 and q = 3 (a red h_1 is mutated in step 3);
    kept for comparison. Identical to ``delta0_p2`` for q >= 4.
    """
    B = _Builder("delta0")
    G = _seq("g", 1, q)
    B.add("step 1", _down("h", q, 1) + _seq("h", 3, q))
    B.add("step 2", G)
    B.add("step 3", ["h_2", "h_1"] + _seq("h", 3, q) + _down("h", q - 2, 3) + ["h_1", "h_2"])
    B.add("step 4", G)
    return B.done()


def delta0_p2(q: int) -> MutationSequence:
    """Genus 0 with two punctures.

    Step 3 is step 1 rewritten under the relabelling
    h_i -> h_{q+1-i} (i <= q-2), h_{q-1} -> h_1, h_q -> h_2.
    """

    def phi(i):
        if i == q:
            return 2
        if i == q - 1:
            return 1
        return q + 1 - i

    B = _Builder("delta0")
    G = _seq("g", 1, q)
    first = list(range(q, 0, -1)) + list(range(3, q + 1))
    B.add("step 1", [_v("h", i) for i in first])
    B.add("step 2", G)
    B.add("step 3", [_v("h", phi(i)) for i in first])
    B.add("step 4", G)
    return B.done()


def delta0_big(p: int, q: int) -> MutationSequence:
    """Genus 0 with p > 2: the genus-1 steps for p - 1 minus the outer arcs."""
    pp = p - 1
    B = _Builder("delta0")
    _front(B, pp, q)
    B.add("step 5", gamma0(p, q))
    _back(B, pp, q, "step 6(a)", "step 6(b)")
    B.add("step 6(c)", ["l_1", "r_1"] if (p > 3 and p % 2 == 1) else [])
    return B.done()


# -- genus >= 2 -------------------------------------------------------------------


def deltan(n: int, p: int, q: int) -> MutationSequence:
    B = _Builder("deltan")
    _front(B, p, q)
    spine_up = _seq("f", 1, n - 2)
    spine_down = _down("f", n - 2, 1)
    B.add("step 4(c)", spine_up)
    B.add("step 4(d)", [x for k in range(1, n + 1) for x in iota(k)])
    B.add("step 4(e)", spine_down)
    B.add("step 5", gamma(p, q))
    B.add("step 6(a)", spine_up)
    B.add("step 6(b)", [x for k in range(1, n + 1) for x in pi(k)])
    B.add("step 6(c)", spine_down)
    _back(B, p, q, "step 6(d)", "step 6(e)")
    B.add("step 6(f)", ["l_1", "r_1"] if (p > 2 and p % 2 == 0) else [])
    return B.done()


def delta(P: OrbifoldParams) -> MutationSequence:
    require_supported(P)
    if P.n == 0:
        return delta0_p2(P.q) if P.p == 2 else delta0_big(P.p, P.q)
    if P.n == 1:
        return delta1_cases(P.p, P.q)
    return deltan(P.n, P.p, P.q)


def consecutive_repeats(seq: MutationSequence) -> list:
    """Positions i (1-based) where step i repeats step i-1."""
    return [i + 1 for i in range(1, len(seq.steps)) if seq.steps[i] == seq.steps[i - 1]]
