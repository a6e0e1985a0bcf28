"""Replay mutation sequences on framed seeds and check the green rule."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import _backend
from .diagrams import OrbifoldParams, build_diagram, require_supported
from .errors import MixedSign, UnknownVertex, ZeroRow
from .mutation import (
    FramedSeed,
    VertexColor,
    _color_from_row,
    colors,
    format_superscript,
    frame,
    is_final,
    is_negative_permutation,
    superscript,
)
from .sequences import MutationSequence, delta


class OutcomeKind(enum.Enum):
    VALID = "Valid"
    NOT_GREEN_AT = "NotGreenAt"
    NOT_ALL_RED_AT_END = "NotAllRedAtEnd"
    ENGINE_FAULT = "EngineFault"


@dataclass(frozen=True)
class Outcome:
    kind: OutcomeKind
    step: int | None = None  # 1-based
    reason: str = ""

    @property
    def valid(self) -> bool:
        return self.kind is OutcomeKind.VALID

    def __str__(self):
        if self.kind is OutcomeKind.NOT_GREEN_AT:
            return f"NotGreenAt({self.step})"
        if self.kind is OutcomeKind.ENGINE_FAULT:
            return f"EngineFault({self.step}, {self.reason})"
        return self.kind.value


@dataclass(frozen=True)
class StepRecord:
    index: int  # 1-based
    vertex: str
    color_before: VertexColor | None
    c_row_before: tuple
    block_after: np.ndarray = field(repr=False, compare=False)


@dataclass
class VerificationReport:
    labels: tuple
    symmetrizer: tuple
    steps: list
    outcome: Outcome
    final_c: np.ndarray
    duration: float
    violations: list = field(default_factory=list)  # 1-based steps mutated while red

    @property
    def valid(self) -> bool:
        return self.outcome.valid

    def final_is_negative_permutation(self) -> bool:
        return is_negative_permutation(self.final_c)

    def summary(self) -> str:
        perm = "−permutation" if self.final_is_negative_permutation() else "not −permutation"
        return f"{self.outcome}, {len(self.violations)} violations, final C = {perm}"


def apply_sequence(seed: FramedSeed, seq, mode: str = "strict"):
    """Replay ``seq`` from ``seed``.

    Strict mode stops at the first non-green mutation; permissive mode
    records it and carries on. Returns ``(final_seed, report)``.
    """
    if mode not in ("strict", "permissive"):
        raise ValueError("mode must be 'strict' or 'permissive'")
    labels = seq.steps if isinstance(seq, MutationSequence) else tuple(seq)
    idx = [seed.index(v) for v in labels]  # resolve before replaying
    n = seed.n
    block = seed.block.copy()
    records, violations = [], []
    outcome = None
    t0 = time.perf_counter()
    for step, (v, i) in enumerate(zip(labels, idx), start=1):
        row = block[i, n:]
        try:
            col = _color_from_row(row, v)
        except (MixedSign, ZeroRow) as exc:
            outcome = Outcome(OutcomeKind.ENGINE_FAULT, step, f"{type(exc).__name__}: {exc}")
            break
        before = tuple(int(x) for x in row)
        if col is not VertexColor.GREEN:
            violations.append(step)
            if mode == "strict":
                records.append(StepRecord(step, v, col, before, block.copy()))
                outcome = Outcome(OutcomeKind.NOT_GREEN_AT, step)
                break
        try:
            _backend.mutate_inplace(block, i)
        except OverflowError as exc:
            outcome = Outcome(OutcomeKind.ENGINE_FAULT, step, f"OverflowError: {exc}")
            break
        records.append(StepRecord(step, v, col, before, block.copy()))
    final = FramedSeed(seed.labels, seed.symmetrizer, block, seed._index)
    if outcome is None:
        try:
            done = is_final(final)
        except (MixedSign, ZeroRow) as exc:
            outcome = Outcome(OutcomeKind.ENGINE_FAULT, len(labels), f"{type(exc).__name__}: {exc}")
        else:
            if violations:
                outcome = Outcome(OutcomeKind.NOT_GREEN_AT, violations[0])
            elif not done:
                outcome = Outcome(OutcomeKind.NOT_ALL_RED_AT_END)
            else:
                outcome = Outcome(OutcomeKind.VALID)
    report = VerificationReport(
        labels=seed.labels,
        symmetrizer=seed.symmetrizer,
        steps=records,
        outcome=outcome,
        final_c=final.cblock.copy(),
        duration=time.perf_counter() - t0,
        violations=violations,
    )
    return final, report


def verify_mgs(P: OrbifoldParams) -> VerificationReport:
    require_supported(P)
    _, report = apply_sequence(frame(build_diagram(P)), delta(P), "strict")
    return report


def run_prefix(P: OrbifoldParams, step_id: str) -> FramedSeed:
    """Framed seed of ``P`` after the sequence has run through ``step_id``."""
    seq = delta(P)
    final, report = apply_sequence(frame(build_diagram(P)), seq.through(step_id), "strict")
    if report.outcome.kind not in (OutcomeKind.VALID, OutcomeKind.NOT_ALL_RED_AT_END):
        raise RuntimeError(f"prefix of {P} through {step_id} failed: {report.outcome}")
    return final


# -- state assertions --------------------------------------------------------------


@dataclass(frozen=True)
class StateAssertion:
    """Expected colour and superscript per vertex.

    ``expected[v] = (color, {frozen_label: multiplicity})``; a superscript
    of None checks the colour only.
    """

    expected: Mapping

    @classmethod
    def parse(cls, table: Mapping[str, str]) -> "StateAssertion":
        """Build from compact strings such as ``{"g_1": "green g_1 2h_2"}``."""
        out = {}
        for v, text in table.items():
            color, *items = text.split()
            sup = {}
            for it in items:
                j = 0
                while j < len(it) and it[j].isdigit():
                    j += 1
                mult = int(it[:j]) if j else 1
                sup[it[j:]] = sup.get(it[j:], 0) + mult
            out[v] = (VertexColor(color), sup)
        return cls(out)


@dataclass
class AssertionResult:
    ok: bool
    mismatches: list

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else "; ".join(self.mismatches)


def assert_state(seed: FramedSeed, a: StateAssertion) -> AssertionResult:
    mismatches = []
    for v, (color, sup) in a.expected.items():
        i = seed.index(v)  # raises UnknownVertex
        for u in sup or ():
            if u not in seed._index:
                raise UnknownVertex(f"unknown frozen vertex {u}")
        try:
            got_color = _color_from_row(seed.block[i, seed.n :], v)
        except (MixedSign, ZeroRow) as exc:
            mismatches.append(f"{v}: {exc}")
            continue
        got = superscript(seed, v)
        if got_color is not color:
            mismatches.append(f"{v}: expected {color.value}, got {got_color.value}")
        if sup is not None and got != dict(sup):
            want = {k: x for k, x in sup.items()}
            diff = sorted(set(got) ^ set(want) | {k for k in got if k in want and got[k] != want[k]})
            mismatches.append(
                f"{v}: expected {_fmt(want)}, got {format_superscript(seed, v)} (slots {','.join(diff)})"
            )
    return AssertionResult(not mismatches, mismatches)


def _fmt(sup):
    return "{" + ",".join(f"{m}{k}" if m != 1 else k for k, m in sup.items()) + "}"


# -- traces --------------------------------------------------------------------------


def _state_parts(seed: FramedSeed, style: str):
    cols = colors(seed)
    parts = []
    for v, c in zip(seed.labels, cols):
        if style == "superscript":
            parts.append(f"{v}: {c.value} {format_superscript(seed, v)}")
        else:
            row = " ".join(str(int(x)) for x in seed.c_row(v))
            parts.append(f"{v}: [{row}]")
    return parts


def render_trace(report: VerificationReport, style: str = "superscript") -> str:
    """One line per executed step; a header line first."""
    if style not in ("superscript", "matrix"):
        raise ValueError("style must be 'superscript' or 'matrix'")
    n = len(report.labels)
    lines = [f"# {n} vertices, {len(report.steps)} steps, {style} style"]
    index = {v: i for i, v in enumerate(report.labels)}
    for rec in report.steps:
        seed = FramedSeed(report.labels, report.symmetrizer, rec.block_after, index)
        try:
            body = " | ".join(_state_parts(seed, style))
        except (MixedSign, ZeroRow) as exc:
            body = f"fault: {exc}"
        lines.append(f"{rec.index} μ_{rec.vertex} | {body}")
    return "\n".join(lines) + "\n"


def render_state(seed: FramedSeed, style: str = "superscript") -> str:
    return " | ".join(_state_parts(seed, style))
