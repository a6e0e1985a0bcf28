"""JSON documents and Graphviz DOT export for exchange matrices and framed seeds.

Document layout (version 1)::

    {
      "version": "orbimgs-diagram/1",
      "params": {"n": 1, "p": 2, "q": 1} | "custom",
      "vertices": [{"name": "g_1", "symmetrizer_d": 2}, ...],
      "arrows": [{"from": "h_1", "to": "g_1", "b_forward": 2, "b_backward": -1}, ...],
      "frozen": [[...], ...]        # optional C rows, one per vertex
    }

Arrows carry the raw pair (b_ij, b_ji) rather than a diagram weight, since a
weight alone does not fix the entries.
"""

from __future__ import annotations

import json

import numpy as np

from .diagrams import OrbifoldParams
from .errors import OrbiError
from .mutation import (
    ExchangeMatrix,
    FramedSeed,
    VertexColor,
    _color_from_row,
    diagram_view,
    matrix_from_arrows,
)

VERSION = "orbimgs-diagram/1"


class DocumentError(OrbiError, ValueError):
    """Malformed or inconsistent diagram document."""


def to_document(obj, params: OrbifoldParams | None = None) -> dict:
    m = obj.base if isinstance(obj, FramedSeed) else obj
    doc = {
        "version": VERSION,
        "params": {"n": params.n, "p": params.p, "q": params.q} if params else "custom",
        "vertices": [{"name": v, "symmetrizer_d": d} for v, d in zip(m.labels, m.symmetrizer)],
        "arrows": [
            {"from": i, "to": j, "b_forward": bf, "b_backward": bb} for i, j, bf, bb in m.pairs()
        ],
    }
    if isinstance(obj, FramedSeed):
        doc["frozen"] = [[int(x) for x in row] for row in obj.cblock]
    return doc


def dumps(obj, params: OrbifoldParams | None = None) -> str:
    return json.dumps(to_document(obj, params), indent=2) + "\n"


def from_document(doc):
    """Returns ``(matrix_or_seed, params_or_None)``; raises DocumentError."""
    try:
        if not isinstance(doc, dict) or doc.get("version") != VERSION:
            raise DocumentError(f"expected version {VERSION!r}")
        labels = [str(v["name"]) for v in doc["vertices"]]
        d = [int(v["symmetrizer_d"]) for v in doc["vertices"]]
        pairs = [(a["from"], a["to"], int(a["b_forward"]), int(a["b_backward"])) for a in doc["arrows"]]
        raw = doc.get("params", "custom")
        params = None if raw == "custom" else OrbifoldParams(int(raw["n"]), int(raw["p"]), int(raw["q"]))
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed document: {exc}") from exc
    try:
        solved = matrix_from_arrows(labels, pairs)
        m = ExchangeMatrix(labels, solved.entries, d)  # checks the stored symmetrizer
    except (OrbiError, KeyError, ValueError) as exc:
        raise DocumentError(f"invalid matrix: {exc}") from exc
    if "frozen" not in doc:
        return m, params
    try:
        c = np.array(doc["frozen"], dtype=np.int64)
        return FramedSeed.from_parts(m, c), params
    except (TypeError, ValueError, OrbiError) as exc:
        raise DocumentError(f"invalid frozen block: {exc}") from exc


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not JSON: {exc}") from exc
    return from_document(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# -- DOT -------------------------------------------------------------------------

_FILL = {VertexColor.GREEN: "palegreen", VertexColor.RED: "lightcoral"}


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj, frozen: bool = False, name: str = "D") -> str:
    """Plain digraph in canonical vertex order; every edge is labelled by its weight.

    Framed seeds get green/red fills; frozen companions appear (as boxes)
    only when ``frozen`` is set.
    """
    d = diagram_view(obj)
    lines = [f"digraph {_q(name)} {{", "  node [shape=circle];"]
    fills = {}
    if isinstance(obj, FramedSeed):
        for i, v in enumerate(obj.labels):
            fills[v] = _FILL[_color_from_row(obj.block[i, obj.n :], v)]
    hidden = set() if frozen else set(d.frozen)
    for v in d.vertices:
        if v in hidden:
            continue
        if v in d.frozen:
            lines.append(f"  {_q(v)} [shape=box];")
        elif v in fills:
            lines.append(f"  {_q(v)} [style=filled, fillcolor={fills[v]}];")
        else:
            lines.append(f"  {_q(v)};")
    for a in d.arrows:
        if a.src in hidden or a.tgt in hidden:
            continue
        lines.append(f'  {_q(a.src)} -> {_q(a.tgt)} [label="{a.weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
