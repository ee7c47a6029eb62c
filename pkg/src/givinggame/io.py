"""JSON matrix and trace files.

Matrix::

    {"agents": ["A", "B", "C", "D"],
     "cells": [[null, 0, 1, 0], [2, null, 2, 0], [1, 1, null, 1], [2, 0, 4, null]]}

``cells[r][c]`` is the value of cell (column ``c``, row ``r``).

Trace (replayed against a matrix on load)::

    {"start": "C", "steps": ["D", "C", "D"], "truncated": false, "stability_pair": ["C", "D"]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .engine import Trace
from .errors import GivingGameError
from .matrix import PreferenceMatrix


class FormatError(GivingGameError, ValueError):
    pass


def _parse(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def matrix_to_dict(m: PreferenceMatrix) -> dict:
    return {"agents": list(m.labels), "cells": m.to_rows()}


def matrix_from_dict(data: dict, source: str = "<matrix>") -> PreferenceMatrix:
    if not isinstance(data, dict) or "cells" not in data:
        raise FormatError(f"{source}: expected an object with a 'cells' array")
    cells = data["cells"]
    for r, row in enumerate(cells):
        for c, v in enumerate(row):
            if (v is None) != (r == c):
                what = "diagonal must be null" if r == c else "missing value"
                raise FormatError(f"{source}: cells[{r}][{c}]: {what}")
    try:
        return PreferenceMatrix(cells, data.get("agents"))
    except (ValueError, OverflowError) as exc:
        raise FormatError(f"{source}: {exc}") from None


def dumps_matrix(m: PreferenceMatrix) -> str:
    d = matrix_to_dict(m)
    rows = ",\n    ".join(json.dumps(r) for r in d["cells"])
    return f'{{\n  "agents": {json.dumps(d["agents"])},\n  "cells": [\n    {rows}\n  ]\n}}\n'


def loads_matrix(text: str, source: str = "<matrix>") -> PreferenceMatrix:
    return matrix_from_dict(_parse(text, source), source)


def load_matrix(path) -> PreferenceMatrix:
    path = Path(path)
    return loads_matrix(path.read_text(), str(path))


def save_matrix(m: PreferenceMatrix, path) -> None:
    Path(path).write_text(dumps_matrix(m))


def trace_to_dict(t: Trace) -> dict:
    labels = t.initial.labels
    pair = t.stability_pair
    return {
        "start": labels[t.start],
        "steps": [labels[s.receiver] for s in t.steps],
        "truncated": t.truncated,
        "stability_pair": None if pair is None else [labels[a] for a in sorted(pair)],
    }


def trace_from_dict(data: dict, m: PreferenceMatrix, source: str = "<trace>") -> Trace:
    try:
        agents = [data["start"], *data["steps"]]
        t = Trace.from_agents(m, agents, truncated=bool(data.get("truncated", False)))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{source}: malformed trace ({exc})") from None
    except ValueError as exc:
        raise FormatError(f"{source}: {exc}") from None
    recorded = data.get("stability_pair")
    if recorded is not None:
        got = t.stability_pair
        if got is None or {m.index(a) for a in recorded} != set(got):
            raise FormatError(f"{source}: recorded stability pair does not replay")
    return t


def dumps_trace(t: Trace) -> str:
    return json.dumps(trace_to_dict(t)) + "\n"


def loads_trace(text: str, m: PreferenceMatrix, source: str = "<trace>") -> Trace:
    return trace_from_dict(_parse(text, source), m, source)


def load_trace(path, m: PreferenceMatrix) -> Trace:
    path = Path(path)
    return loads_trace(path.read_text(), m, str(path))
