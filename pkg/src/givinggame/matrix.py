"""Preference matrices and their blue/white coloring.

Cell ``(x, y)`` sits in column ``x`` (the submitting agent) and row ``y``
(the receiving agent).  Its value counts the tokens ``x`` received from
``y`` in the past, so ``x`` prefers the ``y`` with the largest value in its
column.  The array layout follows the printed tables: ``values[row, column]``.
"""

from __future__ import annotations

import enum
import string
from collections.abc import Iterable, Sequence
from typing import Union

import numpy as np

Agent = Union[int, str]

UINT64_MAX = np.iinfo(np.uint64).max


class CellColor(enum.Enum):
    BLUE = "blue"
    WHITE = "white"


def default_labels(n: int) -> tuple[str, ...]:
    """``A, B, ..., Z, A1, B1, ...`` for agent indices ``0..n-1``."""
    letters = string.ascii_uppercase
    return tuple(
        letters[i % 26] + (str(i // 26) if i >= 26 else "") for i in range(n)
    )


class PreferenceMatrix:
    """Immutable N x N matrix of non-negative counts with an undefined diagonal.

    Parameters
    ----------
    values : array_like
        Square integer array indexed ``[receiver, submitter]``.  Diagonal
        entries are ignored (``None`` is accepted there).
    labels : sequence of str, optional
        Display names; defaults to ``A, B, C, ...``.
    """

    __slots__ = ("_values", "_labels", "_index")

    def __init__(self, values, labels: Sequence[str] | None = None):
        rows = [list(r) for r in values]
        n = len(rows)
        if n < 2:
            raise ValueError("a game needs at least 2 agents")
        for r, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {r} has {len(row)} cells, expected {n}")
            for c, v in enumerate(row):
                if r == c:
                    row[c] = 0
                    continue
                if v is None:
                    raise ValueError(f"cell (column {c}, row {r}) is missing")
                if int(v) != v or v < 0:
                    raise ValueError(
                        f"cell (column {c}, row {r}) must be a non-negative integer, got {v!r}"
                    )
                if v > UINT64_MAX:
                    raise OverflowError(f"cell (column {c}, row {r}) exceeds 64 bits")
        arr = np.array(rows, dtype=np.uint64)
        arr.setflags(write=False)
        self._values = arr
        if labels is None:
            labels = default_labels(n)
        labels = tuple(str(s) for s in labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be n distinct names")
        self._labels = labels
        self._index = {s: i for i, s in enumerate(labels)}

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, n: int, labels: Sequence[str] | None = None) -> PreferenceMatrix:
        return cls(np.zeros((n, n), dtype=np.uint64), labels)

    @classmethod
    def from_cells(cls, cells: dict, n: int, labels=None) -> PreferenceMatrix:
        """Build from a ``{(submitter, receiver): value}`` mapping; missing cells are 0."""
        arr = np.zeros((n, n), dtype=np.uint64)
        for (x, y), v in cells.items():
            if x == y:
                raise ValueError("diagonal cell undefined")
            arr[y, x] = v
        return cls(arr, labels)

    # -- basic access -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def values(self) -> np.ndarray:
        """Read-only ``[receiver, submitter]`` array; the diagonal holds 0."""
        return self._values

    def index(self, agent: Agent) -> int:
        """Resolve a label or index to an index."""
        if isinstance(agent, (int, np.integer)) and not isinstance(agent, bool):
            if not 0 <= agent < self.n:
                raise ValueError(f"agent index {agent} out of range for N={self.n}")
            return int(agent)
        try:
            return self._index[agent]
        except KeyError:
            raise ValueError(f"unknown agent {agent!r}") from None

    def label(self, agent: Agent) -> str:
        return self._labels[self.index(agent)]

    def value(self, x: Agent, y: Agent) -> int:
        """``|(x, y)|``: what column ``x`` holds at row ``y``."""
        x, y = self.index(x), self.index(y)
        if x == y:
            raise ValueError("diagonal cell undefined")
        return int(self._values[y, x])

    def cells(self) -> Iterable[tuple[int, int, int]]:
        """Yield ``(submitter, receiver, value)`` for every off-diagonal cell."""
        for x in range(self.n):
            for y in range(self.n):
                if x != y:
                    yield x, y, int(self._values[y, x])

    def columns(self) -> list[list[int]]:
        """Plain-int copy ``cols[x][y] = |(x, y)|`` with ``-1`` on the diagonal.

        The search routines mutate this form in place; ``-1`` never wins a
        column maximum because real values are non-negative.
        """
        cols = self._values.T.astype(object).tolist()
        for i in range(self.n):
            cols[i][i] = -1
        return [[int(v) for v in col] for col in cols]

    @property
    def max_value(self) -> int:
        off = self._values[~np.eye(self.n, dtype=bool)]
        return int(off.max())

    def total(self) -> int:
        return sum(v for _, _, v in self.cells())

    # -- coloring ---------------------------------------------------------

    def column_max(self, x: Agent) -> int:
        x = self.index(x)
        col = np.delete(self._values[:, x], x)
        return int(col.max())

    def color(self, x: Agent, y: Agent) -> CellColor:
        x, y = self.index(x), self.index(y)
        if x == y:
            raise ValueError("diagonal cell undefined")
        return CellColor.BLUE if self.value(x, y) == self.column_max(x) else CellColor.WHITE

    def is_blue(self, x: Agent, y: Agent) -> bool:
        return self.color(x, y) is CellColor.BLUE

    def blue_successors(self, x: Agent) -> list[int]:
        x = self.index(x)
        top = self.column_max(x)
        return [y for y in range(self.n) if y != x and int(self._values[y, x]) == top]

    def blue_mask(self) -> np.ndarray:
        """Boolean ``[receiver, submitter]`` array of blue cells."""
        vals = self._values.astype(np.int64)
        np.fill_diagonal(vals, -1)
        mask = vals == vals.max(axis=0, keepdims=True)
        np.fill_diagonal(mask, False)
        return mask

    def gap(self, x: Agent, y: Agent) -> int:
        """Column maximum of ``x`` minus ``|(x, y)|``; zero exactly on blue cells."""
        x, y = self.index(x), self.index(y)
        if x == y:
            raise ValueError("diagonal cell undefined")
        return self.column_max(x) - self.value(x, y)

    # -- updates ----------------------------------------------------------

    def incremented(self, x: Agent, y: Agent) -> PreferenceMatrix:
        """Copy with ``|(x, y)|`` raised by one."""
        x, y = self.index(x), self.index(y)
        if x == y:
            raise ValueError("diagonal cell undefined")
        if int(self._values[y, x]) == UINT64_MAX:
            raise OverflowError(f"cell ({self.label(x)},{self.label(y)}) would overflow 64 bits")
        arr = self._values.copy()
        arr[y, x] += np.uint64(1)
        return PreferenceMatrix(arr, self._labels)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PreferenceMatrix):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(self._values, other._values)

    def __hash__(self):
        return hash((self._labels, self._values.tobytes()))

    def __repr__(self):
        return f"PreferenceMatrix(n={self.n}, labels={''.join(self._labels)!r})"

    def to_rows(self) -> list[list[int | None]]:
        """Row-major cells with ``None`` on the diagonal (the JSON layout)."""
        return [
            [None if r == c else int(self._values[r, c]) for c in range(self.n)]
            for r in range(self.n)
        ]


def column_max(m: PreferenceMatrix, x: Agent) -> int:
    return m.column_max(x)


def cell_color(m: PreferenceMatrix, x: Agent, y: Agent) -> CellColor:
    return m.color(x, y)


def blue_successors(m: PreferenceMatrix, x: Agent) -> list[int]:
    """Agents ``x`` may pass to, ascending by index.  Never empty."""
    return m.blue_successors(x)
