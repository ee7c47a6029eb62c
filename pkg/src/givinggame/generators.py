"""Matrices for tests, demos and experiments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import PreferenceMatrix

# rows are receivers, columns are submitters; None marks the diagonal
FIGURE1 = [
    [None, 0, 1, 0],
    [2, None, 2, 0],
    [1, 1, None, 1],
    [2, 0, 4, None],
]

FIGURE6A = [
    [None, 2, 1, 9],
    [4, None, 0, 2],
    [0, 7, None, 1],
    [1, 5, 5, None],
]

FIXTURES = {
    "figure1": FIGURE1,
    "figure2": FIGURE1,  # the same matrix, drawn with its coloring
    "figure6a": FIGURE6A,
}


@dataclass(frozen=True)
class Trivial:
    n: int


@dataclass(frozen=True)
class Random:
    n: int
    max_value: int
    seed: int
    no_blue_pairs: bool = False


@dataclass(frozen=True)
class TurquoiseFamily:
    k: int


@dataclass(frozen=True)
class Fixture:
    name: str


GeneratorSpec = Trivial | Random | TurquoiseFamily | Fixture


def fixture(name: str) -> PreferenceMatrix:
    try:
        return PreferenceMatrix(FIXTURES[name])
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None


def random_matrix(
    n: int, max_value: int, seed: int, no_blue_pairs: bool = False, max_tries: int = 10_000
) -> PreferenceMatrix:
    """Uniform values in ``[0, max_value]``.

    With ``no_blue_pairs`` the whole matrix is redrawn from the same stream
    until no twin pair is blue on both sides.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if max_value < 0:
        raise ValueError("max_value must be non-negative")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        m = PreferenceMatrix(rng.integers(0, max_value + 1, size=(n, n)))
        if not no_blue_pairs:
            return m
        mask = m.blue_mask()
        if not (mask & mask.T).any():
            return m
    raise ValueError(f"no matrix without blue pairs found in {max_tries} draws")


def turquoise_edges(k: int) -> set[tuple[int, int]]:
    """Blue cells of the k-agent member of the turquoise family.

    Indices 0, 2, 4, ... are the "odd" agents A, C, E, ...; 1, 3, 5, ... are
    the "even" agents B, D, F, ....  For every pair ``i < j`` exactly one
    direction is blue:

    * ``B -> j`` for every later odd agent ``j``;
    * an odd agent ``i`` selects every later even agent ``j``;
    * otherwise the newcomer ``j`` selects ``i``.

    So B only ever selects odd agents, and each new odd agent selects all
    earlier odd agents.
    """
    edges = set()
    for j in range(k):
        for i in range(j):
            if (i == 1 and j % 2 == 0) or (i % 2 == 0 and j % 2 == 1):
                edges.add((i, j))
            else:
                edges.add((j, i))
    return edges


def turquoise_family(k: int) -> PreferenceMatrix:
    """Matrix whose every twin pair is turquoise: blue cells hold 1, white 0.

    Member ``k + 1`` is member ``k`` plus one row and column, and adding
    them leaves every earlier cell's color unchanged.
    """
    if k < 4:
        raise ValueError("the turquoise family starts at k = 4")
    arr = np.zeros((k, k), dtype=np.uint64)
    for x, y in turquoise_edges(k):
        arr[y, x] = 1
    return PreferenceMatrix(arr)


def generate(spec: GeneratorSpec) -> PreferenceMatrix:
    if isinstance(spec, Trivial):
        if spec.n < 2:
            raise ValueError("n must be at least 2")
        return PreferenceMatrix.zeros(spec.n)
    if isinstance(spec, Random):
        return random_matrix(spec.n, spec.max_value, spec.seed, spec.no_blue_pairs)
    if isinstance(spec, TurquoiseFamily):
        return turquoise_family(spec.k)
    if isinstance(spec, Fixture):
        return fixture(spec.name)
    raise TypeError(f"unknown generator spec {spec!r}")


def random_corpus(count: int, seed: int, n_range=(2, 6), max_range=(0, 5)):
    """``count`` reproducible random matrices with sizes and value caps drawn per instance."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        mx = int(rng.integers(max_range[0], max_range[1] + 1))
        out.append(PreferenceMatrix(rng.integers(0, mx + 1, size=(n, n))))
    return out
