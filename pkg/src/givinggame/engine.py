"""Game semantics: single steps, policy-driven play, and exhaustive branching.

A step passes the token from the holder ``x`` to some ``y`` whose cell
``(x, y)`` is blue, then increments the twin cell ``(y, x)``.  The first step
whose twin was already blue starts the stability phase; from there the two
agents are locked into alternating forever, so traces stop two steps after
that point (one full back-and-forth).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import BranchExplosion, IllegalStep, ScriptError
from .matrix import Agent, PreferenceMatrix

DEFAULT_MAX_STEPS = 10_000
DEFAULT_BRANCH_CAP = 1_000_000

# steps recorded after the first stability-phase step
TAIL_STEPS = 2


@dataclass(frozen=True)
class Step:
    submitter: int
    receiver: int
    # twin cell (receiver, submitter) was blue when the step was taken
    twin_blue: bool


@dataclass(frozen=True)
class GameState:
    holder: int
    matrix: PreferenceMatrix


@dataclass(frozen=True)
class Trace:
    """A finite recording of one game path from ``(start, initial)``."""

    start: int
    initial: PreferenceMatrix
    steps: tuple[Step, ...]
    truncated: bool = False

    @property
    def agents(self) -> tuple[int, ...]:
        return (self.start,) + tuple(s.receiver for s in self.steps)

    @property
    def boundary(self) -> int | None:
        """Index of the first stability-phase step, or ``None``."""
        for i, s in enumerate(self.steps):
            if s.twin_blue:
                return i
        return None

    @property
    def stability_pair(self) -> frozenset[int] | None:
        b = self.boundary
        if b is None:
            return None
        s = self.steps[b]
        return frozenset((s.submitter, s.receiver))

    def path(self, sep: str | None = None) -> str:
        labels = [self.initial.labels[a] for a in self.agents]
        if sep is None:
            sep = "" if all(len(s) == 1 for s in labels) else " "
        return sep.join(labels)

    def __len__(self):
        return len(self.steps)

    @classmethod
    def from_agents(
        cls, m: PreferenceMatrix, agents: Sequence[Agent], truncated: bool = False
    ) -> Trace:
        """Replay an agent sequence; raises :class:`IllegalStep` on the first bad pass."""
        idx = [m.index(a) for a in agents]
        if not idx:
            raise ValueError("empty agent sequence")
        cols = m.columns()
        colmax = [max(c) for c in cols]
        steps = []
        for i, (x, y) in enumerate(zip(idx, idx[1:])):
            _check_pass(cols, colmax, x, y, i, m.labels)
            steps.append(Step(x, y, cols[y][x] == colmax[y]))
            _increment(cols, colmax, y, x)
        return cls(idx[0], m, tuple(steps), truncated)


# -- policies ----------------------------------------------------------------
#
# Policies are only consulted when the holder has two or more blue cells;
# forced passes never consume randomness or script entries.


@dataclass(frozen=True)
class FirstByIndex:
    def chooser(self):
        return lambda options, step: options[0]


@dataclass(frozen=True)
class SeededRandom:
    seed: int

    def chooser(self):
        rng = np.random.default_rng(self.seed)
        return lambda options, step: options[int(rng.integers(len(options)))]


@dataclass(frozen=True)
class Scripted:
    """Replays a fixed list of receivers, one per choice point."""

    choices: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(self.choices))

    def chooser(self, m: PreferenceMatrix | None = None):
        queue = list(self.choices)

        def choose(options, step):
            if not queue:
                raise ScriptError("script exhausted at a choice point", step)
            want = queue.pop(0)
            if m is not None:
                want = m.index(want)
            if want not in options:
                raise ScriptError(f"scripted receiver {want!r} is not blue", step)
            return want

        return choose


Policy = FirstByIndex | SeededRandom | Scripted


# -- state helpers -------------------------------------------------------------


def _options(cols, colmax, x):
    top = colmax[x]
    return [y for y, v in enumerate(cols[x]) if v == top and y != x]


def _increment(cols, colmax, x, y):
    v = cols[x][y] + 1
    cols[x][y] = v
    if v > colmax[x]:
        colmax[x] = v


def _check_pass(cols, colmax, x, y, step, labels):
    if x == y:
        raise IllegalStep("self-pass forbidden", step)
    if cols[x][y] != colmax[x]:
        raise IllegalStep(f"illegal step: cell ({labels[x]},{labels[y]}) is not blue", step)


# -- public operations ---------------------------------------------------------


def stabilization_bound(m: PreferenceMatrix) -> int:
    """``N * (N - 1) * MAX + 1``: no game path needs more steps to stabilize."""
    return m.n * (m.n - 1) * m.max_value + 1


def apply_step(state: GameState, receiver: Agent) -> GameState:
    m = state.matrix
    y = m.index(receiver)
    x = state.holder
    if y == x:
        raise IllegalStep("self-pass forbidden")
    if not m.is_blue(x, y):
        raise IllegalStep(f"illegal step: cell ({m.label(x)},{m.label(y)}) is not blue")
    return GameState(y, m.incremented(y, x))


def play(
    start: Agent,
    m: PreferenceMatrix,
    policy: Policy | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Trace:
    """Play one game path.

    Stops after ``max_steps`` steps, or two steps past the first
    stability-phase step, whichever comes first.  ``truncated`` is set only
    when the stability phase was never reached.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    policy = policy or FirstByIndex()
    choose = policy.chooser(m) if isinstance(policy, Scripted) else policy.chooser()
    x = m.index(start)
    cols = m.columns()
    colmax = [max(c) for c in cols]
    steps: list[Step] = []
    stop = max_steps
    for i in range(max_steps):
        if i >= stop:
            break
        opts = _options(cols, colmax, x)
        y = opts[0] if len(opts) == 1 else choose(opts, i)
        twin_blue = cols[y][x] == colmax[y]
        steps.append(Step(x, y, twin_blue))
        _increment(cols, colmax, y, x)
        if twin_blue and stop == max_steps:
            stop = min(max_steps, i + 1 + TAIL_STEPS)
        x = y
    truncated = not any(s.twin_blue for s in steps)
    return Trace(m.index(start), m, tuple(steps), truncated)


def iter_branch_paths(
    start: int, m: PreferenceMatrix, max_steps: int
) -> Iterator[tuple[list[int], int | None]]:
    """Depth-first walk over every game path, in lexicographic receiver order.

    Yields ``(agents, boundary)`` per branch; ``boundary`` is ``None`` when the
    branch hit ``max_steps`` still in its erratic phase.  Stabilized branches
    include the two forced steps after the boundary.
    """
    cols = m.columns()
    colmax = [max(c) for c in cols]
    path = [start]
    stack = [iter(_options(cols, colmax, start))]
    while stack:
        x = path[-1]
        y = next(stack[-1], None)
        if y is None:
            stack.pop()
            if len(path) > 1:
                cols[x][path[-2]] -= 1
                path.pop()
            continue
        if cols[y][x] == colmax[y]:
            yield path + [y, x, y], len(path) - 1
            continue
        # erratic step: the twin stays at or below its column max, so colmax is fixed
        cols[y][x] += 1
        path.append(y)
        if len(path) - 1 >= max_steps:
            yield list(path), None
            path.pop()
            cols[y][x] -= 1
            continue
        stack.append(iter(_options(cols, colmax, y)))


def enumerate_branches(
    start: Agent,
    m: PreferenceMatrix,
    max_steps: int | None = None,
    cap: int = DEFAULT_BRANCH_CAP,
) -> list[Trace]:
    """All distinct game paths from ``start``, each cut just past stabilization.

    With ``max_steps`` at or above :func:`stabilization_bound` (the default)
    no branch is truncated, so the outcome list is complete.
    """
    if max_steps is None:
        max_steps = stabilization_bound(m)
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    out = []
    for agents, boundary in iter_branch_paths(m.index(start), m, max_steps):
        if len(out) >= cap:
            raise BranchExplosion(cap)
        out.append(Trace.from_agents(m, agents, truncated=boundary is None))
    return out


@dataclass(frozen=True)
class PathVerdict:
    valid: bool
    # position in the agent sequence of the first illegal receiver
    index: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.valid


def validate_path(m: PreferenceMatrix, agents: Sequence[Agent]) -> PathVerdict:
    if len(agents) < 1:
        raise ValueError("agent sequence must be non-empty")
    try:
        idx = [m.index(a) for a in agents]
    except ValueError as exc:
        bad = next(i for i, a in enumerate(agents) if a not in m.labels and not _is_index(m, a))
        return PathVerdict(False, bad, str(exc))
    try:
        Trace.from_agents(m, idx)
    except IllegalStep as exc:
        return PathVerdict(False, exc.step + 1, str(exc))
    return PathVerdict(True)


def _is_index(m, a):
    return isinstance(a, (int, np.integer)) and 0 <= a < m.n
