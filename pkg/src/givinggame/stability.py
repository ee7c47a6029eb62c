"""Erratic/stability phases, pair classification and the stability-pair decision.

Everything here is exact: stability pairs are found by exhaustive search,
which terminates because no branch stays erratic for more than
:func:`stabilization_bound` steps.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .engine import (
    DEFAULT_BRANCH_CAP,
    Step,
    Trace,
    _options,
    iter_branch_paths,
    stabilization_bound,
)
from .errors import BranchExplosion, GivingGameError, StabilityNotReached
from .frames import ElementaryCycle, annotate_cycle, frame_of
from .matrix import Agent, PreferenceMatrix

__all__ = [
    "stabilization_bound",
    "PhaseSplit",
    "split_phases",
    "PairKind",
    "PairClass",
    "classify_pair",
    "stability_pairs_of_game",
    "stability_pairs_of_matrix",
    "StabilityVerdict",
    "decide_pair",
    "decide_turquoise_pair",
    "reduce_to_normal_form",
    "CycleDecomposition",
    "cycle_decomposition",
    "check_power_conditions",
    "DecompositionError",
]


class DecompositionError(GivingGameError):
    """A normal form whose erratic phase is not a chain of elementary cycles."""


# -- phases ------------------------------------------------------------------------


@dataclass(frozen=True)
class PhaseSplit:
    erratic: tuple[Step, ...]
    boundary: int
    pair: frozenset[int]


def split_phases(t: Trace) -> PhaseSplit:
    b = t.boundary
    if b is None:
        raise StabilityNotReached()
    s = t.steps[b]
    return PhaseSplit(t.steps[:b], b, frozenset((s.submitter, s.receiver)))


# -- pair classes ------------------------------------------------------------------


class PairKind(enum.Enum):
    BLUE = "blue"
    TURQUOISE = "turquoise"
    WHITE = "white"


@dataclass(frozen=True)
class PairClass:
    kind: PairKind
    # for turquoise pairs: the (submitter, receiver) cell that is blue
    blue_cell: tuple[int, int] | None = None


def classify_pair(m: PreferenceMatrix, a: Agent, b: Agent) -> PairClass:
    a, b = m.index(a), m.index(b)
    if a == b:
        raise ValueError("a pair needs two distinct agents")
    ab, ba = m.is_blue(a, b), m.is_blue(b, a)
    if ab and ba:
        return PairClass(PairKind.BLUE)
    if ab:
        return PairClass(PairKind.TURQUOISE, (a, b))
    if ba:
        return PairClass(PairKind.TURQUOISE, (b, a))
    return PairClass(PairKind.WHITE)


def _pair(m: PreferenceMatrix, pair) -> tuple[int, int]:
    a, b = pair
    return m.index(a), m.index(b)


# -- stability pairs by enumeration -----------------------------------------------


def stability_pairs_of_game(
    m: PreferenceMatrix, start: Agent, cap: int = DEFAULT_BRANCH_CAP
) -> set[frozenset[int]]:
    """Pairs some game path from ``start`` eventually alternates between."""
    pairs = set()
    for count, (agents, boundary) in enumerate(
        iter_branch_paths(m.index(start), m, stabilization_bound(m)), 1
    ):
        if count > cap:
            raise BranchExplosion(cap)
        if boundary is None:
            raise StabilityNotReached("branch still erratic at the stabilization bound")
        pairs.add(frozenset(agents[boundary : boundary + 2]))
    return pairs


def stability_pairs_of_matrix(
    m: PreferenceMatrix, cap: int = DEFAULT_BRANCH_CAP
) -> set[frozenset[int]]:
    out = set()
    for s in range(m.n):
        out |= stability_pairs_of_game(m, s, cap)
    return out


# -- decision ----------------------------------------------------------------------


@dataclass(frozen=True)
class StabilityVerdict:
    pair: frozenset[int]
    answer: str  # "yes", "no" or "unknown"
    witness: Trace | None = None
    # exhaustive-search summary
    states: int = 0
    max_depth: int = 0
    reason: str = ""

    def __bool__(self):
        return self.answer == "yes"


def _search(m: PreferenceMatrix, start: int, goal, state_cap: int):
    """Depth-first search of erratic states with memoisation.

    ``goal(cols, holder)`` is tested on every erratic state.  Returns
    ``(path or None, states_seen, max_depth, exhausted)``.
    """
    cols = m.columns()
    colmax = [max(c) for c in cols]
    bound = stabilization_bound(m)
    seen = set()
    path = [start]
    max_depth = 0

    def key(x):
        return (x, tuple(v for col in cols for v in col))

    if goal(cols, start):
        return path, 1, 0, True
    seen.add(key(start))
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
            continue  # stability step: leaves the erratic phase
        cols[y][x] += 1
        path.append(y)
        k = key(y)
        if k in seen or len(path) - 1 > bound:
            cols[y][x] -= 1
            path.pop()
            continue
        seen.add(k)
        max_depth = max(max_depth, len(path) - 1)
        if goal(cols, y):
            return list(path), len(seen), max_depth, True
        if len(seen) >= state_cap:
            return None, len(seen), max_depth, False
        stack.append(iter(_options(cols, colmax, y)))
    return None, len(seen), max_depth, True


def _verdict(m, pair, found, states, depth, complete, tail, reason=""):
    if found is not None:
        witness = Trace.from_agents(m, found + tail(found[-1]))
        return StabilityVerdict(pair, "yes", witness, states, depth, reason)
    if not complete:
        return StabilityVerdict(pair, "unknown", None, states, depth, "search cap reached")
    return StabilityVerdict(pair, "no", None, states, depth, reason)


def decide_turquoise_pair(
    m: PreferenceMatrix, start: Agent, pair, cap: int = DEFAULT_BRANCH_CAP
) -> StabilityVerdict:
    """Decide whether a turquoise pair is a stability pair of ``(start, m)``.

    The pair stabilizes iff some erratic path selects the blue cell ``(a, b)``
    often enough to close the gap of its twin ``(b, a)``; at that moment ``b``
    holds the token and may pass straight back.
    """
    a, b = _pair(m, pair)
    cls = classify_pair(m, a, b)
    if cls.kind is not PairKind.TURQUOISE:
        raise ValueError(f"pair is {cls.kind.value}, not turquoise")
    a, b = cls.blue_cell
    target = m.column_max(b)

    def goal(cols, holder):
        return cols[b][a] == target

    found, states, depth, complete = _search(m, m.index(start), goal, cap)
    return _verdict(
        m, frozenset((a, b)), found, states, depth, complete,
        lambda last: [a, b, a],
    )


def decide_pair(
    m: PreferenceMatrix, start: Agent, pair, cap: int = DEFAULT_BRANCH_CAP
) -> StabilityVerdict:
    """Decide any pair: white pairs never stabilize, blue pairs need to be
    reached during the erratic phase, turquoise pairs need their gap closed."""
    a, b = _pair(m, pair)
    cls = classify_pair(m, a, b)
    p = frozenset((a, b))
    if cls.kind is PairKind.WHITE:
        return StabilityVerdict(p, "no", reason="white pair")
    if cls.kind is PairKind.TURQUOISE:
        return decide_turquoise_pair(m, start, (a, b), cap)

    def goal(cols, holder):
        return holder in (a, b)

    def tail(last):
        other = b if last == a else a
        return [other, last, other]

    found, states, depth, complete = _search(m, m.index(start), goal, cap)
    return _verdict(m, p, found, states, depth, complete, tail, "blue pair")


# -- reduction ---------------------------------------------------------------------


def _orientation(m: PreferenceMatrix, t: Trace) -> tuple[int, int]:
    """The pair step ``a -> b`` that normal forms start with."""
    split = split_phases(t)
    x, y = sorted(split.pair)
    cls = classify_pair(m, x, y)
    if cls.kind is PairKind.TURQUOISE:
        return cls.blue_cell
    s = t.steps[split.boundary]
    return s.submitter, s.receiver


def _pair_positions(agents, a, b):
    return [i for i in range(len(agents) - 1) if agents[i] == a and agents[i + 1] == b]


def reduce_to_normal_form(m: PreferenceMatrix, t: Trace) -> Trace:
    """Cut the path down to its normal form for its stability pair.

    First drop everything before the first ``a -> b`` step, then keep
    deleting the leftmost innermost repeated-agent loop found between two
    consecutive ``a -> b`` steps.  The result is replayed, so an invalid
    reduction raises instead of returning a bogus trace.
    """
    if t.initial != m:
        raise ValueError("trace was recorded on a different matrix")
    a, b = _orientation(m, t)
    agents = list(t.agents)
    agents = agents[_pair_positions(agents, a, b)[0] :]
    while True:
        pos = _pair_positions(agents, a, b)
        cut = None
        for i, j in zip(pos, pos[1:]):
            seen: dict[int, int] = {}
            for p in range(i + 1, j + 1):
                if agents[p] in seen:
                    cut = (seen[agents[p]], p)
                    break
                seen[agents[p]] = p
            if cut:
                break
        if cut is None:
            break
        del agents[cut[0] : cut[1]]
    return Trace.from_agents(m, agents)


@dataclass(frozen=True)
class CycleDecomposition:
    """Erratic phase of a normal form as runs of elementary cycles.

    ``cycles`` lists ``(cycle, power)`` runs in path order, each cycle starting
    with ``pair_step``.  When the erratic phase ends with a bare pair step
    (answered by the reverse step as the first stability move) ``closing``
    is set; that step counts toward the gap but is not a cycle of the frame.
    """

    pair_step: tuple[int, int]
    cycles: tuple[tuple[ElementaryCycle, int], ...] = field(default_factory=tuple)
    closing: bool = False

    @property
    def pair_step_count(self) -> int:
        return sum(p for _, p in self.cycles) + int(self.closing)

    def distinct_cycles(self) -> set[tuple[int, ...]]:
        return {c.agents for c, _ in self.cycles}


def cycle_decomposition(t: Trace, pair=None) -> CycleDecomposition:
    m = t.initial
    split = split_phases(t)
    a, b = _orientation(m, t)
    if pair is not None and frozenset(_pair(m, pair)) != split.pair:
        raise ValueError("trace does not stabilize at the requested pair")
    agents = t.agents
    n = split.boundary
    pos = [i for i in _pair_positions(agents, a, b) if i < n]
    closing = False
    if n > 0:
        if not pos or pos[0] != 0:
            raise DecompositionError("normal form must start with the pair step")
        if t.steps[n].submitter == a:
            pos.append(n)
        elif pos[-1] == n - 1:
            closing = True
        else:
            raise DecompositionError("erratic phase does not end with the pair step")
    frame = frame_of(m)
    runs: list[list] = []
    for i, j in zip(pos, pos[1:]):
        seg = agents[i:j]
        if len(set(seg)) != len(seg) or agents[j] != a:
            raise DecompositionError(f"segment {seg} is not an elementary cycle")
        for k in range(len(seg)):
            step = (seg[k], seg[(k + 1) % len(seg)])
            if step not in frame.blue:
                raise DecompositionError(f"step {step} is not a frame edge")
        cyc = annotate_cycle(m, seg)
        if runs and runs[-1][0].agents == cyc.agents:
            runs[-1][1] += 1
        else:
            runs.append([cyc, 1])
    return CycleDecomposition((a, b), tuple((c, p) for c, p in runs), closing)


def check_power_conditions(
    m: PreferenceMatrix,
    pair: Sequence[Agent],
    cycles: Iterable[tuple[ElementaryCycle, int]],
) -> bool:
    """Screen a choice of cycle powers for the pair step ``pair[0] -> pair[1]``.

    True iff the pair step occurs exactly as often as the gap of its twin and
    no other step occurs more often than the gap of its own twin.  Necessary,
    not sufficient: running one cycle can shrink the gaps of another.
    """
    a, b = _pair(m, pair)
    counts: Counter = Counter()
    for cyc, power in cycles:
        if cyc.steps[0] != (a, b):
            raise ValueError("every cycle must start with the pair step")
        for step in cyc.steps:
            counts[step] += power
    if counts[(a, b)] != m.gap(b, a):
        return False
    return all(c <= m.gap(y, x) for (x, y), c in counts.items() if (x, y) != (a, b))
