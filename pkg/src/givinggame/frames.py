"""Value-free structure of a preference matrix.

The frame keeps only the colors: a directed graph with an edge ``x -> y``
for every blue cell ``(x, y)``.  Erratic play never changes it, so
reachability, equivalence classes (strongly connected components) and
elementary cycles computed here describe every erratic phase of the matrix.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import CycleExplosion
from .matrix import Agent, PreferenceMatrix, default_labels

DEFAULT_CYCLE_CAP = 1_000_000


@dataclass(frozen=True)
class Frame:
    n: int
    blue: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))
        for x, y in self.blue:
            if x == y or not (0 <= x < self.n and 0 <= y < self.n):
                raise ValueError(f"bad frame edge ({x}, {y})")

    def successors(self, x: int) -> list[int]:
        return [y for y in range(self.n) if (x, y) in self.blue]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in sorted(self.blue):
            adj[x].append(y)
        return adj

    def index(self, agent: Agent) -> int:
        if isinstance(agent, str):
            return self.labels.index(agent)
        return int(agent)


def frame_of(m: PreferenceMatrix) -> Frame:
    mask = m.blue_mask()
    blue = frozenset(
        (x, y) for x in range(m.n) for y in range(m.n) if x != y and mask[y, x]
    )
    return Frame(m.n, blue, m.labels)


def frame_successors(f: Frame, x: Agent) -> list[int]:
    return f.successors(f.index(x))


def reachable(f: Frame, a: Agent, b: Agent) -> bool:
    """Whether a blue-edge path leads from ``a`` to ``b``.  Reflexive."""
    a, b = f.index(a), f.index(b)
    return b in _reach_set(f.adjacency(), a)


def _reach_set(adj, a):
    seen = {a}
    todo = [a]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def elementary_path(f: Frame, a: Agent, b: Agent) -> list[int] | None:
    """A blue-edge path from ``a`` to ``b`` with no repeated agent, or ``None``.

    Breadth-first, so the path returned is a shortest one; ties resolve to
    the lowest agent index.
    """
    a, b = f.index(a), f.index(b)
    if a == b:
        return [a]
    adj = f.adjacency()
    parent = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in parent:
                continue
            parent[w] = v
            if w == b:
                path = [b]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


# -- strongly connected components ------------------------------------------------


def strongly_connected_components(
    adj: Sequence[Sequence[int]], vertices: Iterable[int] | None = None
) -> list[list[int]]:
    """Tarjan's algorithm, iterative; restricted to ``vertices`` when given.

    Components come out in reverse topological order of the condensation.
    """
    allowed = set(range(len(adj)) if vertices is None else vertices)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in sorted(allowed):
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            for w in it:
                if w not in allowed:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class EquivalenceClasses:
    """Mutual-reachability classes and the acyclic reachability between them.

    ``classes`` are sorted by smallest member; ``edges`` holds ``(i, j)``
    class indices whenever some blue edge leads from class ``i`` to class ``j``.
    """

    classes: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]
    class_of: tuple[int, ...]

    def members(self, agent: int) -> tuple[int, ...]:
        return self.classes[self.class_of[agent]]

    def is_acyclic(self) -> bool:
        k = len(self.classes)
        adj = [[j for (i, j) in sorted(self.edges) if i == c] for c in range(k)]
        return all(len(c) == 1 for c in strongly_connected_components(adj)) and not any(
            i == j for i, j in self.edges
        )


def equivalence_classes(f: Frame) -> EquivalenceClasses:
    adj = f.adjacency()
    comps = sorted(strongly_connected_components(adj))
    class_of = [0] * f.n
    for ci, comp in enumerate(comps):
        for v in comp:
            class_of[v] = ci
    edges = frozenset(
        (class_of[x], class_of[y]) for x, y in f.blue if class_of[x] != class_of[y]
    )
    return EquivalenceClasses(tuple(tuple(c) for c in comps), edges, tuple(class_of))


# -- elementary cycles ------------------------------------------------------------


@dataclass(frozen=True)
class ElementaryCycle:
    """A closed frame path ``agents[0] -> agents[1] -> ... -> agents[0]``.

    ``twin_gaps[i]`` is the gap of the twin of step ``i`` in the matrix the
    cycle was annotated against; ``order`` is their minimum and ``poles``
    lists every step achieving it.
    """

    agents: tuple[int, ...]
    twin_gaps: tuple[int, ...]
    order: int
    poles: tuple[tuple[int, int], ...]

    @property
    def steps(self) -> list[tuple[int, int]]:
        a = self.agents
        return [(a[i], a[(i + 1) % len(a)]) for i in range(len(a))]

    def __len__(self):
        return len(self.agents)

    def rotated(self, start: int) -> ElementaryCycle:
        k = self.agents.index(start)
        return ElementaryCycle(
            self.agents[k:] + self.agents[:k],
            self.twin_gaps[k:] + self.twin_gaps[:k],
            self.order,
            self.poles,
        )

    def canonical(self) -> ElementaryCycle:
        return self.rotated(min(self.agents))

    def path(self, labels: Sequence[str]) -> str:
        names = [labels[a] for a in self.agents + self.agents[:1]]
        return ("" if all(len(s) == 1 for s in names) else " ").join(names)


def annotate_cycle(m: PreferenceMatrix, agents: Sequence[int]) -> ElementaryCycle:
    agents = tuple(agents)
    k = len(agents)
    gaps = tuple(m.gap(agents[(i + 1) % k], agents[i]) for i in range(k))
    order = min(gaps)
    poles = tuple(
        (agents[i], agents[(i + 1) % k]) for i in range(k) if gaps[i] == order
    )
    return ElementaryCycle(agents, gaps, order, poles)


def _johnson(adj: Sequence[Sequence[int]], cap: int) -> list[tuple[int, ...]]:
    # Johnson's circuit search; each circuit is emitted starting at its least vertex
    n = len(adj)
    found: list[tuple[int, ...]] = []
    for s in range(n):
        comp = next(
            (c for c in strongly_connected_components(adj, range(s, n)) if s in c), [s]
        )
        if len(comp) < 2:
            continue
        members = set(comp)
        sub = {v: [w for w in adj[v] if w in members] for v in comp}
        blocked: set[int] = set()
        blist: dict[int, set[int]] = {v: set() for v in comp}
        path = [s]
        blocked.add(s)
        closed = [False]
        work = [iter(sub[s])]
        while work:
            v = path[-1]
            w = next(work[-1], None)
            if w is None:
                work.pop()
                if closed[-1]:
                    _unblock(v, blocked, blist)
                else:
                    for u in sub[v]:
                        blist[u].add(v)
                path.pop()
                done = closed.pop()
                if closed and done:
                    closed[-1] = True
                continue
            if w == s:
                found.append(tuple(path))
                if len(found) > cap:
                    raise CycleExplosion(cap)
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                blocked.add(w)
                closed.append(False)
                work.append(iter(sub[w]))
    return found


def _unblock(v, blocked, blist):
    todo = [v]
    while todo:
        u = todo.pop()
        if u in blocked:
            blocked.discard(u)
            todo.extend(blist[u])
            blist[u].clear()


def _require_frame(f: Frame, m: PreferenceMatrix):
    if f.n != m.n or f.blue != frame_of(m).blue:
        raise ValueError("frame does not belong to this matrix")


def elementary_cycles(
    f: Frame | None, m: PreferenceMatrix, cap: int = DEFAULT_CYCLE_CAP
) -> list[ElementaryCycle]:
    """Every elementary cycle of the frame, annotated with twin gaps from ``m``.

    Each cycle starts at its least agent; the list is sorted by agent tuple.
    """
    if f is None:
        f = frame_of(m)
    else:
        _require_frame(f, m)
    return [annotate_cycle(m, c) for c in sorted(_johnson(f.adjacency(), cap))]


def elementary_cycles_through(
    f: Frame | None,
    m: PreferenceMatrix,
    a: Agent,
    b: Agent,
    cap: int = DEFAULT_CYCLE_CAP,
) -> list[ElementaryCycle]:
    """Elementary cycles whose first step is ``a -> b``, rotated to start at ``a``."""
    if f is None:
        f = frame_of(m)
    else:
        _require_frame(f, m)
    a, b = m.index(a), m.index(b)
    if (a, b) not in f.blue:
        raise ValueError("not a frame edge")
    adj = f.adjacency()
    # prune to agents that can still get back to a
    radj: list[list[int]] = [[] for _ in range(f.n)]
    for x, y in f.blue:
        radj[y].append(x)
    back = _reach_set(radj, a)
    out: list[tuple[int, ...]] = []
    if b == a:
        return []
    path = [a, b]
    on_path = {a, b}
    work = [iter(adj[b])]
    while work:
        w = next(work[-1], None)
        if w is None:
            work.pop()
            on_path.discard(path.pop())
            continue
        if w == a:
            out.append(tuple(path))
            if len(out) > cap:
                raise CycleExplosion(cap)
        elif w not in on_path and w in back:
            path.append(w)
            on_path.add(w)
            work.append(iter(adj[w]))
    return [annotate_cycle(m, c) for c in sorted(out)]


def gap(m: PreferenceMatrix, x: Agent, y: Agent) -> int:
    return m.gap(x, y)


def pole_position_pairs(
    m: PreferenceMatrix, cap: int = DEFAULT_CYCLE_CAP
) -> set[frozenset[int]]:
    """Pairs that hold the minimal twin gap in at least one elementary cycle."""
    pairs = set()
    for cyc in elementary_cycles(None, m, cap):
        for x, y in cyc.poles:
            pairs.add(frozenset((x, y)))
    return pairs


# -- DOT export -------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def frame_to_dot(f: Frame, name: str = "frame") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(f.n):
        lines.append(f"  {_q(f.labels[v])};")
    for x, y in sorted(f.blue):
        lines.append(f"  {_q(f.labels[x])} -> {_q(f.labels[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def condensation_to_dot(
    classes: EquivalenceClasses, labels: Sequence[str], name: str = "classes"
) -> str:
    lines = [f"digraph {name} {{"]
    for i, members in enumerate(classes.classes):
        text = "{" + ",".join(labels[v] for v in members) + "}"
        lines.append(f"  c{i} [label={_q(text)}];")
    for i, j in sorted(classes.edges):
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
