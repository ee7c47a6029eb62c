"""Plain-text rendering of paths and colored matrices."""

from __future__ import annotations

from collections.abc import Sequence

from .engine import Trace
from .matrix import PreferenceMatrix


def _join(names: Sequence[str]) -> str:
    return ("" if all(len(s) == 1 for s in names) else " ").join(names)


def compress(names: Sequence[str]) -> str:
    """Run-length encode repeated blocks, e.g. ``ABCDABCDAB`` -> ``(ABCD)^2AB``."""
    names = list(names)
    out = []
    i = 0
    while i < len(names):
        best = (1, 1)  # (block length, repeats)
        for size in range(1, (len(names) - i) // 2 + 1):
            block = names[i : i + size]
            reps = 1
            while names[i + reps * size : i + (reps + 1) * size] == block:
                reps += 1
            if reps > 1 and size * reps > best[0] * best[1]:
                best = (size, reps)
        size, reps = best
        if reps > 1:
            out.append(f"({_join(names[i:i + size])})^{reps}")
        else:
            out.append(_join(names[i : i + 1]))
        i += size * reps
    return "".join(out) if all(len(s) == 1 for s in names) else " ".join(out)


def outcome(trace: Trace) -> str:
    """Infinite path as erratic prefix plus ``(XY)^ω`` tail, shortest spelling.

    The split point between prefix and alternating tail is not unique
    (``...ABC(DA)^ω`` equals ``...ABCD(AD)^ω``); both spellings are
    compressed and the shorter wins.
    """
    labels = trace.initial.labels
    b = trace.boundary
    if b is None:
        return compress([labels[a] for a in trace.agents]) + " ..."
    agents = list(trace.agents)
    prefix = agents[:b]
    x, y = agents[b], agents[b + 1]
    # roll alternating agents back out of the prefix as far as possible
    while prefix and prefix[-1] == y:
        prefix.pop()
        x, y = y, x

    def spell(pre, p, q):
        return compress([labels[a] for a in pre]) + f"({_join([labels[p], labels[q]])})^ω"

    options = [spell(prefix, x, y), spell(prefix + [x], y, x)]
    return min(options, key=lambda s: (len(s), s))


def matrix_text(m: PreferenceMatrix, holder: int | None = None) -> str:
    """Table with a ``B``/``W`` marker after each value; the holder's column
    header is wrapped in ``*``."""
    labels = m.labels
    mask = m.blue_mask()
    width = max(4, max(len(str(v)) for _, _, v in m.cells()) + 2, max(map(len, labels)) + 2)
    head = [" " * max(map(len, labels))]
    for c, s in enumerate(labels):
        head.append((f"*{s}*" if c == holder else s).rjust(width))
    lines = [" ".join(head).rstrip()]
    for r, s in enumerate(labels):
        row = [s.ljust(max(map(len, labels)))]
        for c in range(m.n):
            if r == c:
                row.append("-".rjust(width))
            else:
                mark = "B" if mask[r, c] else "W"
                row.append(f"{int(m.values[r, c])}{mark}".rjust(width))
        lines.append(" ".join(row))
    return "\n".join(lines)
