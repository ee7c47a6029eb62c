"""Decide turquoise pairs on a random matrix, then reduce a long game to normal form."""

import itertools

from givinggame import (
    PairKind,
    Trace,
    classify_pair,
    cycle_decomposition,
    decide_pair,
    reduce_to_normal_form,
)
from givinggame.generators import random_matrix
from givinggame.render import matrix_text, outcome


def main(seed=5):
    m = random_matrix(4, 3, seed)
    print(matrix_text(m))

    print("\npair decisions from start A:")
    for a, b in itertools.combinations(range(m.n), 2):
        kind = classify_pair(m, a, b).kind.name.lower()
        v = decide_pair(m, 0, (a, b))
        w = f"  witness {outcome(v.witness)}" if v.witness else ""
        print(f"  {m.labels[a]}{m.labels[b]} ({kind}): {v.answer}{w}")

    # a game that wanders through a detour before settling on {A,D}
    t = Trace.from_agents(m, list("DACBACBADAD"))
    nf = reduce_to_normal_form(m, t)
    dec = cycle_decomposition(nf)
    print("\ngame:       ", t.path())
    print("normal form:", nf.path())
    a, b = dec.pair_step
    runs = " ".join(f"({c.path(m.labels)})^{p}" for c, p in dec.cycles) or "none"
    print(f"pair step {m.labels[a]}->{m.labels[b]}, cycle runs: {runs}, closing: {dec.closing}")
    if classify_pair(m, a, b).kind is PairKind.TURQUOISE:
        print(f"pair steps {dec.pair_step_count} == gap {m.gap(b, a)}")


if __name__ == "__main__":
    main()
