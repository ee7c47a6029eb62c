import itertools

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from givinggame import (
    PairKind,
    PreferenceMatrix,
    SeededRandom,
    Trace,
    classify_pair,
    cycle_decomposition,
    decide_turquoise_pair,
    enumerate_branches,
    equivalence_classes,
    frame_of,
    gap,
    play,
    reduce_to_normal_form,
    split_phases,
    stability_pairs_of_game,
    stabilization_bound,
    validate_path,
)
from givinggame.io import dumps_matrix, dumps_trace, loads_matrix, loads_trace

import oracles


@st.composite
def matrices(draw, max_n=5, max_value=4):
    n = draw(st.integers(2, max_n))
    top = draw(st.integers(0, max_value))
    vals = draw(
        st.lists(st.lists(st.integers(0, top), min_size=n, max_size=n), min_size=n, max_size=n)
    )
    return PreferenceMatrix(vals)


games = st.tuples(matrices(), st.integers(0, 2**32 - 1))


@given(games, st.integers(1, 40))
def test_monotone_single_increment(game, k):
    m, seed = game
    t = play(0, m, SeededRandom(seed), max_steps=k)
    cur = m
    for s in t.steps:
        nxt = cur.incremented(s.receiver, s.submitter)
        diff = nxt.values.astype(np.int64) - cur.values.astype(np.int64)
        assert diff.sum() == 1 and diff.max() == 1 and diff.min() == 0
        cur = nxt
    assert cur.total() == m.total() + len(t)


@given(games)
def test_never_deadlocks(game):
    m, seed = game
    t = play(0, m, SeededRandom(seed), max_steps=30)
    cur = m
    for s in t.steps:
        assert cur.blue_successors(s.submitter)
        cur = cur.incremented(s.receiver, s.submitter)
    assert cur.blue_successors(t.agents[-1])


@given(games)
def test_blue_pair_lock(game):
    m, seed = game
    t = play(int(seed % m.n), m, SeededRandom(seed), max_steps=200)
    b = t.boundary
    x, y = t.agents[b], t.agents[b + 1]
    assert all({p, q} == {x, y} for p, q in zip(t.agents[b:], t.agents[b + 1 :]))
    # keep playing well past the end of the trace: every move stays forced
    cur = m
    for s in t.steps:
        cur = cur.incremented(s.receiver, s.submitter)
    holder = t.agents[-1]
    for _ in range(20):
        [nxt] = cur.blue_successors(holder)
        assert {holder, nxt} == {x, y}
        cur = cur.incremented(nxt, holder)
        holder = nxt


@given(games)
def test_replay_determinism(game):
    m, seed = game
    assert play(0, m, SeededRandom(seed)) == play(0, m, SeededRandom(seed))


@given(matrices(), st.integers(0, 4), st.integers(0, 10))
def test_argmax_invariance(m, col, c):
    col %= m.n
    vals = m.values.astype(np.int64)
    vals[:, col] += c
    np.fill_diagonal(vals, 0)
    shifted = PreferenceMatrix(vals)
    assert all(shifted.blue_successors(x) == m.blue_successors(x) for x in range(m.n))


@given(matrices(max_n=4, max_value=3))
@settings(max_examples=60)
def test_white_pair_exclusion(m):
    white = [
        (a, b) for a, b in itertools.permutations(range(m.n), 2)
        if classify_pair(m, a, b).kind is PairKind.WHITE
    ]
    for s in range(m.n):
        for t in enumerate_branches(s, m):
            path = t.agents
            for a, b in white:
                assert not any(path[i : i + 3] == (a, b, a) for i in range(len(path) - 2))


@given(games)
def test_erratic_phase_is_frame_path(game):
    m, seed = game
    t = play(0, m, SeededRandom(seed))
    f = frame_of(m)
    assert all((s.submitter, s.receiver) in f.blue for s in split_phases(t).erratic)


@given(matrices())
def test_gap_color_coherence(m):
    for x, y in itertools.permutations(range(m.n), 2):
        assert (gap(m, x, y) == 0) == m.is_blue(x, y)


@given(matrices(max_n=6))
def test_scc_soundness(m):
    f = frame_of(m)
    eq = equivalence_classes(f)
    r = oracles.closure(m.n, f.blue)
    for x, y in itertools.product(range(m.n), repeat=2):
        assert (eq.class_of[x] == eq.class_of[y]) == bool(r[x, y] and r[y, x])
    assert eq.is_acyclic()


@given(matrices(max_n=6), st.data())
def test_frame_path_concatenation(m, data):
    f = frame_of(m)

    def walk(start, k):
        p = [start]
        for _ in range(k):
            p.append(data.draw(st.sampled_from(f.successors(p[-1]))))
        return p

    p1 = walk(data.draw(st.integers(0, m.n - 1)), data.draw(st.integers(0, 6)))
    p2 = walk(p1[-1], data.draw(st.integers(0, 6)))
    joined = p1 + p2[1:]
    assert all((x, y) in f.blue for x, y in zip(joined, joined[1:]))


@given(matrices(max_n=4, max_value=3))
@settings(max_examples=60, deadline=None)
def test_stability_pairs_match_oracle(m):
    for s in range(m.n):
        assert stability_pairs_of_game(m, s) == oracles.stability_pairs(m.values, s)


@given(matrices(max_n=5, max_value=3))
@settings(max_examples=60, deadline=None)
def test_stabilizes_within_bound(m):
    bound = stabilization_bound(m)
    for s in range(m.n):
        assert all(not t.truncated and t.boundary < bound for t in enumerate_branches(s, m, bound))


@given(games)
@settings(deadline=None)
def test_reduction_soundness(game):
    m, seed = game
    t = play(int(seed % m.n), m, SeededRandom(seed))
    nf = reduce_to_normal_form(m, t)
    assert validate_path(m, nf.agents)
    assert split_phases(nf).pair == split_phases(t).pair
    assert reduce_to_normal_form(m, nf) == nf
    dec = cycle_decomposition(nf)
    a, b = dec.pair_step
    assert nf.agents[:2] == (a, b)
    if classify_pair(m, a, b).kind is PairKind.TURQUOISE:
        assert dec.pair_step_count == m.gap(b, a)


@given(matrices(max_n=4, max_value=3), st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_decision_consistency(m, start):
    start %= m.n
    pairs = stability_pairs_of_game(m, start)
    for a, b in itertools.combinations(range(m.n), 2):
        if classify_pair(m, a, b).kind is PairKind.TURQUOISE:
            v = decide_turquoise_pair(m, start, (a, b))
            assert (v.answer == "yes") == (frozenset((a, b)) in pairs)


@given(games)
def test_json_roundtrip(game):
    m, seed = game
    assert loads_matrix(dumps_matrix(m)) == m
    t = play(0, m, SeededRandom(seed))
    assert loads_trace(dumps_trace(t), m) == t
