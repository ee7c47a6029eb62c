import itertools

import numpy as np
import pytest

from givinggame import (
    Frame,
    PreferenceMatrix,
    elementary_cycles,
    elementary_cycles_through,
    elementary_path,
    equivalence_classes,
    frame_of,
    frame_successors,
    gap,
    pole_position_pairs,
    reachable,
)
from givinggame.errors import CycleExplosion
from givinggame.frames import condensation_to_dot, frame_to_dot, strongly_connected_components

import oracles

A, B, C, D = range(4)


def test_frame_of(fig2, fig6a):
    assert frame_of(fig2).blue == {(A, B), (A, D), (B, C), (C, D), (D, C)}
    assert frame_of(fig6a).blue == {(A, B), (B, C), (C, D), (D, A)}
    z = frame_of(PreferenceMatrix.zeros(3))
    assert z.blue == {(x, y) for x in range(3) for y in range(3) if x != y}


def test_frame_matches_oracle(fig2, fig6a):
    for m in (fig2, fig6a):
        assert frame_of(m).blue == oracles.blue_edges(m.values)


def test_frame_successors(fig2, fig6a):
    assert frame_successors(frame_of(fig2), "A") == [B, D]
    assert frame_successors(frame_of(fig6a), "B") == [C]
    assert frame_successors(frame_of(PreferenceMatrix.zeros(2)), "A") == [B]


def test_reachable(fig2, fig6a):
    f = frame_of(fig2)
    assert reachable(f, "A", "C")
    assert not reachable(f, "C", "A")
    assert reachable(f, "B", "B")
    g = frame_of(fig6a)
    assert all(reachable(g, x, y) for x in range(4) for y in range(4))


def test_equivalence_classes(fig2, fig6a):
    eq = equivalence_classes(frame_of(fig2))
    assert eq.classes == ((A,), (B,), (C, D))
    assert eq.edges == {(0, 1), (0, 2), (1, 2)}
    assert eq.is_acyclic()
    eq6 = equivalence_classes(frame_of(fig6a))
    assert eq6.classes == ((A, B, C, D),) and not eq6.edges
    assert equivalence_classes(frame_of(PreferenceMatrix.zeros(2))).classes == ((A, B),)


def test_elementary_path(fig2, fig6a):
    p = elementary_path(frame_of(fig2), "A", "C")
    assert p in ([A, B, C], [A, D, C])
    assert elementary_path(frame_of(fig6a), "A", "D") == [A, B, C, D]
    assert elementary_path(frame_of(fig2), "C", "A") is None
    assert elementary_path(frame_of(fig2), "B", "B") == [B]


def test_cycles_figure6a(fig6a):
    [cyc] = elementary_cycles(frame_of(fig6a), fig6a)
    assert cyc.agents == (A, B, C, D)
    assert cyc.twin_gaps == (5, 5, 8, 3)
    assert cyc.order == 3
    assert cyc.poles == ((D, A),)
    assert cyc.path(fig6a.labels) == "ABCDA"


def test_cycles_figure2(fig2):
    [cyc] = elementary_cycles(None, fig2)
    assert cyc.agents == (C, D) and cyc.order == 0


def test_cycles_trivial3():
    got = [c.agents for c in elementary_cycles(None, PreferenceMatrix.zeros(3))]
    # oracle: permutations of the complete digraph on 3 vertices
    assert got == [(0, 1), (0, 1, 2), (0, 2), (0, 2, 1), (1, 2)]


def test_cycles_reject_foreign_frame(fig2, fig6a):
    with pytest.raises(ValueError):
        elementary_cycles(frame_of(fig2), fig6a)


def test_cycle_cap():
    with pytest.raises(CycleExplosion, match="cycle explosion"):
        elementary_cycles(None, PreferenceMatrix.zeros(5), cap=10)


def test_cycles_through(fig2, fig6a):
    [c] = elementary_cycles_through(None, fig6a, "A", "B")
    assert c.path(fig6a.labels) == "ABCDA"
    [c] = elementary_cycles_through(None, fig6a, "D", "A")
    assert c.agents == (D, A, B, C) and c.twin_gaps == (3, 5, 5, 8)
    assert elementary_cycles_through(None, fig2, "A", "B") == []
    [c] = elementary_cycles_through(None, PreferenceMatrix.zeros(2), "A", "B")
    assert c.agents == (A, B)
    with pytest.raises(ValueError, match="not a frame edge"):
        elementary_cycles_through(None, fig2, "A", "C")


def test_cycles_through_agrees_with_filtered_list():
    m = PreferenceMatrix.zeros(5)
    every = elementary_cycles(None, m)
    for a, b in itertools.permutations(range(5), 2):
        want = sorted(c.rotated(a).agents for c in every if (a, b) in c.steps)
        assert [c.agents for c in elementary_cycles_through(None, m, a, b)] == want


def test_gap(fig2, fig6a):
    assert gap(fig2, "B", "A") == 1
    assert gap(fig6a, "D", "C") == 8
    assert gap(fig2, "C", "D") == 0


def test_pole_position_pairs(fig2, fig6a):
    assert pole_position_pairs(fig6a) == {frozenset((A, D))}
    assert pole_position_pairs(fig2) == {frozenset((C, D))}
    z = PreferenceMatrix.zeros(4)
    assert pole_position_pairs(z) == {frozenset(p) for p in itertools.combinations(range(4), 2)}


@pytest.mark.parametrize("seed", range(40))
def test_random_digraph_against_oracles(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7))
    edges = {(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < 0.4}
    adj = [[y for y in range(n) if (x, y) in edges] for x in range(n)]
    from givinggame.frames import _johnson

    assert sorted(_johnson(adj, 10**6)) == oracles.simple_cycles(n, edges)
    assert sorted(tuple(c) for c in strongly_connected_components(adj)) == oracles.components(n, edges)


def test_dot_export_is_stable(fig2):
    f = frame_of(fig2)
    dot = frame_to_dot(f)
    assert dot == frame_to_dot(frame_of(PreferenceMatrix(fig2.to_rows())))
    assert dot.splitlines()[1:5] == ['  "A";', '  "B";', '  "C";', '  "D";']
    assert '  "A" -> "B";' in dot
    cdot = condensation_to_dot(equivalence_classes(f), fig2.labels)
    assert 'c2 [label="{C,D}"];' in cdot and "c0 -> c1;" in cdot


def test_frame_validates_edges():
    with pytest.raises(ValueError):
        Frame(2, frozenset({(0, 0)}))
