"""A single frame cycle that is run a fixed number of times before a pair locks in."""

from givinggame import elementary_cycles, enumerate_branches, fixture, frame_of
from givinggame.render import outcome


def main():
    m = fixture("figure6a")
    for c in elementary_cycles(frame_of(m), m):
        print(f"cycle {c.path(m.labels)}: twin gaps {c.twin_gaps}, order {c.order}")
        print("  pole cells:", [m.labels[x] + m.labels[y] for x, y in c.poles])

    # after three laps the (A,D) cell reaches its column max, so D may hand back to A
    for t in enumerate_branches("A", m):
        print(f"branch {outcome(t)}  (boundary after {t.boundary} steps)")


if __name__ == "__main__":
    main()
