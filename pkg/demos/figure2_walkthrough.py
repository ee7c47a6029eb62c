"""Walk through the four-agent example: one forced game, then every branch."""

from givinggame import enumerate_branches, fixture, frame_of, play, stability_pairs_of_matrix
from givinggame.render import matrix_text, outcome


def main():
    m = fixture("figure2")
    print("initial matrix (B = blue, W = white):")
    print(matrix_text(m))

    # C has a single blue option at every step, so its game is forced
    for start in "CB":
        t = play(start, m)
        print(f"\nstart {start}: {t.path()}  ->  {outcome(t)}")

    print("\nevery branch from A:")
    for t in enumerate_branches("A", m):
        pair = ",".join(m.labels[a] for a in sorted(t.stability_pair))
        print(f"  {outcome(t):12s} settles on {{{pair}}}")

    f = frame_of(m)
    print("\nframe edges:", " ".join(f"{m.labels[x]}->{m.labels[y]}" for x, y in sorted(f.blue)))
    pairs = sorted("".join(m.labels[a] for a in sorted(p)) for p in stability_pairs_of_matrix(m))
    print("stability pairs over all starts:", pairs)


if __name__ == "__main__":
    main()
