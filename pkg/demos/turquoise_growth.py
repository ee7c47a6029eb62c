"""Cycle counts in the turquoise tournament family roughly double per agent."""

import time

from givinggame import TurquoiseFamily, elementary_cycles, generate


def main():
    prev = None
    for k in range(4, 12):
        t0 = time.perf_counter()
        count = len(elementary_cycles(None, generate(TurquoiseFamily(k))))
        dt = time.perf_counter() - t0
        ratio = f"{count / prev:5.2f}" if prev else "  -  "
        print(f"k={k:2d}  cycles={count:5d}  ratio={ratio}  {dt * 1e3:7.1f} ms")
        prev = count


if __name__ == "__main__":
    main()
