#!/usr/bin/env python3
"""Run the whole property battery over the built-in catalog and print the
verdict matrix.

Symplectic spaces (the W family and the even-q parabolic quadrics) satisfy
all of (A), (B), (C), (D); every other space fails at least one, each in
its own characteristic way: the elliptic quadric keeps (B) but loses (A),
grids keep (A) but lose (B), and the two non-embeddable quadrangles lose
(A) through their size-2 hyperbolic lines.
"""

from polarium import CATALOG, build_space, full_report

COLS = ["A", "B_triads", "B_prime", "C", "D", "regular_pairs", "symplectic"]


def main():
    rows = []
    for name in CATALOG:
        space = build_space(name)
        report = full_report(space)
        rows.append((name, space, report))

    width = max(len(n) for n, _, _ in rows) + 2
    print("space".ljust(width) + "pts".rjust(5) + "lines".rjust(7) + "rk".rjust(4)
          + "   " + "  ".join(c.ljust(13) for c in COLS))
    for name, space, report in rows:
        cells = "  ".join(report.verdicts[c].status.ljust(13) for c in COLS)
        print(name.ljust(width) + str(space.n_points).rjust(5)
              + str(len(space.lines)).rjust(7) + str(space.rank).rjust(4)
              + "   " + cells)

    print()
    print("Every failing verdict carries a replayable witness, e.g.:")
    qminus = next(r for n, _, r in rows if n == "Q-(5,2)")
    print("  Q-(5,2) property (A):", qminus.verdicts["A"].witness)


if __name__ == "__main__":
    main()
