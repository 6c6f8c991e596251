#!/usr/bin/env python3
"""The nucleus story in characteristic 2.

The parabolic quadric Q(4,2) sits naturally in PG(4,2), but the
polarization of its quadratic form has a one-dimensional radical (the
nucleus).  Projecting away the nucleus drops the embedding to dimension 4
and fills the whole of PG(3,2): the minimal embedding is symplectic.
Running the construction backwards, the universal embedding of W(3,2)
lifts the quadrangle onto Q(4,2) by the square-root section, and its
nucleus quotient recovers the natural embedding point-for-point.
"""

from polarium import build_space
from polarium.embed import (minimal_embedding, natural_embedding,
                            quotient_embedding, universal_embedding_sp_char2)


def main():
    q42 = build_space("Q(4,2)")
    nat = natural_embedding(q42)
    print(f"Q(4,2) natural embedding: dimension {nat.dim}, "
          f"{len(nat.image_points())} image points")
    print("  radical of the polarization:", nat.bilinear.radical().rows)

    mini = minimal_embedding(q42)
    total = 2 ** mini.dim - 1
    print(f"Q(4,2) minimal embedding: dimension {mini.dim}, image covers "
          f"{len(mini.image_points())}/{total} points of PG(3,2)")

    w32 = build_space("W(3,2)")
    uni = universal_embedding_sp_char2(w32)
    print(f"\nW(3,2) universal embedding: dimension {uni.dim}; image equals "
          f"the Q(4,2) point set: {uni.image_points() == set(q42.vectors)}")
    rec = quotient_embedding(uni, uni.bilinear.radical())
    nat_w = natural_embedding(w32)
    print("nucleus quotient recovers the natural embedding point-for-point:",
          rec.images == nat_w.images)

    q43 = build_space("Q(4,3)")
    print(f"\nOdd characteristic contrast: Q(4,3) minimal embedding stays "
          f"{minimal_embedding(q43).dim}-dimensional (radical is trivial), "
          "so the space is not symplectic.")


if __name__ == "__main__":
    main()
