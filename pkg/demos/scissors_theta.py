"""Dissect the theta polytope onto the dumbbell polytope.

A single NNI move turns the triple edge into two loops and a bridge.  The
induced map on edge weights is linear on each side of one hyperplane; both
matrices are unimodular, and together they carry every lattice point of every
dilate bijectively across.

Run:  python3 demos/scissors_theta.py
"""
from fractions import Fraction

from trivalent.catalog import dumbbell, theta
from trivalent.nni import graph_sequence
from trivalent.scissors import (
    build_decomposition,
    evaluate_piecewise,
    verify_decomposition,
)

if __name__ == "__main__":
    seq = graph_sequence(theta(), dumbbell())
    print("move sequence:", [(mv.a, mv.u, mv.e, mv.v, mv.b) for mv in seq.moves])

    d = build_decomposition(theta(), seq)
    for i, piece in enumerate(d.pieces):
        print(f"piece {i}:")
        for vec, sense in piece.constraints:
            print(f"  {vec} . w {sense} 0")
        for row in piece.matrix:
            print(f"  {row}")

    report = verify_decomposition(d, range(7))
    print("verified dilates:", [(c.t, c.points) for c in report.dilations])
    print("all checks pass:", report.ok)

    w = (Fraction(1, 2), Fraction(0), Fraction(1, 2))
    idx, image = evaluate_piecewise(d, w)
    print(f"{w} lies in piece {idx} and maps to {image}")
