"""Ehrhart quasi-polynomials of small {1,3}-graphs, printed as exact tables.

Run:  python3 demos/quasi_polynomials.py
"""
from trivalent.catalog import TABLE_TREES, claw, dumbbell, k4, t4, theta
from trivalent.counting import count_points
from trivalent.ehrhart import quasi_polynomial


def show(name, g):
    qp = quasi_polynomial(g)
    print(f"{name}: period {qp.period}")
    for r, row in enumerate(qp.constituents):
        terms = " + ".join(f"({c})t^{k}" for k, c in enumerate(row) if c)
        print(f"  t = {r} mod {qp.period}:  {terms}")
    counts = [count_points(g, t) for t in range(8)]
    print(f"  L(0..7) = {counts}")
    assert all(qp.evaluate(t) == c for t, c in enumerate(counts))
    print()


if __name__ == "__main__":
    show("claw", claw())
    show("theta", theta())
    show("dumbbell", dumbbell())
    show("K4", k4())
    show("T4", t4())

    print("same polynomial for every tree with four internal vertices:")
    rows = {m: quasi_polynomial(trees[0]) for m, trees in TABLE_TREES.items()}
    for m, qp in sorted(rows.items()):
        print(f"  {m} edges -> odd constituent {qp.constituents[1 % qp.period]}")
