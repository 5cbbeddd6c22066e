"""The reflexive body 4P - 1: dilation counts, h*-vector, vertices.

Run:  python3 demos/reflexive_tour.py
"""
from trivalent.catalog import claw, dumbbell, theta
from trivalent.ehrhart import quasi_polynomial, semi_reflexive_check
from trivalent.reflexive import h_star, reflexivity_check, vertex_enumeration
from fractions import Fraction

if __name__ == "__main__":
    for name, g in (("claw", claw()), ("theta", theta()), ("dumbbell", dumbbell())):
        print(f"== {name} ==")
        report = reflexivity_check(g, t_max=3)
        for c in report.counts:
            print(f"  |{c.t}Q| = {c.closed}   interior of {c.t + 1}Q = {c.interior_next}")
        print(f"  reflexive on the tested range: {report.ok}")

        hs = h_star(g)
        print(f"  h* = {hs.coefficients}  palindromic={hs.palindromic}"
              f"  normalized volume = {hs.normalized_volume}")
        lead = quasi_polynomial(g).constituents[0][-1]
        print(f"  leading coefficient of L_P: {lead}")

        print(f"  vertices of Q: {vertex_enumeration(g)}")

        samples = (Fraction(1, 2), Fraction(5, 4), Fraction(11, 4), Fraction(10, 3))
        sr = semi_reflexive_check(g, samples)
        pretty = ", ".join(f"L({s}) = {c}" for s, c, _ in sr.samples)
        print(f"  semi-reflexive samples: {pretty}  (ok: {sr.ok})")
        print()
