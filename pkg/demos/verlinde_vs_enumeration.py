"""Three ways to the same number: enumeration, trigonometric sum, Bernoulli form.

For a cubic graph on n vertices and odd t, the number of lattice points in
the t-th dilate equals a cosecant sum (evaluated here in certified interval
arithmetic) and also a polynomial with Bernoulli-number coefficients.

Run:  python3 demos/verlinde_vs_enumeration.py
"""
from trivalent.catalog import k4, theta
from trivalent.counting import count_points
from trivalent.ehrhart import verlinde_count, zagier_polynomial

if __name__ == "__main__":
    for n, g, name in ((2, theta(), "theta"), (4, k4(), "K4")):
        poly = zagier_polynomial(n)
        print(f"n = {n} ({name}); closed-form coefficients: {poly}")
        print(f"{'t':>3} {'enumerated':>11} {'cosecant sum':>13} {'polynomial':>11}")
        for t in (1, 3, 5, 7):
            direct = count_points(g, t)
            trig = verlinde_count(n, t)
            val = sum(c * t**k for k, c in enumerate(poly))
            print(f"{t:>3} {direct:>11} {trig:>13} {str(val):>11}")
        print()
