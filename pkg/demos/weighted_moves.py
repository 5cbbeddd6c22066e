"""The weighted NNI move: a piecewise-unimodular bijection on edge weights.

Run:  python3 demos/weighted_moves.py
"""
from fractions import Fraction

from trivalent.catalog import theta
from trivalent.exactlin import determinant
from trivalent.nni import Trail
from trivalent.weighted import (
    apply_weighted_nni,
    as_weighting,
    case_matrix,
    case_of,
    resolve_site,
    site_hyperplanes,
)

if __name__ == "__main__":
    g = theta()
    trail = Trail(a=1, u=1, e=3, v=2, b=2)
    site = resolve_site(g, trail)
    print(f"site: trail {trail}, companion slots c={site.c}, d={site.d}")
    print(f"case hyperplanes: {site_hyperplanes(site, g.edges)}")

    for w_in in ((1, 0, 1), (0, 1, 1), (2, 2, 5)):
        w = as_weighting(g, w_in)
        case = case_of(site, w)
        h, w2 = apply_weighted_nni(g, w, trail)
        mat = case_matrix(site, case, g.edges)
        print(f"w = {w_in}: case {case}, det {determinant(mat)}, "
              f"image {tuple(w2[e] for e in g.edges)}")

    # the update is its own inverse through the reversed trail
    w = as_weighting(g, (Fraction(3, 2), Fraction(1, 3), 1))
    h, w2 = apply_weighted_nni(g, w, trail)
    back = Trail(trail.a, trail.v, trail.e, trail.u, trail.b)
    g2, w3 = apply_weighted_nni(h, w2, back)
    print(f"round trip restores the weighting exactly: {w3 == w}")
