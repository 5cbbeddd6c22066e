"""Weight transport along moves: the piecewise-unimodular edge-weight map.

For a move with trail (a, u, e, v, b) on a graph whose pivot endpoints both
have degree 3, let c be the remaining slot at u besides {a, e} and d the
remaining slot at v besides {b, e}.  Only the pivot weight changes:

    w'_e = w_e + max(w_a + w_c, w_b + w_d) - max(w_b + w_c, w_a + w_d)

All other coordinates are fixed.  The map is an involution (composing with the
reversed trail restores w), maps integer weights to integer weights, and
carries the dilated weight polytope of the source graph onto that of the
target graph.

The max expression splits into four linear cases on the sign pattern of

    h1 = w_a + w_c - w_b - w_d        h2 = w_a + w_d - w_b - w_c

    h1 >= 0, h2 >= 0  (case A):  w'_e = w_e + w_c - w_d
    h1 >= 0, h2 <  0  (case B):  w'_e = w_e + w_a - w_b
    h1 <  0, h2 >= 0  (case C):  w'_e = w_e + w_b - w_a
    h1 <  0, h2 <  0  (case D):  w'_e = w_e + w_d - w_c

Each case is a unimodular matrix (identity with the pivot row replaced); the
four agree on the boundary hyperplanes h1 = 0 and h2 = 0.  When the four slot
edges coincide in pairs the hyperplanes degenerate: a = c and b = d forces
h2 = 0 identically, a = d and b = c forces h1 = 0 identically (then
w'_e = w_e + |w_a - w_b| with a single breaking hyperplane), and c = d makes
the weight map the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graphs import Graph, GraphError
from .nni import NniError, Trail, apply_nni

Weighting = dict[int, Fraction]


@dataclass(frozen=True)
class NniSite:
    """A trail together with the two bystander slots c (at u) and d (at v)."""

    trail: Trail
    c: int
    d: int


def as_weighting(g: Graph, values: Mapping[int, object] | Sequence[object]) -> Weighting:
    """Coerce values to a Fraction weighting keyed by g's edge ids.

    A sequence is matched against g.edges in ascending id order.
    """
    if isinstance(values, Mapping):
        pairs = {int(k): Fraction(v) for k, v in values.items()}
    else:
        vals = list(values)
        if len(vals) != len(g.edges):
            raise GraphError(
                f"expected {len(g.edges)} weights, got {len(vals)}"
            )
        pairs = {e: Fraction(v) for e, v in zip(g.edges, vals)}
    if set(pairs) != set(g.edges):
        raise GraphError("weighting keys do not match the edge ids")
    return pairs


def resolve_site(g: Graph, trail: Trail) -> NniSite:
    """Identify the bystander slots; both pivot endpoints must have degree 3."""
    if trail.e not in g.incidence:
        raise NniError(f"pivot edge {trail.e} does not exist")
    pu, pv = g.endpoints(trail.e)
    if {pu, pv} != {trail.u, trail.v} or pu == pv:
        raise NniError(f"edge {trail.e} is not a pivot between {trail.u} and {trail.v}")
    for vertex in (trail.u, trail.v):
        if g.degrees[vertex] != 3:
            raise NniError(
                f"pivot endpoint {vertex} has degree {g.degrees[vertex]}; "
                "weighted moves need degree 3"
            )
    c = _remaining_slot(g, trail.u, trail.e, trail.a)
    d = _remaining_slot(g, trail.v, trail.e, trail.b)
    return NniSite(trail=trail, c=c, d=d)


def _remaining_slot(g: Graph, vertex: int, e: int, moved: int) -> int:
    slots = list(g.slots(vertex))
    for x in (e, moved):
        if x not in slots:
            raise NniError(f"edge {x} has no slot at vertex {vertex}")
        slots.remove(x)
    if len(slots) != 1:
        raise NniError(f"vertex {vertex} does not have exactly 3 slots")
    return slots[0]


def weight_delta(site: NniSite, w: Mapping[int, Fraction]) -> Fraction:
    """The pivot-weight increment of the move, by the max formula."""
    wa, wb = w[site.trail.a], w[site.trail.b]
    wc, wd = w[site.c], w[site.d]
    return max(wa + wc, wb + wd) - max(wb + wc, wa + wd)


def apply_weighted_nni(
    g: Graph, w: Mapping[int, Fraction], trail: Trail
) -> tuple[Graph, Weighting]:
    site = resolve_site(g, trail)
    out = {e: Fraction(x) for e, x in w.items()}
    out[trail.e] = out[trail.e] + weight_delta(site, out)
    return apply_nni(g, trail), out


def replay_weighted(
    g: Graph, w: Mapping[int, Fraction], moves: Iterable[Trail]
) -> tuple[Graph, Weighting]:
    out = {e: Fraction(x) for e, x in w.items()}
    for trail in moves:
        g, out = apply_weighted_nni(g, out, trail)
    return g, out


def case_of(site: NniSite, w: Mapping[int, Fraction]) -> str:
    """Which linear case A/B/C/D applies to weighting w at this site."""
    wa, wb = w[site.trail.a], w[site.trail.b]
    wc, wd = w[site.c], w[site.d]
    h1 = wa + wc - wb - wd
    h2 = wa + wd - wb - wc
    if h1 >= 0:
        return "A" if h2 >= 0 else "B"
    return "C" if h2 >= 0 else "D"


_CASE_INCREMENT = {
    "A": ("c", "d"),
    "B": ("a", "b"),
    "C": ("b", "a"),
    "D": ("d", "c"),
}


def _slot_id(site: NniSite, name: str) -> int:
    return {
        "a": site.trail.a,
        "b": site.trail.b,
        "c": site.c,
        "d": site.d,
    }[name]


def case_delta(site: NniSite, case: str, w: Mapping[int, Fraction]) -> Fraction:
    plus, minus = _CASE_INCREMENT[case]
    return w[_slot_id(site, plus)] - w[_slot_id(site, minus)]


def case_matrix(
    site: NniSite, case: str, edge_order: Sequence[int]
) -> tuple[tuple[int, ...], ...]:
    """Unimodular matrix of the case: identity with the pivot row replaced.

    Rows/columns follow edge_order.  Built additively so coinciding slots
    cancel correctly; the determinant is always +1 (the pivot's own diagonal
    entry stays 1 because c, d, a, b are all distinct from e).
    """
    idx = {eid: i for i, eid in enumerate(edge_order)}
    n = len(edge_order)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    plus, minus = _CASE_INCREMENT[case]
    prow = rows[idx[site.trail.e]]
    prow[idx[_slot_id(site, plus)]] += 1
    prow[idx[_slot_id(site, minus)]] -= 1
    return tuple(tuple(r) for r in rows)


def site_hyperplanes(
    site: NniSite, edge_order: Sequence[int]
) -> list[tuple[int, ...]]:
    """Normals of h1 and h2 in edge_order coordinates; zero normals dropped,
    duplicates up to sign merged."""
    idx = {eid: i for i, eid in enumerate(edge_order)}
    n = len(edge_order)
    out: list[tuple[int, ...]] = []
    for pos_pair, neg_pair in ((("a", "c"), ("b", "d")), (("a", "d"), ("b", "c"))):
        vec = [0] * n
        for name in pos_pair:
            vec[idx[_slot_id(site, name)]] += 1
        for name in neg_pair:
            vec[idx[_slot_id(site, name)]] -= 1
        if all(x == 0 for x in vec):
            continue
        norm = _sign_normalize(vec)
        if norm not in out:
            out.append(norm)
    return out


def _sign_normalize(vec: list[int]) -> tuple[int, ...]:
    for x in vec:
        if x > 0:
            return tuple(vec)
        if x < 0:
            return tuple(-y for y in vec)
    return tuple(vec)
