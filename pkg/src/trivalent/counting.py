"""Exact lattice-point counting for graph inequality systems.

Three independent routes:

* count_backtracking -- pure-Python depth-first search with per-row interval
  pruning.  Slow but straightforward; serves as the reference oracle.
* count_tree_dp -- message passing along a tree with all degrees in {1, 3};
  O(n * t^3) via int64 tensor contractions.
* count_elimination -- vertex-by-vertex tensor contraction for arbitrary
  graphs that pass validate_13 (cycles allowed); needed where backtracking is
  hopeless, e.g. quasi-polynomial extraction at t around 35.

Rational dilation parameters are handled exactly by clearing denominators;
all comparisons happen in integers.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .graphs import Graph, GraphError, validate_13
from .polytope import InequalitySystem, inequality_system, reflexive_system

_INT64_LIMIT = 2**62


def _prepare(sys: InequalitySystem, t) -> tuple[list[tuple[tuple[int, ...], int]], int, int]:
    t = Fraction(t)
    if t < 0:
        raise GraphError("dilation parameter must be nonnegative")
    p, q = t.numerator, t.denominator
    floor_t = p // q
    lo, hi = (0, floor_t) if sys.box == "nonneg" else (-floor_t, floor_t)
    rows = [
        (tuple(c * q for c in coeffs), alpha * p + beta * q)
        for coeffs, alpha, beta in sys.rows
    ]
    return rows, lo, hi


def count_backtracking(sys: InequalitySystem, t, strict: bool = False) -> int:
    """Count lattice points of the t-th dilate by pruned depth-first search.

    strict=True counts the strict interior (every row satisfied strictly).
    """
    rows, lo, hi = _prepare(sys, t)
    if strict:
        rows = [(c, rhs - 1) for c, rhs in rows]
    m = len(sys.edge_order)
    if m == 0:
        return 1 if all(rhs >= 0 for _, rhs in rows) else 0

    coeff = [r[0] for r in rows]
    rhs = [r[1] for r in rows]
    nrows = len(rows)
    # minrest[j][r]: smallest possible contribution of variables j.. to row r
    minrest = [[0] * nrows for _ in range(m + 1)]
    for j in range(m - 1, -1, -1):
        for r in range(nrows):
            c = coeff[r][j]
            minrest[j][r] = minrest[j + 1][r] + min(c * lo, c * hi)

    count = 0

    def descend(j: int, partial: list[int]) -> None:
        nonlocal count
        xlo, xhi = lo, hi
        for r in range(nrows):
            c = coeff[r][j]
            room = rhs[r] - partial[r] - minrest[j + 1][r]
            if c > 0:
                xhi = min(xhi, room // c)
            elif c < 0:
                xlo = max(xlo, -(room // (-c)))
            elif room < 0:
                return
        if xlo > xhi:
            return
        if j == m - 1:
            count += xhi - xlo + 1
            return
        for x in range(xlo, xhi + 1):
            descend(j + 1, [partial[r] + coeff[r][j] * x for r in range(nrows)])

    descend(0, [0] * nrows)
    return count


def iter_lattice_points(sys: InequalitySystem, t) -> Iterator[tuple[int, ...]]:
    """Yield the lattice points of the t-th dilate in lexicographic order."""
    rows, lo, hi = _prepare(sys, t)
    m = len(sys.edge_order)
    if m == 0:
        if all(rhs >= 0 for _, rhs in rows):
            yield ()
        return
    coeff = [r[0] for r in rows]
    rhs = [r[1] for r in rows]
    nrows = len(rows)
    minrest = [[0] * nrows for _ in range(m + 1)]
    for j in range(m - 1, -1, -1):
        for r in range(nrows):
            c = coeff[r][j]
            minrest[j][r] = minrest[j + 1][r] + min(c * lo, c * hi)

    point = [0] * m

    def descend(j: int, partial: list[int]) -> Iterator[tuple[int, ...]]:
        xlo, xhi = lo, hi
        for r in range(nrows):
            c = coeff[r][j]
            room = rhs[r] - partial[r] - minrest[j + 1][r]
            if c > 0:
                xhi = min(xhi, room // c)
            elif c < 0:
                xlo = max(xlo, -(room // (-c)))
            elif room < 0:
                return
        for x in range(xlo, xhi + 1):
            point[j] = x
            if j == m - 1:
                yield tuple(point)
            else:
                yield from descend(
                    j + 1, [partial[r] + coeff[r][j] * x for r in range(nrows)]
                )

    yield from descend(0, [0] * nrows)


# -- tree dynamic programming -------------------------------------------------

_indicator_cache: dict[tuple[int, int, int], np.ndarray] = {}


def _triple_indicator(floor_t: int, p: int, q: int) -> np.ndarray:
    """0/1 tensor over [0, floor_t]^3: perimeter <= t plus the three metric rows."""
    key = (floor_t, p, q)
    cached = _indicator_cache.get(key)
    if cached is not None:
        return cached
    ar = np.arange(floor_t + 1, dtype=np.int64)
    a = ar[:, None, None]
    b = ar[None, :, None]
    c = ar[None, None, :]
    ind = (
        (q * (a + b + c) <= p)
        & (a <= b + c)
        & (b <= a + c)
        & (c <= a + b)
    ).astype(np.int64)
    if len(_indicator_cache) > 32:
        _indicator_cache.clear()
    _indicator_cache[key] = ind
    return ind


def count_tree_dp(g: Graph, t) -> int:
    """Exact count for a {1,3}-tree by message passing toward a root vertex.

    Each edge e carries a table M_e[x] = number of valid assignments of the
    subtree hanging below e when e takes value x; an internal vertex combines
    its two child tables through the local indicator tensor.
    """
    validate_13(g)
    if not g.is_tree():
        raise GraphError("count_tree_dp expects a tree")
    t = Fraction(t)
    if t < 0:
        raise GraphError("dilation parameter must be nonnegative")
    p, q = t.numerator, t.denominator
    floor_t = p // q
    m = len(g.edges)
    if (floor_t + 1) ** m >= _INT64_LIMIT:
        raise GraphError("count too large for int64 message passing")
    ind = _triple_indicator(floor_t, p, q)
    internal = [v for v in sorted(g.vertex_ids) if g.degrees[v] == 3]
    root = internal[0]

    order: list[tuple[int, int | None]] = []
    stack: list[tuple[int, int | None]] = [(root, None)]
    while stack:
        v, pe = stack.pop()
        order.append((v, pe))
        for e in g.slots(v):
            if e == pe:
                continue
            w = g.other_end(e, v)
            if g.degrees[w] == 3:
                stack.append((w, e))

    up: dict[int, np.ndarray] = {}
    ones = np.ones(floor_t + 1, dtype=np.int64)

    def child_table(v: int, e: int) -> np.ndarray:
        w = g.other_end(e, v)
        return ones if g.degrees[w] == 1 else up[e]

    for v, pe in reversed(order):
        children = [e for e in g.slots(v) if e != pe]
        tables = [child_table(v, e) for e in children]
        if pe is None:
            total = np.einsum("ijk,i,j,k->", ind, *tables)
            return int(total)
        up[pe] = np.einsum("pij,i,j->p", ind, *tables)
    raise AssertionError("unreachable")


# -- vertex elimination for general graphs ------------------------------------


def _vertex_conditions(
    g: Graph, v: int, kind: str
) -> list[tuple[dict[int, int], int, int]]:
    """Conditions at one degree-3 vertex as (coeff-by-edge, alpha, beta)."""
    slots = g.slots(v)
    conds: list[tuple[dict[int, int], int, int]] = []
    if kind == "membership":
        perim: dict[int, int] = {}
        for s in slots:
            perim[s] = perim.get(s, 0) + 1
        conds.append((perim, 1, 0))
        for i in range(3):
            cm: dict[int, int] = {}
            for j, s in enumerate(slots):
                cm[s] = cm.get(s, 0) + (1 if j == i else -1)
            conds.append((cm, 0, 0))
    elif kind == "reflexive":
        for pat in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
            cm = {}
            for sign, s in zip(pat, slots):
                cm[s] = cm.get(s, 0) + sign
            conds.append((cm, 1, 0))
    else:
        raise GraphError(f"unknown system kind {kind!r}")
    return conds


def count_elimination(
    g: Graph, t, kind: str = "membership", strict: bool = False
) -> int:
    """Count lattice points of the t-th dilate by vertex-by-vertex contraction.

    kind="membership" counts the graph polytope; kind="reflexive" counts the
    dilates of the reflexive candidate (variables range over [-t, t]).
    strict=True counts strict interiors.  Works for any graph accepted by
    validate_13, including graphs with loops, parallel edges and cycles.
    """
    validate_13(g)
    t = Fraction(t)
    if t < 0:
        raise GraphError("dilation parameter must be nonnegative")
    p, q = t.numerator, t.denominator
    floor_t = p // q
    if kind == "membership":
        vals = np.arange(0, floor_t + 1, dtype=np.int64)
    else:
        vals = np.arange(-floor_t, floor_t + 1, dtype=np.int64)
    m = len(g.edges)
    if len(vals) ** m >= _INT64_LIMIT:
        raise GraphError("count too large for int64 contraction")

    internal_vertices = [v for v in sorted(g.vertex_ids) if g.degrees[v] == 3]
    # an edge stays "open" until every degree-3 endpoint has been processed
    owners: dict[int, set[int]] = {}
    for e, u, w in g.edge_list:
        owners[e] = {x for x in (u, w) if g.degrees[x] == 3}

    def vertex_tensor(v: int) -> tuple[list[int], np.ndarray]:
        axes = list(g.incident_edges(v))
        shape = [len(vals)] * len(axes)
        acc = np.ones(shape, dtype=bool)
        for cm, alpha, beta in _vertex_conditions(g, v, kind):
            lhs = np.zeros(shape, dtype=np.int64)
            for e, cval in cm.items():
                k = axes.index(e)
                view = [1] * len(axes)
                view[k] = len(vals)
                lhs = lhs + (q * cval) * vals.reshape(view)
            rhs = alpha * p + beta * q
            acc &= (lhs < rhs) if strict else (lhs <= rhs)
        tensor = acc.astype(np.int64)
        # close out edges whose only degree-3 endpoint is v (pendants, loops)
        keep, out_axes = [], []
        for k, e in enumerate(axes):
            if owners[e] == {v}:
                keep.append(k)
            else:
                out_axes.append(e)
        for k in sorted(keep, reverse=True):
            tensor = tensor.sum(axis=k)
        return out_axes, tensor

    remaining = list(internal_vertices)
    frontier_axes: list[int] = []
    frontier = np.array(1, dtype=np.int64)
    processed: set[int] = set()
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

    def open_axes(v: int) -> list[int]:
        return [e for e in g.incident_edges(v) if owners[e] != {v}]

    def frontier_growth(v: int) -> int:
        new = set(frontier_axes) | set(open_axes(v))
        return sum(1 for e in new if not owners[e] <= processed | {v})

    while remaining:
        best = min(remaining, key=lambda v: (frontier_growth(v), v))
        remaining.remove(best)
        axes, tensor = vertex_tensor(best)
        processed.add(best)
        all_axes = list(dict.fromkeys(frontier_axes + axes))
        letter = {e: letters[i] for i, e in enumerate(all_axes)}
        out = [e for e in all_axes if not owners[e] <= processed]
        script = (
            "".join(letter[e] for e in frontier_axes)
            + ","
            + "".join(letter[e] for e in axes)
            + "->"
            + "".join(letter[e] for e in out)
        )
        frontier = np.einsum(script, frontier, tensor)
        frontier_axes = out

    if frontier_axes:
        raise AssertionError("unclosed axes after processing all vertices")
    return int(frontier)


def count_points(g: Graph, t, method: str = "auto") -> int:
    """Count lattice points of the graph polytope's t-th dilate."""
    if method == "auto":
        method = "tree-dp" if g.is_tree() else "elimination"
    if method == "tree-dp":
        return count_tree_dp(g, t)
    if method == "elimination":
        return count_elimination(g, t, kind="membership")
    if method == "backtracking":
        return count_backtracking(inequality_system(g), t)
    raise GraphError(f"unknown counting method {method!r}")
