"""Reflexivity suite for the shifted fourfold dilate of a graph polytope.

For a graph G with all degrees in {1, 3} let Q = 4 P_G - 1 (translate the
fourfold dilate by minus the all-ones vector).  Q is a lattice polytope whose
facet system is, per degree-3 vertex with slot multiset {a, b, c}, the four
sign-pattern rows

    +w_a + w_b + w_c <= 1      +w_a - w_b - w_c <= 1
    -w_a + w_b - w_c <= 1      -w_a - w_b + w_c <= 1

This module checks reflexivity (interior-point count of (t+1)Q equals the
closed count of tQ), extracts the h* vector of Q from exact counts, and
enumerates vertices of Q by solving facet subsystems.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .counting import count_elimination
from .graphs import Graph, GraphError
from .polytope import reflexive_system


@dataclass(frozen=True)
class DilationCounts:
    t: int
    closed: int
    interior_next: int


@dataclass(frozen=True)
class ReflexivityReport:
    t_max: int
    counts: tuple[DilationCounts, ...]
    ok: bool


def reflexivity_check(g: Graph, t_max: int = 3) -> ReflexivityReport:
    """Compare |tQ ∩ Z^m| against |int((t+1)Q) ∩ Z^m| for t = 0..t_max.

    Equality for all t (Ehrhart reciprocity's fingerprint of a reflexive
    polytope) is reported; the t = 0 row asserts the origin is the unique
    interior lattice point of Q itself.
    """
    rows = []
    ok = True
    for t in range(t_max + 1):
        closed = count_elimination(g, t, kind="reflexive")
        interior = count_elimination(g, t + 1, kind="reflexive", strict=True)
        rows.append(DilationCounts(t=t, closed=closed, interior_next=interior))
        ok = ok and closed == interior
    return ReflexivityReport(t_max=t_max, counts=tuple(rows), ok=ok)


@dataclass(frozen=True)
class HStarVector:
    coefficients: tuple[int, ...]

    @property
    def palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    @property
    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    @property
    def normalized_volume(self) -> int:
        return sum(self.coefficients)


def h_star(g: Graph) -> HStarVector:
    """h* vector of Q from exact lattice-point counts at dilations 0..m.

    Solves sum_k h_k * C(j + m - k, m) = |jQ ∩ Z^m| triangularly; raises if
    the counts are not consistent with integer coefficients (they always are
    for a lattice polytope, so a failure flags a counting bug).
    """
    m = len(g.edges)
    ehrhart = [count_elimination(g, j, kind="reflexive") for j in range(m + 1)]
    coeffs: list[int] = []
    for j, value in enumerate(ehrhart):
        acc = value - sum(coeffs[k] * comb(j + m - k, m) for k in range(j))
        coeffs.append(acc)
    if coeffs[0] != 1:
        raise GraphError(f"h* computation lost the origin: h0 = {coeffs[0]}")
    return HStarVector(tuple(coeffs))


def hstar_consistent_with_volume(g: Graph, vector: HStarVector, leading: Fraction) -> bool:
    """Does sum(h*) equal m! times the leading Ehrhart coefficient of Q?

    `leading` is the leading coefficient of the counting polynomial of the
    *graph polytope*; Q scales it by 4^m.
    """
    m = len(g.edges)
    return Fraction(vector.normalized_volume) == leading * 4**m * factorial(m)


def vertex_enumeration(g: Graph) -> tuple[tuple[Fraction, ...], ...]:
    """All vertices of Q, by brute-force facet subsystem solving.

    Guarded to at most 7 edges: the subset count C(4k, m) explodes beyond
    that, and the acceptance workloads never need more.
    """
    from .exactlin import solve_square

    system = reflexive_system(g)
    m = len(system.edge_order)
    if m > 7:
        raise GraphError(f"vertex enumeration supports at most 7 edges, got {m}")
    rows = [row[0] for row in system.rows]
    vertices: set[tuple[Fraction, ...]] = set()
    one = Fraction(1)
    for subset in combinations(rows, m):
        matrix = [[Fraction(c) for c in row] for row in subset]
        point = solve_square(matrix, [one] * m)
        if point is None:
            continue
        if all(sum(c * x for c, x in zip(row, point)) <= 1 for row in rows):
            vertices.add(tuple(point))
    return tuple(sorted(vertices))
