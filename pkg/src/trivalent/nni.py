"""Edge-slide moves and deterministic move-sequence construction.

A move is described by a trail (a, u, e, v, b): e = {u, v} is the pivot (never
a loop), a is an edge with a slot at u, b an edge with a slot at v, and a, e, b
are pairwise distinct.  Applying the move detaches a's u-slot and reattaches it
at v, and symmetrically moves b's v-slot to u.  Degrees, the edge-label set,
and the external/internal split are all preserved.

The constructive results: any two trees with equal degree sequences, equal
edge-label sets and equal external labels are connected by such moves
(tree_sequence), and the same holds for connected graphs with all degrees in
{1, 3} once cut edges are matched up by an explicit relabeling bijection
(graph_sequence).
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .graphs import (
    CutRecord,
    Graph,
    GraphError,
    classify_edges,
    cut_edge,
    degree_sequence,
    find_cycle_edge,
    make_graph,
    same_labeled_graph,
    spanning_tree,
    validate_13,
)


class NniError(GraphError):
    """Raised when a trail is illegal on the graph it is applied to."""


@dataclass(frozen=True)
class Trail:
    """One move: slide a's u-end to v and b's v-end to u across pivot e."""

    a: int
    u: int
    e: int
    v: int
    b: int

    def reversed(self) -> "Trail":
        # after the move a sits at v and b at u; the reverse slides them back
        return Trail(self.a, self.v, self.e, self.u, self.b)


@dataclass(frozen=True)
class MoveSequence:
    """Moves plus an edge relabeling applied after replay.

    ``relabel`` is a sorted tuple of (old_id, new_id) pairs, identity entries
    omitted.  Tree-level sequences always have an empty relabel; sequences
    between graphs with cycles may need to permute the labels of cut edges.
    """

    moves: tuple[Trail, ...]
    relabel: tuple[tuple[int, int], ...] = ()

    @property
    def relabel_map(self) -> dict[int, int]:
        return dict(self.relabel)

    def to_json(self) -> str:
        payload = {
            "moves": [[t.a, t.u, t.e, t.v, t.b] for t in self.moves],
            "relabel": [list(p) for p in self.relabel],
        }
        return json.dumps(payload, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "MoveSequence":
        payload = json.loads(text)
        moves = tuple(Trail(*entry) for entry in payload.get("moves", ()))
        relabel = tuple(
            (int(a), int(b)) for a, b in payload.get("relabel", ())
        )
        return MoveSequence(moves, tuple(sorted(relabel)))


def apply_nni(g: Graph, trail: Trail) -> Graph:
    """Apply one move; raises NniError if the trail is illegal on g."""
    a, u, e, v, b = trail.a, trail.u, trail.e, trail.v, trail.b
    if e not in g.incidence:
        raise NniError(f"pivot edge {e} does not exist")
    pu, pv = g.endpoints(e)
    if pu == pv:
        raise NniError(f"pivot edge {e} is a loop")
    if {pu, pv} != {u, v}:
        raise NniError(f"pivot edge {e} joins {pu},{pv}, not {u},{v}")
    if len({a, e, b}) != 3:
        raise NniError(f"edges a={a}, e={e}, b={b} must be pairwise distinct")
    if u not in _ends(g, a):
        raise NniError(f"edge {a} has no end at vertex {u}")
    if v not in _ends(g, b):
        raise NniError(f"edge {b} has no end at vertex {v}")
    g = _move_end(g, a, u, v)
    g = _move_end(g, b, v, u)
    return g


def _ends(g: Graph, e: int) -> tuple[int, int]:
    if e not in g.incidence:
        raise NniError(f"edge {e} does not exist")
    return g.endpoints(e)


def _move_end(g: Graph, e: int, src: int, dst: int) -> Graph:
    p, q = g.endpoints(e)
    if p == src:
        return g.replace_endpoints(e, q, dst)
    if q == src:
        return g.replace_endpoints(e, p, dst)
    raise NniError(f"edge {e} has no end at vertex {src}")


def replay(g: Graph, moves: MoveSequence | Iterable[Trail]) -> Graph:
    """Apply a whole sequence of moves (the relabel, if any, is NOT applied)."""
    if isinstance(moves, MoveSequence):
        moves = moves.moves
    for trail in moves:
        g = apply_nni(g, trail)
    return g


def reverse_sequence(seq: MoveSequence) -> MoveSequence:
    inverse = {new: old for old, new in seq.relabel}
    return MoveSequence(
        tuple(t.reversed() for t in reversed(seq.moves)),
        tuple(sorted(inverse.items())),
    )


def legal_trails(g: Graph) -> Iterator[Trail]:
    """Enumerate every legal trail of g (deterministic order)."""
    for e, u, v in g.edge_list:
        if u == v:
            continue
        for uu, vv in ((u, v), (v, u)):
            for a in g.incident_edges(uu):
                if a == e:
                    continue
                for b in g.incident_edges(vv):
                    if b == e or b == a:
                        continue
                    yield Trail(a, uu, e, vv, b)


# -- caterpillar machinery ----------------------------------------------------


def _nonleaf_vertices(g: Graph) -> list[int]:
    return sorted(v for v in g.vertex_ids if g.degrees[v] > 1)


def is_caterpillar(t: Graph) -> bool:
    """True for trees whose non-leaf vertices form a path (or fewer than 2)."""
    if not t.is_tree():
        return False
    nonleaf = set(_nonleaf_vertices(t))
    for v in nonleaf:
        inner = sum(1 for _, w in t.adjacency[v] if w in nonleaf)
        if inner > 2:
            return False
    return True


def spine(c: Graph) -> list[int]:
    """Non-leaf vertices of a caterpillar in canonical reading direction.

    Direction with the lexicographically larger degree tuple wins; full ties
    (palindromic degrees) are broken toward the lower end-vertex id.
    """
    if not is_caterpillar(c):
        raise GraphError("spine is only defined for caterpillars")
    nonleaf = set(_nonleaf_vertices(c))
    if len(nonleaf) <= 1:
        return sorted(nonleaf)
    ends = [
        v
        for v in nonleaf
        if sum(1 for _, w in c.adjacency[v] if w in nonleaf) == 1
    ]
    start = min(ends)
    seq = [start]
    prev = None
    while True:
        nxt = [
            w for _, w in c.adjacency[seq[-1]] if w in nonleaf and w != prev
        ]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    forward = [c.degrees[v] for v in seq]
    backward = forward[::-1]
    if backward > forward or (backward == forward and seq[-1] < seq[0]):
        seq = seq[::-1]
    return seq


def _edge_between(g: Graph, x: int, y: int) -> int:
    cands = [e for e, w in g.adjacency[x] if w == y]
    if not cands:
        raise GraphError(f"no edge between vertices {x} and {y}")
    return min(cands)


def _lowest_leaf_edge(g: Graph, v: int) -> int:
    cands = [e for e, w in g.adjacency[v] if g.degrees[w] == 1]
    if not cands:
        raise GraphError(
            f"vertex {v} carries no pendant leaf; the rearrangement needs one "
            "(guaranteed when all degrees are 1 or 3)"
        )
    return min(cands)


def _bfs_farthest(g: Graph, src: int) -> tuple[int, dict[int, tuple[int, int]]]:
    dist = {src: 0}
    parent: dict[int, tuple[int, int]] = {}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for e, w in g.adjacency[x]:
            if w not in dist:
                dist[w] = dist[x] + 1
                parent[w] = (x, e)
                queue.append(w)
    far = max(dist.values())
    target = min(v for v, d in dist.items() if d == far)
    return target, parent


def _longest_path(g: Graph) -> list[int]:
    x, _ = _bfs_farthest(g, min(g.vertex_ids))
    y, parent = _bfs_farthest(g, x)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]][0])
    return path[::-1]


def _caterpillarize(t: Graph) -> tuple[list[Trail], Graph]:
    moves: list[Trail] = []
    g = t
    while True:
        path = _longest_path(g)
        onpath = set(path)
        candidates = []
        for idx in range(1, len(path) - 1):
            u = path[idx]
            for eid, w in g.adjacency[u]:
                if w not in onpath and g.degrees[w] > 1:
                    candidates.append((eid, idx, u, w))
        if not candidates:
            break
        eid, idx, u, v = min(candidates)
        prev_e = _edge_between(g, path[idx - 1], u)
        next_e = _edge_between(g, u, path[idx + 1])
        a = min(prev_e, next_e)
        b = min(x for x, _ in g.adjacency[v] if x != eid)
        trail = Trail(a, u, eid, v, b)
        g = apply_nni(g, trail)
        moves.append(trail)
    return moves, g


def caterpillarize(t: Graph) -> MoveSequence:
    """Moves turning tree t into a caterpillar (longest path grows each move)."""
    if not t.is_tree():
        raise GraphError("caterpillarize expects a tree")
    moves, _ = _caterpillarize(t)
    return MoveSequence(tuple(moves))


def _order_spine(c: Graph) -> tuple[list[Trail], Graph]:
    moves: list[Trail] = []
    g = c
    sp = spine(g)
    if len(sp) <= 2:
        # the canonical reading direction already makes <=2 degrees nonincreasing
        return moves, g
    degs = [g.degrees[v] for v in sp]
    changed = True
    while changed:
        changed = False
        for i in range(len(sp) - 1):
            if degs[i] >= degs[i + 1]:
                continue
            u, v = sp[i], sp[i + 1]
            e = _edge_between(g, u, v)
            a = (
                _edge_between(g, sp[i - 1], u)
                if i > 0
                else _lowest_leaf_edge(g, u)
            )
            b = (
                _edge_between(g, v, sp[i + 2])
                if i + 2 < len(sp)
                else _lowest_leaf_edge(g, v)
            )
            trail = Trail(a, u, e, v, b)
            g = apply_nni(g, trail)
            moves.append(trail)
            sp[i], sp[i + 1] = v, u
            degs[i], degs[i + 1] = degs[i + 1], degs[i]
            changed = True
    return moves, g


def order_spine(c: Graph) -> MoveSequence:
    """Bubble the spine degrees into nonincreasing order (one move per swap)."""
    moves, _ = _order_spine(c)
    return MoveSequence(tuple(moves))


def _sort_internal(c: Graph) -> tuple[list[Trail], Graph]:
    """Sort internal edge ids into ascending order along the spine.

    An adjacent transposition takes three moves: rotate the two path edges
    around their shared vertex using a pendant leaf at each outer vertex.  The
    side effect -- one leaf swapped between the outer vertices -- is cleaned up
    later by external sorting.
    """
    moves: list[Trail] = []
    g = c
    sp = spine(g)
    if len(sp) <= 2:
        return moves, g
    order = [_edge_between(g, sp[i], sp[i + 1]) for i in range(len(sp) - 1)]
    changed = True
    while changed:
        changed = False
        for i in range(len(order) - 1):
            if order[i] <= order[i + 1]:
                continue
            vi, vm, vk = sp[i], sp[i + 1], sp[i + 2]
            e1, e2 = order[i], order[i + 1]
            leaf2 = _lowest_leaf_edge(g, vk)
            m1 = Trail(e1, vm, e2, vk, leaf2)
            g = apply_nni(g, m1)
            leaf0 = _lowest_leaf_edge(g, vi)
            m2 = Trail(e2, vk, e1, vi, leaf0)
            g = apply_nni(g, m2)
            m3 = Trail(e1, vi, e2, vm, leaf2)
            g = apply_nni(g, m3)
            moves.extend((m1, m2, m3))
            order[i], order[i + 1] = e2, e1
            changed = True
    return moves, g


def _external_positions(g: Graph, sp: list[int]) -> list[set[int]]:
    out = []
    for v in sp:
        out.append({e for e, w in g.adjacency[v] if g.degrees[w] == 1})
    return out


def _sort_external(
    c: Graph, target: Sequence[int]
) -> tuple[list[Trail], Graph]:
    g = c
    sp = spine(g)
    if not sp:
        return [], g
    ext_at = _external_positions(g, sp)
    all_ext = sorted(set().union(*ext_at))
    if sorted(target) != all_ext:
        raise GraphError(
            f"target {list(target)} is not a permutation of the external "
            f"edges {all_ext}"
        )
    moves: list[Trail] = []
    caps = [len(s) for s in ext_at]
    slices = []
    offset = 0
    for cap in caps:
        slices.append(set(target[offset : offset + cap]))
        offset += cap
    for j in range(len(sp)):
        while ext_at[j] != slices[j]:
            r = min(slices[j] - ext_at[j])
            p = next(idx for idx in range(j + 1, len(sp)) if r in ext_at[idx])
            for step in range(p, j, -1):
                u, v = sp[step - 1], sp[step]
                e = _edge_between(g, u, v)
                if step - 1 == j:
                    victim = min(ext_at[j] - slices[j])
                else:
                    victim = min(ext_at[step - 1])
                trail = Trail(victim, u, e, v, r)
                g = apply_nni(g, trail)
                moves.append(trail)
                ext_at[step - 1].remove(victim)
                ext_at[step - 1].add(r)
                ext_at[step].remove(r)
                ext_at[step].add(victim)
    return moves, g


def sort_external(c: Graph, target: Sequence[int]) -> MoveSequence:
    """Permute pendant leaves along the spine to the target left-to-right order.

    ``target`` lists external edge ids grouped by spine position in canonical
    direction; order within a position is immaterial.  One move swaps two
    leaves across an adjacent spine edge.
    """
    moves, _ = _sort_external(c, target)
    return MoveSequence(tuple(moves))


def canonical_caterpillar_sequence(t: Graph) -> tuple[list[Trail], Graph]:
    """Normalize a tree to the canonical labeled caterpillar of its class.

    The class is determined by (degree sequence, internal edge ids, external
    edge ids); the canonical form has nonincreasing spine degrees, internal
    ids ascending along the spine and external ids ascending left-to-right.
    """
    mv, g = _caterpillarize(t)
    mv2, g = _order_spine(g)
    mv += mv2
    mv3, g = _sort_internal(g)
    mv += mv3
    sp = spine(g)
    if sp:
        ext = sorted(set().union(*_external_positions(g, sp)))
        mv4, g = _sort_external(g, ext)
        mv += mv4
    return mv, g


def _vertex_bijection(src: Graph, dst: Graph) -> dict[int, int]:
    """Map src vertices to dst vertices by their slot multisets (trees only)."""
    sig_dst: dict[tuple[int, ...], int] = {}
    for v in dst.vertex_ids:
        sig = dst.slots(v)
        if sig in sig_dst:
            raise GraphError("ambiguous vertex signatures; not a tree?")
        sig_dst[sig] = v
    out = {}
    for v in src.vertex_ids:
        sig = src.slots(v)
        if sig not in sig_dst:
            raise GraphError("graphs do not share vertex signatures")
        out[v] = sig_dst[sig]
    return out


def _check_common_labels(a: Graph, b: Graph) -> None:
    if degree_sequence(a) != degree_sequence(b):
        raise GraphError(
            f"degree sequences differ: {degree_sequence(a)} vs {degree_sequence(b)}"
        )
    if set(a.edges) != set(b.edges):
        raise GraphError("edge label sets differ")
    ext_a, _ = classify_edges(a)
    ext_b, _ = classify_edges(b)
    if set(ext_a) != set(ext_b):
        raise GraphError(
            f"external edge sets differ: {sorted(ext_a)} vs {sorted(ext_b)}"
        )


def tree_sequence(t1: Graph, t2: Graph) -> MoveSequence:
    """Moves carrying t1 to t2 exactly (same labels; vertices up to bijection).

    Both trees must have equal degree sequences, equal edge-label sets and
    equal external labels.  Each is normalized to the common canonical
    caterpillar; the second normalization is reversed, translated through the
    canonical forms' vertex bijection, and appended.
    """
    if not t1.is_tree() or not t2.is_tree():
        raise GraphError("tree_sequence expects two trees")
    _check_common_labels(t1, t2)
    if same_labeled_graph(t1, t2):
        return MoveSequence(())
    mv1, c1 = canonical_caterpillar_sequence(t1)
    mv2, c2 = canonical_caterpillar_sequence(t2)
    if not same_labeled_graph(c1, c2):
        raise GraphError("canonical caterpillars differ; input mismatch")
    phi = _vertex_bijection(c2, c1)
    back = [
        Trail(t.a, phi[t.v], t.e, phi[t.u], t.b) for t in reversed(mv2)
    ]
    total = tuple(mv1 + back)
    if not same_labeled_graph(replay(t1, total), t2):
        raise GraphError("move sequence failed replay verification")
    return MoveSequence(total)


def graph_sequence(
    g1: Graph, g2: Graph, restrict_to_spanning_trees: bool = False
) -> MoveSequence:
    """Moves plus relabel carrying g1 to g2 (connected, all degrees in {1, 3}).

    Postcondition: replay(g1, seq).rename_edges(seq.relabel_map) equals g2 up
    to a vertex bijection.  The relabel permutes cut-edge labels only and is
    the identity on external edges.

    With restrict_to_spanning_trees=True, cycle edges are cut outside the
    deterministic spanning trees T1 of g1 and T2 of g2; every pivot then lies
    in T1 and is internal in g1, and its relabel image lies in T2 and is
    internal in g2.
    """
    validate_13(g1)
    validate_13(g2)
    if not g1.is_connected() or not g2.is_connected():
        raise GraphError("graph_sequence expects connected graphs")
    _check_common_labels(g1, g2)
    f1 = spanning_tree(g1) if restrict_to_spanning_trees else frozenset()
    f2 = spanning_tree(g2) if restrict_to_spanning_trees else frozenset()
    moves, relabel = _graph_seq(g1, g2, f1, f2)
    final = replay(g1, moves).rename_edges(relabel)
    if not same_labeled_graph(final, g2):
        raise GraphError("move sequence failed replay verification")
    return MoveSequence(tuple(moves), tuple(sorted(relabel.items())))


def _graph_seq(
    a: Graph, b: Graph, fa: frozenset[int], fb: frozenset[int]
) -> tuple[list[Trail], dict[int, int]]:
    if a.is_tree():
        return list(tree_sequence(a, b).moves), {}
    ea = find_cycle_edge(a, fa)
    eb = find_cycle_edge(b, fb)
    ha, rec_a = cut_edge(a, ea)
    hb, rec_b = cut_edge(b, eb)
    if rec_a.fresh_edges != rec_b.fresh_edges:
        raise GraphError("edge label sets diverged during cutting")
    fresh = set(rec_a.fresh_edges)
    if ea != eb:
        # align labels: call b's cut edge by a's label in the recursion
        hb = hb.rename_edges({ea: eb})
        fb = frozenset(eb if x == ea else x for x in fb)
    sub_moves, sub_rel = _graph_seq(ha, hb, fa, fb)
    moves = []
    for t in sub_moves:
        if t.e in fresh:
            raise GraphError("internal error: pivot on a cut stub")
        aa = ea if t.a in fresh else t.a
        bb = ea if t.b in fresh else t.b
        if aa == bb:
            # both extremes are the two stubs of the same glued edge: the
            # projected move only shuffles that edge's own ends -> identity
            continue
        moves.append(Trail(aa, t.u, t.e, t.v, bb))
    swap = {ea: eb, eb: ea}
    relabel = {}
    for x in a.edges:
        y = sub_rel.get(x, x)
        y = swap.get(y, y)
        if y != x:
            relabel[x] = y
    return moves, relabel
