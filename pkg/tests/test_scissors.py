"""Half-open decomposition: frozen small case plus structural checks."""
from fractions import Fraction

import pytest

from trivalent.catalog import dumbbell, theta
from trivalent.counting import count_points
from trivalent.exactlin import determinant
from trivalent.graphs import GraphError, same_labeled_graph
from trivalent.nni import MoveSequence, Trail, graph_sequence
from trivalent.scissors import (
    build_decomposition,
    evaluate_piecewise,
    verify_decomposition,
)

F = Fraction


@pytest.fixture(scope="module")
def theta_decomposition():
    seq = graph_sequence(theta(), dumbbell())
    return build_decomposition(theta(), seq)


def test_theta_two_pieces_frozen(theta_decomposition):
    d = theta_decomposition
    assert same_labeled_graph(d.target, dumbbell())
    assert len(d.pieces) == 2
    pieces = sorted((p.constraints, p.matrix) for p in d.pieces)
    assert pieces[0] == (
        (((-1, 1, 0), "<"),),
        ((1, 0, 0), (0, 1, 0), (-1, 1, 1)),
    )
    assert pieces[1] == (
        (((-1, 1, 0), ">="),),
        ((1, 0, 0), (0, 1, 0), (1, -1, 1)),
    )
    for p in d.pieces:
        assert determinant(p.matrix) in (1, -1)


def test_theta_verification(theta_decomposition):
    report = verify_decomposition(theta_decomposition, range(7))
    assert report.ok
    assert set(report.determinants) <= {1, -1}
    assert [c.points for c in report.dilations] == [1, 1, 4, 5, 11, 14, 24]
    for check in report.dilations:
        assert check.unique_cover and check.matches_replay and check.image_is_target
    assert [c.points for c in report.dilations] == [
        count_points(theta(), t) for t in range(7)
    ]


def test_pieces_claim_disjointly(theta_decomposition):
    d = theta_decomposition
    w = (F(1, 2), F(0), F(1, 2))
    assert sum(p.claims(w) for p in d.pieces) == 1


def test_evaluate_piecewise(theta_decomposition):
    idx, image = evaluate_piecewise(theta_decomposition, (F(1, 2), 0, F(1, 2)))
    assert image == (F(1, 2), F(0), F(0))
    # the image is the weighted replay of the move sequence
    idx2, image2 = evaluate_piecewise(theta_decomposition, (0, F(1, 2), F(1, 2)))
    assert image2 == (F(0), F(1, 2), F(0))
    assert idx != idx2  # the two sides of the case hyperplane


def test_empty_sequence_gives_identity():
    d = build_decomposition(theta(), MoveSequence(()))
    assert len(d.pieces) == 1
    assert d.pieces[0].constraints == ()
    assert d.pieces[0].matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert verify_decomposition(d, range(4)).ok


def test_relabel_only_sequence():
    seq = graph_sequence(theta(), dumbbell(), restrict_to_spanning_trees=True)
    d = build_decomposition(theta(), seq)
    report = verify_decomposition(d, range(5))
    assert report.ok


def test_rejects_wrong_source():
    seq = graph_sequence(theta(), dumbbell())
    with pytest.raises(GraphError):
        build_decomposition(dumbbell(), seq)
