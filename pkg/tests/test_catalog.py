from trivalent.catalog import (
    TABLE_TREES,
    claw,
    connected_13_classes,
    dumbbell,
    k4,
    lollipop,
    t4,
    theta,
    tree_caterpillar_four,
    tree_spider_four,
)
from trivalent.graphs import classify_edges, degree_sequence, same_labeled_graph, validate_13


def test_named_graphs_are_valid():
    for g in (claw(), theta(), dumbbell(), k4(), t4(), lollipop(),
              tree_caterpillar_four(), tree_spider_four()):
        validate_13(g)
        assert g.is_connected()


def test_cubic_pairs_share_size():
    assert sorted(degree_sequence(theta())) == sorted(degree_sequence(dumbbell()))
    assert sorted(degree_sequence(k4())) == sorted(degree_sequence(t4()))
    assert not same_labeled_graph(k4(), t4())


def test_table_trees():
    assert sorted(TABLE_TREES) == [3, 5, 7, 9]
    for m, trees in TABLE_TREES.items():
        for t in trees:
            validate_13(t)
            assert t.is_tree()
            assert len(t.edges) == m
    assert len(TABLE_TREES[9]) == 2


def test_connected_classes_group_sizes():
    classes = connected_13_classes(7)
    sizes = {key: len(v) for key, v in classes.items()}
    assert sizes == {
        (2, 2): 1, (2, 3): 2, (4, 3): 1, (4, 4): 2, (4, 5): 3,
        (4, 6): 5, (6, 5): 1, (6, 6): 3, (6, 7): 9, (8, 7): 1,
    }


def test_connected_classes_canonical_labels():
    classes = connected_13_classes(7)
    for (n, m), group in classes.items():
        ext_sets = {frozenset(classify_edges(g)[0]) for g in group}
        assert len(ext_sets) == 1  # shared labels make groups comparable
        for g in group:
            validate_13(g)
            assert g.is_connected()
            assert len(g.edges) == m and len(g.vertex_ids) == n
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                assert not same_labeled_graph(a, b)
