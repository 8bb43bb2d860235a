import pytest

import halin


def test_k4_round_trip():
    g = halin.parse("halin1 (()()())")
    assert g.n == 4 and g.edge_count == 6
    assert halin.serialize(g) == "halin1 (()()())"
    assert halin.serialize(halin.wheel(3)) == str(g)


def test_cycles():
    assert halin.contains_cycle(halin.wheel(3), 4)
    h16 = halin.base_tree("t16")
    assert not halin.contains_cycle(h16, 4)
    assert halin.girth(h16) == 3
    length, cycle = halin.shortest_cycle_through_edge(h16, 0, 2)
    assert length == 5 and cycle[0] == 0 and cycle[-1] == 2


def test_faces_and_classes():
    h16 = halin.base_tree("t16")
    sizes = sorted(f["size"] for f in halin.bounded_faces(h16))
    assert sizes == [3] * 5 + [5] * 5
    assert halin.classify_vertices(h16)[0] == "interior"
    assert halin.validate(h16) == []


def test_constructions():
    for n in range(16, 40):
        g = halin.extremal_family(n)
        assert g.edge_count == halin.c4_extremal_formula(n)
    g = halin.random_c4free_halin(25, 7)
    assert str(g) == str(halin.random_c4free_halin(25, 7))


def test_from_rotation():
    g = halin.from_rotation([[1, 2, 3, 4], [0], [0], [0], [0]])
    assert g.edge_count == 8
    assert g.leaf_cycle == [1, 2, 3, 4]
    with pytest.raises(halin.InvalidTree):
        halin.from_rotation([[1], [0, 2], [1, 3], [2]])


def test_reduction():
    g = halin.extremal_family(21)
    found = halin.find_reduction(g)
    assert found is not None
    rule, site = found
    step = halin.apply_reduction(g, rule, site)
    assert step["before_edges"] - step["after_edges"] == {"leaf-removal": 2, "smoothing": 3, "contraction": 1}[rule]
    assert halin.validate(step["result"]) == []
    with pytest.raises(halin.PreconditionFailed):
        halin.apply_reduction(halin.base_tree("t16"), "contraction", [0, 2])


def test_enumeration():
    assert halin.count_halin(4) == 1
    assert halin.count_halin(10) == 13
    assert len(halin.enumerate_halin(9)) == 6
    r = halin.extremal_number(16, 4)
    assert r["max_edges"] == 25
    assert halin.extremal_number(4, 4)["max_edges"] is None
    with pytest.raises(halin.LimitExceeded):
        halin.count_halin(19)


def test_errors():
    with pytest.raises(halin.ParseError):
        halin.parse("halin1 (()")
    with pytest.raises(halin.HalinError):
        halin.wheel(2)
