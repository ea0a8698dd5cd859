import pytest

from smckit.dynkin import parse_dynkin, primitive_restricted_roots, restrict_roots
from smckit.errors import ParseError


def roots_set(text):
    diagram, _ = parse_dynkin(text)
    return {tuple(r) for r in diagram.positive_roots()}


def test_edge_conventions():
    assert parse_dynkin("A3")[0].edges == [(1, 2), (2, 3)]
    assert parse_dynkin("D4")[0].edges == [(1, 2), (2, 3), (2, 4)]
    assert parse_dynkin("D5")[0].edges == [(1, 2), (2, 3), (2, 4), (4, 5)]
    assert parse_dynkin("E6")[0].edges == [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)]


@pytest.mark.parametrize("text,count", [
    ("A1", 1), ("A2", 3), ("A3", 6), ("A5", 15),
    ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120),
])
def test_positive_root_counts(text, count):
    diagram, _ = parse_dynkin(text)
    assert len(diagram.positive_roots()) == count


def test_a2_roots_explicit():
    assert roots_set("A2") == {(1, 0), (0, 1), (1, 1)}


def test_roots_sorted_by_height():
    roots = parse_dynkin("D4")[0].positive_roots()
    heights = [sum(r) for r in roots]
    assert heights == sorted(heights)
    assert heights[-1] == 5  # highest root 1, 2, 1, 1


def test_cartan_matrix_a3():
    c = parse_dynkin("A3")[0].cartan_matrix()
    assert c == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


@pytest.mark.parametrize("text", ["A2", "A3", "D4"])
def test_braid_relations(text):
    diagram, _ = parse_dynkin(text)
    n = len(diagram.vertices)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert diagram.braid_check(i, j)


def test_reflections_permute_roots():
    diagram, _ = parse_dynkin("A3")
    roots = {tuple(r) for r in diagram.positive_roots()}
    for i in diagram.vertices:
        for r in roots:
            image = diagram.reflect(r, i)
            if all(x <= 0 for x in image):
                image = tuple(-x for x in image)
            assert image in roots


def test_restrict_d5_example():
    diagram, deleted = parse_dynkin("D5:I=1,3,5")
    assert deleted == [1, 3, 5]
    rr = restrict_roots(diagram, deleted)
    assert {tuple(r.coords) for r in rr} == {(0, 1), (1, 0), (1, 1), (2, 1), (2, 2)}
    prim = primitive_restricted_roots(rr)
    assert {tuple(r.coords) for r in prim} == {(0, 1), (1, 0), (1, 1), (2, 1)}


def test_restrict_d4_example():
    diagram, deleted = parse_dynkin("D4:I=3,4")
    rr = restrict_roots(diagram, deleted)
    assert {tuple(r.coords) for r in rr} == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_restrict_nothing_gives_positive_roots():
    diagram, deleted = parse_dynkin("A2:I=")
    assert deleted == []
    rr = restrict_roots(diagram, deleted)
    assert {tuple(r.coords) for r in rr} == roots_set("A2")


def test_restriction_witnesses_restrict_correctly():
    diagram, deleted = parse_dynkin("D5:I=1,3,5")
    kept = [v for v in diagram.vertices if v not in set(deleted)]
    for r in restrict_roots(diagram, deleted):
        w = list(r.witness)
        assert tuple(w[v - 1] for v in kept) == tuple(r.coords)
        assert tuple(w) in roots_set("D5")


@pytest.mark.parametrize("bad", ["Q7", "E9", "E5", "A0", "D1", "D5:I=9",
                                 "E6:I=1,1", "A", "A2:I=x", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_dynkin(bad)
