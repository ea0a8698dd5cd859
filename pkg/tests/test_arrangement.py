import pytest

from smckit.arrangement import (
    Atom,
    ChamberGraph,
    atom_length,
    atom_leq,
    atom_leq_definitional,
    atoms_from,
    graph_to_dot,
    graph_to_json_obj,
    hyperplanes_from,
    longest_atom,
)
from smckit.dynkin import parse_dynkin, restrict_roots
from smckit.errors import PreconditionError


def graph_for(text):
    diagram, deleted = parse_dynkin(text)
    return ChamberGraph(hyperplanes_from(restrict_roots(diagram, deleted)))


def test_hyperplanes_primitive_and_deduplicated():
    diagram, deleted = parse_dynkin("D5:I=1,3,5")
    normals = hyperplanes_from(restrict_roots(diagram, deleted))
    # 5 restricted roots, but 22 and 11 span the same line
    assert len(normals) == 4
    for n in normals:
        assert n[[i for i, x in enumerate(n) if x][0]] > 0
    assert (1, 1) in normals and (2, 2) not in normals


def test_a2_chamber_counts():
    g = graph_for("A2")
    assert len(g.normals) == 3
    assert len(g.chambers) == 6
    # every chamber realized, each wall crossing flips exactly one sign
    assert len({c.signs for c in g.chambers}) == 6
    for i, j, wall, _ in g.edges:
        a, b = g.chambers[i].signs, g.chambers[j].signs
        diff = [k for k in range(3) if a[k] != b[k]]
        assert diff == [wall]


def test_d5_restricted_chamber_counts():
    g = graph_for("D5:I=1,3,5")
    assert len(g.normals) == 4
    assert len(g.chambers) == 8


def test_witnesses_satisfy_signs():
    g = graph_for("D4:I=3,4")
    assert len(g.chambers) == 8
    for c in g.chambers:
        for n, s in zip(g.normals, c.signs):
            val = sum(a * w for a, w in zip(n, c.witness))
            assert (val > 0) == (s > 0) and val != 0


def test_opposite_and_distance():
    g = graph_for("A2")
    for i, c in enumerate(g.chambers):
        j = g.opposite_chamber(i)
        assert g.chambers[j].signs == tuple(-s for s in c.signs)
        assert g.graph_distance(i, j) == 3
        assert len(g.separation_set(i, j)) == 3


def test_separation_matches_distance_everywhere():
    g = graph_for("D5:I=1,3,5")
    for i in range(len(g.chambers)):
        for j in range(len(g.chambers)):
            assert g.graph_distance(i, j) == len(g.separation_set(i, j))


def test_atoms_from_plus_chamber():
    g = graph_for("A2")
    plus = g.chamber_index((1, 1, 1))
    atoms = atoms_from(g, plus)
    assert len(atoms) == 6
    lengths = sorted(atom_length(g, a) for a in atoms)
    assert lengths == [0, 1, 1, 2, 2, 3]
    top = longest_atom(g, plus)
    assert atom_length(g, top) == 3
    assert [a for a in atoms if atom_length(g, a) == 3] == [top]


def test_atom_order_agrees_with_definitional():
    g = graph_for("A2")
    plus = g.chamber_index((1, 1, 1))
    atoms = atoms_from(g, plus)
    for a in atoms:
        for b in atoms:
            assert atom_leq(g, a, b) == atom_leq_definitional(g, a, b)


def test_atom_order_poset_with_maximum():
    g = graph_for("A2")
    plus = g.chamber_index((1, 1, 1))
    atoms = atoms_from(g, plus)
    top = longest_atom(g, plus)
    trivial = Atom(plus, plus)
    for a in atoms:
        assert atom_leq(g, trivial, a)
        assert atom_leq(g, a, top)
        assert atom_leq(g, a, a)
    # antisymmetry
    for a in atoms:
        for b in atoms:
            if atom_leq(g, a, b) and atom_leq(g, b, a):
                assert a == b


def test_single_hyperplane():
    g = ChamberGraph([(1,)])
    assert len(g.chambers) == 2
    assert g.graph_distance(0, 1) == 1


def test_degenerate_normals_rejected():
    with pytest.raises(PreconditionError):
        ChamberGraph([(0, 0)])
    with pytest.raises(PreconditionError):
        ChamberGraph([(1, 0), (1,)])
    with pytest.raises(PreconditionError):
        ChamberGraph([])


def test_json_and_dot_outputs():
    g = graph_for("A2")
    obj = graph_to_json_obj(g)
    assert len(obj["chambers"]) == 6
    assert all(set(c["signs"]) <= {"+", "-"} for c in obj["chambers"])
    dot = graph_to_dot(g)
    assert dot.startswith("graph chambers {")
    assert dot.count(" -- ") == len(g.edges)
