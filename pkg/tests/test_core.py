import pytest

from coxanc import CoxeterMatrix, INFINITY, build_matrix, graph_of, parse_spec
from coxanc.errors import InvalidMatrix, RankOutOfRange, UnknownType

FAMILIES = ["A1", "A5", "B2", "B6", "D4", "D7", "E6", "E7", "E8", "F4", "H3", "H4", "I2(7)", "U3"]


def test_parse_standard_types():
    spec = parse_spec("A5")
    assert spec.rank == 5
    assert spec.components == ("A5",)

    spec = parse_spec("A2xB3")
    assert spec.rank == 5
    assert spec.components == ("A2", "B3")

    assert parse_spec("a2xb3").descriptor == "A2xB3"
    assert parse_spec("I2(inf)").descriptor == "I2(inf)"
    assert parse_spec("I2(0)").descriptor == "I2(inf)"
    assert parse_spec("U3").rank == 3


@pytest.mark.parametrize("descriptor", FAMILIES + ["A2xB3", "I2(5)xA1", "U2xA1"])
def test_descriptor_round_trip(descriptor):
    spec = parse_spec(descriptor)
    assert parse_spec(spec.descriptor) == spec


@pytest.mark.parametrize(
    "bad,err",
    [
        ("D3", RankOutOfRange),
        ("E9", RankOutOfRange),
        ("B1", RankOutOfRange),
        ("H5", RankOutOfRange),
        ("F5", RankOutOfRange),
        ("I2(2)", RankOutOfRange),
        ("Q4", UnknownType),
        ("A2x", UnknownType),
        ("", UnknownType),
        ("A", UnknownType),
    ],
)
def test_parse_errors(bad, err):
    with pytest.raises(err):
        parse_spec(bad)


def test_build_matrix_values():
    assert build_matrix(parse_spec("A2")).bond(1, 2) == 3
    assert build_matrix(parse_spec("I2(7)")).bond(1, 2) == 7

    u3 = build_matrix(parse_spec("U3"))
    assert all(u3.bond(i, j) == INFINITY for i in range(1, 4) for j in range(1, 4) if i != j)

    b3 = build_matrix(parse_spec("B3"))
    assert b3.bond(1, 2) == 3 and b3.bond(2, 3) == 4

    f4 = build_matrix(parse_spec("F4"))
    assert [f4.bond(i, i + 1) for i in range(1, 4)] == [3, 4, 3]

    d4 = build_matrix(parse_spec("D4"))
    assert {frozenset((i, j)) for i in range(1, 5) for j in range(i + 1, 5) if d4.bond(i, j) == 3} == {
        frozenset((1, 2)),
        frozenset((2, 3)),
        frozenset((2, 4)),
    }

    prod = build_matrix(parse_spec("A2xB3"))
    assert prod.n == 5
    assert prod.bond(1, 2) == 3
    assert prod.bond(4, 5) == 4
    # all cross-component bonds commute
    assert all(prod.bond(i, j) == 2 for i in (1, 2) for j in (3, 4, 5))


def test_graph_of_shapes():
    a3 = graph_of(build_matrix(parse_spec("A3")))
    assert a3.vertices == (1, 2, 3)
    assert [(i, j) for (i, j, _) in a3.edges] == [(1, 2), (2, 3)]

    a1a1 = graph_of(build_matrix(parse_spec("A1xA1")))
    assert a1a1.edges == ()

    u3 = graph_of(build_matrix(parse_spec("U3")))
    assert len(u3.edges) == 3
    assert all(label == INFINITY for (_, _, label) in u3.edges)


def _connected(graph):
    if not graph.vertices:
        return True
    seen = {graph.vertices[0]}
    stack = [graph.vertices[0]]
    while stack:
        v = stack.pop()
        for u in graph.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == graph.rank


@pytest.mark.parametrize("descriptor", FAMILIES + ["A2xA2", "A1xB3", "I2(4)xI2(5)"])
def test_connected_iff_one_component(descriptor):
    spec = parse_spec(descriptor)
    graph = graph_of(build_matrix(spec))
    assert _connected(graph) == (len(spec.components) == 1)


def test_matrix_validation():
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix.from_rows([[1, 3], [4, 1]])  # asymmetric
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix.from_rows([[2, 3], [3, 1]])  # bad diagonal
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix.from_rows([[1, 1], [1, 1]])  # off-diagonal 1
    CoxeterMatrix.from_rows([[1, 0], [0, 1]])  # infinite bond is fine


def test_matrix_file_round_trip(tmp_path):
    path = tmp_path / "b3.cox"
    path.write_text("# rank then strict upper triangle\n3\n3 2\n4\n")
    spec = parse_spec(f"file:{path}")
    assert spec.rank == 3
    m = build_matrix(spec)
    assert m.bond(1, 2) == 3 and m.bond(1, 3) == 2 and m.bond(2, 3) == 4
    assert parse_spec(spec.descriptor) == spec


def test_matrix_file_errors(tmp_path):
    bad = tmp_path / "bad.cox"
    bad.write_text("3\n3 2\n")  # missing a triangle row
    with pytest.raises(InvalidMatrix):
        parse_spec(f"file:{bad}")
    bad.write_text("3\n3 2 9\n4\n")  # row too long
    with pytest.raises(InvalidMatrix):
        parse_spec(f"file:{bad}")
    bad.write_text("3\n3 1\n4\n")  # off-diagonal 1
    with pytest.raises(InvalidMatrix):
        parse_spec(f"file:{bad}")
