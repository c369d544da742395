import json

import pytest

from tracecert.groups import (
    GroupSpec,
    build_coset_system,
    build_group,
    dihedral_element_order,
    direct_product_spec,
    example1_spec,
    example2_spec,
    natural_spec,
    regular_spec,
    symmetric_product_spec,
    trivial_spec,
)
from tracecert.permgroup import GroupError, OrderCapExceeded, Permutation, parse_permutation


def test_regular_s3():
    G = build_group(example1_spec())
    assert G.degree == 6 and len(G) == 6 and G.is_transitive()


def test_s3_x_regular_d8():
    G = build_group(example2_spec())
    assert G.degree == 24 and len(G) == 48 and G.is_transitive()


def test_trivial_times_regular_c2_is_s2():
    G = build_group(direct_product_spec(trivial_spec(), regular_spec("C2")))
    assert G.degree == 2
    assert G.element_set == {Permutation((1, 2)), Permutation((2, 1))}


def test_product_points_are_lexicographic():
    # point (i, j) of S3 x regular(D8) is 8 (i - 1) + j
    G = build_group(example2_spec())
    for g in G:
        for i in range(3):
            block = {g(8 * i + j) for j in range(1, 9)}
            assert len({(p - 1) // 8 for p in block}) == 1


def test_dihedral_order_relations():
    elems = [parse_permutation(c, 4) for c in dihedral_element_order(8)]
    a, b = elems[1], elems[4]
    assert len(set(elems)) == 8
    assert elems[2] == a * a and elems[3] == a * a * a
    assert elems[5] == a * b and elems[7] == a * a * a * b
    assert b * a == a.inverse() * b


def test_non_transitive_rejected():
    spec = GroupSpec(name="bad", degree=4, kind="generators", cycles=("(1 2)",))
    with pytest.raises(GroupError, match="not transitive"):
        build_group(spec)


def test_elements_kind_orders_cosets():
    listed = ("()", "(1 3 2)", "(1 2 3)", "(2 3)", "(1 2)", "(1 3)")
    spec = GroupSpec(name="S3", degree=3, kind="elements", cycles=listed)
    cs = build_coset_system(spec)
    assert cs.n == 3 and cs.r == 1
    assert [g.to_cycles() for g in cs.reps] == ["()", "(1 3 2)", "(1 2 3)"]


def test_elements_kind_must_be_closed():
    spec = GroupSpec(name="x", degree=3, kind="elements", cycles=("()", "(1 2 3)"))
    with pytest.raises(GroupError, match="closed"):
        build_group(spec)


def test_json_roundtrip():
    for spec in (example1_spec(), example2_spec(), symmetric_product_spec([2, 3])):
        d = spec.to_dict()
        again = GroupSpec.from_json(json.dumps(d))
        assert again == spec
        assert build_group(again).same_elements(build_group(spec))


@pytest.mark.parametrize("bad", ['{"degree": 3}', '{"kind": "nope", "degree": 3}', "not json"])
def test_bad_json(bad):
    with pytest.raises(GroupError):
        GroupSpec.from_json(bad)


def test_named_catalogue():
    assert len(build_group(natural_spec("S4"))) == 24
    assert len(build_group(natural_spec("A4"))) == 12
    assert len(build_group(natural_spec("D10"))) == 10
    assert len(build_group(regular_spec("C5"))) == 5


def test_symmetric_product():
    G = build_group(symmetric_product_spec([2, 3]))
    assert G.degree == 2 * 6 and len(G) == 12


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        build_group(example2_spec(), cap=40)


def test_explicit_ordering_in_spec():
    cs0 = build_coset_system(natural_spec("D8"))
    reps = [cs0.reps[0], cs0.reps[1], cs0.reps[3], cs0.reps[2]]
    spec = GroupSpec("D8", 4, "generators", natural_spec("D8").cycles, tuple(g.to_cycles() for g in reps))
    cs = build_coset_system(spec)
    assert list(cs.reps) == reps
