import itertools
from fractions import Fraction

import pytest

from tracecert.groups import build_coset_system, example1_spec, example2_spec, natural_spec, regular_spec
from tracecert.permgroup import (
    GroupError,
    OrderCapExceeded,
    Permutation,
    PermutationGroup,
    close_group,
    coset_system,
    left_action_lambda,
    malle_constant,
    normalizer,
    parse_permutation,
    point_stabilizer,
    right_action_pi,
    two_row,
)


def P(text, n):
    return parse_permutation(text, n)


class TestParse:
    def test_disjoint_cycles(self):
        assert P("(1 2)(3 4)", 4).images == (2, 1, 4, 3)

    def test_identity(self):
        assert P("()", 3) == Permutation.identity(3)
        assert P("", 3) == Permutation.identity(3)

    def test_padding_to_degree(self):
        assert P("(1 2 3)", 6).images == (2, 3, 1, 4, 5, 6)

    def test_commas_accepted(self):
        assert P("(1,2,3)", 3) == P("(1 2 3)", 3)

    def test_non_disjoint_composes_right_to_left(self):
        # (1 2)(2 3): apply (2 3) first, then (1 2)
        g = P("(1 2)(2 3)", 3)
        assert g.images == (2, 3, 1)
        assert g == P("(1 2)", 3) * P("(2 3)", 3)

    @pytest.mark.parametrize("text", ["(1 7)", "(0 1)"])
    def test_out_of_range(self, text):
        with pytest.raises(GroupError, match="out of range"):
            P(text, 6)

    @pytest.mark.parametrize("text", ["(1 2", "1 2)", "(a b)", "(1 2) x", "(1 1)"])
    def test_malformed(self, text):
        with pytest.raises(GroupError):
            P(text, 4)

    def test_roundtrip_cycles(self):
        for g in close_group([P("(1 2)", 4), P("(1 2 3 4)", 4)]):
            assert P(g.to_cycles(), 4) == g


def test_bijection_enforced():
    with pytest.raises(GroupError):
        Permutation((1, 1, 2))


def test_composition_convention():
    g, h = P("(1 2)", 3), P("(1 2 3)", 3)
    for x in (1, 2, 3):
        assert (g * h)(x) == g(h(x))
    assert (g * g.inverse()).is_identity()


class TestClosure:
    def test_s3(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        assert len(G) == 6
        assert G.elements[0].is_identity()

    def test_trivial(self):
        G = close_group([], degree=4)
        assert len(G) == 1 and G.elements[0].is_identity()

    def test_regular_s3_in_s6(self, ex1):
        G = ex1.group
        assert G.degree == 6 and len(G) == 6 and G.is_transitive()
        assert close_group(G.generators, degree=6).same_elements(G)

    def test_generator_order_irrelevant(self):
        gens = [P("(1 2)", 4), P("(1 2 3 4)", 4), P("(1 3)", 4)]
        orders = [close_group(p).elements for p in itertools.permutations(gens)]
        assert all(o == orders[0] for o in orders)

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            close_group([P("(1 2)", 5), P("(1 2 3 4 5)", 5)], cap=50)

    def test_mixed_degrees(self):
        with pytest.raises(GroupError):
            close_group([P("(1 2)", 3), P("(1 2)", 4)])


class TestStabilizerNormalizer:
    def test_regular_stabilizer_trivial(self, ex1):
        assert len(point_stabilizer(ex1.group)) == 1
        assert len(point_stabilizer(build_coset_system(regular_spec("C5")).group)) == 1

    def test_natural_s3_stabilizer(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        H = point_stabilizer(G)
        assert H.element_set == {Permutation.identity(3), P("(2 3)", 3)}

    def test_trivial_H_normalizer_is_G(self, ex1):
        assert ex1.normalizer_N.same_elements(ex1.group)
        assert ex1.r == 6

    def test_normal_subgroup(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        A3 = close_group([P("(1 2 3)", 3)])
        assert normalizer(G, A3).same_elements(G)

    def test_natural_s3_self_normalizing_stabilizer(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        H = point_stabilizer(G)
        # brute force: g H g^-1 == H as sets
        oracle = {g for g in G if {g * h * g.inverse() for h in H} == H.element_set}
        assert oracle == H.element_set
        assert normalizer(G, H).element_set == oracle

    def test_not_subgroup(self):
        G = close_group([P("(1 2 3)", 3)])
        H = close_group([P("(1 2)", 3)])
        with pytest.raises(GroupError):
            normalizer(G, H)


class TestCosetSystem:
    def test_example1_listed_ordering(self, ex1):
        assert ex1.n == 6 and ex1.r == 6
        assert [g(1) for g in ex1.reps] == [1, 2, 3, 4, 5, 6]
        assert ex1.reps[0].is_identity()
        assert ex1.relabel.is_identity()

    def test_example2_r_by_brute_force(self, ex2):
        G = ex2.group
        H = {g for g in G if g(1) == 1}
        N = {g for g in G if {g * h * g.inverse() for h in H} == H}
        assert len(G) == 48 and len(H) == 2
        assert ex2.r == len(N) // len(H) == 8

    def test_invariants(self, catalogue_systems):
        for cs in catalogue_systems.values():
            G, H, N = cs.group, cs.stabilizer_H, cs.normalizer_N
            assert cs.reps[0].is_identity()
            assert len(G) == cs.n * len(H)
            assert cs.r == len(N) // len(H)
            covered = set()
            for g in cs.reps:
                covered |= {g * h for h in H}
            assert covered == G.element_set
            assert all((g in N) == (j < cs.r) for j, g in enumerate(cs.reps))

    def test_degenerate(self):
        G = close_group([], degree=1)
        with pytest.raises(GroupError):
            coset_system(G)

    def test_ordering_two_reps_same_coset(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        bad = [Permutation.identity(3), P("(1 2)", 3), P("(1 2 3)", 3)]
        with pytest.raises(GroupError, match="same coset"):
            coset_system(G, ordering=bad)

    def test_ordering_missing_coset(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        with pytest.raises(GroupError):
            coset_system(G, ordering=[Permutation.identity(3), P("(1 2)", 3)])

    def test_ordering_identity_first(self, ex1):
        reps = list(ex1.reps)
        reps[0], reps[1] = reps[1], reps[0]
        with pytest.raises(GroupError, match="identity"):
            coset_system(ex1.group, ordering=reps)

    def test_ordering_n_block_first(self):
        cs = build_coset_system(natural_spec("D8"))
        assert cs.r == 2
        reps = [cs.reps[0], cs.reps[2], cs.reps[1], cs.reps[3]]
        with pytest.raises(GroupError, match="N/H block"):
            coset_system(cs.group, ordering=reps)


class TestPi:
    def test_pi2(self, ex1):
        assert right_action_pi(ex1, 2).images == (2, 1, 6, 5, 4, 3)

    def test_pi1_identity(self, catalogue_systems):
        for cs in catalogue_systems.values():
            assert right_action_pi(cs, 1).is_identity()

    def test_pi5(self, ex1):
        assert right_action_pi(ex1, 5).images == (5, 3, 4, 2, 6, 1)

    def test_range(self, ex1):
        with pytest.raises(GroupError):
            right_action_pi(ex1, 7)
        with pytest.raises(GroupError):
            right_action_pi(ex1, 0)

    def test_example2_first_block_rows(self, ex2):
        # rows i=1..8 of the displayed u-block: pi_j(i) for j = 1..8
        rows = {
            2: (2, 3, 4, 1, 6, 7, 8, 5),
            5: (5, 8, 7, 6, 1, 4, 3, 2),
            8: (8, 7, 6, 5, 4, 3, 2, 1),
        }
        for i, expected in rows.items():
            assert tuple(ex2.pi(j)(i) for j in range(1, 9)) == expected


class TestLambda:
    def test_identity(self, ex1):
        assert left_action_lambda(ex1, ex1.group.identity).is_identity()

    def test_not_in_group(self, ex1):
        with pytest.raises(GroupError):
            left_action_lambda(ex1, P("(1 2)", 6))

    def test_s3_left_multiplication(self, ex1):
        # abstract S3 elements in the same order; lambda_g(i) = index of s * e_i
        elems = [P(c, 3) for c in ["()", "(1 2)", "(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"]]
        s = P("(1 2 3)", 3)
        expected = tuple(elems.index(s * e) + 1 for e in elems)
        g = next(h for h in ex1.group if h(1) == 5)  # the element L((1 2 3)) sends e_1 to e_5
        assert left_action_lambda(ex1, g).images == expected

    def test_homomorphism(self, ex2):
        G = ex2.group.elements
        for g, h in zip(G[::5], G[3::7]):
            assert ex2.lam(g * h) == ex2.lam(g) * ex2.lam(h)


class TestMalle:
    def test_natural_s3(self):
        G = close_group([P("(1 2)", 3), P("(1 2 3)", 3)])
        inds = sorted(3 - len(g.cycles()) for g in G if not g.is_identity())
        assert inds == [1, 1, 1, 2, 2]
        assert malle_constant(G) == 1

    def test_c2_regular(self):
        G = close_group([P("(1 2)", 2)])
        assert malle_constant(G) == 1

    def test_s3_regular(self, ex1):
        inds = sorted(6 - len(g.cycles()) for g in ex1.group if not g.is_identity())
        assert inds == [3, 3, 3, 4, 4]
        assert malle_constant(ex1.group) == Fraction(1, 3)

    def test_trivial(self):
        with pytest.raises(GroupError):
            malle_constant(close_group([], degree=2))


def test_two_row_format():
    text = two_row(P("(1 2)(3 6)(4 5)", 6), "pi_2")
    assert text == "pi_2 = ( 1 2 3 4 5 6 )\n       ( 2 1 6 5 4 3 )"


def test_group_is_immutable_value(ex1):
    with pytest.raises(Exception):
        ex1.r = 3
    assert isinstance(ex1.group, PermutationGroup)
