"""The Hecke algebra: relations, Jucys-Murphy elements, centrality."""

import random
from itertools import permutations

import pytest

from grhecke import coxeter, hecke
from grhecke.coxeter import (
    from_word, identity, length, partitions_up_to, reduced_word, right_gen,
)
from grhecke.errors import InvalidInputError
from grhecke.hecke import (
    HeckeElt, e_sym, group_mul, is_central, jucys_murphy, m_sym, mul,
    mul_gen_right, specialize_group, t_basis, unit, zero,
)
from grhecke.polyring import IntPoly

ONE = IntPoly.const(1)
XI = IntPoly.xi()

S1 = (2, 1, 3)
S2 = (1, 3, 2)
W0 = (3, 2, 1)  # longest element of S_3


def all_reduced_words(w):
    """Every reduced word of w, by peeling each descent in turn."""
    if w == identity(len(w)):
        yield ()
        return
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            for rest in all_reduced_words(right_gen(w, i)):
                yield rest + (i,)


def random_element(n, rng, nterms=3, max_deg=2):
    perms = [tuple(p) for p in permutations(range(1, n + 1))]
    terms = {}
    for w in rng.sample(perms, nterms):
        coeffs = [rng.randint(-3, 3) for _ in range(max_deg + 1)]
        terms[w] = IntPoly(coeffs)
    return HeckeElt(n, terms)


class TestBasisAndRelations:
    def test_unit(self):
        assert t_basis(identity(3)) == unit(3)

    def test_single_generator(self):
        assert t_basis(S1).terms == {S1: ONE}

    def test_longest_element(self):
        assert t_basis(W0).terms == {W0: ONE}

    def test_quadratic_relation(self):
        got = mul_gen_right(t_basis(S1), 1)
        assert got == HeckeElt(3, {identity(3): ONE, S1: XI})

    def test_length_increasing(self):
        assert mul_gen_right(unit(3), 1) == t_basis(S1)
        assert mul_gen_right(t_basis(S2), 1) == t_basis(coxeter.right_gen(S2, 1))

    def test_generator_out_of_range(self):
        with pytest.raises(InvalidInputError):
            mul_gen_right(unit(3), 3)


class TestMul:
    def test_lengths_add(self):
        assert mul(t_basis(S1), t_basis(S2)) == t_basis(coxeter.compose(S1, S2))

    def test_quadratic_via_mul(self):
        assert mul(t_basis(S1), t_basis(S1)) == HeckeElt(3, {identity(3): ONE, S1: XI})

    def test_unit_law(self):
        h = t_basis(S1) + t_basis(S2)
        assert mul(h, unit(3)) == h
        assert mul(unit(3), h) == h

    def test_rank_mismatch(self):
        with pytest.raises(InvalidInputError):
            mul(unit(3), unit(4))

    def test_braid_independence(self):
        # multiply along every reduced word of every element of S_4
        for w in permutations(range(1, 5)):
            words = list(all_reduced_words(tuple(w)))
            results = set()
            for word in words:
                acc = unit(4)
                for i in word:
                    acc = mul_gen_right(acc, i)
                results.add(tuple(sorted((u, c.coeffs) for u, c in acc.terms.items())))
            assert len(results) == 1

    def test_associativity_random(self):
        rng = random.Random(20240803)
        for _ in range(8):
            a, b, c = (random_element(4, rng) for _ in range(3))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))

    def test_transpose_orientation_consistency(self):
        # force both orientations of the internal fold to be exercised
        heavy = t_basis((4, 3, 2, 1))
        light = t_basis((2, 1, 3, 4))
        direct = mul(heavy, light)
        acc = heavy
        for i in reduced_word((2, 1, 3, 4)):
            acc = mul_gen_right(acc, i)
        assert direct == acc


class TestJucysMurphy:
    def test_first_is_zero(self):
        assert jucys_murphy(1, 5) == zero(5)

    def test_second(self):
        assert jucys_murphy(2, 3) == t_basis(S1)

    def test_third_in_s3(self):
        assert jucys_murphy(3, 3) == t_basis(W0) + t_basis(S2)

    def test_out_of_range(self):
        with pytest.raises(InvalidInputError):
            jucys_murphy(4, 3)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_pairwise_commuting(self, n):
        ls = [jucys_murphy(i, n) for i in range(1, n + 1)]
        for a in ls:
            for b in ls:
                assert mul(a, b) == mul(b, a)


class TestMSym:
    def test_empty(self):
        assert m_sym((), 4) == unit(4)

    def test_single_row(self):
        want = jucys_murphy(2, 3) + jucys_murphy(3, 3)
        assert m_sym((1,), 3) == want
        assert m_sym((1,), 3) == t_basis(S1) + t_basis(S2) + t_basis(W0)

    def test_two_ones_is_l2_l3(self):
        got = m_sym((1, 1), 3)
        direct = mul(jucys_murphy(2, 3), jucys_murphy(3, 3))
        assert got == direct

    def test_too_many_parts_vanishes(self):
        assert m_sym((1, 1, 1, 1), 3) == zero(3)
        assert m_sym((1, 1, 1), 3) == zero(3)  # every monomial hits L_1 = 0

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_central_up_to_size_four(self, n):
        for lam in partitions_up_to(4):
            assert is_central(m_sym(lam, n)), (lam, n)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_z2_grading(self, n):
        # every term T_w x^j satisfies length(w) + j == |lam| (mod 2)
        for lam in partitions_up_to(4):
            h = m_sym(lam, n)
            if h:
                assert h.homogeneous_parity() == sum(lam) % 2, (lam, n)


class TestESym:
    def test_degree_zero(self):
        assert e_sym(0, 4) == unit(4)

    def test_degree_one(self):
        assert e_sym(1, 3) == jucys_murphy(2, 3) + jucys_murphy(3, 3)

    def test_degree_one_is_transposition_sum(self):
        n = 4
        want = zero(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                want = want + t_basis(coxeter.transposition(n, i, j))
        assert e_sym(1, n) == want

    def test_out_of_range(self):
        with pytest.raises(InvalidInputError):
            e_sym(5, 4)


class TestCentrality:
    def test_unit_is_central(self):
        assert is_central(unit(3))

    def test_generator_is_not(self):
        assert not is_central(t_basis(S1))

    def test_explicit_central_element(self):
        h = t_basis((2, 3, 1)) + t_basis((3, 1, 2)) + t_basis(W0).scale(XI)
        assert is_central(h)


class TestSpecialization:
    def test_drops_x_terms(self):
        h = unit(3) + t_basis(S1).scale(XI)
        assert specialize_group(h) == {identity(3): 1}

    def test_keeps_constants(self):
        h = t_basis(S1) + t_basis(S2)
        assert specialize_group(h) == {S1: 1, S2: 1}

    def test_homomorphism_property(self):
        rng = random.Random(99)
        for _ in range(8):
            a = random_element(4, rng)
            b = random_element(4, rng)
            assert specialize_group(mul(a, b)) == group_mul(
                specialize_group(a), specialize_group(b)
            )


class TestGroupMul:
    def test_unit(self):
        a = {S1: 2, W0: -1}
        assert group_mul(a, {identity(3): 1}) == a

    def test_involution(self):
        assert group_mul({S1: 1}, {S1: 1}) == {identity(3): 1}

    def test_rank_mismatch(self):
        with pytest.raises(InvalidInputError):
            group_mul({S1: 1}, {(2, 1, 3, 4): 1})


class TestSerialization:
    def test_sort_order(self):
        h = t_basis(W0) + t_basis(S2) + t_basis(S1) + unit(3)
        ws = [t["w"] for t in h.to_json_dict()["terms"]]
        assert ws == [[1, 2, 3], [1, 3, 2], [2, 1, 3], [3, 2, 1]]

    def test_round_trip(self):
        h = unit(3) + t_basis(S1).scale(IntPoly((0, 2))) - t_basis(W0)
        assert HeckeElt.from_json_dict(h.to_json_dict()) == h

    def test_rejects_bad_permutation(self):
        with pytest.raises(InvalidInputError):
            HeckeElt.from_json_dict({"n": 3, "terms": [{"w": [1, 1, 2], "c": ["1"]}]})
