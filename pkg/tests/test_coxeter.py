"""Symmetric group combinatorics, checked against brute-force enumeration."""

import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from grhecke import coxeter
from grhecke.coxeter import (
    compose, conjugacy_class, fits_rank, from_word, identity, inverse, length,
    min_rep, minimal_length_elements, modified_cycle_type, partitions_of,
    partitions_up_to, reduced_word, right_gen,
)
from grhecke.errors import EmptyClassError, InvalidInputError


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def perm_strategy(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


class TestCompose:
    def test_identity_case(self):
        assert compose(identity(3), (2, 1, 3)) == (2, 1, 3)

    def test_involution(self):
        assert compose((2, 1, 3), (2, 1, 3)) == (1, 2, 3)

    def test_stated_convention(self):
        assert compose((2, 1, 3), (1, 3, 2)) == (2, 3, 1)

    def test_rank_mismatch(self):
        with pytest.raises(InvalidInputError):
            compose((1, 2), (1, 2, 3))

    @given(perm_strategy(5))
    def test_inverse(self, w):
        assert compose(w, inverse(w)) == identity(len(w))
        assert compose(inverse(w), w) == identity(len(w))


class TestLength:
    def test_identity(self):
        assert length(identity(4)) == 0

    def test_longest_element(self):
        assert length((3, 2, 1)) == 3

    def test_two_inversions(self):
        assert length((2, 3, 1)) == 2

    @given(perm_strategy(6), st.integers(1, 5))
    def test_generator_changes_length_by_one(self, w, i):
        if i >= len(w):
            return
        assert abs(length(right_gen(w, i)) - length(w)) == 1


class TestReducedWord:
    def test_identity(self):
        assert reduced_word(identity(4)) == ()

    def test_simple(self):
        assert reduced_word((2, 1, 3)) == (1,)

    def test_three_cycle_recomposes(self):
        word = reduced_word((2, 3, 1))
        assert len(word) == 2
        assert from_word(3, word) == (2, 3, 1)

    @given(perm_strategy(6))
    def test_recomposition_and_length(self, w):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert from_word(len(w), word) == w


class TestModifiedCycleType:
    def test_identity(self):
        assert modified_cycle_type(identity(3)) == ()

    def test_three_cycle(self):
        assert modified_cycle_type((2, 3, 1)) == (2,)

    def test_double_transposition(self):
        assert modified_cycle_type((2, 1, 4, 3)) == (1, 1)

    @given(perm_strategy(6), perm_strategy(6))
    def test_conjugation_invariant(self, u, w):
        if len(u) != len(w):
            return
        conj = compose(compose(u, w), inverse(u))
        assert modified_cycle_type(conj) == modified_cycle_type(w)


def class_size_formula(lam, n):
    """n! / z_rho for the plain cycle type rho corresponding to lam."""
    rho = sorted([p + 1 for p in lam] + [1] * (n - sum(lam) - len(lam)), reverse=True)
    z = 1
    for v in set(rho):
        m = rho.count(v)
        z *= v**m * math.factorial(m)
    return math.factorial(n) // z


class TestConjugacyClass:
    def test_identity_class(self):
        assert conjugacy_class((), 3) == {identity(3)}

    def test_transpositions(self):
        assert conjugacy_class((1,), 3) == {(2, 1, 3), (1, 3, 2), (3, 2, 1)}

    def test_three_cycles_in_s4(self):
        got = conjugacy_class((2,), 4)
        brute = {w for w in all_perms(4) if modified_cycle_type(w) == (2,)}
        assert got == brute
        assert len(got) == 8

    def test_empty_class_error(self):
        with pytest.raises(EmptyClassError):
            conjugacy_class((2, 1, 1), 3)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_classes_partition_sn(self, n):
        total = 0
        seen = set()
        for lam in partitions_up_to(n):
            if not fits_rank(lam, n):
                continue
            cls = conjugacy_class(lam, n)
            assert len(cls) == class_size_formula(lam, n)
            assert not (cls & seen)
            seen |= cls
            total += len(cls)
        assert total == math.factorial(n)

    @pytest.mark.parametrize("n", [4, 5])
    def test_against_brute_force(self, n):
        by_type = {}
        for w in all_perms(n):
            by_type.setdefault(modified_cycle_type(w), set()).add(w)
        for lam, cls in by_type.items():
            assert conjugacy_class(lam, n) == cls


class TestMinimalLength:
    def test_transposition_class(self):
        assert minimal_length_elements((1,), 3) == {(2, 1, 3), (1, 3, 2)}

    def test_identity_class(self):
        assert minimal_length_elements((), 5) == {identity(5)}

    def test_three_cycles(self):
        assert minimal_length_elements((2,), 3) == {(2, 3, 1), (3, 1, 2)}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_parity_matches_size(self, n):
        for lam in partitions_up_to(n):
            if not fits_rank(lam, n):
                continue
            elems = minimal_length_elements(lam, n)
            assert elems
            lengths = {length(w) for w in elems}
            assert len(lengths) == 1
            assert lengths.pop() % 2 == sum(lam) % 2


class TestMinRep:
    def test_transpositions(self):
        assert min_rep((1,), 3) == (1, 3, 2)

    def test_identity(self):
        assert min_rep((), 5) == (1, 2, 3, 4, 5)

    def test_three_cycles(self):
        assert min_rep((2,), 3) == (2, 3, 1)


class TestPartitions:
    def test_up_to_zero(self):
        assert partitions_up_to(0) == ((),)

    def test_up_to_two(self):
        assert partitions_up_to(2) == ((), (1,), (2,), (1, 1))

    def test_up_to_three_has_seven(self):
        parts = partitions_up_to(3)
        assert len(parts) == 7
        assert parts[-1] == (1, 1, 1)

    def test_of_exact_size(self):
        assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))

    def test_negative_rejected(self):
        with pytest.raises(InvalidInputError):
            partitions_up_to(-1)
