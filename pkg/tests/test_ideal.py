"""The quadratic generating set: base case, lifting, and the
complementary construction."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clawtoric.core import Binomial, Monomial, Word, in_kernel
from clawtoric.ideal import (
    base_generators,
    build_generators,
    complementary_count,
    complementary_generators,
    fixed_positions,
    is_fully_complementary,
    lift_fixed_leaf,
)


def binom(text: str) -> Binomial:
    plus_text, minus_text = text.split(" - ")
    def side(t: str) -> Monomial:
        return Monomial.of(*(Word.from_string(f[2:]) for f in t.split("*")))
    return Binomial(side(plus_text), side(minus_text))


G3 = {
    "q_000*q_111 - q_011*q_100",
    "q_001*q_110 - q_011*q_100",
    "q_010*q_101 - q_011*q_100",
}

G4_FIXED = {
    # leaf 1 fixed at 0
    "q_0000*q_0111 - q_0100*q_0011",
    "q_0001*q_0110 - q_0100*q_0011",
    "q_0010*q_0101 - q_0100*q_0011",
    # leaf 2 fixed at 0
    "q_0000*q_1011 - q_1000*q_0011",
    "q_0001*q_1010 - q_1000*q_0011",
    "q_0010*q_1001 - q_1000*q_0011",
    # leaf 3 fixed at 0
    "q_0000*q_1101 - q_1000*q_0101",
    "q_0001*q_1100 - q_1000*q_0101",
    "q_0100*q_1001 - q_1000*q_0101",
    # leaf 4 fixed at 0
    "q_0000*q_1110 - q_1000*q_0110",
    "q_0010*q_1100 - q_1000*q_0110",
    "q_0100*q_1010 - q_1000*q_0110",
    # leaf 1 fixed at 1
    "q_1000*q_1111 - q_1100*q_1011",
    "q_1001*q_1110 - q_1100*q_1011",
    "q_1010*q_1101 - q_1100*q_1011",
    # leaf 2 fixed at 1
    "q_0100*q_1111 - q_1100*q_0111",
    "q_0101*q_1110 - q_1100*q_0111",
    "q_0110*q_1101 - q_1100*q_0111",
    # leaf 3 fixed at 1
    "q_0010*q_1111 - q_1010*q_0111",
    "q_0011*q_1110 - q_1010*q_0111",
    "q_0110*q_1011 - q_1010*q_0111",
    # leaf 4 fixed at 1
    "q_0001*q_1111 - q_1001*q_0111",
    "q_0011*q_1101 - q_1001*q_0111",
    "q_0101*q_1011 - q_1001*q_0111",
}

G4_COMPLEMENTARY = {
    "q_0000*q_1111 - q_1001*q_0110",
    "q_0001*q_1110 - q_1000*q_0111",
    "q_0011*q_1100 - q_1001*q_0110",
    "q_0010*q_1101 - q_1000*q_0111",
    "q_0101*q_1010 - q_1001*q_0110",
    "q_0100*q_1011 - q_1000*q_0111",
}


def test_base_generators_golden():
    base = base_generators()
    assert base.n == 3
    assert len(base) == 3
    assert not base.fixed_leaf
    assert base.complementary == frozenset(binom(t) for t in G3)


def test_g4_golden():
    gens = build_generators(4)
    assert len(gens) == 30
    assert gens.fixed_leaf == frozenset(binom(t) for t in G4_FIXED)
    assert gens.complementary == frozenset(binom(t) for t in G4_COMPLEMENTARY)


def test_totals_by_leaf_count():
    assert [len(build_generators(n)) for n in range(3, 9)] == [
        3,
        30,
        195,
        1050,
        5103,
        23310,
    ]


def test_complementary_count_formula():
    for n in range(4, 13):
        assert complementary_count(n) == (1 << (n - 1)) - 2 + (n % 2)
        assert len(complementary_generators(n)) == complementary_count(n)
    assert len(build_generators(3).complementary) == 3


def test_bounds():
    with pytest.raises(ValueError):
        build_generators(2)
    with pytest.raises(ValueError):
        build_generators(9, cap=8)
    with pytest.raises(ValueError):
        complementary_generators(3)


def test_every_generator_is_in_the_kernel():
    for n in range(3, 8):
        assert all(in_kernel(b) for b in build_generators(n))


def test_iteration_is_deterministic():
    gens = build_generators(5)
    assert list(gens) == list(build_generators(5))
    assert gens.sorted_generators() == tuple(gens)
    assert len(set(gens)) == len(gens)


# ---------------------------------------------------------------------------
# the fixed-leaf lift
# ---------------------------------------------------------------------------


def test_lifting_the_base_gives_the_printed_fixed_leaf_set():
    assert lift_fixed_leaf(base_generators()) == frozenset(binom(t) for t in G4_FIXED)


def test_lift_preimage_examples():
    lifted = build_generators(5).fixed_leaf
    q = "q_0000*q_1111 - q_1001*q_0110"
    assert binom(q) in build_generators(4).complementary
    # insertions at position 1
    assert binom("q_00000*q_01111 - q_01001*q_00110") in lifted
    assert binom("q_10000*q_11111 - q_11001*q_10110") in lifted
    # insertions at position 2
    assert binom("q_00000*q_10111 - q_10001*q_00110") in lifted
    assert binom("q_01000*q_11111 - q_11001*q_01110") in lifted


def test_lift_deduplicates_repeated_insertions():
    # 195 at n=5 means 300 raw insertions collapse to 180 distinct binomials
    gens = build_generators(5)
    assert len(gens.fixed_leaf) == 180
    assert len(gens.complementary) == 15


def test_every_lifted_generator_has_a_fixed_position():
    for b in build_generators(5).fixed_leaf:
        positions = fixed_positions(b)
        assert positions
        assert not is_fully_complementary(b)


@given(st.data())
def test_lift_inserts_one_common_bit(data):
    gens = sorted(build_generators(4), key=lambda b: (b.plus.key, b.minus.key))
    b = data.draw(st.sampled_from(gens))
    i = data.draw(st.integers(min_value=1, max_value=5))
    j = data.draw(st.sampled_from((0, 1)))
    words = [w.insert(i, j) for m in (b.plus, b.minus) for w in m.words]
    lifted = Binomial(Monomial.of(*words[:2]), Monomial.of(*words[2:]))
    assert in_kernel(lifted)
    assert i in fixed_positions(lifted)
    assert lifted in build_generators(5).fixed_leaf


# ---------------------------------------------------------------------------
# the complementary construction
# ---------------------------------------------------------------------------


def test_first_complementary_generator_for_odd_leaf_count():
    assert binom("q_00000*q_11111 - q_01111*q_10000") in build_generators(5).complementary


def test_odd_leaf_count_shares_one_trailing_monomial():
    shared = Monomial.of(Word.from_string("01111"), Word.from_string("10000"))
    for b in complementary_generators(5):
        assert b.minus == shared


def test_even_leaf_count_splits_trailing_monomials_by_root_parity():
    low = Monomial.of(Word.from_string("011111"), Word.from_string("100000"))
    high = Monomial.of(Word.from_string("011110"), Word.from_string("100001"))
    for b in complementary_generators(6):
        lead_parity = b.plus.words[0].parity
        assert b.minus == (low if lead_parity == 1 else high)
        # parities of the two sides agree, keeping the binomial in the kernel
        assert {w.parity for w in b.plus.words} == {w.parity for w in b.minus.words}


def test_complementary_generators_are_fully_complementary_kernel_binomials():
    for n in (4, 5, 6, 7):
        for b in complementary_generators(n):
            assert is_fully_complementary(b)
            assert fixed_positions(b) == ()
            assert in_kernel(b)


def test_leading_monomials_are_distinct_within_the_complementary_group():
    for n in (4, 5, 6):
        group = complementary_generators(n)
        assert len({b.plus for b in group}) == len(group)


def test_fixed_positions_examples():
    assert fixed_positions(binom("q_0000*q_0111 - q_0100*q_0011")) == (1,)
    assert fixed_positions(binom("q_00000*q_00111 - q_00011*q_00100")) == (1, 2)
    assert fixed_positions(binom("q_0000*q_1111 - q_1001*q_0110")) == ()
    assert is_fully_complementary(binom("q_0000*q_1111 - q_1001*q_0110"))
    assert not is_fully_complementary(binom("q_0000*q_0111 - q_0100*q_0011"))
