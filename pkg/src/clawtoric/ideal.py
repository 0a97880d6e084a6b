"""Quadratic generating set for the kernel ideal.

Every quadratic kernel binomial shows, at each leaf, either the same state
in all four words (a fixed leaf) or complementary states within both word
pairs.  The generating set is built along that dichotomy:

  - fixed-leaf generators arise by inserting a constant state at one leaf
    position into every generator one level down, for every position and
    both states, de-duplicated;
  - complementary generators pair words with their complements directly.
    For odd n every complementary pair goes against the single trailing
    pair q_01..1 * q_10..0.  For even n the two sides must agree on the
    root parity, so pairs whose words have odd bit sum go against
    q_01..1 * q_10..0 and pairs with even bit sum against q_01..10 * q_10..01.

The base case at three leaves is the three quadrics that tie the four
complementary pairs together through q_100 * q_011.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain

from .core import (
    MAX_LEAVES,
    Binomial,
    Monomial,
    Word,
    _cached_word,
    _insert_bit,
)


def _binomial_from_values(n: int, plus: tuple[int, int], minus: tuple[int, int]) -> Binomial:
    return Binomial(
        Monomial(n, (_cached_word(plus[0], n), _cached_word(plus[1], n))),
        Monomial(n, (_cached_word(minus[0], n), _cached_word(minus[1], n))),
    )


def _sort_key(b: Binomial) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (b.plus.key, b.minus.key)


@dataclass(frozen=True, slots=True)
class GeneratorSet:
    """Quadratic generators split by the fixed-leaf/complementary dichotomy."""

    n: int
    fixed_leaf: frozenset[Binomial]
    complementary: frozenset[Binomial]

    def __len__(self) -> int:
        return len(self.fixed_leaf) + len(self.complementary)

    def __iter__(self):
        """Deterministic order: fixed-leaf then complementary, lead descending."""
        return chain(
            sorted(self.fixed_leaf, key=_sort_key),
            sorted(self.complementary, key=_sort_key),
        )

    def sorted_generators(self) -> tuple[Binomial, ...]:
        return tuple(self)


def base_generators() -> GeneratorSet:
    """The three quadrics at n = 3; all of them are complementary."""
    minus = (0b100, 0b011)
    members = frozenset(
        _binomial_from_values(3, (w, 0b111 ^ w), minus) for w in (0b000, 0b001, 0b010)
    )
    return GeneratorSet(3, frozenset(), members)


def lift_fixed_leaf(lower: GeneratorSet) -> frozenset[Binomial]:
    """Insert a constant state at every position into every lower generator.

    The inserted leaf is fixed in all four words, and deleting it recovers
    the lower generator, so each output projects back into the lower kernel.
    Insertion preserves both the word order inside each monomial and the
    lead/trail orientation, because splicing the same bit at the same place
    is monotone for the binary counting order.
    """
    m = lower.n
    n = m + 1
    seen: set[tuple[int, int, int, int]] = set()
    for b in lower:
        p0, p1 = b.plus.key
        m0, m1 = b.minus.key
        for i in range(1, n + 1):
            for j in (0, 1):
                seen.add(
                    (
                        _insert_bit(p0, m, i, j),
                        _insert_bit(p1, m, i, j),
                        _insert_bit(m0, m, i, j),
                        _insert_bit(m1, m, i, j),
                    )
                )
    return frozenset(
        _binomial_from_values(n, (t[0], t[1]), (t[2], t[3])) for t in seen
    )


def complementary_generators(n: int) -> frozenset[Binomial]:
    """Generators whose word pairs are complementary at every leaf, n >= 4.

    The trailing complementary pairs supply the right-hand monomials; every
    other pair {w, complement(w)} supplies a left-hand monomial.  For even n
    the right-hand monomial is chosen to match the root parity of the pair.
    """
    if n < 4:
        raise ValueError(f"direct complementary construction needs n >= 4, got {n}")
    full = (1 << n) - 1
    low_odd = (1 << (n - 1)) - 1  # 01..1
    low_even = low_odd - 1        # 01..10
    pair_odd = (low_odd, full ^ low_odd)
    pair_even = (low_even, full ^ low_even)
    out: list[Binomial] = []
    if n % 2:
        # odd bit count flips parity under complement, so the root parities
        # of any two complementary pairs agree; one right-hand pair serves all
        for w in range(low_odd):
            out.append(_binomial_from_values(n, (w, full ^ w), pair_odd))
    else:
        for w in range(low_even):
            minus = pair_odd if (w.bit_count() & 1) else pair_even
            out.append(_binomial_from_values(n, (w, full ^ w), minus))
    return frozenset(out)


def complementary_count(n: int) -> int:
    """Size of the complementary group: 2^(n-1) - 2 + (n mod 2)."""
    return (1 << (n - 1)) - 2 + (n % 2)


@lru_cache(maxsize=None)
def _build(n: int) -> GeneratorSet:
    if n == 3:
        return base_generators()
    lower = _build(n - 1)
    return GeneratorSet(n, lift_fixed_leaf(lower), complementary_generators(n))


def build_generators(n: int, cap: int = MAX_LEAVES) -> GeneratorSet:
    """The full generating set for n leaves, n >= 3."""
    if not 3 <= n <= cap:
        raise ValueError(f"n must be in 3..{cap}, got {n}")
    return _build(n)


# ---------------------------------------------------------------------------
# structural predicates used to re-verify the dichotomy
# ---------------------------------------------------------------------------


def _four_values(b: Binomial) -> tuple[int, int, int, int]:
    if b.degree != 2:
        raise ValueError(f"expected a quadratic binomial, got degree {b.degree}")
    return (*b.plus.key, *b.minus.key)


def fixed_positions(b: Binomial) -> tuple[int, ...]:
    """Leaves at which all four words agree, 1-based."""
    a, c, d, e = _four_values(b)
    n = b.n
    varying = (a ^ c) | (a ^ d) | (a ^ e)
    return tuple(i for i in range(1, n + 1) if not (varying >> (n - i)) & 1)


def is_fully_complementary(b: Binomial) -> bool:
    """True iff both word pairs are complementary at every leaf."""
    a, c, d, e = _four_values(b)
    full = (1 << b.n) - 1
    return (a ^ c) == full and (d ^ e) == full
