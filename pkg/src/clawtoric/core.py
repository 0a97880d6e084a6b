"""Words, parameter variables, monomials, and binomials in Fourier coordinates.

The star tree with one internal node and n leaves has, after the discrete
Fourier change of coordinates for the two-state group-based model, one
coordinate q_w per binary word w of length n.  The monomial parametrization
sends q_w to the product of one leaf parameter a_{w_i}^(i) per leaf and one
root parameter a_s^(n+1), where s is the bit sum of w mod 2.  Everything
downstream (incidence matrix, kernel lattice, quadratic generators) is
phrased in terms of these words and their products.

Variable orders used throughout:
  - parameter variables: a_0^(1) > ... > a_0^(n+1) > a_1^(1) > ... > a_1^(n+1)
  - coordinates: q_w1 > q_w2 iff w1 precedes w2 in binary counting order
  - monomials: lexicographic, induced by the coordinate order
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Guard against accidental 2^n blowups; not a semantic limit.
MAX_LEAVES = 16


def _check_position(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"position {i} out of range 1..{n}")


def _insert_bit(value: int, n: int, position: int, bit: int) -> int:
    """Insert bit at 1-based position of an n-bit word, giving an (n+1)-bit word."""
    low_width = n - position + 1
    high = value >> low_width
    low = value & ((1 << low_width) - 1)
    return (high << (low_width + 1)) | (bit << low_width) | low


def _delete_bit(value: int, n: int, position: int) -> int:
    """Delete the 1-based position from an n-bit word, giving an (n-1)-bit word."""
    low_width = n - position
    high = value >> (low_width + 1)
    low = value & ((1 << low_width) - 1)
    return (high << low_width) | low


@dataclass(frozen=True, slots=True)
class Word:
    """A length-n binary word; leaf 1 is the leftmost (most significant) bit."""

    value: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"word length must be at least 2, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"value {self.value} out of range for {self.n} bits")

    @classmethod
    def from_string(cls, text: str) -> Word:
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary word: {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def from_bits(cls, bits: tuple[int, ...] | list[int]) -> Word:
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bad bit {b!r}")
            value = (value << 1) | b
        return cls(value, len(bits))

    def bit(self, i: int) -> int:
        """Observed state at leaf i (1-based, leftmost = leaf 1)."""
        _check_position(i, self.n)
        return (self.value >> (self.n - i)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.n - i)) & 1 for i in range(1, self.n + 1))

    @property
    def parity(self) -> int:
        """Bit sum mod 2; selects the root parameter."""
        return self.value.bit_count() & 1

    def complement(self) -> Word:
        return Word(self.value ^ ((1 << self.n) - 1), self.n)

    def delete(self, position: int) -> Word:
        _check_position(position, self.n)
        return Word(_delete_bit(self.value, self.n, position), self.n - 1)

    def insert(self, position: int, bit: int) -> Word:
        """New word of length n+1 with the bit at 1-based position of the result."""
        _check_position(position, self.n + 1)
        if bit not in (0, 1):
            raise ValueError(f"bad bit {bit!r}")
        return Word(_insert_bit(self.value, self.n, position, bit), self.n + 1)

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")


@lru_cache(maxsize=None)
def _cached_word(value: int, n: int) -> Word:
    # Interning keeps bulk construction (hundreds of thousands of generators)
    # from allocating the same few thousand words over and over.
    return Word(value, n)


def compare_words(w1: Word, w2: Word) -> int:
    """Sign of the coordinate comparison: +1 iff q_w1 > q_w2.

    Coordinates are ordered against binary counting: q_w1 > q_w2 iff the
    value of w1 is smaller.
    """
    if w1.n != w2.n:
        raise ValueError(f"mixed word lengths {w1.n} and {w2.n}")
    return (w2.value > w1.value) - (w2.value < w1.value)


@dataclass(frozen=True, slots=True)
class ParamVariable:
    """Model parameter a_g^(i): state g at leaf i, or at the root when i = n+1."""

    g: int
    i: int

    def __str__(self) -> str:
        return f"a_{self.g}^({self.i})"


@dataclass(frozen=True, slots=True)
class Monomial:
    """Multiset of words of a fixed length, stored in descending coordinate order."""

    n: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        for w in self.words:
            if w.n != self.n:
                raise ValueError(f"word length {w.n} does not match monomial n={self.n}")
        values = tuple(w.value for w in self.words)
        if any(values[k] > values[k + 1] for k in range(len(values) - 1)):
            object.__setattr__(
                self, "words", tuple(sorted(self.words, key=lambda w: w.value))
            )

    @classmethod
    def of(cls, *words: Word) -> Monomial:
        if not words:
            raise ValueError("cannot infer n for an empty monomial; use Monomial(n, ())")
        return cls(words[0].n, words)

    @property
    def degree(self) -> int:
        return len(self.words)

    @property
    def key(self) -> tuple[int, ...]:
        """Ascending word values; smaller key means lex-greater monomial."""
        return tuple(w.value for w in self.words)

    def __mul__(self, other: Monomial) -> Monomial:
        if other.n != self.n:
            raise ValueError(f"mixed word lengths {self.n} and {other.n}")
        return Monomial(self.n, self.words + other.words)

    def __str__(self) -> str:
        if not self.words:
            return "1"
        return "*".join(f"q_{w}" for w in self.words)


def compare_monomials_lex(m1: Monomial, m2: Monomial) -> int:
    """Sign of the lex comparison: +1 iff m1 > m2.

    For equal degrees, lex comparison equals comparison of the factor
    sequences sorted in descending variable order, which is the stored order.
    """
    if m1.n != m2.n:
        raise ValueError(f"mixed word lengths {m1.n} and {m2.n}")
    if m1.degree != m2.degree:
        raise ValueError(f"mixed degrees {m1.degree} and {m2.degree}")
    k1, k2 = m1.key, m2.key
    return (k2 > k1) - (k2 < k1)


@dataclass(frozen=True, slots=True)
class Binomial:
    """Difference of two equal-degree monomials, stored with plus lex-greater."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self) -> None:
        if self.plus.n != self.minus.n:
            raise ValueError(f"mixed word lengths {self.plus.n} and {self.minus.n}")
        if self.plus.degree != self.minus.degree:
            raise ValueError(
                f"mixed degrees {self.plus.degree} and {self.minus.degree}"
            )
        pk, mk = self.plus.key, self.minus.key
        if pk == mk:
            raise ValueError("zero binomial; use make_binomial for a None outcome")
        if pk > mk:
            # larger key = lex-smaller monomial; swap so plus is the lead
            plus, minus = self.minus, self.plus
            object.__setattr__(self, "plus", plus)
            object.__setattr__(self, "minus", minus)

    @property
    def n(self) -> int:
        return self.plus.n

    @property
    def degree(self) -> int:
        return self.plus.degree

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"


def make_binomial(m1: Monomial, m2: Monomial) -> Binomial | None:
    """Canonical binomial m1 - m2, or None when the sides coincide."""
    if m1.n == m2.n and m1.key == m2.key:
        return None
    return Binomial(m1, m2)


# ---------------------------------------------------------------------------
# the parametrization map and its kernel
# ---------------------------------------------------------------------------


def param_image(w: Word) -> tuple[ParamVariable, ...]:
    """Parameters dividing the image of q_w: one per leaf plus the root."""
    leaves = tuple(ParamVariable(w.bit(i), i) for i in range(1, w.n + 1))
    return leaves + (ParamVariable(w.parity, w.n + 1),)


def param_image_monomial(m: Monomial) -> tuple[ParamVariable, ...]:
    """Multiset union of the factor images, sorted by (position, state)."""
    merged: list[ParamVariable] = []
    for w in m.words:
        merged.extend(param_image(w))
    merged.sort(key=lambda v: (v.i, v.g))
    return tuple(merged)


def _image_key(m: Monomial) -> tuple[int, ...]:
    # Same multiset as param_image_monomial, packed as (i << 1) | g integers.
    parts: list[int] = []
    for w in m.words:
        value, n = w.value, w.n
        parts.extend((i << 1) | ((value >> (n - i)) & 1) for i in range(1, n + 1))
        parts.append(((n + 1) << 1) | (value.bit_count() & 1))
    parts.sort()
    return tuple(parts)


def in_kernel(b: Binomial) -> bool:
    """True iff both sides have the same parameter multiset."""
    return _image_key(b.plus) == _image_key(b.minus)


def project(b: Binomial, position: int) -> Binomial | None:
    """Delete one position from every word; None when the sides collapse."""
    if b.n < 3:
        raise ValueError(f"projection needs word length >= 3, got {b.n}")
    _check_position(position, b.n)
    plus = Monomial(b.n - 1, tuple(w.delete(position) for w in b.plus.words))
    minus = Monomial(b.n - 1, tuple(w.delete(position) for w in b.minus.words))
    return make_binomial(plus, minus)
