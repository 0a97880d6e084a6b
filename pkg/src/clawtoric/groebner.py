"""Binomial division and Buchberger verification for quadratic binomial bases.

Monomials are handled as sorted tuples of word values; the lex-greater side
of a canonical binomial is always its plus monomial, so division only ever
rewrites the current lead.  Reduction of a binomial by a binomial basis
stays binomial (coefficients are always +-1), which keeps the whole engine
in multiset arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Binomial, Monomial, _cached_word, make_binomial

Key = tuple[int, ...]


def leading_monomial(b: Binomial) -> Monomial:
    """The lex-greater side; canonical storage keeps it in plus."""
    return b.plus


def _monomial_from_key(n: int, key: Key) -> Monomial:
    return Monomial(n, tuple(_cached_word(v, n) for v in key))


def _multiset_lcm(a: Key, b: Key) -> Key:
    # entrywise max multiplicity; inputs and output are sorted
    ia, ib, out = 0, 0, []
    while ia < len(a) and ib < len(b):
        if a[ia] == b[ib]:
            out.append(a[ia])
            ia += 1
            ib += 1
        elif a[ia] < b[ib]:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def _multiset_sub(a: Key, b: Key) -> Key:
    out = list(a)
    for v in b:
        out.remove(v)
    return tuple(out)


def s_polynomial(b1: Binomial, b2: Binomial) -> Binomial | None:
    """Cross-multiply to cancel the leads; None when the sides coincide."""
    if b1.n != b2.n:
        raise ValueError(f"mixed word lengths {b1.n} and {b2.n}")
    lead_lcm = _multiset_lcm(b1.plus.key, b2.plus.key)
    s1 = tuple(sorted(b1.minus.key + _multiset_sub(lead_lcm, b1.plus.key)))
    s2 = tuple(sorted(b2.minus.key + _multiset_sub(lead_lcm, b2.plus.key)))
    if s1 == s2:
        return None
    return Binomial(_monomial_from_key(b1.n, s1), _monomial_from_key(b1.n, s2))


@dataclass(frozen=True, slots=True)
class ReductionTrace:
    """Division record: each step rewrites the lead by one basis element."""

    start: Binomial
    steps: tuple[tuple[Binomial, Monomial], ...]
    final: Binomial | None

    def replay(self) -> Binomial | None:
        """Re-apply the steps to start and check they reproduce final."""
        current: Binomial | None = self.start
        for divisor, multiplier in self.steps:
            if current is None:
                raise ValueError("trace continues past the zero binomial")
            if (divisor.plus * multiplier).key != current.plus.key:
                raise ValueError("step divisor does not match the current lead")
            current = make_binomial(divisor.minus * multiplier, current.minus)
        if current != self.final:
            raise ValueError("replay does not reproduce the recorded final")
        return current


class BinomialReducer:
    """Division against a fixed quadratic basis, with an indexed lead lookup.

    The basis is stored sorted by lead (descending in the monomial order)
    and the divisor picked at each step is the first one in that order whose
    lead divides the current lead.
    """

    def __init__(self, basis: Iterable[Binomial]):
        elements = sorted(basis, key=lambda b: (b.plus.key, b.minus.key))
        lengths = {b.n for b in elements}
        if len(lengths) > 1:
            raise ValueError(f"mixed word lengths in basis: {sorted(lengths)}")
        for b in elements:
            if b.degree != 2:
                raise ValueError(f"reduction basis must be quadratic, got degree {b.degree}")
        self.elements: tuple[Binomial, ...] = tuple(elements)
        self.n: int | None = elements[0].n if elements else None
        self._plus: list[Key] = [b.plus.key for b in elements]
        self._minus: list[Key] = [b.minus.key for b in elements]
        index: dict[Key, int] = {}
        for pos, key in enumerate(self._plus):
            index.setdefault(key, pos)
        self._index = index

    def _find_divisor(self, lead: Key) -> int | None:
        get = self._index.get
        d = len(lead)
        best: int | None = None
        for x in range(d - 1):
            vx = lead[x]
            for y in range(x + 1, d):
                idx = get((vx, lead[y]))
                if idx is not None and (best is None or idx < best):
                    best = idx
        return best

    def _reduce_key(self, plus: Key, minus: Key) -> tuple[Key | None, Key | None, int]:
        # the lead strictly decreases each step, so this terminates
        steps = 0
        while True:
            idx = self._find_divisor(plus)
            if idx is None:
                return plus, minus, steps
            steps += 1
            replaced = list(plus)
            for v in self._plus[idx]:
                replaced.remove(v)
            replaced.extend(self._minus[idx])
            replaced.sort()
            new = tuple(replaced)
            if new == minus:
                return None, None, steps
            if new < minus:
                plus = new
            else:
                plus, minus = minus, new

    def _check_input(self, b: Binomial) -> None:
        if self.n is not None and b.n != self.n:
            raise ValueError(f"word length {b.n} does not match basis length {self.n}")

    def normal_form(self, b: Binomial) -> Binomial | None:
        """Fully reduce; None means b reduced to zero."""
        self._check_input(b)
        plus, minus, _ = self._reduce_key(b.plus.key, b.minus.key)
        if plus is None:
            return None
        return Binomial(_monomial_from_key(b.n, plus), _monomial_from_key(b.n, minus))

    def normal_form_with_trace(self, b: Binomial) -> tuple[Binomial | None, ReductionTrace]:
        self._check_input(b)
        plus, minus = b.plus.key, b.minus.key
        steps: list[tuple[Binomial, Monomial]] = []
        final: Binomial | None
        while True:
            idx = self._find_divisor(plus)
            if idx is None:
                final = Binomial(_monomial_from_key(b.n, plus), _monomial_from_key(b.n, minus))
                break
            steps.append(
                (self.elements[idx], _monomial_from_key(b.n, _multiset_sub(plus, self._plus[idx])))
            )
            replaced = list(plus)
            for v in self._plus[idx]:
                replaced.remove(v)
            replaced.extend(self._minus[idx])
            replaced.sort()
            new = tuple(replaced)
            if new == minus:
                final = None
                break
            if new < minus:
                plus = new
            else:
                plus, minus = minus, new
        return final, ReductionTrace(b, tuple(steps), final)

    def in_ideal(self, b: Binomial) -> bool:
        self._check_input(b)
        return self._reduce_key(b.plus.key, b.minus.key)[0] is None


def normal_form(b: Binomial, basis: Iterable[Binomial]) -> tuple[Binomial | None, ReductionTrace]:
    """One-shot division of b by the basis, with the step-by-step trace."""
    return BinomialReducer(basis).normal_form_with_trace(b)


def in_ideal(b: Binomial, basis: Iterable[Binomial] | BinomialReducer) -> bool:
    """Membership by reduction to zero; meaningful when the basis is Groebner."""
    reducer = basis if isinstance(basis, BinomialReducer) else BinomialReducer(basis)
    return reducer.in_ideal(b)


@dataclass(frozen=True, slots=True)
class PairOutcome:
    """What happened to the S-pair (i, j).

    The indices refer to the canonical lead-sorted basis, i.e. positions in
    ``BinomialReducer(basis).elements``, not in the iterable the caller
    passed in.
    """

    i: int
    j: int
    rule: str  # coprime-skip | shared-trailing-skip | spoly-zero | reduced | stuck
    steps: int


@dataclass(frozen=True, slots=True)
class GroebnerCertificate:
    n: int | None
    size: int
    strict: bool
    is_groebner: bool
    pairs_total: int
    reduced: int
    spoly_zero: int
    skipped_coprime: int
    skipped_shared_trailing: int
    max_steps: int
    failures: tuple[PairOutcome, ...]
    pairs: tuple[PairOutcome, ...] | None


def verify_groebner(
    basis: Iterable[Binomial],
    *,
    strict: bool = False,
    record_pairs: bool = False,
) -> GroebnerCertificate:
    """Run the Buchberger criterion over every S-pair of the basis.

    In strict mode every S-pair is reduced outright.  Otherwise two skip
    rules apply first: coprime leads (the product criterion) and a shared
    factor between the two trailing monomials.  Strict mode is the mode the
    acceptance checks rely on; the skip rules are conveniences.
    """
    reducer = BinomialReducer(basis)
    plus_keys = reducer._plus
    minus_keys = reducer._minus
    reduce_key = reducer._reduce_key
    m = len(plus_keys)
    records: list[PairOutcome] | None = [] if record_pairs else None
    failures: list[PairOutcome] = []
    reduced = spoly_zero = skipped_coprime = skipped_shared = max_steps = 0
    for i in range(m):
        p1 = plus_keys[i]
        m1 = minus_keys[i]
        p1a, p1b = p1
        m1a, m1b = m1
        for j in range(i + 1, m):
            p2 = plus_keys[j]
            m2 = minus_keys[j]
            if not strict:
                if p1a != p2[0] and p1a != p2[1] and p1b != p2[0] and p1b != p2[1]:
                    skipped_coprime += 1
                    if records is not None:
                        records.append(PairOutcome(i, j, "coprime-skip", 0))
                    continue
                if m1a == m2[0] or m1a == m2[1] or m1b == m2[0] or m1b == m2[1]:
                    skipped_shared += 1
                    if records is not None:
                        records.append(PairOutcome(i, j, "shared-trailing-skip", 0))
                    continue
            lead_lcm = _multiset_lcm(p1, p2)
            s1 = tuple(sorted(m1 + _multiset_sub(lead_lcm, p1)))
            s2 = tuple(sorted(m2 + _multiset_sub(lead_lcm, p2)))
            if s1 == s2:
                spoly_zero += 1
                if records is not None:
                    records.append(PairOutcome(i, j, "spoly-zero", 0))
                continue
            if s1 > s2:
                s1, s2 = s2, s1
            remainder, _, steps = reduce_key(s1, s2)
            if steps > max_steps:
                max_steps = steps
            if remainder is None:
                reduced += 1
                if records is not None:
                    records.append(PairOutcome(i, j, "reduced", steps))
            else:
                outcome = PairOutcome(i, j, "stuck", steps)
                failures.append(outcome)
                if records is not None:
                    records.append(outcome)
    return GroebnerCertificate(
        n=reducer.n,
        size=m,
        strict=strict,
        is_groebner=not failures,
        pairs_total=m * (m - 1) // 2,
        reduced=reduced,
        spoly_zero=spoly_zero,
        skipped_coprime=skipped_coprime,
        skipped_shared_trailing=skipped_shared,
        max_steps=max_steps,
        failures=tuple(failures),
        pairs=tuple(records) if records is not None else None,
    )


def is_groebner(basis: Iterable[Binomial], *, strict: bool = False) -> bool:
    """Convenience wrapper around verify_groebner."""
    return verify_groebner(basis, strict=strict).is_groebner
