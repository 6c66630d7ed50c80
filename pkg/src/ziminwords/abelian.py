"""Abelian pattern avoidance: equivalence, abelian Zimin occurrences, g(n, k).

Two words are abelian-equivalent when they have the same Parikh vector
(per-letter counts).  An abelian occurrence of Z_n in w is a pair
(j, lambda): a start offset plus a positive length for each variable; the
induced factorization of w[j : j + width] into 2^n - 1 blocks, with block
lengths following the variable sequence of Z_n, must have abelian-equal
blocks wherever Z_n repeats a variable.  width(lambda) is
sum_i 2^(n-i) * lambda(x_i).

g(n, k) is the abelian analogue of f(n, k) and is computed by the same
avoiding-tree DFS, pruning on abelian encounters: a new abelian occurrence
created by appending one letter necessarily ends at the last position.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Iterator, Optional, Sequence

from .errors import ResourceLimitError
from .words import DEFAULT_DIGIT_CAP, guarded_power
from .zimin import zimin_pattern


def parikh(w: Sequence) -> Counter:
    """Parikh vector of w as letter -> count."""
    return Counter(w)


def abelian_equiv(u: Sequence, v: Sequence) -> bool:
    return len(u) == len(v) and Counter(u) == Counter(v)


@dataclass(frozen=True)
class AbelianAssignment:
    """Variable lengths (lambda(x1), ..., lambda(xn)), all positive."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        if any(l < 1 for l in self.lengths):
            raise ValueError("variable lengths must be positive")

    def __getitem__(self, variable: int) -> int:
        return self.lengths[variable - 1]

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def width(self) -> int:
        n = self.n
        return sum(2 ** (n - i) * l for i, l in enumerate(self.lengths, start=1))


def _block_spans(j: int, n: int, lam: AbelianAssignment) -> list[tuple[int, int, int]]:
    """(variable, start, end) for the 2^n - 1 blocks starting at offset j."""
    spans = []
    pos = j
    for v in zimin_pattern(n):
        ln = lam[v]
        spans.append((v, pos, pos + ln))
        pos += ln
    return spans


def abelian_occurrence(w: Sequence, j: int, n: int, lam: AbelianAssignment) -> bool:
    """Whether (j, lam) is an abelian occurrence of Z_n in w."""
    if lam.n != n:
        raise ValueError(f"assignment has {lam.n} variables, expected {n}")
    if j < 0 or j + lam.width > len(w):
        raise ValueError(f"occurrence window [{j}, {j + lam.width}) outside the word")
    reference: dict[int, Counter] = {}
    for v, a, b in _block_spans(j, n, lam):
        vec = Counter(w[a:b])
        if v not in reference:
            reference[v] = vec
        elif reference[v] != vec:
            return False
    return True


def assignments_of_width(n: int, width: int) -> Iterator[AbelianAssignment]:
    """All lambda with the given width, lexicographic on (lambda(x1), ...)."""
    weights = [2 ** (n - i) for i in range(1, n + 1)]
    suffix_min = [sum(weights[i:]) for i in range(n + 1)]

    def rec(i: int, remaining: int, acc: tuple[int, ...]):
        if i == n:
            if remaining == 0:
                yield AbelianAssignment(acc)
            return
        c = weights[i]
        l = 1
        while c * l + suffix_min[i + 1] <= remaining:
            yield from rec(i + 1, remaining - c * l, acc + (l,))
            l += 1

    yield from rec(0, width, ())


def encounters_abelian_zimin(
    w: Sequence, n: int
) -> Optional[tuple[int, AbelianAssignment]]:
    """First abelian occurrence of Z_n in w, or None.

    Enumeration order: offset j ascending, width ascending, lambda
    lexicographic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    min_width = 2**n - 1
    for j in range(len(w) - min_width + 1):
        for width in range(min_width, len(w) - j + 1):
            for lam in assignments_of_width(n, width):
                if abelian_occurrence(w, j, n, lam):
                    return j, lam
    return None


def encounters_abelian_zimin_naive(w: Sequence, n: int) -> bool:
    """Fully naive oracle: every infix, every factorization into blocks."""
    zseq = tuple(zimin_pattern(n))
    m = len(zseq)
    for s in range(len(w)):
        for e in range(s + m, len(w) + 1):
            seg = w[s:e]
            for cuts in combinations(range(1, len(seg)), m - 1):
                bounds = (0,) + cuts + (len(seg),)
                vecs: dict[int, Counter] = {}
                ok = True
                for t in range(m):
                    block = seg[bounds[t] : bounds[t + 1]]
                    v = zseq[t]
                    vec = Counter(block)
                    if v not in vecs:
                        vecs[v] = vec
                    elif vecs[v] != vec:
                        ok = False
                        break
                if ok:
                    return True
    return False


class AbelianSuffixTracker:
    """Incremental check for the g-search: prefix Parikh sums plus a scan of
    all suffix-anchored (j, lambda) windows on every push."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.word: list[int] = []
        self._sums = [(0,) * k]  # Parikh vector of every prefix
        self._zseq = tuple(zimin_pattern(n)) if n >= 1 else ()

    def _vec(self, a: int, b: int) -> tuple[int, ...]:
        sa, sb = self._sums[a], self._sums[b]
        return tuple(sb[t] - sa[t] for t in range(self.k))

    def try_push(self, c: int) -> bool:
        n = self.n
        if n == 1:
            return False
        word = self.word
        word.append(c)
        last = self._sums[-1]
        self._sums.append(last[:c] + (last[c] + 1,) + last[c + 1 :])
        length = len(word)
        min_width = 2**n - 1
        zseq = self._zseq
        for width in range(min_width, length + 1):
            j = length - width
            for lam in assignments_of_width(n, width):
                vecs: dict[int, tuple] = {}
                pos = j
                ok = True
                for v in zseq:
                    ln = lam[v]
                    vec = self._vec(pos, pos + ln)
                    pos += ln
                    if v not in vecs:
                        vecs[v] = vec
                    elif vecs[v] != vec:
                        ok = False
                        break
                if ok:
                    self.pop()
                    return False
        return True

    def pop(self):
        self.word.pop()
        self._sums.pop()


def g_value(n: int, k: int, **kwargs):
    """(g(n,k), certificate) when exhausted, (None, certificate) otherwise."""
    from .search import longest_avoiding

    cert = longest_avoiding(n, k, mode="abelian", **kwargs)
    return cert.implied_f(), cert


# ---------------------------------------------------------------------------
# bounds


def g_lower_bound(n: int, k: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """k^(floor(2^n / (n+2)) - 1), a strict lower bound on g(n, k)."""
    if n < 2 or k < 2:
        raise ValueError("stated for n >= 2 and k >= 2")
    return guarded_power(k, 2**n // (n + 2) - 1, digit_cap)


def g_upper_bound(n: int, k: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """Closed-form doubly-exponential upper bound 2^((4k)^n (n-1)!)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return guarded_power(2, (4 * k) ** n * factorial(n - 1), digit_cap)


def g_upper_recurrence(n: int, k: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """The tighter chained bound g(m+1) <= (g(m)+1) (g(m)^(k m)+1), g(1)=1."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    g = 1
    for m in range(1, n):
        power = 1 if g == 1 else guarded_power(g, k * m, digit_cap)
        g = (g + 1) * (power + 1)
        if g.bit_length() > 4 * digit_cap:
            raise ResourceLimitError("recurrence value exceeds the digit cap")
    return g


def delta_upper_bound(n: int, k: int, length: int) -> Fraction:
    """length^(n+2) / k^(2^n - n - 1): bound on the expected number of
    abelian Z_n occurrences in a random word of the given length."""
    if n < 1 or k < 2 or length < 0:
        raise ValueError("need n >= 1, k >= 2, length >= 0")
    return Fraction(length ** (n + 2), k ** (2**n - n - 1))


# ---------------------------------------------------------------------------
# probability oracles for the two claims behind the lower bound


def claim1_probability(k: int, h: int, m: int, cap: int = 5_000_000) -> Fraction:
    """Exact probability that m uniform words of length h over [k] are all
    abelian-equivalent, by full enumeration of the k^(h m) tuples."""
    if k < 2 or h < 1 or m < 2:
        raise ValueError("need k >= 2, h >= 1, m >= 2")
    total = k ** (h * m)
    if total > cap:
        raise ResourceLimitError(f"{total} tuples exceed the enumeration cap {cap}")
    words = list(product(range(k), repeat=h))
    hits = 0
    for tup in product(words, repeat=m):
        first = Counter(tup[0])
        if all(Counter(u) == first for u in tup[1:]):
            hits += 1
    return Fraction(hits, total)


def claim1_bound(k: int, m: int) -> Fraction:
    return Fraction(1, k ** (m - 1))


def claim2_probability(n: int, k: int, lam: AbelianAssignment, cap: int = 5_000_000) -> Fraction:
    """Exact probability that (0, lam) is an abelian occurrence of Z_n in a
    uniform word of length width(lam), by full enumeration."""
    width = lam.width
    total = k**width
    if total > cap:
        raise ResourceLimitError(f"{total} words exceed the enumeration cap {cap}")
    hits = 0
    for w in product(range(k), repeat=width):
        if abelian_occurrence(w, 0, n, lam):
            hits += 1
    return Fraction(hits, total)


def claim2_bound(n: int, k: int) -> Fraction:
    return Fraction(1, k ** (2**n - n - 1))
