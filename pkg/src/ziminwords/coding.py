"""The binary coding of ranked words and its partial-decoding machinery.

Each symbol is coded by

    psi(0_n) = 00 (01)^{n-1} 00        psi(1_n) = 11 (01)^{n-1} 11

so the code of an order-n symbol has 2n + 2 bits and the set of all codes
forms an infix code.  Around the codes live four regular languages: C (the
codes themselves), L (strict suffixes of codes), R (strict prefixes) and
F (strict infixes).  An infix of a coded word that is not "simple" admits
exactly one parse (l, u, r) in L x Sigma* x R with value l psi(u) r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import automata
from .automata import Dfa
from .counters import DEFAULT_SYMBOL_CAP, counter_length, counter_stream
from .errors import ResourceLimitError
from .words import RankedSymbol, RankedWord, occurrences

# Thresholds from the definition of a simple word.
SIMPLE_LENGTH_THRESHOLD = 11
RUN_LENGTH_THRESHOLD = 10

# The four languages as regular expressions over {0,1}.
C_REGEX = "00(01)*00|11(01)*11"
L_REGEX = "(|0|1)|(|1)(01)*11|(|0|1)(01)*00"
R_REGEX = "(|0|1)|11(01)*(|0|1)|00(01)*(|0)"
F_REGEX = "(|0)(01)*(|0)|(|1)(01)*(|0|1)"


def psi_symbol(s: RankedSymbol) -> str:
    b = "0" if s.bit == 0 else "1"
    return b + b + "01" * (s.order - 1) + b + b


def psi(w: Iterable[RankedSymbol]) -> str:
    """Code of a ranked word; accepts any iterable of symbols."""
    return "".join(psi_symbol(s) for s in w)


def encoded_counter(index: int, order: int, symbol_cap: int | None = DEFAULT_SYMBOL_CAP) -> str:
    """psi(C_index^order), built from the counter stream."""
    if symbol_cap is not None and counter_length(order) > symbol_cap:
        raise ResourceLimitError(
            f"order-{order} counters have {counter_length(order)} symbols, over the cap {symbol_cap}"
        )
    return psi(counter_stream(index, order))


class LanguageDfas(NamedTuple):
    C: Dfa
    L: Dfa
    R: Dfa
    F: Dfa


@lru_cache(maxsize=1)
def language_dfas() -> LanguageDfas:
    """Minimal DFAs for C, L, R and F, built once from the regexes."""
    return LanguageDfas(
        C=automata.minimize(automata.from_regex(C_REGEX)),
        L=automata.minimize(automata.from_regex(L_REGEX)),
        R=automata.minimize(automata.from_regex(R_REGEX)),
        F=automata.minimize(automata.from_regex(F_REGEX)),
    )


@lru_cache(maxsize=1)
def _reversed_r_dfa() -> Dfa:
    return automata.minimize(automata.reverse(language_dfas().R))


def is_simple(a: str) -> bool:
    """len < 11, or a strict infix of one code, or containing a 10-run."""
    if len(a) < SIMPLE_LENGTH_THRESHOLD:
        return True
    if "0" * RUN_LENGTH_THRESHOLD in a or "1" * RUN_LENGTH_THRESHOLD in a:
        return True
    return language_dfas().F.accepts(a)


@dataclass(frozen=True)
class Parse:
    """A partial decoding (left, center, right) with value left psi(center) right."""

    left: str
    center: RankedWord
    right: str

    @property
    def value(self) -> str:
        return self.left + psi(self.center) + self.right

    def __str__(self):
        return f"({self.left or 'e'}, {str(self.center) or 'e'}, {self.right or 'e'})"


@dataclass(frozen=True)
class ParseContext:
    """The infix of the host word spanned by a parse occurrence.

    Covers the center plus one extra symbol on each side on which the
    parse has a non-empty left/right part.
    """

    word: RankedWord
    start: int


def _code_block_chain(a: str, start: int) -> list[tuple[int, tuple[RankedSymbol, ...]]]:
    """Greedy maximal decomposition of a[start:] into code blocks.

    Returns the cut positions: (end, symbols decoded so far) after each
    complete block.  C is a prefix code, so the chain is unique.
    """
    chain = []
    symbols: list[RankedSymbol] = []
    pos = start
    n = len(a)
    while pos + 4 <= n:
        c = a[pos]
        if a[pos + 1] != c:
            break
        order = 1
        q = pos + 2
        terminal = c + c
        closed = False
        while q + 2 <= n:
            pair = a[q : q + 2]
            if pair == terminal:
                closed = True
                break
            if pair == "01":
                order += 1
                q += 2
            else:
                break
        if not closed:
            break
        symbols.append(RankedSymbol(int(c), order))
        pos = q + 2
        chain.append((pos, tuple(symbols)))
    return chain


def parses(a: str) -> list[Parse]:
    """Every triple (l, u, r) in L x Sigma* x R with l psi(u) r == a.

    Ordered by |l| ascending, then |u| ascending.  Non-simple infixes of
    coded words admit exactly one parse; unparseable words give [].
    """
    dfas = language_dfas()
    n = len(a)
    l_ends = dfas.L.accepting_prefixes(a)
    rev_accept = _reversed_r_dfa().accepting_prefixes(a[::-1])
    r_starts = {n - i for i in rev_accept}
    out = []
    for i in l_ends:
        left = a[:i]
        if i in r_starts:
            out.append(Parse(left, RankedWord(()), a[i:]))
        for end, symbols in _code_block_chain(a, i):
            if end in r_starts:
                out.append(Parse(left, RankedWord(symbols), a[end:]))
    return out


def parse_of(a: str) -> Parse:
    """The unique parse of a non-simple infix of a coded word."""
    found = parses(a)
    if len(found) != 1:
        raise ValueError(f"expected a unique parse, found {len(found)} for {a!r}")
    return found[0]


def parse_occurrences(p: Parse, w: RankedWord) -> list[int]:
    """Offsets m of the parse center in w meeting the boundary conditions.

    The left part, when non-empty, must be a suffix of the code of the
    symbol before the center; symmetrically for the right part.
    """
    u = p.center
    out = []
    for m in occurrences(u, w):
        if p.left:
            if m == 0 or not psi_symbol(w[m - 1]).endswith(p.left):
                continue
        if p.right:
            if m + len(u) >= len(w) or not psi_symbol(w[m + len(u)]).startswith(p.right):
                continue
        out.append(m)
    return out


def context_of(p: Parse, w: RankedWord, m: int) -> ParseContext:
    """The context of the occurrence m of parse p in w."""
    if m not in parse_occurrences(p, w):
        raise ValueError(f"{m} is not an occurrence of the parse in the word")
    d0 = 1 if p.left else 0
    d1 = 1 if p.right else 0
    start = m - d0
    return ParseContext(word=w[start : m + len(p.center) + d1], start=start)
