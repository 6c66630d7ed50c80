"""Independent brute-force reference implementations.

Everything here is deliberately naive: direct definitions, quadratic scans,
exhaustive enumeration.  The fast implementations elsewhere are tested
against these, so nothing in this module may share code with them.
"""

from __future__ import annotations

from typing import Sequence


def occurrences_brute(needle: Sequence, haystack: Sequence) -> list[int]:
    n, h = len(needle), len(haystack)
    out = []
    for m in range(h - n + 1):
        if haystack[m : m + n] == needle:
            out.append(m)
    return out


def borders_brute(w: Sequence) -> list[int]:
    """All border lengths of w by direct prefix/suffix comparison."""
    n = len(w)
    return [b for b in range(1, n) if w[:b] == w[n - b :]]


def proper_borders_brute(w: Sequence) -> list[int]:
    if len(w) == 0:
        raise ValueError("empty word")
    return [b for b in borders_brute(w) if 2 * b < len(w)]


def zimin_type_recursive(w: Sequence) -> int:
    """Zimin type straight from the inductive characterisation, no memo."""
    n = len(w)
    if n == 0:
        return 0
    best = 0
    for b in range(1, (n - 1) // 2 + 1):
        if w[:b] == w[n - b :]:
            t = zimin_type_recursive(w[:b])
            if t > best:
                best = t
    return 1 + best


def zimin_index_enumerated(w: Sequence) -> int:
    """Maximum Zimin type over all infixes, each typed by the naive recursion."""
    n = len(w)
    best = 0
    for s in range(n):
        for e in range(s + 1, n + 1):
            t = zimin_type_recursive(w[s:e])
            if t > best:
                best = t
    return best


def encounters_zimin_brute(w: Sequence, n: int) -> bool:
    """Whether w encounters Z_n, via the index oracle."""
    if n <= 0:
        return True
    return zimin_index_enumerated(w) >= n


# ---------------------------------------------------------------------------
# coded-word brute force


def code_word(bit: int, order: int) -> str:
    b = "01"[bit]
    return b * 2 + "01" * (order - 1) + b * 2


def _orders_covering(length: int) -> range:
    # tails/heads/infixes of codes stabilise once 2k+2 exceeds the length,
    # so checking codes a little past length/2 covers every witness
    return range(1, length // 2 + 3)


def in_C_brute(x: str) -> bool:
    return any(x == code_word(b, k) for k in _orders_covering(len(x)) for b in (0, 1))


def in_L_brute(x: str) -> bool:
    """x is a strict suffix of some code word."""
    return any(
        len(c) > len(x) and c.endswith(x)
        for k in _orders_covering(len(x) + 2)
        for c in (code_word(0, k), code_word(1, k))
    )


def in_R_brute(x: str) -> bool:
    """x is a strict prefix of some code word."""
    return any(
        len(c) > len(x) and c.startswith(x)
        for k in _orders_covering(len(x) + 2)
        for c in (code_word(0, k), code_word(1, k))
    )


def in_F_brute(x: str) -> bool:
    """x is a strict infix of some code word: u x v in C with u, v non-empty."""
    for k in _orders_covering(len(x) + 4):
        for b in (0, 1):
            c = code_word(b, k)
            for m in occurrences_brute(x, c):
                if m > 0 and m + len(x) < len(c):
                    return True
    return False


def cstar_factorizations(segment: str):
    """All decompositions of segment into code words (at most one exists)."""
    if segment == "":
        yield ()
        return
    n = len(segment)
    for k in range(1, (n - 2) // 2 + 1):
        for bit in (0, 1):
            c = code_word(bit, k)
            if segment.startswith(c):
                for rest in cstar_factorizations(segment[len(c) :]):
                    yield ((bit, k),) + rest


def parses_all_splits(a: str) -> list[tuple[str, tuple, str]]:
    """Naive parse enumeration: try every (l, u, r) split of a.

    Returns triples (left, center-as-(bit, order)-tuples, right), ordered by
    |left| then |center|.
    """
    out = []
    for i in range(len(a) + 1):
        if not in_L_brute(a[:i]):
            continue
        for j in range(i, len(a) + 1):
            if not in_R_brute(a[j:]):
                continue
            for u in cstar_factorizations(a[i:j]):
                out.append((a[:i], u, a[j:]))
    return out


def simple_brute(a: str) -> bool:
    return len(a) < 11 or "0" * 10 in a or "1" * 10 in a or in_F_brute(a)
