"""Zimin patterns, Zimin type and index, pattern matching, unavoidability.

The n-th Zimin pattern is Z_1 = x1, Z_{n+1} = Z_n x_{n+1} Z_n.  A word w
*matches* a pattern when substituting every variable by some non-empty word
yields w; it *encounters* the pattern when some infix matches it.  The Zimin
type of w is the largest n with w matching Z_n; the Zimin index is the
maximum type over all infixes.  A pattern with n distinct variables is
unavoidable exactly when Z_n (read as a word over its variables)
encounters it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ResourceLimitError
from .words import prefix_function

DEFAULT_ZIMIN_PATTERN_CAP = 25  # zimin_pattern(n) has 2^n - 1 positions
DEFAULT_INDEX_LENGTH_CAP = 10_000


class Pattern:
    """A pattern: a non-empty-or-empty word over variable indices x1, x2, ...

    Accepts either explicit indices (``Pattern([1, 2, 1])``), the spaced text
    form ``"x1 x2 x1"``, or a compact letter form ``"xyx"`` where each
    distinct letter names a variable.
    """

    __slots__ = ("variables",)

    def __init__(self, variables):
        vs = tuple(int(v) for v in variables)
        if any(v < 1 for v in vs):
            raise ValueError("variable indices must be positive")
        object.__setattr__(self, "variables", vs)

    def __setattr__(self, name, value):
        raise AttributeError("Pattern is immutable")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        text = text.strip()
        if not text:
            return cls(())
        if text.isalpha() and " " not in text:
            # compact letter form, e.g. "xyx"
            seen: dict[str, int] = {}
            return cls(seen.setdefault(c, len(seen) + 1) for c in text)
        indices = []
        for tok in text.split():
            body = tok[1:] if tok[0] in "xX" else tok
            if not body.isdigit():
                raise ValueError(f"bad pattern token: {tok!r}")
            indices.append(int(body))
        return cls(indices)

    def __len__(self):
        return len(self.variables)

    def __getitem__(self, i):
        return self.variables[i]

    def __iter__(self):
        return iter(self.variables)

    def __eq__(self, other):
        if isinstance(other, Pattern):
            return self.variables == other.variables
        return NotImplemented

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"Pattern({str(self)!r})"

    def __str__(self):
        return " ".join(f"x{v}" for v in self.variables)

    @property
    def distinct_variables(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.variables)))


@dataclass(frozen=True)
class MorphismWitness:
    """A non-erasing substitution proving a match: variable index -> image."""

    assignment: dict

    def apply(self, pattern: Pattern):
        """Image of the pattern under this substitution."""
        images = [self.assignment[v] for v in pattern]
        if not images:
            raise ValueError("cannot apply a witness to the empty pattern")
        out = images[0]
        for img in images[1:]:
            out = out + img
        return out


def zimin_pattern(n: int, cap: int = DEFAULT_ZIMIN_PATTERN_CAP) -> Pattern:
    """Z_n; Z_0 is empty, |Z_n| = 2^n - 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ResourceLimitError(f"zimin_pattern({n}) would have 2^{n}-1 positions (cap {cap})")
    z: tuple[int, ...] = ()
    for i in range(1, n + 1):
        z = z + (i,) + z
    return Pattern(z)


def _canon(w: Sequence) -> list[int]:
    ids: dict = {}
    return [ids.setdefault(c, len(ids)) for c in w]


def zimin_type(w: Sequence) -> int:
    """Largest n such that w matches Z_n; 0 for the empty word.

    Recursion: for non-empty w the type is 1 plus the maximum type over
    borders a of w with 2|a| < |w| (decompositions w = a b a, b non-empty).
    """
    n = len(w)
    if n == 0:
        return 0
    return _sigma_of_prefixes(_canon(w))[n]


def _sigma_of_prefixes(x: list) -> list[int]:
    """Zimin type of every prefix of x; index by prefix length."""
    n = len(x)
    pi = prefix_function(x)
    sigma = [0] * (n + 1)
    chainmax = [0] * (n + 1)  # max sigma along the border chain from b down
    for length in range(1, n + 1):
        b = pi[length]
        while 2 * b >= length:
            b = pi[b]
        s = chainmax[b] + 1
        sigma[length] = s
        t = chainmax[pi[length]]
        chainmax[length] = s if s > t else t
    return sigma


def zimin_index(w: Sequence, max_length: Optional[int] = DEFAULT_INDEX_LENGTH_CAP) -> int:
    """Maximum Zimin type over all infixes of w (0 for the empty word)."""
    n = len(w)
    if max_length is not None and n > max_length:
        raise ResourceLimitError(f"zimin_index input of length {n} exceeds the cap {max_length}")
    if n == 0:
        return 0
    x = _canon(w)
    best = 0
    # Per start s, run the prefix-type recursion on the suffix x[s:].
    for s in range(n):
        m = n - s
        pi = [0] * (m + 1)
        chainmax = [0] * (m + 1)
        k = 0
        for i in range(1, m):
            c = x[s + i]
            while k and c != x[s + k]:
                k = pi[k]
            if c == x[s + k]:
                k += 1
            pi[i + 1] = k
        for length in range(1, m + 1):
            b = pi[length]
            while 2 * b >= length:
                b = pi[b]
            val = chainmax[b] + 1
            t = chainmax[pi[length]]
            chainmax[length] = val if val > t else t
            if val > best:
                best = val
    return best


def matches(w: Sequence, p: Pattern) -> Optional[MorphismWitness]:
    """A non-erasing substitution whose image of p is exactly w, or None.

    Deterministic search order: variables are bound at their leftmost
    occurrence, shorter images tried first; the first witness found under
    this order is returned.
    """
    pat = tuple(p)
    if not pat:
        raise ValueError("pattern must be non-empty")
    n = len(w)
    m = len(pat)
    if n < m:
        return None
    assign: dict = {}  # var -> (start, length) into w

    def rec(i: int, j: int) -> bool:
        if j == m:
            return i == n
        v = pat[j]
        got = assign.get(v)
        if got is not None:
            s0, li = got
            if i + li > n or w[i : i + li] != w[s0 : s0 + li]:
                return False
            return rec(i + li, j + 1)
        later_same = 0
        rem_min = 0
        for t in range(j + 1, m):
            a = assign.get(pat[t])
            if a is not None:
                rem_min += a[1]
            elif pat[t] == v:
                later_same += 1
            else:
                rem_min += 1
        max_len = (n - i - rem_min) // (1 + later_same)
        for li in range(1, max_len + 1):
            assign[v] = (i, li)
            if rec(i + li, j + 1):
                return True
        assign.pop(v, None)
        return False

    if not rec(0, 0):
        return None
    return MorphismWitness({v: w[s0 : s0 + li] for v, (s0, li) in assign.items()})


def encounters(w: Sequence, p: Pattern) -> Optional[tuple[int, MorphismWitness]]:
    """Leftmost-then-shortest infix of w matching p, with its witness.

    Scans offsets ascending and, per offset, infix lengths ascending.
    """
    if len(p) == 0:
        raise ValueError("pattern must be non-empty")
    n = len(w)
    for m in range(n - len(p) + 1):
        for end in range(m + len(p), n + 1):
            got = matches(w[m:end], p)
            if got is not None:
                return m, got
    return None


def is_unavoidable(p: Pattern, cap: int = DEFAULT_ZIMIN_PATTERN_CAP) -> bool:
    """Whether every long enough word over every finite alphabet encounters p.

    Decided by checking whether Z_n encounters p, where n is the number of
    distinct variables of p.
    """
    if len(p) == 0:
        raise ValueError("pattern must be non-empty")
    n = len(p.distinct_variables)
    zword = tuple(zimin_pattern(n, cap=cap))
    return encounters(zword, p) is not None
