"""Exhaustive search for words avoiding Zimin patterns, and f(n, k).

f(n, k) is the least length forcing every word over a k-letter alphabet to
encounter Z_n.  Encountering is infix-monotone, so avoidance is closed
under prefixes and the avoiding words form a k-ary tree explored by depth
first search; f equals one plus the depth of that tree when the search
exhausts it.

A new encounter created by appending one letter must lie in a suffix of
the extended word, so the per-node check asks: does some suffix of w·c
have Zimin type >= n?  That reduces to finding a border b of the suffix,
with 2b < suffix length, whose prefix already has type >= n-1; the tracker
below maintains exactly those prefix-type tables, as per-length bitsets
over start positions, updated incrementally on push/pop.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .counters import counter, counter_length
from .errors import ResourceLimitError
from .words import DEFAULT_DIGIT_CAP, guarded_power, tau
from .zimin import matches, zimin_index, zimin_pattern

CHECKPOINT_VERSION = 1
LETTERS = "0123456789abcdefghijklmnopqrstuvwxyz"


def render_word(word) -> str:
    return "".join(LETTERS[c] for c in word)


def parse_rendered_word(text: str) -> list[int]:
    return [LETTERS.index(c) for c in text]


class ZiminSuffixTracker:
    """Incremental check: would appending a letter close a Z_n encounter?

    State: the current word plus, for each level m in 2..n-1, a table
    tables[m][b] holding the bitset of start positions s with
    zimin_type(word[s:s+b]) >= m.  On a push to length l, suffix
    occurrence bitsets occ_b (positions of word[l-b:l]) are rolled up by
    length; a suffix word[s:l] reaches type m+1 exactly when occ_b has a
    bit s with s < l - 2b present in tables[m][b].
    """

    def __init__(self, n: int, k: int):
        if n < 1 or k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        self.n = n
        self.k = k
        self.word: list[int] = []
        self._letter_pos = [0] * k
        self._tables = {m: [0, 0] for m in range(2, n)}

    def try_push(self, c: int) -> bool:
        """Append c unless it creates a suffix of type >= n; report success."""
        n = self.n
        if n == 1:
            return False
        word = self.word
        length = len(word) + 1
        new_bit = 1 << (length - 1)
        mpos = self._letter_pos[c] | new_bit
        rows = [0] * (n + 1)
        occ = mpos
        for b in range(1, (length - 1) // 2 + 1):
            if b > 1:
                prev = word[length - b]
                src = mpos if prev == c else self._letter_pos[prev]
                occ = src & (occ >> 1)
                if not occ:
                    break
            occm = occ & ((1 << (length - 2 * b)) - 1)
            if occm:
                rows[2] |= occm
                for m in range(3, n + 1):
                    tab = self._tables[m - 1]
                    if b < len(tab) and tab[b]:
                        rows[m] |= occm & tab[b]
        if rows[n]:
            return False
        word.append(c)
        self._letter_pos[c] = mpos
        for m in range(2, n):
            tab = self._tables[m]
            for b in range(1, min(length + 1, len(tab))):
                tab[b] &= ~(1 << (length - b))
            row = rows[m]
            while row:
                lsb = row & -row
                s = lsb.bit_length() - 1
                b = length - s
                while len(tab) <= b:
                    tab.append(0)
                tab[b] |= lsb
                row ^= lsb
        return True

    def pop(self):
        c = self.word.pop()
        self._letter_pos[c] &= ~(1 << len(self.word))


class OracleSuffixTracker:
    """Reference tracker recomputing the full Zimin index at every node."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.word: list[int] = []

    def try_push(self, c: int) -> bool:
        self.word.append(c)
        if zimin_index(self.word, max_length=None) >= self.n:
            self.word.pop()
            return False
        return True

    def pop(self):
        self.word.pop()


@dataclass(frozen=True)
class SearchCertificate:
    """Outcome of one avoidance search.

    When ``exhausted`` the full tree was explored and f = implied_f();
    otherwise only the lower bound f > max_avoiding_length is certified.
    The witness is the lexicographically smallest avoiding word of maximal
    explored length.
    """

    n: int
    k: int
    max_avoiding_length: int
    witness: str
    exhausted: bool
    nodes_explored: int

    def implied_f(self) -> Optional[int]:
        return self.max_avoiding_length + 1 if self.exhausted else None

    def f_lower_bound(self) -> int:
        # an avoiding word of length m shows f >= m + 1
        return self.max_avoiding_length + 1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max_avoiding_length": self.max_avoiding_length,
            "witness": self.witness,
            "exhausted": self.exhausted,
            "nodes_explored": self.nodes_explored,
        }


def _make_tracker(mode: str, n: int, k: int):
    if mode == "zimin":
        return ZiminSuffixTracker(n, k)
    if mode == "zimin-oracle":
        return OracleSuffixTracker(n, k)
    if mode == "abelian":
        from .abelian import AbelianSuffixTracker

        return AbelianSuffixTracker(n, k)
    raise ValueError(f"unknown tracker mode {mode!r}")


class _Budget:
    def __init__(self, max_nodes, max_seconds):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds

    def exceeded(self, nodes: int) -> bool:
        if self.max_nodes is not None and nodes >= self.max_nodes:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline


def _depth_first(tracker, k, budget, *, resume=None, stop_depth=None, frontier=None,
                 checkpoint_path=None, checkpoint_every=None, meta=None):
    """Letters-ascending DFS over the avoiding tree rooted at tracker.word.

    Returns (best_length, best_word, exhausted, nodes).  With ``stop_depth``
    the walk does not descend past that depth and appends the words reached
    there to ``frontier``.  Checkpoints record the current path at node
    entry, so a resumed run continues exactly where the file says.
    """
    base_depth = len(tracker.word)
    best_len = base_depth
    best = render_word(tracker.word)
    nodes = 1
    pending: list[int] = []
    if resume is not None:
        path = parse_rendered_word(resume["path"])
        for c in path[base_depth:]:
            if not tracker.try_push(c):
                raise ValueError("checkpoint path is not an avoiding word")
        pending = [c + 1 for c in path[base_depth:]]
        best_len = resume["best_length"]
        best = resume["best_witness"]
        nodes = resume["nodes_explored"]
    cur = 0
    entered = True
    exhausted = True
    while True:
        if entered:
            entered = False
            depth = len(tracker.word)
            if depth > best_len:
                best_len = depth
                best = render_word(tracker.word)
            if budget.exceeded(nodes):
                exhausted = False
                if checkpoint_path:
                    _write_checkpoint(checkpoint_path, tracker, best_len, best, nodes, meta)
                break
            if checkpoint_path and checkpoint_every and nodes % checkpoint_every == 0:
                _write_checkpoint(checkpoint_path, tracker, best_len, best, nodes, meta)
            if stop_depth is not None and depth >= stop_depth:
                frontier.append(render_word(tracker.word))
                cur = k
        if cur >= k:
            if len(tracker.word) == base_depth:
                break
            tracker.pop()
            cur = pending.pop()
            continue
        c = cur
        cur += 1
        if tracker.try_push(c):
            nodes += 1
            pending.append(cur)
            cur = 0
            entered = True
    return best_len, best, exhausted, nodes


def _write_checkpoint(path, tracker, best_len, best, nodes, meta):
    payload = {
        "version": CHECKPOINT_VERSION,
        "path": render_word(tracker.word),
        "best_length": best_len,
        "best_witness": best,
        "nodes_explored": nodes,
    }
    payload.update(meta or {})
    with open(path, "w") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def load_checkpoint(path) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {data.get('version')!r}")
    return data


def _subtree_worker(args):
    mode, n, k, prefix, max_nodes, max_seconds = args
    tracker = _make_tracker(mode, n, k)
    for c in parse_rendered_word(prefix):
        if not tracker.try_push(c):
            raise AssertionError("frontier word stopped avoiding")
    best_len, best, exhausted, nodes = _depth_first(
        tracker, k, _Budget(max_nodes, max_seconds)
    )
    return best_len, best, exhausted, nodes - 1  # the frontier node was already counted


def longest_avoiding(
    n: int,
    k: int,
    *,
    max_nodes: Optional[int] = None,
    max_seconds: Optional[float] = None,
    mode: str = "zimin",
    parallel: int = 1,
    split_depth: Optional[int] = None,
    checkpoint_path=None,
    checkpoint_every: Optional[int] = 100_000,
    resume: bool = False,
) -> SearchCertificate:
    """Explore the Z_n-avoiding prefix tree over [k] exhaustively.

    Parallel runs split the tree at ``split_depth`` into independent
    subtree tasks; merging is associative (max depth, then the earliest =
    lexicographically smallest witness), so serial and parallel searches
    return identical certificates.  Budgets in parallel mode apply to each
    task separately; checkpoint/resume is serial-only.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    budget = _Budget(max_nodes, max_seconds)
    meta = {"mode": mode, "n": n, "k": k}
    if parallel <= 1:
        tracker = _make_tracker(mode, n, k)
        resume_state = None
        if resume:
            resume_state = load_checkpoint(checkpoint_path)
            for key in ("mode", "n", "k"):
                if resume_state.get(key) != meta[key]:
                    raise ValueError(f"checkpoint {key} mismatch")
        best_len, best, exhausted, nodes = _depth_first(
            tracker,
            k,
            budget,
            resume=resume_state,
            checkpoint_path=checkpoint_path,
            checkpoint_every=checkpoint_every,
            meta=meta,
        )
        return SearchCertificate(n, k, best_len, best, exhausted, nodes)

    if resume or checkpoint_path:
        raise ValueError("checkpointing is supported for serial searches only")
    depth = split_depth if split_depth is not None else max(2, min(12, 2 * n + k))
    tracker = _make_tracker(mode, n, k)
    frontier: list[str] = []
    best_len, best, exhausted, nodes = _depth_first(
        tracker, k, budget, stop_depth=depth, frontier=frontier
    )
    if not exhausted:
        return SearchCertificate(n, k, best_len, best, False, nodes)
    tasks = [(mode, n, k, prefix, max_nodes, max_seconds) for prefix in frontier]
    with multiprocessing.Pool(parallel) as pool:
        results = pool.map(_subtree_worker, tasks)
    for sub_len, sub_best, sub_exhausted, sub_nodes in results:
        nodes += sub_nodes
        exhausted = exhausted and sub_exhausted
        if sub_len > best_len:
            best_len, best = sub_len, sub_best
    return SearchCertificate(n, k, best_len, best, exhausted, nodes)


def f_value(n: int, k: int, **kwargs) -> tuple[Optional[int], SearchCertificate]:
    """(f(n,k), certificate) when the search exhausts; (None, certificate) else."""
    cert = longest_avoiding(n, k, **kwargs)
    return cert.implied_f(), cert


# ---------------------------------------------------------------------------
# first-moment quantities


def match_probability(n: int, k: int) -> Fraction:
    """Probability that a uniform word of length 2^n - 1 matches Z_n.

    Exactly k^(n+1-2^n): each variable x_i is free at its first occurrence
    and forced at its other 2^(n-i) - 1 ones.
    """
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    return Fraction(1, k ** (2**n - n - 1))


def match_count_enumerated(n: int, k: int, cap: int = 2_000_000) -> tuple[int, int]:
    """(matching words, all words) of length 2^n - 1 over [k], by enumeration."""
    total = k ** (2**n - 1)
    if total > cap:
        raise ResourceLimitError(f"enumerating {total} words exceeds the cap {cap}")
    z = zimin_pattern(n)
    length = 2**n - 1
    count = 0
    word = [0] * length
    while True:
        if matches(tuple(word), z) is not None:
            count += 1
        i = length - 1
        while i >= 0 and word[i] == k - 1:
            word[i] = 0
            i -= 1
        if i < 0:
            break
        word[i] += 1
    return count, total


def first_moment_threshold(n: int, k: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """Length k^(2^n - n - 1) + 2^n past which the expected number of
    Z_n occurrences in a random word reaches 1."""
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    return guarded_power(k, 2**n - n - 1, digit_cap) + 2**n


def counter_witness_bounds(order: int, *, encoded: bool = False, indices=None) -> dict:
    """Certify the counter-based lower bounds by direct computation.

    Ranked (encoded=False): checks zimin_index(C_0^order) <= order - 1 and
    L_order >= tau(order-1), which together certify
    f(order, 2*order - 1) > tau(order - 1).

    Binary (encoded=True): checks zimin_index(psi(C_i^order)) <= order + 1
    over the given indices (all of them for order <= 3, a prefix of 256 by
    default beyond), certifying f(order + 2, 2) > tau(order - 1).
    """
    if order < 3:
        raise ValueError("the counter bounds are stated for order >= 3")
    length = counter_length(order)
    t = tau(order - 1)
    if not encoded:
        if indices is None:
            indices = [0]
        checked = {i: zimin_index(counter(i, order), max_length=None) for i in indices}
        bound = order - 1
        report = {
            "kind": "ranked-counter-bound",
            "order": order,
            "alphabet_size": 2 * order - 1,
            "indices_checked": list(indices),
            "zimin_indices": checked,
            "zimin_bound": bound,
            "counter_length": length,
            "tower": t,
            "certifies": f"f({order}, {2 * order - 1}) > {t}",
            "ok": max(checked.values()) <= bound and length >= t,
        }
        return report
    if indices is None:
        indices = range(tau(order)) if order <= 3 else range(256)
    from .coding import encoded_counter

    checked = {}
    enc_len = None
    for i in indices:
        w = encoded_counter(i, order)
        enc_len = len(w)
        checked[i] = zimin_index(w, max_length=None)
    bound = order + 1
    return {
        "kind": "encoded-counter-bound",
        "order": order,
        "indices_checked": list(indices),
        "zimin_indices": checked,
        "zimin_bound": bound,
        "encoded_length": enc_len,
        "tower": t,
        "certifies": f"f({order + 2}, 2) > {t}",
        "ok": max(checked.values()) <= bound and enc_len >= t,
    }
