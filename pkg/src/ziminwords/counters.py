"""Higher-order counters (Stockmeyer's yardstick construction).

The i-th counter of order n writes i in binary, least significant bit first,
with bits drawn from {0_n, 1_n} and every counter of order n-1 interleaved
in sequence before its bit:

    C_i^1    = i_1                                          (i in {0, 1})
    C_i^n+1  = C_0^n b_0  C_1^n b_1  ...  C_{tau(n)-1}^n b_{tau(n)-1}

There are tau(n) counters of order n and their common length L_n satisfies
L_1 = 1, L_{n+1} = tau(n) * (L_n + 1), so L_n >= tau(n-1).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import MalformedCounterError, ResourceLimitError
from .words import DEFAULT_DIGIT_CAP, RankedSymbol, RankedWord, tau

# Symbol-count cap for materialised counters.  Orders up to 4 (336 symbols)
# are comfortable; order 5 is 65536 * 337 = 22_085_632 symbols and is only
# reachable through counter_stream or an explicit cap override.
DEFAULT_SYMBOL_CAP = 10**7


def counter_length(order: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """Exact length L_n of every order-n counter."""
    if order < 1:
        raise ValueError("order must be >= 1")
    length = 1
    for m in range(1, order):
        t = tau(m, digit_cap=digit_cap)
        length = t * (length + 1)
        if length.bit_length() > 4 * digit_cap:
            raise ResourceLimitError(f"counter length for order {order} exceeds the digit cap")
    return length


def _check_id(index: int, order: int) -> None:
    if order < 1:
        raise ValueError("order must be >= 1")
    hi = tau(order)
    if not 0 <= index < hi:
        raise ValueError(f"counter index {index} out of range [0, tau({order})-1 = {hi - 1}]")


@lru_cache(maxsize=64)
def _small_counter(index: int, order: int) -> tuple[RankedSymbol, ...]:
    # Cache covers every counter of order <= 3 (2 + 4 + 16 words); the
    # builders below assemble higher orders from these without caching them.
    if order == 1:
        return (RankedSymbol(index, 1),)
    parts = []
    for j in range(tau(order - 1)):
        parts.extend(_small_counter(j, order - 1))
        parts.append(RankedSymbol((index >> j) & 1, order))
    return tuple(parts)


def counter(index: int, order: int, symbol_cap: int | None = DEFAULT_SYMBOL_CAP) -> RankedWord:
    """Materialise the counter C_index^order as a RankedWord."""
    _check_id(index, order)
    if symbol_cap is not None and counter_length(order) > symbol_cap:
        raise ResourceLimitError(
            f"order-{order} counters have {counter_length(order)} symbols, over the cap {symbol_cap}"
        )
    if order <= 3:
        return RankedWord(_small_counter(index, order))
    parts: list[RankedSymbol] = []
    for j in range(tau(order - 1)):
        parts.extend(counter(j, order - 1, symbol_cap=None))
        parts.append(RankedSymbol((index >> j) & 1, order))
    return RankedWord(parts)


def counter_stream(index: int, order: int) -> Iterator[RankedSymbol]:
    """Yield the symbols of C_index^order without materialising the word.

    Memory is proportional to the order (one generator frame and one big
    integer per recursion level), never to the counter length.
    """
    _check_id(index, order)
    if order == 1:
        yield RankedSymbol(index, 1)
        return
    for j in range(tau(order - 1)):
        yield from counter_stream(j, order - 1)
        yield RankedSymbol((index >> j) & 1, order)


def decode_counter(w, order: int) -> int:
    """The unique i with counter(i, order) == w, validating the structure.

    Raises MalformedCounterError pointing at the first offending position.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    expected_len = counter_length(order)
    symbols = list(w)
    index = 0
    pos = 0
    if order == 1:
        if not symbols:
            raise MalformedCounterError("empty word is not a counter", 0)
        s = symbols[0]
        if s.order != 1:
            raise MalformedCounterError(f"expected an order-1 symbol, found {s}", 0)
        if len(symbols) > 1:
            raise MalformedCounterError("order-1 counter has exactly one symbol", 1)
        return s.bit
    for j in range(tau(order - 1)):
        for expected in counter_stream(j, order - 1):
            if pos >= len(symbols):
                raise MalformedCounterError(f"word ends inside sub-counter {j}", pos)
            if symbols[pos] != expected:
                raise MalformedCounterError(
                    f"expected {expected} inside sub-counter {j}, found {symbols[pos]}", pos
                )
            pos += 1
        if pos >= len(symbols):
            raise MalformedCounterError(f"missing order-{order} bit after sub-counter {j}", pos)
        b = symbols[pos]
        if b.order != order or b.bit not in (0, 1):
            raise MalformedCounterError(f"expected an order-{order} bit, found {b}", pos)
        index |= b.bit << j
        pos += 1
    if pos != len(symbols):
        raise MalformedCounterError(f"trailing symbols after a complete order-{order} counter", pos)
    assert pos == expected_len
    return index
