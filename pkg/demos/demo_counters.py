#!/usr/bin/env python3
"""Higher-order counters: construction, decoding, structure, Zimin indices.

Run:  python3 demos/demo_counters.py
"""

from itertools import islice

from ziminwords import (
    counter,
    counter_length,
    counter_stream,
    decode_counter,
    occurrences,
    tau,
    zimin_index,
)

print("== the four counters of order 2 ==")
for i in range(4):
    print(f"C_{i}^2 = {counter(i, 2)}")

print("\n== counter 11 of order 3 (bits are least significant first) ==")
print(counter(11, 3))
print("decodes back to", decode_counter(counter(11, 3), 3))

print("\n== lengths L_n = tau(n-1) (L_{n-1} + 1) ==")
for n in range(1, 6):
    print(f"L_{n} = {counter_length(n)}")
digits = counter_length(6).bit_length() * 30103 // 100000 + 1
print(f"L_6 has about {digits} decimal digits")

print("\n== streaming keeps memory flat; first 10 symbols of a huge counter ==")
print(" ".join(str(s) for s in islice(counter_stream(tau(5) - 1, 5), 10)), "...")

print("\n== every order-2 counter occurs exactly once inside an order-3 one ==")
host = counter(9, 3)
for j in range(4):
    print(f"C_{j}^2 occurs at offsets {occurrences(counter(j, 2), host)}")

print("\n== Zimin indices stay put while lengths tower ==")
for n in range(1, 5):
    values = sorted({zimin_index(counter(i, n), max_length=None) for i in islice(range(tau(n)), 16)})
    print(f"order {n}: length {counter_length(n):>4}, zimin indices {values}")
