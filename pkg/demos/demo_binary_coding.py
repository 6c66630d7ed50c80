#!/usr/bin/env python3
"""The binary coding, its regular languages, and the parse machinery.

Run:  python3 demos/demo_binary_coding.py
"""

from ziminwords import automata as au
from ziminwords import (
    RankedWord,
    counter,
    encoded_counter,
    is_simple,
    language_dfas,
    parse_occurrences,
    parses,
    psi,
    psi_symbol,
    sym,
    zimin_index,
)

print("== symbol codes: bb (01)^(n-1) bb ==")
for order in (1, 2, 3):
    for bit in (0, 1):
        s = sym(bit, order)
        print(f"psi({s}) = {psi_symbol(s)}")

print("\n== encoding a counter ==")
w = counter(0, 2)
print(f"psi({w}) = {psi(w)}  ({len(psi(w))} bits)")
print(f"|psi(C_0^3)| = {len(encoded_counter(0, 3))} bits, zimin index "
      f"{zimin_index(encoded_counter(0, 3))}")

print("\n== the four regular languages around the codes ==")
d = language_dfas()
for name, dfa in zip("CLRF", d):
    sample = au.enumerate_language(dfa, 4)[:8]
    print(f"{name}: {dfa.n_states} states, shortest members {[s or 'e' for s in sample]}")

print("\n== the finite core LR intersect F, settled by enumeration ==")
lrf = au.intersect(au.concat(d.L, d.R), d.F)
print([w or "e" for w in au.enumerate_language(lrf, 10)])

print("\n== parses: simple words may have several, non-simple exactly one ==")
for a in ["0" * 10, psi(RankedWord.parse("0_2 0_2"))]:
    found = parses(a)
    print(f"{a} (simple={is_simple(a)}): {len(found)} parse(s)")
    for p in found:
        print(f"   {p}")

print("\n== occurrences of a parse inside the host word ==")
host = RankedWord.parse("0_2 1_1 0_2 1_1 0_2")
alpha = psi(RankedWord.parse("0_2 1_1")) + "000"
p = parses(alpha)[0]
print(f"alpha = {alpha} parses as {p}")
print("parse occurrences in", host, "->", parse_occurrences(p, host))
