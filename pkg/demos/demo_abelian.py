#!/usr/bin/env python3
"""Abelian Zimin encounters, g(n, k) at small scale, and the bounds.

Run:  python3 demos/demo_abelian.py
"""

from ziminwords import (
    AbelianAssignment,
    abelian_occurrence,
    encounters_abelian_zimin,
    g_lower_bound,
    g_upper_bound,
    g_upper_recurrence,
    g_value,
    longest_avoiding,
    parikh,
)
from ziminwords.abelian import claim1_bound, claim1_probability, claim2_bound, claim2_probability

print("== abelian equivalence is Parikh-vector equality ==")
print("parikh('abca') =", dict(parikh("abca")))
lam = AbelianAssignment((2, 1))
print("'abcba' hosts Z_2 abelianly with lengths (2,1):",
      abelian_occurrence("abcba", 0, 2, lam))
print("first occurrence found in 'abcba':", encounters_abelian_zimin("abcba", 2))

print("\n== g versus f at small scale ==")
for n, k in [(1, 2), (2, 2), (2, 3)]:
    g, cert = g_value(n, k)
    f = longest_avoiding(n, k).implied_f()
    print(f"  g({n},{k}) = {g}   f({n},{k}) = {f}   witness {cert.witness or 'e'}")

print("\n== the two probability claims, checked by enumeration ==")
for k, h, m in [(2, 1, 2), (2, 2, 2), (3, 1, 3)]:
    p = claim1_probability(k, h, m)
    print(f"  claim 1 at (k,h,m)=({k},{h},{m}): {p} <= {claim1_bound(k, m)}")
for n, k, lengths in [(2, 2, (1, 1)), (2, 2, (2, 1))]:
    lam = AbelianAssignment(lengths)
    p = claim2_probability(n, k, lam)
    print(f"  claim 2 at (n,k,lambda)=({n},{k},{lengths}): {p} <= {claim2_bound(n, k)}")

print("\n== lower and upper bounds on g ==")
for n, k in [(2, 2), (3, 2), (4, 2)]:
    print(f"  n={n}, k={k}: lower {g_lower_bound(n, k)}, "
          f"recurrence {g_upper_recurrence(n, k)}, closed form 2^{(4 * k) ** n}... "
          f"({g_upper_bound(n, k).bit_length()} bits)")
