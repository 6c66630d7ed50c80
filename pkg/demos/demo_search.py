#!/usr/bin/env python3
"""Exhaustive avoidance searches and the first-moment quantities.

Run:  python3 demos/demo_search.py          (about a minute)
"""

import time

from ziminwords import (
    counter_witness_bounds,
    first_moment_threshold,
    longest_avoiding,
    match_count_enumerated,
    match_probability,
)

print("== the small f table ==")
print("f(1,k) = 1 for every k; f(2,k) = 2k+1:")
for k in (2, 3, 4, 5):
    cert = longest_avoiding(2, k)
    print(f"  f(2,{k}) = {cert.implied_f():>2}  witness {cert.witness}")

print("\n== f(3,2) = 29, exhaustively ==")
t0 = time.time()
cert = longest_avoiding(3, 2)
print(f"  f = {cert.implied_f()} after {cert.nodes_explored} nodes "
      f"({time.time() - t0:.1f}s); longest avoiding word:")
print(f"  {cert.witness}")

print("\n== f(4,2) is out of desk scale; budgets yield lower bounds only ==")
cert = longest_avoiding(4, 2, max_nodes=400)
print(f"  exhausted={cert.exhausted}; certified only f(4,2) > {cert.max_avoiding_length}")

print("\n== counter-based lower-bound certificates ==")
for order in (3, 4):
    rep = counter_witness_bounds(order)
    print(f"  order {order}: index {rep['zimin_indices'][0]} <= {rep['zimin_bound']}, "
          f"length {rep['counter_length']} >= {rep['tower']}  =>  {rep['certifies']}")

print("\n== why the first moment stalls at doubly exponential ==")
for n, k in [(2, 2), (3, 2), (2, 3)]:
    count, total = match_count_enumerated(n, k)
    print(f"  (n,k)=({n},{k}): Pr(match) = {count}/{total} = {match_probability(n, k)}, "
          f"expected occurrences reach 1 at length {first_moment_threshold(n, k)}")
