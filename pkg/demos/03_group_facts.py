"""Exhaustive permutation-group checks behind the Galois certificates."""

import time

from quinticcert.perm import (
    centralizer,
    closure,
    cycle,
    generation_scan,
    order,
    perm_str,
    s6_admissible,
    symmetric_group,
    verify_32_generation,
    verify_transposition_generation,
)

S5 = symmetric_group(5)

t = cycle(5, (1, 2))
C = centralizer(S5, t)
print(f"centralizer of {perm_str(t)}: order {C.order}, "
      f"has an element of order 6: {any(order(g) == 6 for g in C.elements)}")

start = time.perf_counter()
print("(3,2) with (5) or (4,1) always generates S5:", verify_32_generation(),
      f"[{time.perf_counter() - start:.2f}s]")
print("closure orders for (3,2) x {(5),(4,1)}:", generation_scan((3, 2), [(5,), (4,)])["orders"])
print("for contrast, (2,2) x (5):", generation_scan((2, 2), [(5,)])["orders"])

for n in (5, 6):
    start = time.perf_counter()
    print(f"transitive transposition subgroups of S{n} are S{n}:",
          verify_transposition_generation(n), f"[{time.perf_counter() - start:.2f}s]")

examples = {
    "<(1,2)>": [cycle(6, (1, 2))],
    "<(1,2),(3,4)(5,6)>": [cycle(6, (1, 2)), cycle(6, (3, 4), (5, 6))],
    "<(1,2),(3,4,5)>": [cycle(6, (1, 2)), cycle(6, (3, 4, 5))],
    "<(1,2),(3,4)>": [cycle(6, (1, 2)), cycle(6, (3, 4))],
}
for name, gens in examples.items():
    print(f"S6-admissible {name:<22} order {closure(gens, 6).order:>2}: {s6_admissible(gens)}")
