"""The Petersen graph as a stress case for the whole toolkit.

The Petersen graph sits exactly on several sharpness boundaries at once:
tau = 4/3 (the toughness threshold of Theorems 9 and 48), kappa = 3 <
alpha = 4 (so Chvatal-Erdos just misses), and it is the unique named
escape in T19.  This script walks through all of it.
"""

from cyclekit import (
    Profile,
    check,
    check_all,
    circumference,
    every_longest_cycle_satisfies,
    invariant_report,
    petersen,
)
from cyclekit.catalog import get

g = petersen()

print("== invariants ==")
print("\n".join(invariant_report(g).to_lines()))

print("\n== cycle structure ==")
c, cert = circumference(g)
print(f"circumference c = {c} (witness: {cert})")
print(f"hamiltonian: {Profile(g).is_hamiltonian}")
ok, _ = every_longest_cycle_satisfies(g, "dominating")
print(f"every longest cycle dominating: {ok}")

print("\n== selected theorems ==")
for tid in ("Thm16", "Thm9", "Thm17", "T9", "T19"):
    v = check(g, get(tid))
    print(f"{tid:6s} {v.kind:12s} {v.detail}")

print("\n== full catalog ==")
rep = check_all(g)
print("verdict counts:", rep.counts)
assert not rep.violated
