"""
The pentagram map on a twisted heptagon
=======================================

Iterate the map on a random twisted polygon and watch the monodromy
invariants stay put while the coordinates grow.
"""

from pentagram import corner_invariants, invariant_set, pentagram_map, random_twisted, trace_invariants

P = random_twisted(7, seed=2024)
print("n =", P.n, " monodromy trace =", P.monodromy.trace)

# each step replaces v_i by the meet of the diagonals (v_{i-1} v_{i+1}) and (v_i v_{i+2})
start = invariant_set(corner_invariants(P))
for step in range(1, 4):
    P = pentagram_map(P)
    inv = invariant_set(corner_invariants(P))
    digits = max(len(str(c)) for v in P.vertices for c in v.coords)
    print(f"step {step}: largest coordinate has {digits} digits, invariants unchanged: {inv == start}")

print("O_1 =", start.O[1])
print("E_1 =", start.E[1])
tr = trace_invariants(P)
print("Omega_1 =", tr.omega1, " Omega_2 =", tr.omega2)
