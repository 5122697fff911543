"""
Polygons inscribed in a conic
=============================

Put the vertices on the conic XZ = Y^2, read off the p-coordinates and
compare O_k with E_k.  They agree for inscribed polygons and disagree for
a generic one.
"""

from pentagram import (
    corner_from_p,
    corner_invariants,
    invariant_set,
    p_from_params,
    random_inscribed,
    random_twisted,
    veronese_polygon,
)

D = random_inscribed(8, seed=5)
p = p_from_params(D)
print("p =", [str(v) for v in p.p])

# the corner invariants from geometry match the closed formula in p
geometric = corner_invariants(veronese_polygon(D))
print("geometry matches formula:", geometric == corner_from_p(p))

inv = invariant_set(geometric)
for k in inv.O:
    print(f"k={k}: O_k = {inv.O[k]}, equal to E_k: {inv.O[k] == inv.E[k]}")

generic = invariant_set(corner_invariants(random_twisted(8, seed=5)))
print("generic octagon, O_1 == E_1:", generic.O[1] == generic.E[1])
