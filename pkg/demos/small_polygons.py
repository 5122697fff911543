"""
Pentagons and hexagons
======================

For closed pentagons the map returns a projectively equivalent polygon;
for hexagons it takes two steps.  Labels come back shifted by two.
"""

from pentagram import pentagram_map, projectively_equivalent, random_twisted

pentagon = random_twisted(5, seed=1, closed=True)
image = pentagram_map(pentagon)
print("pentagon, one step:", projectively_equivalent(pentagon, image, shift=2))

hexagon = random_twisted(6, seed=1, closed=True)
once = pentagram_map(hexagon)
twice = pentagram_map(once)
print("hexagon, one step: ", projectively_equivalent(hexagon, once, shift=2))
print("hexagon, two steps:", projectively_equivalent(hexagon, twice, shift=2))
