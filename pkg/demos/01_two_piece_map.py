"""
A map of order nine
===================

The map (x, y) -> (|x| - y, x) is linear on each half plane and returns
every lattice point to itself after nine steps.
"""

from plmaps import named_map, orbit, period, power, rotation_number

H = named_map("H")
print("fan:", H)

# follow one point around
for p in orbit(H, (3, 5), 9):
    print(p)

# the period is read off the composed map, not from samples
print("period:", period(H))
print("H^9 is the identity:", power(H, 9).is_identity())

# orbits wind twice around the origin in nine steps
print("rotation number:", rotation_number(H))
print("rotation number of H^5:", rotation_number(power(H, 5)))
