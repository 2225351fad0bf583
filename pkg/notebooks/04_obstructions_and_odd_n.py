# A nonzero socle monomial that is not in the ideal of two column variables,
# and the odd-n configuration where the quotient picks up new socle.

from gclab import tangents

for n in (4, 5, 6):
    print(tangents.t2_witness(n))

ex = tangents.odd_example(7)
print("n=7 degree", ex["degree"], "multidegree", ex["multidegree"])
print("tableau rows:", ex["tableau"])
print("nonzero:", ex["nonzero"], "killed by m^2:", ex["annihilated_by_m2"])
print("terms in the element:", len(ex["socle_element"]["coords"]))
