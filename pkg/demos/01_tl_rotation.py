"""
Rotating Temperley-Lieb diagrams
================================

Noncrossing perfect matchings of 2r points on a circle, turned by one
notch at a time, and the polynomial that counts their orbits.
"""

from csp_lab import diagrams, symfunc
from csp_lab.csp import orbits, verify_csp
from csp_lab.qpoly import reduce_cyclic

# the five diagrams on six points, as U/D words
r = 3
basis = diagrams.tl_diagrams(r)
for d in basis:
    print(diagrams.tl_to_word(d), d)

# rotation by one notch; six turns bring every diagram back
act = diagrams.tl_rotation_action(r)
rep = orbits(act)
print("orbit sizes:", rep.counts)
print("fixed points of each power:", rep.fixed_points)

# the fake degree of the two-column shape 2^r, reduced mod q^(2r) - 1
f = symfunc.fake_degree([2] * r)
print("fake degree:", f)
print("reduced:", reduce_cyclic(f, 2 * r))

# coefficient l counts the orbits whose stabiliser order divides l
v = verify_csp(act, f)
print("cyclic sieving:", "PASS" if v.csp else "FAIL")

# word promotion on U/D words is rotation by one notch the other way
w = "UUDDUD"
print(w, "->", diagrams.tl_word_promote(w))
print(diagrams.rotate_tl(diagrams.word_to_tl(w), -1))
