"""
Promotion on invariant words of the 7-dimensional G2 crystal
============================================================

Invariant words of length r are the highest-weight words of weight zero.
Promotion drops the first letter, raises what is left back to the top and
appends the lowest letter.  The orbit structure is predicted by the
S(r)-character of the invariant tensors.
"""

from csp_lab import crystal, liechar
from csp_lab.csp import verify_csp

X = crystal.builtin("g2_fund7")
print("lowering path:", X.lowering_path())

G2 = liechar.root_system("G2")
for r in range(2, 7):
    words = crystal.enumerate_invariants(X, r)
    rep = crystal.promotion_orbits(X, r)
    inv = liechar.frobenius_invariants(G2, (1, 0), r)
    P = inv.fake_degree()
    v = verify_csp(rep, P)
    print(f"r={r}: {len(words)} words, orbits {rep.counts}, P = {P}, CSP {'PASS' if v.csp else 'FAIL'}")

# one promotion step written out
w = crystal.enumerate_invariants(X, 4)[0]
print(X.format_word(w), "->", X.format_word(crystal.promote(X, w)))
