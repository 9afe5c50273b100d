"""
Derangements under conjugation by the long cycle
================================================

Two candidate polynomials: the major-index generating function of
derangements, and the fake degree of the conjugation character.  Only
the second one counts the orbits correctly.
"""

from csp_lab import diagrams, symfunc
from csp_lab.csp import verify_csp

for n in range(2, 7):
    act = diagrams.derangements_action(n)
    maj_poly = symfunc.q_derangement(n)
    conj = symfunc.cycle_values_to_schur(diagrams.derangements_character(n))
    F = symfunc.rencontre_series(n)[n, 0].to_schur()
    a = verify_csp(act, maj_poly)
    b = verify_csp(act, conj.fake_degree())
    c = verify_csp(act, F.fake_degree())
    print(f"n={n}: |X|={len(act)}  maj {'PASS' if a.csp else 'FAIL'}  "
          f"conjugation {'PASS' if b.csp else 'FAIL'}  F_n0 {'PASS' if c.csp else 'FAIL'}")

# n=3: both 3-cycles commute with the long cycle, so there are two orbits,
# but q + q^2 has no constant term
v = verify_csp(diagrams.derangements_action(3), symfunc.q_derangement(3))
print("n=3:", v.mismatch)

# the two characters differ, yet their fake degrees agree modulo q^n - 1
print(symfunc.rencontre_series(4)[4, 0].to_schur())
print(symfunc.cycle_values_to_schur(diagrams.derangements_character(4)))
