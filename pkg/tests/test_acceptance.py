"""Every acceptance criterion, run at its tolerance and runtime limit.

One PASS/FAIL line per criterion is printed in the terminal summary.
Criteria 1 and 7 contain a published value that disagrees with an exact
computation; they are left failing and the surrounding tests pin down that
the disagreement is confined to that value.
"""

import pytest

from csp_lab.csp import orbits
from csp_lab.diagrams import tl_rotation_action
from csp_lab.qpoly import IntPolynomial, reduce_cyclic
from csp_lab.repro import CRITERIA, Options, run_criterion, select

PUBLISHED_MISPRINTS = {
    1: {"r=3 reduction"},
    7: {"r=6 printed reduction"},
}


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"{c.number}-{c.slug}")
def test_criterion(criterion, acceptance_log):
    res = run_criterion(criterion)
    acceptance_log.append(res.line())
    for s in res.failures():
        acceptance_log.append(f"    {s.name}: {s.detail}")
    assert res.seconds < criterion.limit
    assert res.ok, "; ".join(f"{s.name}: {s.detail}" for s in res.failures())


@pytest.mark.parametrize("number", sorted(PUBLISHED_MISPRINTS))
def test_failures_are_confined_to_published_misprints(number):
    (criterion,) = select([str(number)])
    res = run_criterion(criterion)
    failed = {s.name for s in res.failures()}
    assert failed == PUBLISHED_MISPRINTS[number]
    assert len(res.subchecks) > len(failed)


def test_r3_reduction_is_forced_by_orbit_structure():
    # rotation of the five diagrams on 6 points has one 3-orbit and one 2-orbit,
    # so the constant term (number of orbits) must be 2
    rep = orbits(tl_rotation_action(3))
    assert rep.counts == {3: 1, 2: 1}
    reduced = reduce_cyclic(IntPolynomial([0] * 6 + [1, 0, 1, 1, 1, 0, 1]), 6)
    assert reduced == IntPolynomial([2, 0, 1, 1, 1])
    assert reduced(1) == 5


def test_sabotage_breaks_criteria():
    broken = {c.number for c in CRITERIA if not run_criterion(c, Options(flip_sign_twist=True)).ok}
    assert {1, 2, 4, 9, 10} <= broken
    assert not broken & {3, 5, 6, 8, 11}
