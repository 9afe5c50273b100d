"""Orbits of cyclic actions and exact cyclic sieving checks.

The root-of-unity evaluation condition is never computed numerically.  A
triple is certified through the equivalent orbit-count form: reduce P modulo
q^n - 1 and compare coefficient l with the number of orbits whose stabilizer
order divides l.  Fixed-point counts of every power of the generator are
computed by iteration and checked against the orbit counts as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .qpoly import IntPolynomial, reduce_cyclic


class ActionError(ValueError):
    """The generator is not a bijection or its order does not divide n."""


class CSPInputError(ValueError):
    """The polynomial is not admissible (negative coefficient or P(1) != |X|)."""


@dataclass(frozen=True)
class FiniteAction:
    elements: Sequence[Any]
    generator: Sequence[int]
    order: int

    def __post_init__(self):
        m = len(self.elements)
        if len(self.generator) != m or sorted(self.generator) != list(range(m)):
            raise ActionError("generator is not a bijection of the element indices")
        if self.order < 1:
            raise ActionError("order must be positive")

    def __len__(self):
        return len(self.elements)

    def power(self, d: int) -> list[int]:
        idx = list(range(len(self.elements)))
        for _ in range(d):
            idx = [self.generator[i] for i in idx]
        return idx


@dataclass(frozen=True)
class OrbitReport:
    order: int
    size: int
    counts: dict[int, int]
    representatives: list[Any]
    orbit_sizes: list[int]
    fixed_points: list[int] = field(default_factory=list)

    def orbit_count(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> str:
        return json.dumps(
            {
                "size": self.size,
                "order": self.order,
                "orbit_counts": {str(s): c for s, c in sorted(self.counts.items(), reverse=True)},
                "representatives": [_jsonable(r) for r in self.representatives],
                "fixed_points": self.fixed_points,
            }
        )


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def _least(items):
    try:
        return min(items)
    except TypeError:
        return items[0]


def orbits(a: FiniteAction) -> OrbitReport:
    n = a.order
    seen = [False] * len(a.elements)
    counts: dict[int, int] = {}
    reps, sizes = [], []
    for start in range(len(a.elements)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = a.generator[x]
        s = len(cyc)
        if n % s:
            raise ActionError(f"orbit of size {s} does not divide the declared order {n}")
        counts[s] = counts.get(s, 0) + 1
        reps.append(_least([a.elements[i] for i in cyc]))
        sizes.append(s)
    order = sorted(range(len(reps)), key=lambda k: (-sizes[k], k))
    fixed = []
    idx = list(range(len(a.elements)))
    for d in range(n):
        fixed.append(sum(1 for i, j in enumerate(idx) if i == j))
        idx = [a.generator[i] for i in idx]
    return OrbitReport(
        order=n,
        size=len(a.elements),
        counts=dict(sorted(counts.items(), reverse=True)),
        representatives=[reps[k] for k in order],
        orbit_sizes=[sizes[k] for k in order],
        fixed_points=fixed,
    )


def csp_polynomial(rep: OrbitReport | dict[int, int], n: int) -> IntPolynomial:
    """sum_l a_l q^l, a_l = #orbits whose stabilizer order divides l."""
    counts = rep.counts if isinstance(rep, OrbitReport) else rep
    coeffs = [0] * n
    for size, c in counts.items():
        stab = n // size
        for l in range(n):
            if l % stab == 0:
                coeffs[l] += c
    return IntPolynomial(coeffs)


def fixed_points_from_counts(counts: dict[int, int], n: int) -> list[int]:
    return [sum(s * c for s, c in counts.items() if d % s == 0) for d in range(n)]


@dataclass(frozen=True)
class Verdict:
    size: int
    order: int
    orbit_counts: dict[int, int]
    polynomial: IntPolynomial
    reduced: IntPolynomial
    expected: IntPolynomial
    fixed_points: list[int]
    fixed_point_identity: bool
    csp: bool
    mismatch: dict | None

    def __bool__(self):
        return self.csp

    def to_json(self) -> str:
        return json.dumps(
            {
                "size": self.size,
                "order": self.order,
                "orbit_counts": {str(s): c for s, c in self.orbit_counts.items()},
                "polynomial": list(self.polynomial.coeffs),
                "reduced": list(self.reduced.coeffs),
                "csp": self.csp,
                "mismatch": self.mismatch,
                "fixed_points": self.fixed_points,
            }
        )


def verify_csp(a: FiniteAction | OrbitReport, P: IntPolynomial) -> Verdict:
    rep = a if isinstance(a, OrbitReport) else orbits(a)
    n = rep.order
    if not P.has_nonnegative_coefficients():
        raise CSPInputError(f"polynomial {P} has a negative coefficient")
    if P(1) != rep.size:
        raise CSPInputError(f"P(1) = {P(1)} but |X| = {rep.size}")
    reduced = reduce_cyclic(P, n)
    expected = csp_polynomial(rep, n)
    mismatch = None
    for l in range(n):
        if reduced[l] != expected[l]:
            mismatch = {"exponent": l, "expected": expected[l], "found": reduced[l]}
            break
    fp_ok = rep.fixed_points == fixed_points_from_counts(rep.counts, n)
    return Verdict(
        size=rep.size,
        order=n,
        orbit_counts=dict(rep.counts),
        polynomial=P,
        reduced=reduced,
        expected=expected,
        fixed_points=list(rep.fixed_points),
        fixed_point_identity=fp_ok,
        csp=mismatch is None and fp_ok,
        mismatch=mismatch,
    )
