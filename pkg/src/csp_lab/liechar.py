"""Root systems, Weyl characters and the S(r)-character of invariant tensors.

Weights are integer tuples of Dynkin labels (coordinates in the basis of
fundamental weights).  Simple root i has Dynkin labels ``cartan[i]``, i.e.
``cartan[i][j] = <alpha_i, alpha_j^vee>``.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from .symfunc import CycleTypeFunction, Partition, SymFunc, cycle_values_to_schur, partitions

Weight = tuple[int, ...]


def _cartan_a(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


# (cartan rows = Dynkin labels of simple roots, squared half-lengths d_i)
_TYPES = {
    "B3": ([[2, -1, 0], [-1, 2, -2], [0, -1, 2]], [1, 1, Fraction(1, 2)]),
    "C2": ([[2, -1], [-2, 2]], [Fraction(1, 2), 1]),
    "C3": ([[2, -1, 0], [-1, 2, -1], [0, -2, 2]], [Fraction(1, 2), Fraction(1, 2), 1]),
    "G2": ([[2, -1], [-3, 2]], [Fraction(1, 3), 1]),
}


class UnsupportedRootSystem(ValueError):
    pass


class RootSystemData:
    """Finite root system with its Weyl group, built from a Cartan type name.

    Supported: ``A1`` .. ``A5``, ``B3``, ``C2``, ``C3``, ``G2``.
    """

    def __init__(self, name: str):
        if name.startswith("A") and name[1:].isdigit() and 1 <= int(name[1:]) <= 5:
            n = int(name[1:])
            cartan, d = _cartan_a(n), [1] * n
        elif name in _TYPES:
            cartan, d = _TYPES[name]
        else:
            raise UnsupportedRootSystem(f"unsupported root system {name!r}")
        self.name = name
        self.rank = len(cartan)
        self.cartan = np.array(cartan, dtype=np.int64)
        self.half_lengths = [Fraction(x) for x in d]
        # (omega_i, omega_j) = (C^-1)_ij d_j
        inv = _fraction_inverse(cartan)
        self.gram = [[inv[i][j] * self.half_lengths[j] for j in range(self.rank)] for i in range(self.rank)]
        self.positive_roots = self._positive_roots()
        self.rho: Weight = (1,) * self.rank
        self._weyl = None

    def __repr__(self):
        return f"RootSystemData({self.name!r})"

    def __eq__(self, other):
        return isinstance(other, RootSystemData) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def root_weight(self, coeffs: Iterable[int]) -> Weight:
        """Dynkin labels of sum_i coeffs[i] alpha_i."""
        return tuple(int(x) for x in np.asarray(list(coeffs), dtype=np.int64) @ self.cartan)

    def _positive_roots(self) -> list[tuple[int, ...]]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                lab = self.root_weight(beta)
                for i in range(n):
                    new = list(beta)
                    new[i] -= lab[i]
                    new = tuple(new)
                    if all(c >= 0 for c in new) and any(new) and new not in seen:
                        seen.add(new)
                        nxt.append(new)
            frontier = nxt
        return sorted(seen, key=lambda b: (sum(b), b))

    @property
    def highest_root(self) -> Weight:
        return self.root_weight(self.positive_roots[-1])

    def fundamental_weight(self, i: int) -> Weight:
        """omega_i with i counted from 1."""
        return tuple(int(j == i - 1) for j in range(self.rank))

    def inner(self, a: Weight, b: Weight) -> Fraction:
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def reflect(self, i: int, mu: Weight) -> Weight:
        k = mu[i]
        if not k:
            return mu
        row = self.cartan[i]
        return tuple(int(mu[j] - k * row[j]) for j in range(self.rank))

    def weyl_group(self) -> list[tuple[np.ndarray, int]]:
        """All (matrix, length) pairs; matrices act on Dynkin-label column vectors.

        Enumerated once by closure over simple reflections.  Breadth-first
        order makes the recorded depth equal to the length.
        """
        if self._weyl is None:
            n = self.rank
            gens = []
            for i in range(n):
                m = np.eye(n, dtype=np.int64)
                m[:, i] -= self.cartan[i]
                gens.append(m)
            ident = np.eye(n, dtype=np.int64)
            key = lambda m: m.tobytes()
            seen = {key(ident): (ident, 0)}
            frontier = [ident]
            depth = 0
            while frontier:
                depth += 1
                nxt = []
                for w in frontier:
                    for g in gens:
                        m = g @ w
                        k = key(m)
                        if k not in seen:
                            seen[k] = (m, depth)
                            nxt.append(m)
                frontier = nxt
            self._weyl = list(seen.values())
        return self._weyl

    def weyl_order(self) -> int:
        return len(self.weyl_group())

    def dominant_conjugate(self, mu: Weight) -> Weight:
        mu = tuple(mu)
        while True:
            for i in range(self.rank):
                if mu[i] < 0:
                    mu = self.reflect(i, mu)
                    break
            else:
                return mu

    def weyl_dimension(self, lam: Weight) -> int:
        lr = tuple(a + b for a, b in zip(lam, self.rho))
        num, den = Fraction(1), Fraction(1)
        for beta in self.positive_roots:
            bw = self.root_weight(beta)
            num *= self.inner(lr, bw)
            den *= self.inner(self.rho, bw)
        val = num / den
        assert val.denominator == 1
        return int(val)

    def coroot_pairing(self, lam: Weight, beta: tuple[int, ...]) -> int:
        """<lam, beta^vee> for a positive root beta given by simple-root coefficients."""
        bw = self.root_weight(beta)
        val = 2 * self.inner(lam, bw) / self.inner(bw, bw)
        assert val.denominator == 1
        return int(val)


def _fraction_inverse(m: list[list[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystemData:
    return RootSystemData(name)


class NotWeylInvariant(ValueError):
    pass


class RootSystemMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    """Finite weight -> multiplicity mapping (virtual characters allowed)."""

    root_system: RootSystemData
    mults: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): int(v) for k, v in self.mults.items() if v}
        object.__setattr__(self, "mults", clean)

    def dimension(self) -> int:
        return sum(self.mults.values())

    def __getitem__(self, mu) -> int:
        return self.mults.get(tuple(mu), 0)

    def __eq__(self, other):
        return isinstance(other, Character) and self.root_system == other.root_system and self.mults == other.mults

    def __hash__(self):
        return hash((self.root_system, frozenset(self.mults.items())))

    def __add__(self, other: Character) -> Character:
        _same(self, other)
        out = Counter(self.mults)
        for k, v in other.mults.items():
            out[k] += v
        return Character(self.root_system, out)

    def __sub__(self, other: Character) -> Character:
        return self + other.scale(-1)

    def scale(self, c: int) -> Character:
        return Character(self.root_system, {k: c * v for k, v in self.mults.items()})

    def __mul__(self, other: Character) -> Character:
        return char_mul(self, other)

    def is_weyl_invariant(self) -> bool:
        R = self.root_system
        for mu, m in self.mults.items():
            for i in range(R.rank):
                if self.mults.get(R.reflect(i, mu), 0) != m:
                    return False
        return True


def _same(a: Character, b: Character) -> None:
    if a.root_system != b.root_system:
        raise RootSystemMismatch(f"{a.root_system.name} vs {b.root_system.name}")


def trivial_character(R: RootSystemData) -> Character:
    return Character(R, {(0,) * R.rank: 1})


def irreducible_character(R: RootSystemData, lam: Iterable[int]) -> Character:
    """Weight multiplicities of V(lam) by Freudenthal's recursion."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != R.rank or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a dominant integral weight for {R.name}")
    return _irreducible(R.name, lam)


@lru_cache(maxsize=None)
def _irreducible(name: str, lam: Weight) -> Character:
    R = root_system(name)
    n = R.rank
    # weights lie in lam - Q+, and lam - mu <= lam - w0(lam) coordinatewise
    lowest = R.dominant_conjugate(tuple(-x for x in lam))  # -w0(lam) is dominant
    span = _solve_root_coeffs(R, tuple(a + b for a, b in zip(lam, lowest)))
    pos = [(beta, R.root_weight(beta)) for beta in R.positive_roots]
    lr = tuple(a + b for a, b in zip(lam, R.rho))
    norm_lr = R.inner(lr, lr)
    mults: dict[Weight, int] = {lam: 1}
    boxes = sorted(product(*(range(k + 1) for k in span)), key=sum)
    for ks in boxes:
        if not any(ks):
            continue
        mu = tuple(lam[j] - sum(ks[i] * int(R.cartan[i][j]) for i in range(n)) for j in range(n))
        mr = tuple(a + b for a, b in zip(mu, R.rho))
        denom = norm_lr - R.inner(mr, mr)
        if denom == 0:
            continue
        acc = Fraction(0)
        for beta, bw in pos:
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, bw))
                up = tuple(kk - k * bb for kk, bb in zip(ks, beta))
                if any(u < 0 for u in up):
                    break
                m = mults.get(nu, 0)
                if m:
                    acc += m * R.inner(nu, bw)
                k += 1
        val = 2 * acc / denom
        assert val.denominator == 1, (lam, mu, val)
        if val:
            mults[mu] = int(val)
    ch = Character(R, mults)
    assert ch.dimension() == R.weyl_dimension(lam)
    return ch


def _solve_root_coeffs(R: RootSystemData, mu: Weight) -> tuple[int, ...]:
    """Coefficients c with sum c_i alpha_i = mu (mu must lie in the root lattice)."""
    inv = _fraction_inverse(R.cartan.tolist())
    # row vector c with c @ cartan = mu  =>  c = mu @ cartan^-1
    c = [sum(mu[i] * inv[i][j] for i in range(R.rank)) for j in range(R.rank)]
    if any(x.denominator != 1 for x in c):
        raise ValueError(f"{mu} is not in the root lattice")
    return tuple(int(x) for x in c)


def adams(chi: Character, l: int) -> Character:
    """psi^l: scale every weight by l."""
    if l < 1:
        raise ValueError("Adams operation needs l >= 1")
    return Character(chi.root_system, {tuple(l * x for x in mu): m for mu, m in chi.mults.items()})


def char_mul(a: Character, b: Character) -> Character:
    """Tensor product: convolution of weight multiplicities."""
    _same(a, b)
    if len(a.mults) < len(b.mults):
        a, b = b, a
    out: defaultdict[Weight, int] = defaultdict(int)
    for mu, m in a.mults.items():
        for nu, k in b.mults.items():
            out[tuple(x + y for x, y in zip(mu, nu))] += m * k
    return Character(a.root_system, out)


def _alternating_targets(R: RootSystemData) -> list[tuple[Weight, int]]:
    """(rho - w rho, sign(w)) for all w in W."""
    rho = np.array(R.rho, dtype=np.int64)
    return [(tuple(int(x) for x in rho - m @ rho), -1 if length % 2 else 1) for m, length in R.weyl_group()]


def trivial_multiplicity(chi: Character, check: bool = True) -> int:
    """Multiplicity of V(0): sum over W of sign(w) m(rho - w rho)."""
    if check and not chi.is_weyl_invariant():
        raise NotWeylInvariant("trivial_multiplicity needs a Weyl-invariant character")
    return sum(s * chi.mults.get(t, 0) for t, s in _alternating_targets(chi.root_system))


def trivial_multiplicity_of_product(factors: list[Character]) -> int:
    """trivial_multiplicity of the product, convolving the last factor only
    at the weights the alternating sum reads."""
    R = factors[0].root_system
    if len(factors) == 1:
        return trivial_multiplicity(factors[0], check=False)
    head = factors[0]
    for f in factors[1:-1]:
        head = char_mul(head, f)
    last = factors[-1]
    _same(head, last)
    total = 0
    for t, s in _alternating_targets(R):
        acc = 0
        for nu, k in last.mults.items():
            m = head.mults.get(tuple(a - b for a, b in zip(t, nu)))
            if m:
                acc += m * k
        total += s * acc
    return total


def decompose(chi: Character) -> dict[Weight, int]:
    """Irreducible multiplicities by repeatedly peeling off the highest weight."""
    R = chi.root_system
    if not chi.is_weyl_invariant():
        raise NotWeylInvariant("decompose needs a Weyl-invariant character")
    rest = dict(chi.mults)
    out = {}
    height = lambda mu: R.inner(mu, R.rho)
    while rest:
        top = max((mu for mu in rest if all(x >= 0 for x in mu)), key=height)
        m = rest[top]
        out[top] = m
        for nu, k in irreducible_character(R, top).mults.items():
            v = rest.get(nu, 0) - m * k
            if v:
                rest[nu] = v
            else:
                rest.pop(nu, None)
    return out


def two_rho_pairing(R: RootSystemData, lam: Iterable[int]) -> int:
    """<lam, 2 rho^vee> = sum over positive roots of <lam, alpha^vee>."""
    lam = tuple(lam)
    return sum(R.coroot_pairing(lam, beta) for beta in R.positive_roots)


@dataclass(frozen=True)
class InvariantsCharacter:
    """S(r)-character of the invariant tensors in the r-th tensor power of V(lam)."""

    degree: int
    cycle_values: CycleTypeFunction
    schur: SymFunc
    parity: int

    @property
    def twisted(self) -> bool:
        return self.parity % 2 == 1

    def fake_degree(self):
        return self.schur.fake_degree(conjugate=self.twisted)

    def dimension(self) -> int:
        return self.cycle_values.dimension()

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree": self.degree,
                "cycle_values": [
                    {"cycle_type": list(mu), "value": v} for mu, v in self.cycle_values.values.items()
                ],
                "schur": [{"partition": list(k), "coeff": v} for k, v in self.schur.terms.items()],
                "parity": self.parity % 2,
            }
        )


FROBENIUS_DEGREE_BOUND = 8


def frobenius_invariants(R: RootSystemData, lam: Iterable[int], r: int) -> InvariantsCharacter:
    """Frobenius character of the S(r)-module of invariants in the r-th tensor
    power of V(lam).

    The value at cycle type mu is the trivial multiplicity of the product of
    Adams operations psi^l ch V(lam) over the parts l of mu.
    """
    lam = tuple(lam)
    if r < 0 or r > FROBENIUS_DEGREE_BOUND:
        raise ValueError(f"r = {r} outside supported range 0..{FROBENIUS_DEGREE_BOUND}")
    base = irreducible_character(R, lam)
    vals = {}
    for mu in partitions(r):
        if not mu:
            vals[mu] = 1
            continue
        factors = [adams(base, l) for l in mu]
        vals[mu] = trivial_multiplicity_of_product(factors)
    chi = CycleTypeFunction(r, vals)
    return InvariantsCharacter(r, chi, cycle_values_to_schur(chi), two_rho_pairing(R, lam))
