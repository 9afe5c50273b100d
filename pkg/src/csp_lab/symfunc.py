"""Partitions, symmetric group characters, fake degrees and symmetric functions.

Symmetric functions of a fixed degree r are handled through their values as
class functions on S(r) (cycle-type values).  Schur coefficients come out of
the character inner product, homogeneous coefficients out of a unitriangular
solve against the Kostka matrix.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Mapping

from .qpoly import ONE, ZERO, IntPolynomial, poly_exact_div, q_binomial, q_factorial, q_int

MAJ_ENUMERATION_BOUND = 12
SYMFUNC_DEGREE_BOUND = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_any(cls, parts) -> Partition:
        """Sort and drop zeros, e.g. (0, 2, 3) -> (3, 2)."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def hook(self, i: int, j: int) -> int:
        conj = self.conjugate()
        return (self[i] - j - 1) + (conj[j] - i - 1) + 1

    def hooks(self) -> list[int]:
        conj = self.conjugate()
        return [(self[i] - j) + (conj[j] - i) - 1 for i, j in self.cells()]

    def b(self) -> int:
        """sum (i-1)*lambda_i with rows counted from 1."""
        return sum(i * p for i, p in enumerate(self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order, (n) first."""
    if max_part is None:
        max_part = n

    def gen(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in gen(rem - p, p):
                yield (p,) + rest

    for parts in gen(n, max_part):
        yield Partition(parts)


def z(mu: Partition) -> int:
    """Size of the centralizer of a permutation with cycle type mu."""
    out = 1
    for part, mult in Counter(mu).items():
        out *= part**mult * factorial(mult)
    return out


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z(mu)


def conjugate(lam) -> Partition:
    return Partition(lam).conjugate()


def dim_partition(lam) -> int:
    """Number of standard tableaux of shape lam (hook length formula)."""
    lam = Partition(lam)
    prod = 1
    for h in lam.hooks():
        prod *= h
    return factorial(lam.size) // prod


def fake_degree(lam) -> IntPolynomial:
    """q^b(lam) [n]! / prod of [hook]."""
    lam = Partition(lam)
    den = ONE
    for h in lam.hooks():
        den = den * q_int(h)
    return poly_exact_div(q_factorial(lam.size), den).shift(lam.b())


def standard_tableaux(lam) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam, as tuples of rows."""
    lam = Partition(lam)
    n = lam.size
    rows: list[list[int]] = [[] for _ in lam]

    def place(k):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, row in enumerate(rows):
            if len(row) < lam[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(k)
                yield from place(k + 1)
                row.pop()

    yield from place(1)


def tableau_maj(rows) -> int:
    """Sum of the descents i of a standard tableau: i+1 lies in a strictly lower row."""
    row_of = {}
    for i, row in enumerate(rows):
        for v in row:
            row_of[v] = i
    n = len(row_of)
    return sum(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def fake_degree_maj(lam) -> IntPolynomial:
    lam = Partition(lam)
    if lam.size > MAJ_ENUMERATION_BOUND:
        raise ValueError(f"|lambda| = {lam.size} exceeds tableau enumeration bound {MAJ_ENUMERATION_BOUND}")
    terms: Counter[int] = Counter()
    for t in standard_tableaux(lam):
        terms[tableau_maj(t)] += 1
    return IntPolynomial.from_terms(dict(terms))


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((occupied - {b}) | {nb}, reverse=True)
        ell = len(new_beta)
        new_lam = tuple(x for x in (new_beta[i] - (ell - 1 - i) for i in range(ell)) if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def mn_character(lam, mu) -> int:
    """chi^lam evaluated on the class of cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")
    return _mn(tuple(lam), tuple(mu))


@dataclass(frozen=True)
class CycleTypeFunction:
    """A class function on S(degree), recorded by cycle type."""

    degree: int
    values: Mapping[Partition, int]

    def __post_init__(self):
        vals = {Partition(k): int(v) for k, v in self.values.items()}
        missing = [mu for mu in partitions(self.degree) if mu not in vals]
        if missing:
            raise ValueError(f"class function undefined on {[tuple(m) for m in missing]}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, mu) -> int:
        return self.values[Partition(mu)]

    def dimension(self) -> int:
        return self.values[Partition([1] * self.degree)]


class NonIntegralExpansion(ValueError):
    """A class function whose irreducible multiplicities are not integers."""


def cycle_values_to_schur(chi: CycleTypeFunction) -> SymFunc:
    """Multiplicities <chi, chi^lam> as a Schur-basis symmetric function."""
    r = chi.degree
    terms = {}
    for lam in partitions(r):
        acc = Fraction(0)
        for mu in partitions(r):
            v = chi.values[mu]
            if v:
                acc += Fraction(v * mn_character(lam, mu), z(mu))
        if acc.denominator != 1:
            raise NonIntegralExpansion(f"multiplicity of {tuple(lam)} is {acc}")
        if acc:
            terms[lam] = int(acc)
    return SymFunc("schur", terms, degree=r)


def _homogeneous_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Fixed points of a cycle-type-mu permutation on set compositions of type lam."""

    @lru_cache(maxsize=None)
    def count(i, caps):
        if i == len(mu):
            return 1 if not any(caps) else 0
        total = 0
        for j, c in enumerate(caps):
            if c >= mu[i]:
                total += count(i + 1, caps[:j] + (c - mu[i],) + caps[j + 1:])
        return total

    return count(0, tuple(lam))


@lru_cache(maxsize=None)
def _kostka_rows(r: int) -> dict[Partition, dict[Partition, int]]:
    """h_lam expanded in Schur functions, for every lam |- r."""
    out = {}
    for lam in partitions(r):
        vals = {mu: _homogeneous_value(tuple(lam), tuple(mu)) for mu in partitions(r)}
        out[lam] = dict(cycle_values_to_schur(CycleTypeFunction(r, vals)).terms)
    return out


@dataclass(frozen=True)
class SymFunc:
    """Homogeneous symmetric function of a given degree in the Schur or
    complete-homogeneous basis."""

    basis: str
    terms: Mapping[Partition, int]
    degree: int | None = field(default=None)

    def __post_init__(self):
        if self.basis not in ("schur", "homogeneous"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for k, v in self.terms.items():
            k = Partition(k)
            if v:
                clean[k] = clean.get(k, 0) + int(v)
        clean = {k: v for k, v in clean.items() if v}
        degrees = {k.size for k in clean}
        if len(degrees) > 1:
            raise ValueError("SymFunc terms must share one degree")
        deg = self.degree
        if degrees:
            (d,) = degrees
            if deg is not None and deg != d:
                raise ValueError(f"declared degree {deg} but terms have degree {d}")
            deg = d
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))
        object.__setattr__(self, "degree", deg)

    @classmethod
    def schur(cls, terms, degree=None) -> SymFunc:
        return cls("schur", dict(terms), degree)

    @classmethod
    def h(cls, terms, degree=None) -> SymFunc:
        return cls("homogeneous", dict(terms), degree)

    def cycle_values(self) -> CycleTypeFunction:
        r = self.degree or 0
        vals = {}
        for mu in partitions(r):
            if self.basis == "schur":
                vals[mu] = sum(c * mn_character(lam, mu) for lam, c in self.terms.items())
            else:
                vals[mu] = sum(c * _homogeneous_value(tuple(lam), tuple(mu)) for lam, c in self.terms.items())
        return CycleTypeFunction(r, vals)

    def to_schur(self) -> SymFunc:
        if self.basis == "schur":
            return self
        r = self.degree or 0
        _check_degree(r)
        rows = _kostka_rows(r)
        out: Counter[Partition] = Counter()
        for lam, c in self.terms.items():
            for nu, k in rows[lam].items():
                out[nu] += c * k
        return SymFunc("schur", out, degree=r)

    def to_homogeneous(self) -> SymFunc:
        if self.basis == "homogeneous":
            return self
        r = self.degree or 0
        _check_degree(r)
        rows = _kostka_rows(r)
        # s_nu = sum_lam a_lam h_lam, K unitriangular in lex order: solve smallest first
        target = dict(self.terms)
        coeffs: dict[Partition, int] = {}
        for nu in sorted(partitions(r)):
            acc = target.get(nu, 0)
            for lam, a in coeffs.items():
                acc -= a * rows[lam].get(nu, 0)
            if acc:
                coeffs[nu] = acc
        return SymFunc("homogeneous", coeffs, degree=r)

    def dimension(self) -> int:
        """Dimension of the S(r)-module whose Frobenius character this is."""
        return self.cycle_values().dimension() if self.basis == "homogeneous" else sum(
            c * dim_partition(lam) for lam, c in self.terms.items()
        )

    def fake_degree(self, conjugate: bool = False) -> IntPolynomial:
        return fake_degree_module(self.to_schur().terms, conjugate)

    def __add__(self, other: SymFunc) -> SymFunc:
        other = other.in_basis(self.basis)
        out = Counter(self.terms)
        out.update(other.terms)
        deg = self.degree if self.degree is not None else other.degree
        return SymFunc(self.basis, out, deg if self.terms or other.terms else None)

    def scale(self, c: int) -> SymFunc:
        return SymFunc(self.basis, {k: c * v for k, v in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a = self.to_homogeneous() if self.basis == "schur" else self
        b = other.to_homogeneous() if other.basis == "schur" else other
        out: Counter[Partition] = Counter()
        for la, ca in a.terms.items():
            for lb, cb in b.terms.items():
                out[Partition.from_any(la + lb)] += ca * cb
        deg = None if a.degree is None or b.degree is None else a.degree + b.degree
        res = SymFunc("homogeneous", out, deg if out else None)
        return res.to_schur() if self.basis == "schur" else res

    __rmul__ = __mul__

    def in_basis(self, basis: str) -> SymFunc:
        return self.to_schur() if basis == "schur" else self.to_homogeneous()

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.in_basis(self.basis).terms

    def __hash__(self):
        return hash((self.basis, tuple(self.terms.items())))

    def to_json(self) -> str:
        return json.dumps(
            {
                "basis": self.basis,
                "terms": [{"partition": list(k), "coeff": v} for k, v in self.terms.items()],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> SymFunc:
        data = json.loads(text)
        return cls(data["basis"], {Partition(t["partition"]): t["coeff"] for t in data["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        letter = "s" if self.basis == "schur" else "h"
        parts = []
        for lam, c in self.terms.items():
            mono = f"{letter}[{','.join(map(str, lam))}]"
            parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)


def _check_degree(r: int) -> None:
    if r > SYMFUNC_DEGREE_BOUND:
        raise ValueError(f"degree {r} exceeds supported bound {SYMFUNC_DEGREE_BOUND}")


def fake_degree_module(mults: Mapping, conjugate_flag: bool = False) -> IntPolynomial:
    """sum m_lam f_q(lam), or f_q of the conjugates when conjugate_flag is set."""
    out = ZERO
    for lam, m in mults.items():
        if m < 0:
            raise ValueError(f"negative multiplicity {m} for {tuple(lam)}")
        lam = Partition(lam)
        out = out + fake_degree(lam.conjugate() if conjugate_flag else lam) * m
    return out


def matchings_schur_sum(r: int) -> SymFunc:
    """sum over mu |- r of s_(2mu)."""
    if r > 6:
        raise ValueError("matchings_schur_sum supports r <= 6")
    return SymFunc("schur", {Partition(2 * p for p in mu): 1 for mu in partitions(r)}, degree=2 * r)


def rencontre_series(N: int) -> dict[tuple[int, int], SymFunc]:
    """F_{n,k} for 0 <= k <= n <= N, homogeneous basis.

    F_{n,0} is the z^n coefficient of 1/(1 - sum_{m>=2} (m-1) h_m z^m) and
    F_{n,k} = h_k F_{n-k,0} comes from the numerator H(tz).
    """
    if N > 8:
        raise ValueError("rencontre_series supports N <= 8")
    F0: list[Counter] = [Counter({Partition(): 1})]
    for n in range(1, N + 1):
        acc: Counter[Partition] = Counter()
        for m in range(2, n + 1):
            for lam, c in F0[n - m].items():
                acc[Partition.from_any(lam + (m,))] += (m - 1) * c
        F0.append(acc)
    out = {}
    for n in range(N + 1):
        for k in range(n + 1):
            terms = {Partition.from_any(lam + ((k,) if k else ())): c for lam, c in F0[n - k].items()}
            out[n, k] = SymFunc("homogeneous", terms, degree=n)
    return out


def q_derangement(n: int) -> IntPolynomial:
    """[n]! sum_k (-1)^k q^C(k,2) / [k]!, each term divided exactly."""
    if n < 0:
        raise ValueError("q_derangement needs n >= 0")
    top = q_factorial(n)
    out = ZERO
    for k in range(n + 1):
        term = poly_exact_div(top, q_factorial(k)).shift(k * (k - 1) // 2)
        out = out + (term if k % 2 == 0 else -term)
    return out


def q_rencontre(n: int, k: int) -> IntPolynomial:
    if k < 0 or k > n:
        raise ValueError(f"q_rencontre needs 0 <= k <= n, got n={n}, k={k}")
    return q_binomial(n, k) * q_derangement(n - k)
