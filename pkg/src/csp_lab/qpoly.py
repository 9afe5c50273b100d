"""Exact integer polynomials in q, rational functions, and q-analogues.

Polynomials are immutable and hashable.  Coefficients are Python ints, so
nothing ever overflows.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division over Z leaves a remainder."""


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Polynomial with integer coefficients; ``coeffs[i]`` multiplies q**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] += c
        return cls(out)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = IntPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("expected a JSON array of integers")
        return cls(data)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = str(c)
            else:
                q = "q" if k == 1 else f"q^{k}"
                mono = q if c == 1 else ("-" + q if c == -1 else f"{c}{q}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = IntPolynomial()
ONE = IntPolynomial.constant(1)
Q = IntPolynomial.monomial(1)


def poly_divmod(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Long division over Z.  Raises InexactDivision if a quotient
    coefficient would be fractional."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead = g.coeffs[-1]
    if len(rem) - 1 < dg:
        return ZERO, f
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg]
        if c == 0:
            continue
        if c % lead:
            raise InexactDivision(f"coefficient {c} of q^{k + dg} not divisible by {lead}")
        t = c // lead
        quot[k] = t
        for j, gc in enumerate(g.coeffs):
            rem[k + j] -= t * gc
    return IntPolynomial(quot), IntPolynomial(rem)


def poly_exact_div(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Return h with g*h == f, or raise InexactDivision."""
    h, r = poly_divmod(f, g)
    if not r.is_zero():
        raise InexactDivision(f"{g} does not divide {f}")
    return h


def _primitive(f: IntPolynomial) -> IntPolynomial:
    c = f.content()
    if c == 0:
        return f
    if f.leading() < 0:
        c = -c
    return IntPolynomial(x // c for x in f.coeffs)


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (ignores integer content)."""
    a = [Fraction(x) for x in f.coeffs]
    b = [Fraction(x) for x in g.coeffs]
    while b:
        # a mod b over Q
        a = list(a)
        while len(a) >= len(b) and a:
            t = a[-1] / b[-1]
            off = len(a) - len(b)
            for j, bc in enumerate(b):
                a[off + j] -= t * bc
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return ZERO
    den = 1
    for x in a:
        den = den * x.denominator // gcd(den, x.denominator)
    return _primitive(IntPolynomial(int(x * den) for x in a))


def q_int(n: int) -> IntPolynomial:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return IntPolynomial([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gauss binomial coefficient, by exact division of q-factorials."""
    if k < 0 or k > n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return poly_exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def reduce_cyclic(f: IntPolynomial, n: int) -> IntPolynomial:
    """Representative of f modulo q^n - 1 of degree < n."""
    if n < 1:
        raise ValueError("reduce_cyclic needs n >= 1")
    out = [0] * n
    for k, c in enumerate(f.coeffs):
        out[k % n] += c
    return IntPolynomial(out)


class RationalQ:
    """Reduced quotient of integer polynomials.

    The denominator is primitive up to the common content and has positive
    leading coefficient; the overall sign lives in the numerator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: IntPolynomial | int, denominator: IntPolynomial | int = 1):
        num = IntPolynomial._coerce(numerator)
        den = IntPolynomial._coerce(denominator)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            num = poly_exact_div(num, g)
            den = poly_exact_div(den, g)
            c = gcd(num.content(), den.content())
            if den.leading() < 0:
                c = -c
            num = IntPolynomial(x // c for x in num.coeffs)
            den = IntPolynomial(x // c for x in den.coeffs)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalQ is immutable")

    @staticmethod
    def _coerce(other) -> RationalQ:
        if isinstance(other, RationalQ):
            return other
        if isinstance(other, (int, IntPolynomial)):
            return RationalQ(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalQ(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalQ(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalQ(self.numerator * other.denominator, self.denominator * other.numerator)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def is_polynomial(self) -> bool:
        return self.denominator == ONE

    def __repr__(self):
        return f"RationalQ({self.numerator!s}, {self.denominator!s})"


def exp_q_truncated(N: int) -> list[RationalQ]:
    """Coefficients 1/[n]! of z^n in exp_q(z), for n = 0..N."""
    return [RationalQ(ONE, q_factorial(n)) for n in range(N + 1)]
