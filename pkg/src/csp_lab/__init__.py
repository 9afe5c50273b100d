"""Exact cyclic sieving experiments: promotion on crystal words, rotation of
diagrams, and fake-degree polynomials computed from first principles."""

from .csp import FiniteAction, OrbitReport, orbits, verify_csp
from .qpoly import IntPolynomial, RationalQ, q_binomial, q_factorial, q_int, reduce_cyclic
from .symfunc import Partition, SymFunc, fake_degree

__all__ = [
    "FiniteAction",
    "IntPolynomial",
    "OrbitReport",
    "Partition",
    "RationalQ",
    "SymFunc",
    "fake_degree",
    "orbits",
    "q_binomial",
    "q_factorial",
    "q_int",
    "reduce_cyclic",
    "verify_csp",
]

__version__ = "0.1.0"
