"""Monomials and monomial ideals in the variables a, b, c, d."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import sympy

from tetcurves.common.constants import VARIABLES
from tetcurves.common.exceptions import TetInputError

SYMBOLS = sympy.symbols(" ".join(VARIABLES))


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial a^e_a b^e_b c^e_c d^e_d, stored as its exponent vector."""

    exponents: Tuple[int, int, int, int]

    def __post_init__(self):
        exponents = tuple(self.exponents)
        if len(exponents) != len(VARIABLES):
            raise TetInputError(f"A monomial needs {len(VARIABLES)} exponents, got: {list(exponents)}")
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in exponents):
            raise TetInputError(f"Monomial exponents must be non-negative integers, got: {list(exponents)}")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def one(cls) -> Monomial:
        return cls((0, 0, 0, 0))

    @classmethod
    def variable(cls, index: int, power: int = 1) -> Monomial:
        exponents = [0, 0, 0, 0]
        exponents[index] = power
        return cls(tuple(exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(e <= f for e, f in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(e + f for e, f in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(e, f) for e, f in zip(self.exponents, other.exponents)))

    def quotient(self, divisor: Monomial) -> Monomial:
        """Return self / divisor; the divisor must divide self."""
        if not divisor.divides(self):
            raise TetInputError(f"{divisor} does not divide {self}")
        return Monomial(tuple(e - f for e, f in zip(self.exponents, divisor.exponents)))

    def permuted(self, permutation: Sequence[int]) -> Monomial:
        """Rename variable x to variable permutation[x]."""
        exponents = [0, 0, 0, 0]
        for index, exponent in enumerate(self.exponents):
            exponents[permutation[index]] = exponent
        return Monomial(tuple(exponents))

    def pulled_back(self, permutation: Sequence[int]) -> Monomial:
        """Inverse of permuted()."""
        return Monomial(tuple(self.exponents[permutation[index]] for index in range(len(VARIABLES))))

    def as_expr(self):
        """Return the monomial as a sympy expression in a, b, c, d."""
        return sympy.Mul(*(symbol ** exponent for symbol, exponent in zip(SYMBOLS, self.exponents)))

    def __str__(self):
        return str(self.as_expr())


def sort_key(monomial: Monomial):
    """Order by degree, then lexicographically with a > b > c > d."""
    return (monomial.degree, tuple(-e for e in monomial.exponents))


def minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Return the minimal generating antichain of the ideal the monomials generate."""
    kept = []
    for candidate in sorted(set(monomials), key=sort_key):
        # Sorted by degree: only an already kept monomial can divide the candidate
        if not any(generator.divides(candidate) for generator in kept):
            kept.append(candidate)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    The generators form an antichain under divisibility and are kept in
    `sort_key` order, so two ideals are equal exactly when their generator
    tuples are.  The zero ideal has no generators, the unit ideal is (1).
    """

    generators: Tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", minimalize(self.generators))

    @classmethod
    def unit(cls) -> MonomialIdeal:
        return cls((Monomial.one(),))

    @classmethod
    def zero(cls) -> MonomialIdeal:
        return cls(())

    @property
    def is_unit(self) -> bool:
        return self.generators == (Monomial.one(),)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def contains(self, monomial: Monomial) -> bool:
        return any(generator.divides(monomial) for generator in self.generators)

    def times(self, monomial: Monomial) -> MonomialIdeal:
        """Return the product monomial * I."""
        return MonomialIdeal(tuple(monomial * g for g in self.generators))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(self.generators + other.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"
