"""Closed forms for a run of k reduced steps starting from an even root ``2**j * a``.

Two forms are provided.  The *printed* form

    (3**k * 2**(j-1) * a + F(k, xs)) / 2**(sum(xs) - k)

reproduces the printed k-step display, with the elimination sum ``F``.  It
agrees with direct iteration only for ``k == 1``.  The *corrected* form
unrolls the one-step root recurrence ``r' = (3r + 2 - 2**(x-1)) / 2**x``:

    (3**k * 2**j * a + G(k, xs)) / 2**sum(xs)

and is what everything downstream uses unless told otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import check_odd, reduced_step, root


class ChainFormula(enum.Enum):
    PAPER = "paper"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class ChainSpec:
    j: int
    a: int
    xs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.j < 1:
            raise ValueError(f"j must be >= 1, got {self.j}")
        if not self.xs or any(x < 1 for x in self.xs):
            raise ValueError(f"xs must be a non-empty sequence of positive ints, got {self.xs}")
        object.__setattr__(self, "xs", tuple(self.xs))

    @property
    def k(self) -> int:
        return len(self.xs)

    @property
    def initial_root(self) -> int:
        return 2**self.j * self.a

    @property
    def m(self) -> int:
        return 2 ** (self.j + 1) * self.a + 1


@dataclass(frozen=True)
class ChainResult:
    final_root: Fraction
    per_step_roots: tuple[Fraction, ...]


def chain_oracle(m: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Ground truth: the roots after each of ``k`` reduced steps, and their valuations."""
    check_odd(m)
    roots, xs = [], []
    for _ in range(k):
        m, x = reduced_step(m)
        roots.append(root(m))
        xs.append(x)
    return tuple(roots), tuple(xs)


def f_elimination_paper(xs: Sequence[int]) -> Fraction:
    """Printed elimination sum ``sum 3**(k-i) * 2**(x_0+..+x_{i-1} - (i-1)) * (1 - 2**(x_i-2))``."""
    k = len(xs)
    total = Fraction(0)
    prefix = 0
    for i, x in enumerate(xs, start=1):
        total += 3 ** (k - i) * Fraction(2) ** (prefix - (i - 1)) * (1 - Fraction(2) ** (x - 2))
        prefix += x
    return total


def f_elimination_corrected(xs: Sequence[int]) -> Fraction:
    """Elimination sum of the corrected form; term i vanishes iff ``x_i == 2``."""
    return Fraction(_g_int(xs))


def _g_int(xs: Sequence[int]) -> int:
    k = len(xs)
    total = prefix = 0
    for i, x in enumerate(xs, start=1):
        total += 3 ** (k - i) * (2 - 2 ** (x - 1)) * 2**prefix
        prefix += x
    return total


def chain_affine(j: int, xs: Sequence[int], formula: ChainFormula = ChainFormula.CORRECTED) -> tuple[Fraction, Fraction]:
    """Coefficients ``(c1, c0)`` with final root ``= c1 * a + c0`` for initial root ``2**j * a``.

    ``a`` is left free so callers can substitute rational expressions for it.
    """
    k, s = len(xs), sum(xs)
    if formula is ChainFormula.PAPER:
        den = Fraction(2) ** (s - k)
        return Fraction(3**k) * Fraction(2) ** (j - 1) / den, f_elimination_paper(xs) / den
    return Fraction(3**k * 2**j, 2**s), Fraction(_g_int(xs), 2**s)


def chain_root_paper(spec: ChainSpec) -> Fraction:
    c1, c0 = chain_affine(spec.j, spec.xs, ChainFormula.PAPER)
    return c1 * spec.a + c0


def chain_root_corrected(spec: ChainSpec) -> Fraction:
    return Fraction(3**spec.k * 2**spec.j * spec.a + _g_int(spec.xs), 2 ** sum(spec.xs))


def chain_root(spec: ChainSpec, formula: ChainFormula = ChainFormula.CORRECTED) -> Fraction:
    if formula is ChainFormula.PAPER:
        return chain_root_paper(spec)
    return chain_root_corrected(spec)


def chain_result(spec: ChainSpec, formula: ChainFormula = ChainFormula.CORRECTED) -> ChainResult:
    roots = tuple(
        chain_root(ChainSpec(spec.j, spec.a, spec.xs[:i]), formula) for i in range(1, spec.k + 1)
    )
    return ChainResult(roots[-1], roots)


def spec_from_oracle(m: int, k: int) -> ChainSpec:
    """Build the chain spec that matches the true valuations of ``k`` steps from ``m``."""
    a0 = root(m)
    if a0 == 0 or a0 % 2:
        raise ValueError(f"{m} does not have a positive even root")
    j = (a0 & -a0).bit_length() - 1
    _, xs = chain_oracle(m, k)
    return ChainSpec(j, a0 >> j, xs)
