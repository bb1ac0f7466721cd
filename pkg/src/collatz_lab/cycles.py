"""Feasibility of simple odd/even cycles of the reduced map.

Each cycle shape gives ``b`` (or ``a``) as an exact rational in the free
exponents.  A shape is ruled out for given exponents when ``b`` is not a
positive odd integer coprime to 3.  Logarithmic limit points are computed as
certified enclosures for presentation; every verdict is settled by comparing
integer powers of 2 and 3 directly, so no verdict depends on precision.
"""

from __future__ import annotations

import enum
import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .arith import (
    CertifiedReal,
    Ordering,
    compare_certified,
    default_precision,
    is_valid_root_factor,
    log2_rational,
    val2,
    MAX_PRECISION_BITS,
)
from .chains import ChainFormula, chain_affine
from .core import reduced_step, root

T = TypeVar("T")
R = TypeVar("R")


class BVerdict(enum.Enum):
    VALID = "valid"
    NEGATIVE = "negative"
    ZERO = "zero"
    BELOW_ONE = "below-one"
    NON_INTEGER = "non-integer"
    EVEN = "even"
    MULTIPLE_OF_THREE = "multiple-of-three"
    ODD_EXPONENT = "odd-exponent"


class GapVerdict(enum.Enum):
    NO_CANDIDATE = "no-candidate"
    ALL_REJECTED = "all-rejected"
    CANDIDATE_FOUND = "candidate-found"


def b_verdict(b: Fraction) -> BVerdict:
    if b < 0:
        return BVerdict.NEGATIVE
    if b == 0:
        return BVerdict.ZERO
    if b < 1:
        return BVerdict.BELOW_ONE
    if b.denominator != 1:
        return BVerdict.NON_INTEGER
    if b.numerator % 2 == 0:
        return BVerdict.EVEN
    if b.numerator % 3 == 0:
        return BVerdict.MULTIPLE_OF_THREE
    assert is_valid_root_factor(b)
    return BVerdict.VALID


@dataclass(frozen=True)
class Evaluation:
    candidate: int
    b: Fraction | None
    verdict: BVerdict
    # weaker printed test: b merely a positive integer
    paper_integer: bool
    boundary: bool = False


@dataclass(frozen=True)
class GapReport:
    case: int
    n: int
    x: int | None
    lower: CertifiedReal
    upper: CertifiedReal
    window: tuple[int, int]
    candidates: tuple[int, ...]
    evaluations: tuple[Evaluation, ...]
    verdict: GapVerdict
    paper_upper: CertifiedReal | None = None
    paper_candidates: tuple[int, ...] | None = None
    truncated: bool = False

    @property
    def difference(self) -> CertifiedReal:
        return self.upper - self.lower


def _gap_verdict(evaluations: Sequence[Evaluation]) -> GapVerdict:
    if not evaluations:
        return GapVerdict.NO_CANDIDATE
    if any(e.verdict is BVerdict.VALID for e in evaluations):
        return GapVerdict.CANDIDATE_FOUND
    return GapVerdict.ALL_REJECTED


def _evaluate(candidate: int, b: Fraction) -> Evaluation:
    return Evaluation(
        candidate,
        b,
        b_verdict(b),
        paper_integer=b.denominator == 1 and b > 0,
        boundary=b in (0, 1),
    )


def _ratio(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("cycle equation has a vanishing denominator")
    return Fraction(num, den)


def _precision(precision_bits: int | None) -> int:
    return precision_bits or default_precision()


@functools.lru_cache(maxsize=32)
def _phi(bits: int) -> CertifiedReal:
    return log2_rational(3, bits)


@functools.lru_cache(maxsize=32)
def _case1_scale(bits: int) -> CertifiedReal:
    """``1 - log2(3)/2``, the divisor of both case 1 limit points."""
    return 1 - _phi(bits) / 2


def _window(lower: CertifiedReal, upper: CertifiedReal, floor_at: int) -> tuple[int, int]:
    lo = lower.lo.numerator // lower.lo.denominator - 2
    hi = -((-upper.hi.numerator) // upper.hi.denominator) + 2
    return max(lo, floor_at), hi


def _exact_floor(value: CertifiedReal, below: Callable[[int], bool]) -> int:
    """Floor of an irrational value, with ``below(x)`` deciding ``x < value`` exactly."""
    guess = value.floor_if_decided()
    if guess is not None:
        return guess
    top = value.hi.numerator // value.hi.denominator
    return top if below(top) else top - 1


def _running_min(values: Iterable[CertifiedReal]) -> list[CertifiedReal]:
    out: list[CertifiedReal] = []
    for v in values:
        if not out:
            out.append(v)
            continue
        prev = out[-1]
        lo, hi = min(prev.lo, v.lo), min(prev.hi, v.hi)
        out.append(CertifiedReal.from_bounds(lo, hi, min(prev.precision_bits, v.precision_bits)))
    return out


# ---------------------------------------------------------------------------
# First case: n odd-root steps, then type I even steps, x even


def case1_b(n: int, x: int) -> Fraction:
    """``b = (2**x - 3**(x/2)) / (2**(x+n) - 3**(x/2+n))`` for even ``x >= 4``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if x % 2 or x < 4:
        raise ValueError(f"x must be even and > 2, got {x}")
    h = x // 2
    return _ratio(2**x - 3**h, 2 ** (x + n) - 3 ** (h + n))


def case1_above_lower(n: int, x: int) -> bool:
    """``x > log2(3**n / 2**n) / (1 - log2(3)/2)``, i.e. ``2**(2x+2n) > 3**(x+2n)``."""
    return 4 ** (x + n) > 3 ** (x + 2 * n)


def case1_below_upper(n: int, x: int) -> bool:
    """``x < log2((3**n - 1)/(2**n - 1)) / (1 - log2(3)/2)``, squared to stay integral."""
    return 4**x * (2**n - 1) ** 2 < 3**x * (3**n - 1) ** 2


def case1_lower(n: int, precision_bits: int | None = None) -> CertifiedReal:
    bits = _precision(precision_bits)
    return n * (_phi(bits) - 1) / _case1_scale(bits)


def case1_bounds(n: int, precision_bits: int | None = None) -> tuple[CertifiedReal, CertifiedReal]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bits = _precision(precision_bits)
    upper = log2_rational(Fraction(3**n - 1, 2**n - 1), bits) / _case1_scale(bits)
    return case1_lower(n, bits), upper


def epsilon1(n: int, precision_bits: int | None = None) -> CertifiedReal:
    """Width of the case 1 gap, evaluated as a single logarithm for accuracy at large n."""
    bits = _precision(precision_bits)
    q = Fraction((3**n - 1) * 2**n, (2**n - 1) * 3**n)
    return log2_rational(q, bits) / _case1_scale(bits)


def _alpha1_terms(n_max: int, bits: int) -> list[CertifiedReal]:
    terms = []
    for m in range(1, n_max + 1):
        lower = case1_lower(m, bits)
        fl = _exact_floor(lower, lambda x, m=m: not case1_above_lower(m, x))
        terms.append((fl + 1) - lower)
    return terms


def alpha1_min(n: int, precision_bits: int | None = None) -> CertifiedReal:
    """Running minimum over m = 1..n of the distance from the lower limit point up to the next integer."""
    return _running_min(_alpha1_terms(n, _precision(precision_bits)))[-1]


def case1_scan(n: int, precision_bits: int | None = None) -> GapReport:
    lower, upper = case1_bounds(n, precision_bits)
    window = _window(lower, upper, floor_at=1)
    candidates, evaluations = [], []
    for x in range(window[0], window[1] + 1):
        in_gap = case1_above_lower(n, x) and case1_below_upper(n, x)
        if x % 2 == 0 and x >= 4:
            b = case1_b(n, x)
            # gap membership and b > 1 are the same inequality
            assert in_gap == (b > 1), (n, x, b)
        if not in_gap:
            continue
        candidates.append(x)
        if x % 2:
            evaluations.append(Evaluation(x, None, BVerdict.ODD_EXPONENT, paper_integer=False))
        else:
            evaluations.append(_evaluate(x, case1_b(n, x)))
    return GapReport(1, n, None, lower, upper, window, tuple(candidates), tuple(evaluations), _gap_verdict(evaluations))


# ---------------------------------------------------------------------------
# Second case: n odd-root steps, then one type II even step


def case2_b(n: int, x: int) -> Fraction:
    """``b = (2**(x-1) - 1) / (2**(n+x) - 3**(n+1))``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    return _ratio(2 ** (x - 1) - 1, 2 ** (n + x) - 3 ** (n + 1))


def case2_above_lower(n: int, x: int) -> bool:
    return 2 ** (n + x) > 3 ** (n + 1)


def case2_below_upper(n: int, x: int) -> bool:
    return 2**x * (2 ** (n + 1) - 1) < 2 * (3 ** (n + 1) - 1)


def case2_lower(n: int, precision_bits: int | None = None) -> CertifiedReal:
    bits = _precision(precision_bits)
    return (n + 1) * _phi(bits) - n


def case2_bounds(n: int, precision_bits: int | None = None) -> tuple[CertifiedReal, CertifiedReal]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bits = _precision(precision_bits)
    upper = log2_rational(Fraction(2 * (3 ** (n + 1) - 1), 2 ** (n + 1) - 1), bits)
    return case2_lower(n, bits), upper


def epsilon2(n: int, precision_bits: int | None = None) -> CertifiedReal:
    bits = _precision(precision_bits)
    q = Fraction((3 ** (n + 1) - 1) * 2 ** (n + 1), (2 ** (n + 1) - 1) * 3 ** (n + 1))
    return log2_rational(q, bits)


def _alpha2_terms(n_max: int, bits: int) -> list[CertifiedReal]:
    terms = []
    for m in range(1, n_max + 1):
        lower = case2_lower(m, bits)
        fl = _exact_floor(lower, lambda x, m=m: not case2_above_lower(m, x))
        terms.append((fl + 1) - lower)
    return terms


def alpha2_min(n: int, precision_bits: int | None = None) -> CertifiedReal:
    return _running_min(_alpha2_terms(n, _precision(precision_bits)))[-1]


def case2_scan(n: int, precision_bits: int | None = None) -> GapReport:
    lower, upper = case2_bounds(n, precision_bits)
    window = _window(lower, upper, floor_at=2)
    candidates, evaluations = [], []
    for x in range(window[0], window[1] + 1):
        b = case2_b(n, x)
        in_gap = case2_above_lower(n, x) and case2_below_upper(n, x)
        assert in_gap == (b > 1), (n, x, b)
        if in_gap:
            candidates.append(x)
            evaluations.append(_evaluate(x, b))
    return GapReport(2, n, None, lower, upper, window, tuple(candidates), tuple(evaluations), _gap_verdict(evaluations))


# ---------------------------------------------------------------------------
# Third case: odd x, followed by type I steps and one type II step with valuation y


def _check_case3(n: int, x: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if x < 3 or x % 2 == 0:
        raise ValueError(f"x must be odd and >= 3, got {x}")


def case3_b(n: int, x: int, y: int) -> Fraction:
    """``b = (2**x (1 + 2**(y-2)) - 3**((x+1)/2)) / (2**(x+y-1+n) - 3**((x+1)/2+n))``."""
    _check_case3(n, x)
    if y < 2:
        raise ValueError(f"y must be >= 2, got {y}")
    h = (x + 1) // 2
    return _ratio(2**x * (1 + 2 ** (y - 2)) - 3**h, 2 ** (x + y - 1 + n) - 3 ** (h + n))


def case3_bounds_paper(
    n: int, x: int, precision_bits: int | None = None
) -> tuple[CertifiedReal, CertifiedReal, CertifiedReal]:
    """Limit points for y: ``(lower, printed upper, exact upper)``.

    The printed b < 1 limit drops the ``2**x`` term of the exact inequality; the
    exact limit is returned alongside so the two can be compared.
    """
    _check_case3(n, x)
    bits = _precision(precision_bits)
    h = (x + 1) // 2
    lower = log2_rational(Fraction(3 ** (h + n), 2 ** (x - 1 + n)), bits)
    den = 2 ** (x - 2) * (2 ** (n + 1) - 1)
    printed = log2_rational(Fraction(3**h * (3**n - 1), den), bits)
    exact = log2_rational(Fraction(3**h * (3**n - 1) + 2**x, den), bits)
    return lower, printed, exact


def _case3_in_paper_gap(n: int, x: int, y: int) -> bool:
    h = (x + 1) // 2
    above = 2 ** (y + x - 1 + n) > 3 ** (h + n)
    below = 2**y * 2 ** (x - 2) * (2 ** (n + 1) - 1) < 3**h * (3**n - 1)
    return above and below


def case3_scan(n: int, x: int, y_max: int = 60, precision_bits: int | None = None) -> GapReport:
    """Enumerate y = 2..y_max, keeping those whose exact b is at least 1."""
    lower, printed, exact = case3_bounds_paper(n, x, precision_bits)
    candidates, evaluations, paper = [], [], []
    for y in range(2, y_max + 1):
        b = case3_b(n, x, y)
        if _case3_in_paper_gap(n, x, y):
            paper.append(y)
        if b >= 1:
            candidates.append(y)
            evaluations.append(_evaluate(y, b))
    truncated = case3_b(n, x, y_max + 1) >= 1
    return GapReport(
        3,
        n,
        x,
        lower,
        exact,
        (2, y_max),
        tuple(candidates),
        tuple(evaluations),
        _gap_verdict(evaluations),
        paper_upper=printed,
        paper_candidates=tuple(paper),
        truncated=truncated,
    )


# ---------------------------------------------------------------------------
# Generalised cycles built from the k-step even chain


@dataclass(frozen=True)
class CycleSolution:
    value: Fraction
    verdict: BVerdict
    paper_integer: bool
    # a valid value that also reproduces the assumed valuations under iteration
    realizable: bool


def _follows(m: int, odd_steps: int, j: int | None, xs: Sequence[int]) -> int | None:
    """Iterate ``odd_steps`` odd-root steps then the even steps ``xs``; None on mismatch."""
    for _ in range(odd_steps):
        a = root(m)
        if a % 2 == 0:
            return None
        m, _x = reduced_step(m)
    if j is not None:
        a = root(m)
        if a == 0 or val2(a) != j:
            return None
    for x in xs:
        m, got = reduced_step(m)
        if got != x:
            return None
    return m


def general_cycle_solve(
    n: int, j: int, xs: Sequence[int], formula: ChainFormula = ChainFormula.CORRECTED
) -> CycleSolution:
    """Solve ``2**n b - 1 = chain(3**n b - 1)`` for ``b`` exactly.

    The odd root ``2**n b - 1`` climbs to the even root ``3**n b - 1 = 2**j a``,
    which then runs through ``k = len(xs)`` even-chain steps back to the start.
    """
    if n < 1 or j < 1 or not xs:
        raise ValueError("need n >= 1, j >= 1 and at least one even step")
    c1, c0 = chain_affine(j, xs, formula)
    den = 2**n - c1 * 3**n / 2**j
    if den == 0:
        raise ZeroDivisionError("cycle equation has a vanishing denominator")
    b = (1 + c0 - c1 / 2**j) / den
    verdict = b_verdict(b)
    realizable = False
    if verdict is BVerdict.VALID:
        m0 = 2 ** (n + 1) * int(b) - 1
        realizable = _follows(m0, n, j, xs) == m0
    return CycleSolution(b, verdict, b.denominator == 1 and b > 0, realizable)


@dataclass(frozen=True)
class TCycleBlock:
    n: int
    j: int
    xs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.j < 1 or not self.xs:
            raise ValueError(f"invalid block {self}")
        object.__setattr__(self, "xs", tuple(self.xs))


@dataclass(frozen=True)
class TCycleEndpoints:
    t: int
    exponent: int
    lower: Fraction
    upper: Fraction
    remainder: Fraction
    log2_lower: CertifiedReal
    log2_upper: CertifiedReal
    gap_ratio: Fraction
    solution: CycleSolution


def _exponent_and_scale(blocks: Sequence[TCycleBlock], formula: ChainFormula) -> tuple[int, int]:
    tail = sum(b.n for b in blocks[1:])
    if formula is ChainFormula.PAPER:
        return sum(sum(b.xs) - len(b.xs) for b in blocks) + tail, 2 ** len(blocks)
    return sum(sum(b.xs) for b in blocks) + tail, 1


def t_cycle_endpoints(
    blocks: Sequence[TCycleBlock],
    formula: ChainFormula = ChainFormula.CORRECTED,
    precision_bits: int | None = None,
) -> TCycleEndpoints:
    """Limit points for ``2**E`` in a cycle of ``t`` odd/even blocks.

    The final root is composed as an affine function ``alpha * a1 + beta`` of the
    first odd factor.  ``a1 < 0`` exactly when ``2**E`` is below ``lower``; once
    above it, ``a1 < 1`` exactly when ``2**E`` exceeds ``upper``.
    """
    if not blocks:
        raise ValueError("need at least one block")
    bits = _precision(precision_bits)
    coef, const = Fraction(1), Fraction(0)
    for i, blk in enumerate(blocks):
        # odd climb 2**n a - 1 -> 3**n a - 1 = 2**j b
        coef, const = coef * 3**blk.n / 2**blk.j, (const * 3**blk.n - 1) / 2**blk.j
        c1, c0 = chain_affine(blk.j, blk.xs, formula)
        coef, const = c1 * coef, c1 * const + c0
        if i + 1 < len(blocks):
            nxt = 2 ** blocks[i + 1].n
            coef, const = coef / nxt, (const + 1) / nxt
    alpha, beta = coef, const
    n1 = blocks[0].n
    e, scale = _exponent_and_scale(blocks, formula)
    total = sum(len(b.xs) + b.n for b in blocks)
    lead = Fraction(3**total, scale)
    assert alpha == lead / 2**e
    lower = lead / 2**n1
    shifted = beta * 2**e
    upper = (lead + shifted) / (2**n1 - 1)
    remainder = upper * (2**n1 - 1) - Fraction(3 ** (total - n1) * (3**n1 - 1), scale)
    den = 2**n1 - alpha
    if den == 0:
        raise ZeroDivisionError("cycle equation has a vanishing denominator")
    a1 = (beta + 1) / den
    verdict = b_verdict(a1)
    realizable = False
    if verdict is BVerdict.VALID:
        m0 = m = 2 ** (n1 + 1) * int(a1) - 1
        for i, blk in enumerate(blocks):
            m = _follows(m, blk.n, blk.j, blk.xs)
            if m is None:
                break
            if i + 1 < len(blocks):
                r = root(m)
                if (r + 1) % 2 ** blocks[i + 1].n:
                    m = None
                    break
        realizable = m == m0
    solution = CycleSolution(a1, verdict, a1.denominator == 1 and a1 > 0, realizable)
    return TCycleEndpoints(
        len(blocks),
        e,
        lower,
        upper,
        remainder,
        log2_rational(lower, bits),
        log2_rational(upper, bits) if upper > 0 else CertifiedReal.exact(0, bits),
        upper / lower,
        solution,
    )


@dataclass(frozen=True)
class EvenStartResult:
    a: Fraction
    verdict: BVerdict
    paper_integer: bool
    realizable: bool
    exponent: int
    lower: Fraction
    upper: Fraction
    gap_ratio: Fraction


def even_start_solve(
    j: int, n: int, xs: Sequence[int], formula: ChainFormula = ChainFormula.CORRECTED
) -> EvenStartResult:
    """Cycle starting at the even root ``2**j a``: k chain steps, then n odd-root steps back.

    Thresholds are for ``X = 2**(D + n)`` where ``D = sum(xs) - k`` in the printed
    form and ``sum(xs)`` in the corrected one: ``a < 0`` iff ``X < lower`` and,
    above that, ``a < 1`` iff ``X > upper``.
    """
    if j < 1 or n < 1 or not xs:
        raise ValueError("need j >= 1, n >= 1 and at least one even step")
    k, s = len(xs), sum(xs)
    c1, c0 = chain_affine(j, xs, formula)
    den = 2 ** (j + n) - 3**n * c1
    if den == 0:
        raise ZeroDivisionError("cycle equation has a vanishing denominator")
    a = (3**n * (c0 + 1) - 2**n) / den
    if formula is ChainFormula.PAPER:
        d, scale = s - k, 2
    else:
        d, scale = s, 1
    lower = Fraction(3 ** (n + k), scale)
    upper = (Fraction(3 ** (n + k) * 2**j, scale) + 3**n * c0 * 2**d + 3**n * 2**d) / (2**j + 1)
    verdict = b_verdict(a)
    realizable = False
    if verdict is BVerdict.VALID:
        m0 = 2 ** (j + 1) * int(a) + 1
        m = _follows(m0, 0, None, xs)
        if m is not None and (root(m) + 1) % 2**n == 0:
            realizable = _follows(m, n, None, ()) == m0
    return EvenStartResult(a, verdict, a.denominator == 1 and a > 0, realizable, d + n, lower, upper, upper / lower)


# ---------------------------------------------------------------------------
# Published table and figure data


PAPER_TABLE1_NS = (1, 2, 3, 6)


def table1(precision_bits: int | None = None) -> list[GapReport]:
    return [case1_scan(n, precision_bits) for n in range(1, 7)]


class Figure(enum.Enum):
    FIG2 = "fig2"
    FIG3 = "fig3"


@dataclass(frozen=True)
class FigureRow:
    n: int
    alpha_min: CertifiedReal
    epsilon: CertifiedReal
    ordering: Ordering
    claim_holds: bool


@dataclass(frozen=True)
class FigureSeries:
    which: Figure
    rows: tuple[FigureRow, ...] = field(default_factory=tuple)

    @property
    def failures(self) -> tuple[FigureRow, ...]:
        return tuple(r for r in self.rows if not r.claim_holds)


def _claimed(which: Figure, n: int) -> Ordering:
    if which is Figure.FIG2 and n <= 6:
        return Ordering.GREATER
    return Ordering.LESS


def _figure_series(which: Figure, n_max: int, bits: int) -> tuple[list[CertifiedReal], list[CertifiedReal]]:
    if which is Figure.FIG2:
        alphas = _running_min(_alpha1_terms(n_max, bits))
        eps = [epsilon1(n, bits) for n in range(1, n_max + 1)]
    else:
        alphas = _running_min(_alpha2_terms(n_max, bits))
        eps = [epsilon2(n, bits) for n in range(1, n_max + 1)]
    return alphas, eps


def figure_data(which: Figure, n_max: int, precision_bits: int | None = None) -> FigureSeries:
    """Certified ``(n, alpha_min, epsilon)`` rows with the claimed ordering checked.

    Rows left undecided are recomputed at doubled precision up to the cap, then
    flagged rather than guessed.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    bits = _precision(precision_bits)
    alphas, eps = _figure_series(which, n_max, bits)
    rows = []
    for n in range(1, n_max + 1):
        a, e = alphas[n - 1], eps[n - 1]
        order = compare_certified(e, a)
        p = bits
        while order is Ordering.UNDECIDED and p < MAX_PRECISION_BITS:
            p = min(2 * p, MAX_PRECISION_BITS)
            hi_alphas, hi_eps = _figure_series(which, n, p)
            a, e = hi_alphas[-1], hi_eps[-1]
            order = compare_certified(e, a)
        rows.append(FigureRow(n, a, e, order, order is _claimed(which, n)))
    return FigureSeries(which, tuple(rows))


# ---------------------------------------------------------------------------
# Parallel scans


@dataclass(frozen=True)
class ScanConfig:
    n_max: int = 1000
    case3_n_max: int = 100
    x_max: int = 25
    y_max: int = 60
    jobs: int = 1
    precision_bits: int | None = None


def ordered_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """Map in input order, optionally across worker processes."""
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _case1_job(args: tuple[int, int | None]) -> GapReport:
    return case1_scan(*args)


def _case2_job(args: tuple[int, int | None]) -> GapReport:
    return case2_scan(*args)


def _case3_job(args: tuple[int, int, int, int | None]) -> GapReport:
    return case3_scan(*args)


def scan_case1(cfg: ScanConfig) -> list[GapReport]:
    return ordered_map(_case1_job, [(n, cfg.precision_bits) for n in range(1, cfg.n_max + 1)], cfg.jobs)


def scan_case2(cfg: ScanConfig) -> list[GapReport]:
    return ordered_map(_case2_job, [(n, cfg.precision_bits) for n in range(1, cfg.n_max + 1)], cfg.jobs)


def scan_case3(cfg: ScanConfig) -> list[GapReport]:
    grid = [
        (n, x, cfg.y_max, cfg.precision_bits)
        for x in range(3, cfg.x_max + 1, 2)
        for n in range(1, cfg.case3_n_max + 1)
    ]
    return ordered_map(_case3_job, grid, cfg.jobs)
