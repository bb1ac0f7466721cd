from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from collatz_lab.arith import CertifiedReal, Ordering, compare_certified
from collatz_lab.chains import ChainFormula
from collatz_lab.cycles import (
    BVerdict,
    Figure,
    GapVerdict,
    ScanConfig,
    TCycleBlock,
    alpha1_min,
    alpha2_min,
    b_verdict,
    case1_above_lower,
    case1_b,
    case1_below_upper,
    case1_bounds,
    case1_scan,
    case2_b,
    case2_bounds,
    case2_scan,
    case3_b,
    case3_scan,
    epsilon1,
    epsilon2,
    even_start_solve,
    figure_data,
    general_cycle_solve,
    scan_case1,
    scan_case2,
    scan_case3,
    t_cycle_endpoints,
    table1,
)


def cycle_start(vals):
    """Rational odd m returning to itself after reduced steps with the given valuations."""
    L, num, s = len(vals), 0, 0
    for i, v in enumerate(vals):
        num += 3 ** (L - 1 - i) * 2**s
        s += v
    m = Fraction(num, 2**s - 3**L)
    cur = m
    for v in vals:
        cur = (3 * cur + 1) / 2**v
    assert cur == m
    return m


def b_from_odd_start(m, n):
    # m = 2 (2**n b - 1) + 1
    return (m + 1) / 2 ** (n + 1)


def mp(c):
    return mpmath.mpf(c.numerator) / c.denominator


def mp_case1_lower(n):
    phi = mpmath.log(3, 2)
    return n * (phi - 1) / (1 - phi / 2)


ns = st.integers(min_value=1, max_value=40)


@given(ns, st.integers(min_value=2, max_value=40))
def test_case1_b_matches_cycle_oracle(n, h):
    x = 2 * h
    assert case1_b(n, x) == b_from_odd_start(cycle_start([1] * n + [2] * h), n)


@given(ns, st.integers(min_value=2, max_value=60))
def test_case2_b_matches_cycle_oracle(n, x):
    assert case2_b(n, x) == b_from_odd_start(cycle_start([1] * n + [x]), n)


@given(ns, st.integers(min_value=1, max_value=15), st.integers(min_value=2, max_value=40))
def test_case3_b_matches_cycle_oracle(n, h, y):
    x = 2 * h + 1
    assert case3_b(n, x, y) == b_from_odd_start(cycle_start([1] * n + [2] * h + [y]), n)


def test_b_formula_examples():
    assert case1_b(1, 4) == Fraction(7, 5)
    assert case1_b(2, 6) == Fraction(37, 13)
    assert case1_b(1, 6) == Fraction(37, 47)
    assert case2_b(1, 3) == Fraction(3, 7)
    assert case3_b(1, 3, 2) == Fraction(7, 5)
    assert case3_b(1, 3, 3) == Fraction(15, 37)


@pytest.mark.parametrize(
    "b,verdict",
    [(Fraction(1), BVerdict.VALID), (Fraction(7, 5), BVerdict.NON_INTEGER), (Fraction(-1), BVerdict.NEGATIVE),
     (Fraction(0), BVerdict.ZERO), (Fraction(37, 47), BVerdict.BELOW_ONE), (Fraction(4), BVerdict.EVEN),
     (Fraction(9), BVerdict.MULTIPLE_OF_THREE)],
)
def test_b_verdict(b, verdict):
    assert b_verdict(b) is verdict


@given(st.integers(min_value=1, max_value=200))
def test_case1_predicates_match_certified_bounds(n):
    lower, upper = case1_bounds(n)
    for x in range(int(lower.lo) - 2, int(upper.hi) + 3):
        assert case1_above_lower(n, x) == (compare_certified(CertifiedReal.exact(x), lower) is Ordering.GREATER)
        assert case1_below_upper(n, x) == (compare_certified(CertifiedReal.exact(x), upper) is Ordering.LESS)
        if x % 2 == 0 and x >= 4:
            assert (case1_above_lower(n, x) and case1_below_upper(n, x)) == (case1_b(n, x) > 1)


@given(st.integers(min_value=1, max_value=300))
def test_case1_bounds_against_mpmath(n):
    lower, upper = case1_bounds(n)
    with mpmath.workprec(1000):
        phi = mpmath.log(3, 2)
        lo = mp_case1_lower(n)
        hi = mpmath.log(mpmath.mpf(3**n - 1) / (2**n - 1), 2) / (1 - phi / 2)
        assert mp(lower.lo) <= lo <= mp(lower.hi)
        assert mp(upper.lo) <= hi <= mp(upper.hi)
        e = epsilon1(n)
        assert mp(e.lo) <= hi - lo <= mp(e.hi)


@pytest.mark.parametrize(
    "n,lo,hi", [(1, "2.82", "4.82"), (2, "5.64", "6.82"), (3, "8.46", "9.12"), (6, "16.91", "17.01")]
)
def test_case1_bounds_printed_to_two_places(n, lo, hi):
    lower, upper = case1_bounds(n)
    assert (lower.to_decimal(2), upper.to_decimal(2)) == (lo, hi)


def test_table1_rows():
    rows = {r.n: r for r in table1()}
    assert rows[1].verdict is GapVerdict.ALL_REJECTED
    # 3 sits inside the n = 1 gap too, but its exponent is odd
    assert rows[1].candidates == (3, 4)
    assert [e.b for e in rows[1].evaluations if e.b is not None] == [Fraction(7, 5)]
    assert rows[2].candidates == (6,) and rows[2].evaluations[0].b == Fraction(37, 13)
    assert rows[3].candidates == (9,) and rows[3].evaluations[0].verdict is BVerdict.ODD_EXPONENT
    assert rows[4].verdict is rows[5].verdict is GapVerdict.NO_CANDIDATE
    assert rows[6].candidates == (17,) and rows[6].evaluations[0].verdict is BVerdict.ODD_EXPONENT


def test_epsilon1_examples():
    assert epsilon1(1).to_decimal(6) == "2.000000"
    assert abs(epsilon1(6).midpoint - Fraction(9995, 100000)) <= Fraction(5, 100000)
    assert alpha1_min(1).to_decimal(3) == "0.181"


@given(st.integers(min_value=1, max_value=120))
def test_alpha1_min_against_brute_force(n):
    a = alpha1_min(n)
    with mpmath.workprec(1000):
        ref = min(mpmath.ceil(mp_case1_lower(m)) - mp_case1_lower(m) for m in range(1, n + 1))
        assert mp(a.lo) <= ref <= mp(a.hi)


@given(st.integers(min_value=1, max_value=120))
def test_alpha2_epsilon2_against_brute_force(n):
    with mpmath.workprec(1000):
        phi = mpmath.log(3, 2)
        lows = [(m + 1) * phi - m for m in range(1, n + 1)]
        ref_alpha = min(mpmath.ceil(v) - v for v in lows)
        a = alpha2_min(n)
        assert mp(a.lo) <= ref_alpha <= mp(a.hi)
        width = mpmath.log(2 * (mpmath.mpf(3) ** (n + 1) - 1) / (2 ** (n + 1) - 1), 2) - ((n + 1) * phi - n)
        e = epsilon2(n)
        assert mp(e.lo) <= width <= mp(e.hi)
        lower, upper = case2_bounds(n)
        assert mp(lower.lo) <= (n + 1) * phi - n <= mp(lower.hi)


def test_case2_examples():
    lower, upper = case2_bounds(1)
    # log2(16/3) = 2.41504..., listed as 2.41 (truncated, while 2.17 is rounded)
    assert lower.to_decimal(2) == "2.17"
    assert upper.to_decimal(5) == "2.41504"
    assert case2_scan(1).verdict is GapVerdict.NO_CANDIDATE


def test_case3_examples():
    r = case3_scan(1, 3)
    assert r.verdict is GapVerdict.ALL_REJECTED
    assert r.candidates == (2,) and r.evaluations[0].b == Fraction(7, 5)
    # the printed limit drops a 2**x term, so its gap misses y = 2 here
    assert r.paper_candidates == ()
    assert not r.truncated


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=12))
def test_case3_candidates_are_exactly_b_at_least_one(n, h):
    x = 2 * h + 1
    r = case3_scan(n, x, y_max=40)
    assert r.candidates == tuple(y for y in range(2, 41) if case3_b(n, x, y) >= 1)
    assert set(r.paper_candidates) <= set(r.candidates)


@given(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=1, max_value=6),
    st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=5),
)
def test_general_cycle_matches_oracle(n, j, xs):
    vals = [1] * n + list(xs)
    if 2 ** sum(vals) == 3 ** len(vals):
        return
    s = general_cycle_solve(n, j, xs)
    assert s.value == b_from_odd_start(cycle_start(vals), n)


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=10))
def test_general_cycle_forms_agree_at_k1(n, j, x):
    if 2 ** (n + x) == 3 ** (n + 1):
        return
    assert general_cycle_solve(n, j, (x,), ChainFormula.PAPER) == general_cycle_solve(n, j, (x,))


def test_general_cycle_examples():
    assert general_cycle_solve(1, 1, (4, 2)).verdict is not BVerdict.VALID
    s = general_cycle_solve(2, 3, (2,))
    assert s.value == b_from_odd_start(cycle_start([1, 1, 2]), 2)
    assert s.verdict is b_verdict(s.value)
    # the trivial fixed point: m = 1 is root 0, so b = 1/2
    assert general_cycle_solve(1, 1, (1,)).value == b_from_odd_start(cycle_start([1, 1]), 1)


blocks = st.lists(
    st.builds(
        TCycleBlock,
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=1, max_value=5),
        st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4).map(tuple),
    ),
    min_size=1,
    max_size=4,
)


@given(blocks)
def test_t_cycle_solution_matches_oracle(bs):
    vals = [v for b in bs for v in [1] * b.n + list(b.xs)]
    if 2 ** sum(vals) == 3 ** len(vals):
        return
    e = t_cycle_endpoints(bs)
    assert e.solution.value == b_from_odd_start(cycle_start(vals), bs[0].n)


def test_t_cycle_single_block_is_general_cycle():
    for n, j, xs in [(1, 1, (4, 2)), (2, 3, (2,)), (5, 2, (2, 3, 3))]:
        assert t_cycle_endpoints([TCycleBlock(n, j, xs)]).solution == general_cycle_solve(n, j, xs)


def test_t_cycle_gap_ratio_decreases():
    ratios = []
    for n1 in (5, 10, 20):
        e = t_cycle_endpoints([TCycleBlock(n1, 1, (2, 3)), TCycleBlock(2, 2, (2, 2))])
        assert e.upper > e.lower
        ratios.append(e.gap_ratio)
    assert ratios[0] > ratios[1] > ratios[2] > 1


@given(blocks)
def test_t_cycle_thresholds_bracket_solution(bs):
    # a1 < 0 iff 2**E < lower; above lower, a1 < 1 iff 2**E > upper
    vals = [v for b in bs for v in [1] * b.n + list(b.xs)]
    if 2 ** sum(vals) == 3 ** len(vals):
        return
    e = t_cycle_endpoints(bs)
    a1 = e.solution.value
    if a1 == 0:
        return
    X = 2**e.exponent
    assert (a1 < 0) == (X < e.lower)
    if X > e.lower:
        assert (a1 < 1) == (X > e.upper)


@given(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=1, max_value=6),
    st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=5),
)
def test_even_start_matches_oracle(j, n, xs):
    vals = list(xs) + [1] * n
    if 2 ** sum(vals) == 3 ** len(vals):
        return
    r = even_start_solve(j, n, xs)
    m = cycle_start(vals)
    assert r.a == (m - 1) / 2 ** (j + 1)


def test_even_start_examples():
    r = even_start_solve(2, 1, (2,))
    assert r.a == Fraction(-1) and r.verdict is BVerdict.NEGATIVE
    paper = even_start_solve(2, 1, (2,), ChainFormula.PAPER)
    # the threshold variable differs between forms, the solution does not
    assert (paper.a, paper.verdict, paper.gap_ratio) == (r.a, r.verdict, r.gap_ratio)
    assert even_start_solve(10, 1, (2, 3)).gap_ratio < even_start_solve(2, 1, (2, 3)).gap_ratio


def test_certified_crossover_at_seven():
    assert compare_certified(epsilon1(7), alpha1_min(7)) is Ordering.LESS
    assert compare_certified(epsilon1(6), alpha1_min(6)) is Ordering.GREATER


def test_figure_rows():
    fig2 = figure_data(Figure.FIG2, 10)
    assert fig2.rows[5].ordering is Ordering.GREATER
    assert fig2.rows[6].ordering is Ordering.LESS
    assert not fig2.failures
    fig3 = figure_data(Figure.FIG3, 10)
    assert fig3.rows[0].epsilon.to_decimal(3) == "0.245"
    assert fig3.rows[0].alpha_min.to_decimal(3) == "0.830"
    assert not fig3.failures


def test_scan_verdicts_independent_of_jobs_and_precision():
    base = ScanConfig(n_max=60, case3_n_max=10, x_max=9, y_max=30)
    ref = [[r.verdict for r in fn(base)] for fn in (scan_case1, scan_case2, scan_case3)]
    for cfg in (ScanConfig(60, 10, 9, 30, jobs=2), ScanConfig(60, 10, 9, 30, precision_bits=512)):
        got = [[r.verdict for r in fn(cfg)] for fn in (scan_case1, scan_case2, scan_case3)]
        assert got == ref
    assert scan_case1(ScanConfig(n_max=30, jobs=2)) == scan_case1(ScanConfig(n_max=30))


def test_input_validation():
    with pytest.raises(ValueError):
        case1_b(1, 5)
    with pytest.raises(ValueError):
        case3_b(1, 4, 2)
    with pytest.raises(ValueError):
        TCycleBlock(0, 1, (2,))
    with pytest.raises(ValueError):
        figure_data(Figure.FIG2, 0)
