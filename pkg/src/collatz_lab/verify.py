"""Oracle-equivalence suites: every shortcut is checked against plain iteration."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import val2
from .chains import ChainSpec, chain_oracle, chain_root_corrected, chain_root_paper
from .core import reduced_step, root
from .roots import (
    Parity,
    check_monotonicity,
    decompose,
    even_type1_step,
    even_type2_step,
    odd_jump,
    odd_step_shortcut,
    predicted_monotonicity,
)

ALL_THEOREMS = (1, 2, 3, 4, 5, 6)
DEFAULT_CHAIN_K = 10


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    violations: int
    first_violation: str | None = None


@dataclass(frozen=True)
class Divergence:
    j: int
    a: int
    xs: tuple[int, ...]
    paper: Fraction
    corrected: Fraction
    oracle: int


@dataclass(frozen=True)
class VerifyRun:
    start: int
    stop: int
    theorems: tuple[int, ...]
    random_samples: int
    seed: int
    chain_k: int
    checks: tuple[CheckResult, ...]
    divergences: tuple[Divergence, ...]

    @property
    def ok(self) -> bool:
        return all(c.violations == 0 for c in self.checks)


class _Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checked = 0
        self.violations = 0
        self.first: str | None = None

    def record(self, ok: bool, detail: object) -> None:
        self.checked += 1
        if not ok:
            self.violations += 1
            if self.first is None:
                self.first = str(detail)

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.checked, self.violations, self.first)


def _check_monotonic(m: int, t1: _Tally, t2: _Tally) -> None:
    a = root(m)
    if a == 0:
        return
    observed = check_monotonicity(m)
    tally = t1 if a % 2 else t2
    tally.record(observed is predicted_monotonicity(m), (m, observed.value))


def _check_odd_root(m: int, t3: _Tally | None, t4: _Tally | None) -> None:
    d = decompose(root(m))
    if d.parity is not Parity.ODD:
        return
    if t3 is not None:
        nxt, _ = reduced_step(m)
        t3.record(odd_step_shortcut(d) == decompose(root(nxt)), m)
    if t4 is not None:
        even_root, steps = odd_jump(d)
        cur, ok = m, steps == d.y
        for i in range(1, d.y + 1):
            cur, _ = reduced_step(cur)
            # odd for the first y - 1 steps, even at step y
            ok = ok and (root(cur) % 2 == (0 if i == d.y else 1))
        t4.record(ok and root(cur) == even_root, m)


def _check_even_root(m: int, t5: _Tally | None, t6: _Tally | None) -> None:
    a = root(m)
    if a == 0 or a % 2:
        return
    nxt, x = reduced_step(m)
    if a % 4 == 0:
        if t5 is not None:
            t5.record(even_type1_step(a) == (root(nxt), x) and x == 2, m)
    elif t6 is not None:
        t6.record(even_type2_step(a // 2) == (root(nxt), x) and x >= 3, m)


def _check_chain(m: int, k_max: int, tally: _Tally, k1: _Tally) -> None:
    a0 = root(m)
    if a0 == 0 or a0 % 2:
        return
    j = val2(a0)
    roots, xs = chain_oracle(m, k_max)
    for k in range(1, k_max + 1):
        spec = ChainSpec(j, a0 >> j, xs[:k])
        tally.record(chain_root_corrected(spec) == roots[k - 1], (m, k))
        if k == 1:
            k1.record(chain_root_paper(spec) == roots[0], m)
        if roots[k - 1] == 0:
            break


DOCUMENTED_DIVERGENCES: tuple[tuple[int, int, tuple[int, ...]], ...] = (
    (4, 1, (2, 2)),
    (3, 1, (2, 3)),
)


def divergence_ledger(cases: Iterable[tuple[int, int, tuple[int, ...]]] = DOCUMENTED_DIVERGENCES) -> tuple[Divergence, ...]:
    """Printed vs corrected k-step form against the oracle on chosen chains."""
    out = []
    for j, a, xs in cases:
        spec = ChainSpec(j, a, xs)
        roots, _ = chain_oracle(spec.m, spec.k)
        out.append(Divergence(j, a, tuple(xs), chain_root_paper(spec), chain_root_corrected(spec), roots[-1]))
    return tuple(out)


def run_suite(
    values: Iterable[int],
    theorems: Sequence[int] = ALL_THEOREMS,
    chain_k: int = DEFAULT_CHAIN_K,
    label: str = "",
) -> list[CheckResult]:
    """Run the selected theorem checks (and the chain check when ``chain_k > 0``) over odd ``values``."""
    wanted = set(theorems)
    tallies = {t: _Tally(f"theorem-{t}{label}") for t in ALL_THEOREMS}
    chain = _Tally(f"chain-corrected{label}")
    k1 = _Tally(f"chain-paper-k1{label}")
    for m in values:
        if {1, 2} & wanted:
            _check_monotonic(m, tallies[1], tallies[2])
        if {3, 4} & wanted:
            _check_odd_root(m, tallies[3] if 3 in wanted else None, tallies[4] if 4 in wanted else None)
        if {5, 6} & wanted:
            _check_even_root(m, tallies[5] if 5 in wanted else None, tallies[6] if 6 in wanted else None)
        if chain_k > 0:
            _check_chain(m, chain_k, chain, k1)
    results = [tallies[t].result() for t in ALL_THEOREMS if t in wanted]
    if chain_k > 0:
        results += [chain.result(), k1.result()]
    return results


def random_odd(count: int, seed: int, bits: int = 64) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(bits) | 1 for _ in range(count)]


def verify(
    start: int,
    stop: int,
    theorems: Sequence[int] = ALL_THEOREMS,
    random_samples: int = 0,
    seed: int = 0,
    chain_k: int = DEFAULT_CHAIN_K,
) -> VerifyRun:
    """Exhaustive checks over odd m in ``[start, stop]`` plus optional random 64-bit samples."""
    bad = set(theorems) - set(ALL_THEOREMS)
    if bad:
        raise ValueError(f"unknown theorem numbers: {sorted(bad)}")
    first = start if start % 2 else start + 1
    checks = run_suite(range(max(first, 1), stop + 1, 2), theorems, chain_k)
    if random_samples:
        checks += run_suite(random_odd(random_samples, seed), theorems, chain_k, label="-random64")
    return VerifyRun(
        start, stop, tuple(theorems), random_samples, seed, chain_k, tuple(checks), divergence_ledger()
    )
