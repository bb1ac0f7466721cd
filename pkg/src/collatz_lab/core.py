"""The reduced Collatz map ``m -> (3m + 1) / 2**x`` on odd integers."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import val2

DEFAULT_MAX_STEPS = 10**6


def check_odd(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"expected an int, got {type(m).__name__}")
    if m < 1 or m % 2 == 0:
        raise ValueError(f"expected a positive odd integer, got {m}")
    return m


def reduced_step(m: int) -> tuple[int, int]:
    """One reduced step: returns ``(m', x)`` with ``m' = (3m + 1) / 2**x`` odd."""
    check_odd(m)
    n = 3 * m + 1
    x = val2(n)
    return n >> x, x


def root(m: int) -> int:
    """The root ``a`` of an odd number ``m = 2a + 1``."""
    return (check_odd(m) - 1) // 2


def from_root(a: int) -> int:
    if a < 0:
        raise ValueError(f"root must be non-negative, got {a}")
    return 2 * a + 1


@dataclass(frozen=True)
class TrajectoryStep:
    value: int
    valuation: int


@dataclass(frozen=True)
class Trajectory:
    start: int
    steps: tuple[TrajectoryStep, ...]
    peak: int
    reached_one: bool
    length: int

    @property
    def final(self) -> int:
        if not self.steps:
            return self.start
        last = self.steps[-1]
        return (3 * last.value + 1) >> last.valuation

    def values(self) -> list[int]:
        return [s.value for s in self.steps] + [self.final]


def trajectory(m: int, max_steps: int = DEFAULT_MAX_STEPS) -> Trajectory:
    """Iterate the reduced map from ``m`` until it hits 1 or ``max_steps`` steps.

    The fixed point 1 is never stepped, so ``trajectory(1)`` has length 0.
    """
    check_odd(m)
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    steps = []
    peak = value = m
    while value != 1 and len(steps) < max_steps:
        nxt, x = reduced_step(value)
        steps.append(TrajectoryStep(value, x))
        value = nxt
        if value > peak:
            peak = value
    return Trajectory(m, tuple(steps), peak, value == 1, len(steps))


def iterate(m: int, k: int) -> int:
    for _ in range(k):
        m, _x = reduced_step(m)
    return m
