"""Root factorisation, iteration-type classification and shortcut iterations.

An odd number ``m = 2a + 1`` is classified by its root ``a``.  Odd roots are
written ``2**y * 3**u * b - 1`` and even roots ``2**y * 3**u * b`` with ``b``
coprime to 6; ``2**y * 3**u`` is the multiplicative factor of the root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import val2, val3
from .core import check_odd, reduced_step, root


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"
    ZERO = "zero"


class IterationType(enum.Enum):
    ODD_ROOT_INCREASE = "odd-root-increase"
    EVEN_TYPE_I = "even-type-I"
    EVEN_TYPE_II = "even-type-II"
    TERMINAL = "terminal"


class Monotonicity(enum.Enum):
    INCREASES = "increases"
    DECREASES = "decreases"
    FIXED = "fixed"


@dataclass(frozen=True)
class RootDecomposition:
    parity: Parity
    y: int
    u: int
    b: int

    def __post_init__(self) -> None:
        if self.parity is Parity.ZERO:
            if (self.y, self.u, self.b) != (0, 0, 0):
                raise ValueError("zero root carries no factorisation")
            return
        if self.y < 0 or self.u < 0:
            raise ValueError("exponents must be non-negative")
        if self.b < 1 or self.b % 2 == 0 or self.b % 3 == 0:
            raise ValueError(f"b must be positive and coprime to 6, got {self.b}")

    @property
    def root(self) -> int:
        if self.parity is Parity.ZERO:
            return 0
        core = 2**self.y * 3**self.u * self.b
        return core - 1 if self.parity is Parity.ODD else core

    @property
    def m(self) -> int:
        return 2 * self.root + 1


def decompose(a: int) -> RootDecomposition:
    if a < 0:
        raise ValueError(f"root must be non-negative, got {a}")
    if a == 0:
        return RootDecomposition(Parity.ZERO, 0, 0, 0)
    if a % 2:
        parity, n = Parity.ODD, a + 1
    else:
        parity, n = Parity.EVEN, a
    y = val2(n)
    n >>= y
    u = val3(n)
    return RootDecomposition(parity, y, u, n // 3**u)


def classify(m: int) -> IterationType:
    a = root(m)
    if a == 0:
        return IterationType.TERMINAL
    if a % 2:
        return IterationType.ODD_ROOT_INCREASE
    if val2(a) >= 2:
        return IterationType.EVEN_TYPE_I
    return IterationType.EVEN_TYPE_II


def check_monotonicity(m: int) -> Monotonicity:
    """Observed direction of one reduced step (computed, not predicted)."""
    nxt, _ = reduced_step(m)
    if nxt > m:
        return Monotonicity.INCREASES
    if nxt < m:
        return Monotonicity.DECREASES
    return Monotonicity.FIXED


def predicted_monotonicity(m: int) -> Monotonicity:
    a = root(m)
    if a == 0:
        return Monotonicity.FIXED
    return Monotonicity.INCREASES if a % 2 else Monotonicity.DECREASES


def _require_odd_root(d: RootDecomposition) -> None:
    if d.parity is not Parity.ODD or d.y < 1:
        raise ValueError(f"expected an odd-root decomposition with y >= 1, got {d}")


def odd_step_shortcut(d: RootDecomposition) -> RootDecomposition:
    """One odd-root step: the factor ``2**y * 3**u`` becomes ``2**(y-1) * 3**(u+1)``.

    When ``y == 1`` the new root ``3**(u+1) * b - 1`` is even and is returned in
    its even-root factorisation.
    """
    _require_odd_root(d)
    if d.y > 1:
        return RootDecomposition(Parity.ODD, d.y - 1, d.u + 1, d.b)
    return decompose(3 ** (d.u + 1) * d.b - 1)


def odd_jump(d: RootDecomposition) -> tuple[int, int]:
    """Jump over all ``y`` odd-root steps at once: returns ``(3**(u+y) * b - 1, y)``."""
    _require_odd_root(d)
    return 3 ** (d.u + d.y) * d.b - 1, d.y


def even_type1_step(a: int) -> tuple[int, int]:
    """Step from an even root ``2**u * c`` (``u >= 2``): new root ``3 * 2**(u-2) * c``, x = 2.

    At ``u == 2`` the new root is odd; the caller sees that from the result.
    """
    if a <= 0 or a % 4:
        raise ValueError(f"type I step needs a root divisible by 4, got {a}")
    return 3 * (a >> 2), 2


def even_type2_step(b: int) -> tuple[int, int]:
    """Step from the even root ``2b`` with ``b`` odd.

    The valuation has to be computed; the new root is ``(3b + 1 - 2**(x-2)) / 2**(x-1)``.
    """
    if b <= 0 or b % 2 == 0:
        raise ValueError(f"type II step needs an odd b, got {b}")
    x = val2(12 * b + 4)
    num = 3 * b + 1 - 2 ** (x - 2)
    new_root, rem = divmod(num, 2 ** (x - 1))
    assert rem == 0 and x >= 3
    return new_root, x


@dataclass(frozen=True)
class Prediction:
    start: int
    steps: int
    value: int
    root: int
    moves: tuple[str, ...]


def predict(m: int, steps: int) -> Prediction:
    """Advance ``m`` by ``steps`` reduced steps using only the shortcut rules.

    Odd roots are jumped with :func:`odd_jump` when the whole run fits, otherwise
    stepped one at a time; type II even roots fall back on computing the valuation.
    """
    check_odd(m)
    a, done, moves = root(m), 0, []
    while done < steps and a != 0:
        if a % 2:
            d = decompose(a)
            if d.y <= steps - done:
                a, n = odd_jump(d)
                moves.append(f"odd-jump({n})")
                done += n
            else:
                a = odd_step_shortcut(d).root
                moves.append("odd-step")
                done += 1
        elif a % 4 == 0:
            a, _ = even_type1_step(a)
            moves.append("even-I")
            done += 1
        else:
            a, x = even_type2_step(a // 2)
            moves.append(f"even-II(x={x})")
            done += 1
    # the fixed point absorbs any remaining steps
    return Prediction(m, steps, 2 * a + 1, a, tuple(moves))
