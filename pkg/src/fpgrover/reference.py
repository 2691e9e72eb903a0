"""Ideal Grover evolution on the two-value amplitude representation.

Every Grover state keeps one amplitude shared by all solution states and
one shared by all nonsolution states, so the ideal evolution is a
recurrence on a pair of reals instead of a ``2**n`` vector.

Two arithmetic modes are supported.  The default uses binary64 floats.
With ``exact=True`` the pair is held as :class:`~fractions.Fraction`;
for even ``n`` this is exact (all quantities are dyadic), for odd ``n``
the irrational start value ``2**(-n/2)`` is approximated from below with
``bits`` fractional bits and everything after that is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from .errors import InvalidParametersError

__all__ = [
    "GroverParams",
    "TwoValueState",
    "validate_problem",
    "iteration_count",
    "inv_sqrt_pow2",
    "initial_state",
    "ideal_iterate",
    "iter_ideal",
    "ideal_run",
    "closed_form_state",
    "residual_angle",
    "residual_angle_check",
]

Number = Union[float, Fraction]

# Extra guard bits beyond 2f + n when approximating 2**(-n/2) for odd n.
GUARD_BITS = 64


def validate_problem(n: int, n_s: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParametersError(f"n must be an integer >= 1 (got {n!r})")
    if not isinstance(n_s, int) or not 1 <= n_s < 2**n:
        raise InvalidParametersError(
            f"n_s must satisfy 1 <= n_s < 2^n = {2**n} (got {n_s!r})"
        )


def iteration_count(n: int, n_s: int) -> int:
    """Number of Grover iterations, ``round(pi/4 * sqrt(2**n / n_s))``.

    Ties round half up; the argument is always positive.  The result is at
    least 1 for every valid ``(n, n_s)``.
    """
    validate_problem(n, n_s)
    return math.floor(math.pi / 4 * math.sqrt(2**n / n_s) + 0.5)


@dataclass(frozen=True)
class GroverParams:
    """Validated ``(n, f, n_s)`` triple with the derived iteration count ``k``."""

    n: int
    f: int
    n_s: int = 1
    k: int = field(init=False)

    def __post_init__(self):
        validate_problem(self.n, self.n_s)
        if not isinstance(self.f, int) or self.f < 1:
            raise InvalidParametersError(f"f must be an integer >= 1 (got {self.f!r})")
        object.__setattr__(self, "k", iteration_count(self.n, self.n_s))

    @property
    def size(self) -> int:
        return 2**self.n

    @property
    def n_ns(self) -> int:
        """Number of nonsolution basis states."""
        return 2**self.n - self.n_s

    @property
    def exact_bits(self) -> int:
        """Fractional bits used to approximate ``2**(-n/2)`` for odd ``n``."""
        return 2 * self.f + self.n + GUARD_BITS


@dataclass(frozen=True)
class TwoValueState:
    """Amplitude on solution states and amplitude on nonsolution states."""

    amp_S: Number
    amp_NS: Number

    def norm_sq(self, n: int, n_s: int) -> Number:
        return n_s * self.amp_S**2 + (2**n - n_s) * self.amp_NS**2

    def probabilities(self) -> tuple[Number, Number]:
        """Per-basis-state measurement probabilities ``(p_S, p_NS)``."""
        return self.amp_S**2, self.amp_NS**2


def inv_sqrt_pow2(n: int, bits: int | None = None) -> Fraction:
    """``2**(-n/2)`` as a Fraction.

    Exact for even ``n``.  For odd ``n`` returns ``floor(2**(bits - n/2)) / 2**bits``.
    """
    if n % 2 == 0:
        return Fraction(1, 1 << (n // 2))
    if bits is None:
        bits = n + 2 * GUARD_BITS
    if 2 * bits < n:
        return Fraction(0)
    return Fraction(math.isqrt(1 << (2 * bits - n)), 1 << bits)


def initial_state(n: int, exact: bool = False, bits: int | None = None) -> TwoValueState:
    """Uniform superposition: both amplitudes equal ``2**(-n/2)``."""
    if n < 1:
        raise InvalidParametersError(f"n must be >= 1 (got {n})")
    a = inv_sqrt_pow2(n, bits) if exact else 2.0 ** (-n / 2)
    return TwoValueState(a, a)


def ideal_iterate(state: TwoValueState, n: int, n_s: int) -> TwoValueState:
    """One Grover iteration: phase flip on solutions, then inversion about the mean."""
    flipped_S = -state.amp_S
    total = (2**n - n_s) * state.amp_NS + n_s * flipped_S
    if isinstance(total, Fraction):
        scaled = total * Fraction(2, 1 << n)
    else:
        scaled = 2.0 ** (-n + 1) * total
    return TwoValueState(scaled - flipped_S, scaled - state.amp_NS)


def iter_ideal(
    n: int,
    n_s: int,
    k: int | None = None,
    exact: bool = False,
    bits: int | None = None,
) -> Iterator[TwoValueState]:
    """Yield the ideal state after 0, 1, ..., k iterations (k defaults to the optimal count)."""
    validate_problem(n, n_s)
    if k is None:
        k = iteration_count(n, n_s)
    state = initial_state(n, exact=exact, bits=bits)
    yield state
    for _ in range(k):
        state = ideal_iterate(state, n, n_s)
        yield state


def ideal_run(
    n: int,
    n_s: int,
    k: int | None = None,
    exact: bool = False,
    bits: int | None = None,
) -> TwoValueState:
    state = None
    for state in iter_ideal(n, n_s, k, exact=exact, bits=bits):
        pass
    return state


def _theta(n: int, n_s: int) -> float:
    return math.asin(math.sqrt(n_s / 2**n))


def closed_form_state(n: int, n_s: int, l: int) -> TwoValueState:
    """Angular closed form after ``l`` iterations.

    With ``sin(theta) = sqrt(n_s / 2**n)`` the state is
    ``sin((2l+1)theta)/sqrt(n_s)`` on solutions and
    ``cos((2l+1)theta)/sqrt(2**n - n_s)`` elsewhere.
    """
    validate_problem(n, n_s)
    if l < 0:
        raise InvalidParametersError(f"iteration index must be >= 0 (got {l})")
    theta = _theta(n, n_s)
    phase = (2 * l + 1) * theta
    return TwoValueState(
        math.sin(phase) / math.sqrt(n_s),
        math.cos(phase) / math.sqrt(2**n - n_s),
    )


def residual_angle(n: int, n_s: int) -> tuple[float, float]:
    """Return ``(|cos((2k+1)theta)|, sin(theta))`` for the optimal ``k``."""
    k = iteration_count(n, n_s)
    theta = _theta(n, n_s)
    return abs(math.cos((2 * k + 1) * theta)), math.sin(theta)


def residual_angle_check(n: int, n_s: int) -> bool:
    """Whether the final nonsolution amplitude is smaller than the initial one.

    Tests ``|cos((2k+1)theta)| < sin(theta)``.  Rounding ``k`` to the nearest
    integer can overshoot, so this is False for several small problems.
    """
    residual, bound = residual_angle(n, n_s)
    return residual < bound
