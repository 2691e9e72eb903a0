"""Bit-exact fixed-point Grover emulation on the two-value representation.

Each iteration:

1. negate the solution amplitude (oracle);
2. form ``sum = (2**n - n_s) * amp_NS + n_s * amp_S`` exactly on integers;
3. arithmetic right shift of ``sum`` by ``n - 1`` bits (the only truncation);
4. subtract each amplitude from the shifted sum (inversion about the mean).

The measured error compares probabilities obtained from the final
mantissas against the ideal probabilities from :mod:`fpgrover.reference`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .fixedpoint import FxValue, right_shift
from .reference import GroverParams, TwoValueState, ideal_run

__all__ = [
    "FixedTwoValueState",
    "initial_mantissa",
    "initial_fixed_state",
    "fixed_iterate",
    "iter_fixed",
    "run_fixed",
    "fixed_probability",
    "fixed_probabilities",
    "ideal_probabilities",
    "measured_l2",
]


@dataclass(frozen=True)
class FixedTwoValueState:
    amp_fixed_S: FxValue
    amp_fixed_NS: FxValue
    iteration: int = 0

    @property
    def mantissas(self) -> tuple[int, int]:
        """``(S, NS)`` integer mantissas."""
        return self.amp_fixed_S.mantissa, self.amp_fixed_NS.mantissa

    def to_fractions(self) -> TwoValueState:
        return TwoValueState(self.amp_fixed_S.to_fraction(), self.amp_fixed_NS.to_fraction())


def initial_mantissa(n: int, f: int) -> int:
    """``floor(2**(f - n/2))``, computed without floating point."""
    if 2 * f < n:
        return 0
    return math.isqrt(1 << (2 * f - n))


def initial_fixed_state(params: GroverParams) -> FixedTwoValueState:
    a = FxValue(initial_mantissa(params.n, params.f), params.f)
    return FixedTwoValueState(a, a, 0)


def fixed_iterate(state: FixedTwoValueState, params: GroverParams) -> FixedTwoValueState:
    n, n_s = params.n, params.n_s
    flipped_S = -state.amp_fixed_S
    total = state.amp_fixed_NS.scale(2**n - n_s) + flipped_S.scale(n_s)
    scaled = right_shift(total, n - 1).value
    new_S = scaled - flipped_S
    new_NS = scaled - state.amp_fixed_NS
    width = n + params.f + 2
    assert new_S.bit_length() <= width and new_NS.bit_length() <= width, (
        f"mantissa exceeds {width} bits at iteration {state.iteration + 1}"
    )
    return FixedTwoValueState(new_S, new_NS, state.iteration + 1)


def iter_fixed(params: GroverParams, k: int | None = None) -> Iterator[FixedTwoValueState]:
    """Yield the fixed-point state after 0, 1, ..., k iterations."""
    if k is None:
        k = params.k
    state = initial_fixed_state(params)
    yield state
    for _ in range(k):
        state = fixed_iterate(state, params)
        yield state


def run_fixed(params: GroverParams, k: int | None = None) -> FixedTwoValueState:
    """Run ``k`` (default: optimal) fixed-point Grover iterations."""
    state = None
    for state in iter_fixed(params, k):
        pass
    return state


def fixed_probability(amp: FxValue) -> Fraction:
    """``(m*m >> f) * 2**-f``: the squared amplitude truncated back to f bits."""
    f = amp.frac_bits
    return Fraction((amp.mantissa * amp.mantissa) >> f, 1 << f)


def fixed_probabilities(state: FixedTwoValueState, f: int | None = None) -> tuple[Fraction, Fraction]:
    """Per-state probabilities ``(prob_fixed_S, prob_fixed_NS)``."""
    if f is not None and f != state.amp_fixed_S.frac_bits:
        raise ValueError(f"state holds {state.amp_fixed_S.frac_bits} fractional bits, not {f}")
    return fixed_probability(state.amp_fixed_S), fixed_probability(state.amp_fixed_NS)


def ideal_probabilities(params: GroverParams, reference: str = "exact"):
    """Ideal ``(p_S, p_NS)`` after ``k`` iterations.

    ``reference="exact"`` evolves Fractions (exact for even n);
    ``reference="double"`` evolves binary64 floats.
    """
    if reference not in ("exact", "double"):
        raise ValueError(f"reference must be 'exact' or 'double' (got {reference!r})")
    exact = reference == "exact"
    return ideal_run(params.n, params.n_s, params.k, exact=exact, bits=params.exact_bits).probabilities()


def _l2(n_ns: int, n_s: int, d_NS, d_S) -> float:
    total = n_ns * d_NS * d_NS + n_s * d_S * d_S
    return math.sqrt(float(total))


def measured_l2(params: GroverParams, reference: str = "exact", final: FixedTwoValueState | None = None) -> float:
    """l2 distance between ideal and fixed-point measurement distributions."""
    if final is None:
        final = run_fixed(params)
    pf_S, pf_NS = fixed_probabilities(final)
    p_S, p_NS = ideal_probabilities(params, reference)
    if reference == "double":
        pf_S, pf_NS = float(pf_S), float(pf_NS)
    return _l2(params.n_ns, params.n_s, p_NS - pf_NS, p_S - pf_S)
