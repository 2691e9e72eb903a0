"""Analytical truncation-error tracker.

Co-evolves the fixed-point amplitudes ``psi_fp`` and the accumulated
truncation errors ``eps`` so that ``psi_fp + eps`` equals the ideal
amplitude at every iteration.  The only new error per iteration is the
remainder dropped when the diffusion sum is scaled by ``2**(-n+1)``.

All quantities are :class:`~fractions.Fraction`.  For even ``n`` this is
exact.  For odd ``n`` the start value ``2**(-n/2)`` is approximated with
``2f + n + 64`` fractional bits, the same approximation the exact
reference uses, so the reconstruction identity still holds exactly
against that reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .fixedpoint import dyadic_mod
from .reference import GroverParams, inv_sqrt_pow2

__all__ = [
    "ENVELOPE_CONSTANT",
    "TrackerState",
    "ProbabilityErrorComponents",
    "Envelope",
    "init_tracker",
    "tracker_iterate",
    "iter_tracker",
    "run_tracker",
    "probability_errors",
    "l2_from_components",
    "theoretical_l2",
    "asymptotic_bounds",
    "within_envelope",
]

ENVELOPE_CONSTANT = 4


@dataclass(frozen=True)
class TrackerState:
    psi_fp_NS: Fraction
    psi_fp_S: Fraction
    eps_NS: Fraction
    eps_S: Fraction
    iteration: int = 0

    def reconstruct(self) -> tuple[Fraction, Fraction]:
        """``(psi_fp_S + eps_S, psi_fp_NS + eps_NS)``: the ideal amplitudes."""
        return self.psi_fp_S + self.eps_S, self.psi_fp_NS + self.eps_NS


@dataclass(frozen=True)
class ProbabilityErrorComponents:
    eps_sq_NS: Fraction
    eps_sq_S: Fraction
    eps_p_NS: Fraction
    eps_p_S: Fraction


class Envelope(NamedTuple):
    eps_NS: float
    eps_S: float
    l2: float


def init_tracker(params: GroverParams) -> TrackerState:
    amp = inv_sqrt_pow2(params.n, params.exact_bits)
    eps = dyadic_mod(amp, params.f)
    return TrackerState(amp - eps, amp - eps, eps, eps, 0)


def tracker_iterate(state: TrackerState, params: GroverParams) -> TrackerState:
    """Advance fixed-point amplitudes and errors by one iteration.

    Both error updates read the old ``(eps_NS, eps_S)`` pair.
    """
    c = Fraction(params.n_s, 1 << (params.n - 1))
    psi_NS, psi_S, eps_NS, eps_S = state.psi_fp_NS, state.psi_fp_S, state.eps_NS, state.eps_S

    raw = 2 * psi_NS - c * (psi_NS + psi_S)
    eps_scaled = dyadic_mod(raw, params.f)
    scaled = raw - eps_scaled

    common = 2 * eps_NS - c * (eps_NS + eps_S)
    return TrackerState(
        psi_fp_NS=scaled - psi_NS,
        psi_fp_S=scaled + psi_S,
        eps_NS=common - eps_NS + eps_scaled,
        eps_S=common + eps_S + eps_scaled,
        iteration=state.iteration + 1,
    )


def iter_tracker(params: GroverParams, k: int | None = None) -> Iterator[TrackerState]:
    if k is None:
        k = params.k
    state = init_tracker(params)
    yield state
    for _ in range(k):
        state = tracker_iterate(state, params)
        yield state


def run_tracker(params: GroverParams, k: int | None = None) -> TrackerState:
    state = None
    for state in iter_tracker(params, k):
        pass
    return state


def probability_errors(final: TrackerState, params: GroverParams) -> ProbabilityErrorComponents:
    """Split the per-state probability error into square truncation and propagated error."""
    f = params.f
    sq_NS = dyadic_mod(final.psi_fp_NS**2, f)
    sq_S = dyadic_mod(final.psi_fp_S**2, f)
    return ProbabilityErrorComponents(
        eps_sq_NS=sq_NS,
        eps_sq_S=sq_S,
        eps_p_NS=sq_NS + 2 * final.psi_fp_NS * final.eps_NS + final.eps_NS**2,
        eps_p_S=sq_S + 2 * final.psi_fp_S * final.eps_S + final.eps_S**2,
    )


def l2_from_components(comp: ProbabilityErrorComponents, params: GroverParams) -> float:
    total = params.n_ns * comp.eps_p_NS**2 + params.n_s * comp.eps_p_S**2
    return math.sqrt(float(total))


def theoretical_l2(params: GroverParams) -> float:
    """Predicted l2 error after ``k`` iterations."""
    final = run_tracker(params)
    return l2_from_components(probability_errors(final, params), params)


def asymptotic_bounds(params: GroverParams) -> Envelope:
    """Order-of-magnitude envelopes ``2**(n/2-f)``, ``2**(n-f)``, ``2**(n-f)``."""
    n, f = params.n, params.f
    return Envelope(2.0 ** (n / 2 - f), 2.0 ** (n - f), 2.0 ** (n - f))


def within_envelope(final: TrackerState, params: GroverParams, l2: float | None = None,
                    constant: float = ENVELOPE_CONSTANT) -> bool:
    env = asymptotic_bounds(params)
    ok = abs(float(final.eps_NS)) <= constant * env.eps_NS and abs(float(final.eps_S)) <= constant * env.eps_S
    if l2 is not None:
        ok = ok and l2 <= constant * env.l2
    return ok
