"""Brute-force ``2**n``-amplitude Grover emulation.

This is the independent check on the two-value fast paths: it never
assumes that amplitudes come in two values, it just applies the oracle
and the diffusion to every basis state and lets :func:`distinct_amplitudes`
find out.

Fixed-point vectors hold integer mantissas.  ``int64`` is used when
``n + f + 2 <= 63`` bits suffice, Python ints (object arrays) otherwise.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .emulator import initial_mantissa, iter_fixed
from .errors import InvalidParametersError, ResourceLimitError
from .reference import GroverParams, iteration_count, validate_problem

__all__ = [
    "DEFAULT_MAX_N",
    "MAX_N_ENV",
    "StateVector",
    "TwoValueReport",
    "max_qubits",
    "sv_iter_real",
    "sv_iter_fixed",
    "sv_run_real",
    "sv_run_fixed",
    "distinct_amplitudes",
    "random_solution_set",
    "ValidationSummary",
    "validate_two_value",
]

DEFAULT_MAX_N = 20
MAX_N_ENV = "FPGROVER_SV_MAX_N"
REAL_TOL = 1e-12


def max_qubits() -> int:
    """Qubit cap for full state vectors; override with ``$FPGROVER_SV_MAX_N``."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InvalidParametersError(f"{MAX_N_ENV} must be an integer (got {raw!r})") from None


@dataclass
class StateVector:
    amplitudes: np.ndarray
    solution_set: frozenset
    frac_bits: int | None = None
    iteration: int = 0

    @property
    def n(self) -> int:
        return int(self.amplitudes.shape[0]).bit_length() - 1

    @property
    def is_fixed(self) -> bool:
        return self.frac_bits is not None

    def solution_mask(self) -> np.ndarray:
        mask = np.zeros(self.amplitudes.shape[0], dtype=bool)
        mask[list(self.solution_set)] = True
        return mask


@dataclass
class TwoValueReport:
    """Result of checking the two-value structure of a state vector."""

    value_on_S: object
    value_off_S: object
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_inputs(n: int, solution_set: Sequence[int], n_s: int) -> frozenset:
    validate_problem(n, n_s)
    cap = max_qubits()
    if n > cap:
        raise ResourceLimitError(f"n={n} exceeds the state-vector cap of {cap} qubits")
    S = frozenset(int(i) for i in solution_set)
    if len(S) != n_s:
        raise InvalidParametersError(f"solution_set has {len(S)} distinct indices, expected n_s={n_s}")
    if min(S) < 0 or max(S) >= 2**n:
        raise InvalidParametersError(f"solution indices must lie in [0, {2**n - 1}]")
    return S


def sv_iter_real(n: int, n_s: int, solution_set: Sequence[int], k: int | None = None) -> Iterator[StateVector]:
    S = _check_inputs(n, solution_set, n_s)
    if k is None:
        k = iteration_count(n, n_s)
    idx = np.fromiter(sorted(S), dtype=np.intp)
    amp = np.full(2**n, 2.0 ** (-n / 2))
    scale = 2.0 ** (-n + 1)
    yield StateVector(amp.copy(), S, None, 0)
    for it in range(1, k + 1):
        amp[idx] = -amp[idx]
        # np.sum on a fixed-shape contiguous array uses a fixed pairwise order.
        amp = scale * np.sum(amp) - amp
        yield StateVector(amp.copy(), S, None, it)


def sv_iter_fixed(n: int, f: int, n_s: int, solution_set: Sequence[int], k: int | None = None) -> Iterator[StateVector]:
    S = _check_inputs(n, solution_set, n_s)
    if f < 1:
        raise InvalidParametersError(f"f must be >= 1 (got {f})")
    if k is None:
        k = iteration_count(n, n_s)
    idx = np.fromiter(sorted(S), dtype=np.intp)
    # Sum of 2**n mantissas needs n + f + 2 bits.
    dtype = np.int64 if n + f + 2 <= 62 else object
    amp = np.full(2**n, initial_mantissa(n, f), dtype=dtype)
    yield StateVector(amp.copy(), S, f, 0)
    for it in range(1, k + 1):
        amp[idx] = -amp[idx]
        total = int(amp.sum())
        amp = (total >> (n - 1)) - amp
        yield StateVector(amp.copy(), S, f, it)


def _last(it):
    sv = None
    for sv in it:
        pass
    return sv


def sv_run_real(n: int, n_s: int, solution_set: Sequence[int], k: int | None = None) -> StateVector:
    """Apply ``k`` Grover iterations to the full real state vector."""
    return _last(sv_iter_real(n, n_s, solution_set, k))


def sv_run_fixed(n: int, f: int, n_s: int, solution_set: Sequence[int], k: int | None = None) -> StateVector:
    """Apply ``k`` fixed-point Grover iterations to the full vector of mantissas."""
    return _last(sv_iter_fixed(n, f, n_s, solution_set, k))


def _group_value(values: np.ndarray, exact: bool):
    """Representative value of a group: the largest cluster, earliest index on ties."""
    if exact:
        return Counter(values.tolist()).most_common(1)[0][0]
    order = np.argsort(values, kind="stable")
    breaks = np.flatnonzero(np.diff(values[order]) > REAL_TOL) + 1
    best = max(np.split(order, breaks), key=lambda c: (len(c), -int(c.min())))
    return float(values[int(best.min())])


def distinct_amplitudes(sv: StateVector) -> TwoValueReport:
    """Check that solution and nonsolution amplitudes each take a single value.

    Fixed vectors must match exactly; real vectors within ``1e-12``.  The
    representative value of each group is its most common value (for real
    vectors, the largest cluster of values within the tolerance); indices
    that deviate from it are listed as violations.
    Values are reported as mantissas for fixed vectors.
    """
    amp = sv.amplitudes
    mask = sv.solution_mask()
    exact = sv.is_fixed
    on = _group_value(amp[mask], exact)
    off = _group_value(amp[~mask], exact) if (~mask).any() else None

    if exact:
        bad_on = np.flatnonzero(mask & (amp != on))
        bad_off = np.flatnonzero(~mask & (amp != off))
        on, off = int(on), (None if off is None else int(off))
    else:
        bad_on = np.flatnonzero(mask & (np.abs(amp - on) > REAL_TOL))
        bad_off = np.flatnonzero(~mask & (np.abs(amp - off) > REAL_TOL))
    violations = sorted(int(i) for i in np.concatenate([bad_on, bad_off]))
    return TwoValueReport(on, off, violations)


def random_solution_set(n: int, n_s: int, rng: np.random.Generator) -> list[int]:
    return sorted(int(i) for i in rng.choice(2**n, size=n_s, replace=False))


@dataclass
class ValidationSummary:
    points: int = 0
    states: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_two_value(
    max_n: int,
    f_values: Sequence[int] = (12, 16, 24),
    ns_values: Sequence[int] = (1, 2, 4),
    placements: int = 5,
    seed: int = 0,
    min_n: int = 1,
) -> ValidationSummary:
    """Run the two-value structure and fast-path equivalence checks.

    For every valid ``(n, f, n_s)`` with ``min_n <= n <= max_n`` and
    ``placements`` random solution sets, both the real and the fixed-point
    state vectors are checked at every iteration: each must show a single
    value on the solution set and a single value off it, and the fixed
    pair must equal the mantissas of :func:`fpgrover.emulator.iter_fixed`.
    """
    cap = max_qubits()
    if max_n > cap:
        raise ResourceLimitError(f"max_n={max_n} exceeds the state-vector cap of {cap} qubits")
    rng = np.random.default_rng(seed)
    summary = ValidationSummary()
    for n in range(min_n, max_n + 1):
        for n_s in ns_values:
            if n_s >= 2**n:
                continue
            for _ in range(placements):
                S = random_solution_set(n, n_s, rng)
                for sv in sv_iter_real(n, n_s, S):
                    summary.states += 1
                    rep = distinct_amplitudes(sv)
                    if not rep.ok:
                        summary.violations.append(
                            f"real n={n} n_s={n_s} S={S} iter={sv.iteration}: indices {rep.violations}"
                        )
                for f in f_values:
                    summary.points += 1
                    params = GroverParams(n, f, n_s)
                    for sv, fast in zip(sv_iter_fixed(n, f, n_s, S), iter_fixed(params)):
                        summary.states += 1
                        rep = distinct_amplitudes(sv)
                        tag = f"fixed n={n} f={f} n_s={n_s} S={S} iter={sv.iteration}"
                        if not rep.ok:
                            summary.violations.append(f"{tag}: indices {rep.violations}")
                            continue
                        off = fast.amp_fixed_NS.mantissa if rep.value_off_S is not None else None
                        if (rep.value_on_S, rep.value_off_S) != (fast.amp_fixed_S.mantissa, off):
                            summary.violations.append(
                                f"{tag}: vector pair {(rep.value_on_S, rep.value_off_S)} "
                                f"!= fast path {fast.mantissas}"
                            )
    return summary
