"""Sweeps, l2 scaling ratios, constant calibration and fractional-bit planning."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .emulator import fixed_probabilities, ideal_probabilities, measured_l2, run_fixed
from .errors import FPGroverError, InsufficientDataError, InvalidInputError
from .reference import GroverParams
from .tracker import l2_from_components, probability_errors, run_tracker, theoretical_l2

__all__ = [
    "DEFAULT_OFFSET",
    "L2Record",
    "CalibrationResult",
    "FminCheck",
    "evaluate_point",
    "sweep",
    "r_prec",
    "r_num_q",
    "scaling_table",
    "calibrate",
    "f_min",
    "verify_f_min",
]

log = logging.getLogger(__name__)

DEFAULT_OFFSET = 1.03

NAN = float("nan")


@dataclass(frozen=True)
class L2Record:
    """One sweep point."""

    n: int
    f: int
    n_s: int
    k: int
    l2_measured: float = NAN
    l2_theoretical: float = NAN
    eps_p_NS: float = NAN
    eps_p_S: float = NAN
    prob_S_ideal: float = NAN
    prob_S_fixed: float = NAN
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def as_dict(self) -> dict:
        return asdict(self)


def evaluate_point(n: int, f: int, n_s: int = 1) -> L2Record:
    """Run emulator, exact reference and tracker for one parameter point."""
    params = GroverParams(n, f, n_s)
    final = run_fixed(params)
    l2_meas = measured_l2(params, final=final)
    comp = probability_errors(run_tracker(params), params)
    p_S, _ = ideal_probabilities(params)
    pf_S, _ = fixed_probabilities(final)
    return L2Record(
        n=n,
        f=f,
        n_s=n_s,
        k=params.k,
        l2_measured=l2_meas,
        l2_theoretical=l2_from_components(comp, params),
        eps_p_NS=float(comp.eps_p_NS),
        eps_p_S=float(comp.eps_p_S),
        prob_S_ideal=float(p_S),
        prob_S_fixed=float(pf_S),
    )


def _safe_point(point: tuple[int, int, int]) -> L2Record:
    n, f, n_s = point
    try:
        return evaluate_point(n, f, n_s)
    except (FPGroverError, ArithmeticError, AssertionError) as exc:
        log.warning("sweep point n=%d f=%d n_s=%d failed: %s", n, f, n_s, exc)
        return L2Record(n, f, n_s, 0, error=f"{type(exc).__name__}: {exc}")


def sweep(n_list: Iterable[int], f_range: Iterable[int], n_s: int = 1, workers: int = 1) -> list[L2Record]:
    """Evaluate every ``(n, f)`` pair; rows come back sorted by n then f.

    A failing point becomes a row with ``error`` set and NaN values
    instead of aborting the sweep.  ``workers > 1`` evaluates points in
    separate processes.
    """
    points = [(n, f, n_s) for n in sorted(set(n_list)) for f in sorted(set(f_range))]
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_safe_point, points))
    return [_safe_point(p) for p in points]


def _lookup(records: Sequence[L2Record], n: int, f: int, n_s: int, column: str) -> float:
    for r in records:
        if r.n == n and r.f == f and r.n_s == n_s and r.ok:
            return getattr(r, column)
    raise InsufficientDataError(f"no valid record for n={n}, f={f}, n_s={n_s}")


def r_prec(records: Sequence[L2Record], n: int, a: int, w: int = 4, n_s: int = 1,
           column: str = "l2_measured") -> float:
    """Per-bit geometric ratio ``(l2(f=a) / l2(f=a-w)) ** (1/w)`` at fixed n."""
    hi = _lookup(records, n, a, n_s, column)
    lo = _lookup(records, n, a - w, n_s, column)
    if hi == lo:
        return 1.0
    return (hi / lo) ** (1.0 / w)


def r_num_q(records: Sequence[L2Record], f: int, n_lo: int = 8, n_hi: int = 16, n_s: int = 1,
            column: str = "l2_measured") -> float:
    """Per-qubit geometric ratio ``(l2(n_hi) / l2(n_lo)) ** (1/(n_hi-n_lo))`` at fixed f."""
    hi = _lookup(records, n_hi, f, n_s, column)
    lo = _lookup(records, n_lo, f, n_s, column)
    if hi == lo:
        return 1.0
    return (hi / lo) ** (1.0 / (n_hi - n_lo))


def scaling_table(records: Sequence[L2Record], n_list: Sequence[int] = (8, 12, 16),
                  f_points: Sequence[int] = (16, 20, 24, 28, 32, 36, 40), w: int = 4,
                  n_s: int = 1, column: str = "l2_measured") -> dict:
    """l2 values with r_prec per row and r_num_q per column, laid out like a report table."""
    table = {"l2": {}, "r_prec": {}, "r_num_q": {}}
    for n in n_list:
        table["l2"][n] = {f: _lookup(records, n, f, n_s, column) for f in f_points}
        table["r_prec"][n] = {f: r_prec(records, n, f, w, n_s, column) for f in f_points[1:]}
    for f in f_points:
        table["r_num_q"][f] = r_num_q(records, f, min(n_list), max(n_list), n_s, column)
    return table


@dataclass(frozen=True)
class CalibrationResult:
    """Offset ``c`` in ``l2 = 2**(n - f - c)`` fitted to a single anchor point."""

    offset_c: float
    anchor: tuple[int, int, float]

    def predict_l2(self, n: int, f: int) -> float:
        return 2.0 ** (n - f - self.offset_c)

    def f_min(self, n: int, l2_max: float) -> int:
        return f_min(n, l2_max, self.offset_c)


def calibrate(anchor, column: str = "l2_measured") -> CalibrationResult:
    """Solve ``l2 = 2**(n - f - c)`` for ``c`` at one point.

    ``anchor`` is an :class:`L2Record` (its ``column`` is used) or an
    ``(n, f, l2)`` tuple.
    """
    if isinstance(anchor, L2Record):
        n, f, l2 = anchor.n, anchor.f, getattr(anchor, column)
    else:
        n, f, l2 = anchor
    if not (isinstance(l2, (int, float)) and math.isfinite(l2) and l2 > 0):
        raise InvalidInputError(f"calibration anchor needs a positive finite l2 (got {l2!r})")
    return CalibrationResult(n - f - math.log2(l2), (n, f, float(l2)))


def f_min(n: int, l2_max: float, offset_c: float = DEFAULT_OFFSET) -> int:
    """Smallest f with predicted error ``2**(n - f - offset_c) <= l2_max``."""
    if not (isinstance(l2_max, (int, float)) and math.isfinite(l2_max) and l2_max > 0):
        raise InvalidInputError(f"l2_max must be a positive finite number (got {l2_max!r})")
    return math.ceil(n - math.log2(l2_max) - offset_c)


@dataclass(frozen=True)
class FminCheck:
    n: int
    l2_max: float
    f_min: int
    achieved_l2: float
    passed: bool


def verify_f_min(n: int, l2_max: float, n_s: int = 1, offset_c: float = DEFAULT_OFFSET) -> FminCheck:
    """Compute f_min and check it with the tracker's predicted l2."""
    f = f_min(n, l2_max, offset_c)
    achieved = theoretical_l2(GroverParams(n, f, n_s))
    return FminCheck(n, l2_max, f, achieved, achieved <= l2_max)
