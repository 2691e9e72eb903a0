"""Bit-exact fixed-point Grover emulation with an analytical truncation-error model."""

from .analysis import (
    DEFAULT_OFFSET,
    CalibrationResult,
    FminCheck,
    L2Record,
    calibrate,
    evaluate_point,
    f_min,
    r_num_q,
    r_prec,
    scaling_table,
    sweep,
    verify_f_min,
)
from .emulator import FixedTwoValueState, fixed_probabilities, measured_l2, run_fixed
from .errors import (
    FPGroverError,
    FracBitsMismatchError,
    InsufficientDataError,
    InvalidInputError,
    InvalidParametersError,
    ResourceLimitError,
)
from .fixedpoint import FxValue, TruncationResult, mul_truncate, quantize, right_shift
from .reference import (
    GroverParams,
    TwoValueState,
    closed_form_state,
    ideal_iterate,
    initial_state,
    iteration_count,
    residual_angle_check,
)
from .tracker import (
    ProbabilityErrorComponents,
    TrackerState,
    asymptotic_bounds,
    init_tracker,
    probability_errors,
    theoretical_l2,
    tracker_iterate,
)

__version__ = "0.1.0"
