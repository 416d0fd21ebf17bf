"""Exception types shared across the toolkit."""

from __future__ import annotations

import numpy as np


class FracbamError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(FracbamError):
    """Invalid configuration: bad parameter values, off-grid delays, malformed files."""


class NumericalError(FracbamError):
    """A numerical procedure failed to converge or verify (root finding, refinement)."""


class EvaluationError(FracbamError):
    """A special-function evaluation could not reach the requested accuracy."""


class DivergenceError(FracbamError):
    """Solver state left the trust region (non-finite or |x| > cap).

    Carries the last valid time and the partial trajectory so callers can
    report or dump what was computed before the blow-up.
    """

    def __init__(self, message: str, last_valid_time: float,
                 times: np.ndarray, states: np.ndarray):
        super().__init__(message)
        self.last_valid_time = last_valid_time
        self.times = times
        self.states = states
