"""Six-neuron bidirectional two-layer network: vector field and linearization.

State ordering throughout the toolkit is (x1, x2, x3, y1, y2, y3): the three
I-layer neurons first, then the three J-layer neurons.  Each neuron decays
through its own lagged state (leakage delay, first lag) and receives activated
cross-layer input (communication delay, second lag).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConfigError

_H1_PROBES = (-3.0, -1.0, -0.1, 0.1, 1.0, 3.0)


@dataclass(frozen=True)
class Activation:
    """Activation family: value function plus its derivative at the origin."""

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    deriv_at_zero: float

    def check_origin_behaviour(self) -> None:
        """Sampling check: zero at zero and sign-preserving on both sides."""
        if abs(float(self.fn(np.array(0.0)))) > 1e-12:
            raise ConfigError(f"activation '{self.name}' must vanish at 0")
        for x in _H1_PROBES:
            if x * float(self.fn(np.array(x))) <= 0.0:
                raise ConfigError(
                    f"activation '{self.name}' is not sign-preserving at x={x}")


TANH = Activation("tanh", np.tanh, 1.0)
IDENTITY = Activation("identity", lambda x: x, 1.0)

ACTIVATIONS = {"tanh": TANH, "identity": IDENTITY}


def get_activation(spec) -> Activation:
    if isinstance(spec, Activation):
        return spec
    try:
        return ACTIVATIONS[spec]
    except KeyError:
        raise ConfigError(f"unknown activation '{spec}'; "
                          f"available: {sorted(ACTIVATIONS)}") from None


@dataclass(frozen=True)
class NetworkParams:
    """Decay rates and cross-layer connection weights of the 3+3 network.

    decay           k_1..k_6 > 0, I-layer then J-layer
    weights_j_to_i  3x3 matrix m: row i weights the activated J-layer inputs
                    feeding I-neuron i
    weights_i_to_j  3x3 matrix n: row j weights the activated I-layer inputs
                    feeding J-neuron j
    """

    decay: np.ndarray
    weights_j_to_i: np.ndarray
    weights_i_to_j: np.ndarray
    activation: Activation = TANH

    def __post_init__(self):
        object.__setattr__(self, "decay", np.asarray(self.decay, dtype=float))
        object.__setattr__(self, "weights_j_to_i",
                           np.asarray(self.weights_j_to_i, dtype=float))
        object.__setattr__(self, "weights_i_to_j",
                           np.asarray(self.weights_i_to_j, dtype=float))
        if self.decay.shape != (6,):
            raise ConfigError("decay must hold six rates")
        if np.any(self.decay <= 0.0):
            raise ConfigError("decay rates must be strictly positive")
        for name in ("weights_j_to_i", "weights_i_to_j"):
            if getattr(self, name).shape != (3, 3):
                raise ConfigError(f"{name} must be a 3x3 matrix")
        act = get_activation(self.activation)
        object.__setattr__(self, "activation", act)
        act.check_origin_behaviour()


@dataclass(frozen=True)
class LinearGains:
    """Origin-slope gain matrices of the linearized network."""

    phi: np.ndarray      # 3x3, J-layer -> I-layer
    varphi: np.ndarray   # 3x3, I-layer -> J-layer


def linearize(params: NetworkParams) -> LinearGains:
    """Gains phi = m * f'(0), varphi = n * g'(0)."""
    s = params.activation.deriv_at_zero
    return LinearGains(phi=params.weights_j_to_i * s,
                       varphi=params.weights_i_to_j * s)


def make_rhs(params: NetworkParams):
    """Vector field f(t, lag1, lag2) -> 6-vector.

    lag1 is the state at t - tau_1 (leakage), lag2 at t - tau_2
    (communication).  Component i of the output is the lagged self-decay plus
    the weighted activated cross-layer inputs.
    """
    k = params.decay
    m = params.weights_j_to_i
    n = params.weights_i_to_j
    act = params.activation.fn

    def rhs(t: float, lag1: np.ndarray, lag2: np.ndarray) -> np.ndarray:
        out = np.empty(6)
        out[:3] = -k[:3] * lag1[:3] + m @ act(lag2[3:])
        out[3:] = -k[3:] * lag1[3:] + n @ act(lag2[:3])
        return out

    return rhs


def make_solver_rhs(params: NetworkParams):
    """Adapter with the solver calling convention rhs(t, x, lag1, lag2)."""
    f = make_rhs(params)

    def rhs(t, x, lag1, lag2):
        return f(t, lag1, lag2)

    return rhs


def linearized_params(params: NetworkParams) -> NetworkParams:
    """Same weights with the identity activation (exact linear field)."""
    return NetworkParams(decay=params.decay,
                         weights_j_to_i=params.weights_j_to_i,
                         weights_i_to_j=params.weights_i_to_j,
                         activation=IDENTITY)


__all__ = ["Activation", "NetworkParams", "LinearGains", "TANH", "IDENTITY",
           "ACTIVATIONS", "get_activation", "linearize", "make_rhs",
           "make_solver_rhs", "linearized_params"]
