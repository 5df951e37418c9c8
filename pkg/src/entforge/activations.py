"""Nonlinear reparameterizations mapping trainable parameters to gate angles.

The nonlinear kinds interpret the parameter as the drive of an oscillating
reflectivity r(theta) and convert it to a beam-splitter angle through

    angle = 2*arcsin(sqrt(1 - r)),   r clamped into [0, 1],

which sweeps the full band [0, pi] as r runs from 1 down to 0.  Three kinds:

* linear:    angle = theta, the unconstrained baseline
* sine:      r = sin(theta), a SIREN-style oscillator covering the whole band
* memristor: r = R(theta), the response of a memory element integrated over
  a finite window:

      R(t) = (t_osc / (t_int * 4 pi)) * [sin((2 pi t - 2 pi t_int) / t_osc)
                                         - sin(2 pi t / t_osc)]

  |R| is bounded by t_osc / (2 pi t_int), which never exceeds 1/2, so the
  memristor reaches only the upper part of the band.

Wherever r is clamped (r <= 0 or r >= 1) the angle is pinned at an endpoint
and the derivative is defined as 0; those parameters do not move under
gradient descent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Mapping

from .errors import ConfigurationError

LINEAR = "linear"
SINE = "sine"
MEMRISTOR = "memristor"
_KINDS = (LINEAR, SINE, MEMRISTOR)

# Reflectivities this close to an endpoint count as clamped for the derivative.
_CLAMP_EPS = 1e-12

# Serialized names used in config files and on the CLI.
_KIND_TO_CONFIG = {LINEAR: "linear", SINE: "sin", MEMRISTOR: "bm"}
_CONFIG_TO_KIND = {v: k for k, v in _KIND_TO_CONFIG.items()}


@dataclass(frozen=True)
class Activation:
    """A reparameterization rule; memristor parameters default to 1.0."""

    kind: str
    t_osc: float | None = None
    t_int: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ConfigurationError(f"unknown activation kind {self.kind!r}; expected {_KINDS}")
        if self.kind == MEMRISTOR:
            object.__setattr__(self, "t_osc", 1.0 if self.t_osc is None else float(self.t_osc))
            object.__setattr__(self, "t_int", 1.0 if self.t_int is None else float(self.t_int))
            if self.t_osc <= 0 or self.t_int <= 0:
                raise ConfigurationError("memristor periods t_osc and t_int must be positive")
        elif self.t_osc is not None or self.t_int is not None:
            raise ConfigurationError(f"periods only apply to the memristor kind, not {self.kind!r}")

    @classmethod
    def linear(cls) -> "Activation":
        return cls(LINEAR)

    @classmethod
    def sine(cls) -> "Activation":
        return cls(SINE)

    @classmethod
    def memristor(cls, t_osc: float = 1.0, t_int: float = 1.0) -> "Activation":
        return cls(MEMRISTOR, t_osc=t_osc, t_int=t_int)

    def to_config(self) -> dict[str, Any]:
        cfg: dict[str, Any] = {"kind": _KIND_TO_CONFIG[self.kind]}
        if self.kind == MEMRISTOR:
            cfg["t_osc"] = self.t_osc
            cfg["t_int"] = self.t_int
        return cfg

    @classmethod
    def from_config(cls, cfg: Mapping[str, Any] | str) -> "Activation":
        if isinstance(cfg, str):
            cfg = {"kind": cfg}
        raw_kind = cfg.get("kind")
        kind = _CONFIG_TO_KIND.get(raw_kind, raw_kind)
        if kind not in _KINDS:
            raise ConfigurationError(
                f"activation.kind: unknown value {raw_kind!r}; expected one of "
                f"{sorted(_CONFIG_TO_KIND)}"
            )
        if kind == MEMRISTOR:
            return cls(kind, t_osc=float(cfg.get("t_osc", 1.0)), t_int=float(cfg.get("t_int", 1.0)))
        return cls(kind)


def response(t: float, t_osc: float, t_int: float) -> float:
    """Finite-window oscillatory response R(t); see the module docstring."""
    if t_osc <= 0 or t_int <= 0:
        raise ConfigurationError("response periods t_osc and t_int must be positive")
    pref = t_osc / (t_int * 4.0 * math.pi)
    return pref * (
        math.sin((2.0 * math.pi * t - 2.0 * math.pi * t_int) / t_osc)
        - math.sin(2.0 * math.pi * t / t_osc)
    )


def _response_derivative(t: float, t_osc: float, t_int: float) -> float:
    return (1.0 / (2.0 * t_int)) * (
        math.cos((2.0 * math.pi * t - 2.0 * math.pi * t_int) / t_osc)
        - math.cos(2.0 * math.pi * t / t_osc)
    )


def reflectivity_to_angle(r: float) -> float:
    """2*arcsin(sqrt(1 - r)) with r clamped into [0, 1]; monotone from pi down to 0."""
    r = min(1.0, max(0.0, float(r)))
    return 2.0 * math.asin(math.sqrt(1.0 - r))


def _reflectivity(theta: float, act: Activation) -> tuple[float, float]:
    """Oscillator value and its theta-derivative for the nonlinear kinds."""
    if act.kind == SINE:
        return math.sin(theta), math.cos(theta)
    return (
        response(theta, act.t_osc, act.t_int),
        _response_derivative(theta, act.t_osc, act.t_int),
    )


def activate(theta: float, act: Activation) -> float:
    """Map a raw trainable parameter to the gate angle actually applied."""
    if act.kind == LINEAR:
        return float(theta)
    r, _ = _reflectivity(theta, act)
    return reflectivity_to_angle(r)


def activate_derivative(theta: float, act: Activation) -> float:
    """d(activated angle)/d(theta); 0 wherever the reflectivity clamps."""
    if act.kind == LINEAR:
        return 1.0
    r, dr = _reflectivity(theta, act)
    # Clamped regions and the endpoint singularities of arcsin(sqrt(.)) get 0.
    # The guard band absorbs float cancellation noise in r, which the 1/sqrt(r)
    # factor would otherwise blow up into a spurious finite slope.
    if r <= _CLAMP_EPS or r >= 1.0 - _CLAMP_EPS:
        return 0.0
    dangle_dr = -1.0 / math.sqrt(r * (1.0 - r))
    return dangle_dr * dr
