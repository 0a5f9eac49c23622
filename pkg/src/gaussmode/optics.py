"""Optical-element transformations of two-mode Gaussian states.

Each element acts on the mode operators by a Bogoliubov map

    a_i -> sum_j U[i, j] a_j + V[i, j] a_j^dag,
    U U^dag - V V^dag = 1,   U V^T symmetric.

Applying elements in circuit order composes the maps; the transformed state
is recovered by solving the annihilation conditions, which for a Gaussian
wavefunction reduce to the linear system

    M = (U - V)^(-1) (U + V),      M = [[alpha, gamma], [gamma, beta]].

Closed-form coefficient maps for the common two-element circuits are kept
alongside as regression anchors for the general path.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InvalidInputError, NonNormalizableError, NonNormalizableResultError
from .state import QuadratureCoefficients, validate, vacuum

# condition-number ceiling for the annihilation solve
_COND_LIMIT = 1e12

_TWO_PI = 2.0 * math.pi


def _check_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class SqueezeParams:
    """Squeezing magnitude r >= 0 and phase phi (stored reduced mod 2*pi)."""

    r: float
    phi: float = 0.0

    def __post_init__(self):
        _check_finite(r=self.r, phi=self.phi)
        if self.r < 0:
            raise ValueError(f"squeezing magnitude must be >= 0, got {self.r}")
        object.__setattr__(self, "phi", self.phi % _TWO_PI)


@dataclass(frozen=True)
class TwoModeSqueeze:
    params: SqueezeParams


@dataclass(frozen=True)
class OneModeSqueeze:
    mode: int
    params: SqueezeParams

    def __post_init__(self):
        if self.mode not in (1, 2):
            raise ValueError(f"mode must be 1 or 2, got {self.mode}")


@dataclass(frozen=True)
class BeamSplitter:
    """Mixing angle theta in [0, pi] (theta = pi/2 is balanced) and phase phi."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        _check_finite(theta=self.theta, phi=self.phi)
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        object.__setattr__(self, "phi", self.phi % _TWO_PI)


@dataclass(frozen=True)
class PhaseShift:
    mode: int
    phi: float

    def __post_init__(self):
        _check_finite(phi=self.phi)
        if self.mode not in (1, 2):
            raise ValueError(f"mode must be 1 or 2, got {self.mode}")
        object.__setattr__(self, "phi", self.phi % _TWO_PI)


OpticalElement = Union[TwoModeSqueeze, OneModeSqueeze, BeamSplitter, PhaseShift]


@dataclass(frozen=True)
class BogoliubovMap:
    """Pair (U, V) of 2x2 complex matrices acting on (a_1, a_2)."""

    u: np.ndarray
    v: np.ndarray

    @staticmethod
    def identity() -> "BogoliubovMap":
        return BogoliubovMap(np.eye(2, dtype=complex), np.zeros((2, 2), dtype=complex))

    def then(self, later: "BogoliubovMap") -> "BogoliubovMap":
        """Map for `later` applied after self in circuit order."""
        u = self.u @ later.u + self.v @ later.v.conj()
        v = self.u @ later.v + self.v @ later.u.conj()
        return BogoliubovMap(u, v)

    def max_symplectic_defect(self) -> float:
        """Largest violation of the canonical-commutator conditions."""
        eye = self.u @ self.u.conj().T - self.v @ self.v.conj().T - np.eye(2)
        sym = self.u @ self.v.T - self.v @ self.u.T
        return float(max(np.abs(eye).max(), np.abs(sym).max()))


def bogoliubov_map(element: OpticalElement) -> BogoliubovMap:
    """Bogoliubov matrices of a single element."""
    u = np.eye(2, dtype=complex)
    v = np.zeros((2, 2), dtype=complex)
    if isinstance(element, TwoModeSqueeze):
        r, phi = element.params.r, element.params.phi
        u *= math.cosh(r)
        s = cmath.exp(1j * phi) * math.sinh(r)
        v[0, 1] = s
        v[1, 0] = s
    elif isinstance(element, OneModeSqueeze):
        k = element.mode - 1
        r, phi = element.params.r, element.params.phi
        u[k, k] = math.cosh(r)
        v[k, k] = cmath.exp(1j * phi) * math.sinh(r)
    elif isinstance(element, BeamSplitter):
        half = element.theta / 2.0
        ct, st = math.cos(half), math.sin(half)
        ph = cmath.exp(-1j * element.phi)
        u = np.array([[ph * ct, -ph * st], [st, ct]], dtype=complex)
    elif isinstance(element, PhaseShift):
        u[element.mode - 1, element.mode - 1] = cmath.exp(-1j * element.phi)
    else:
        raise TypeError(f"unknown optical element {element!r}")
    return BogoliubovMap(u, v)


def _solve_coefficients(total: BogoliubovMap) -> QuadratureCoefficients:
    lhs = total.u - total.v
    if np.linalg.cond(lhs) > _COND_LIMIT:
        raise NonNormalizableResultError(
            "annihilation solve is numerically singular; the circuit drives the "
            "state out of the normalizable regime"
        )
    m = np.linalg.solve(lhs, total.u + total.v)
    gamma = 0.5 * (m[0, 1] + m[1, 0])
    try:
        return validate(m[0, 0], m[1, 1], gamma)
    except NonNormalizableError as exc:
        raise NonNormalizableResultError(str(exc)) from exc


def _annihilators_of(coeffs: QuadratureCoefficients) -> BogoliubovMap:
    # operators with (U - V) = 1 and (U + V) = M annihilate the state
    m = np.array(
        [[coeffs.alpha, coeffs.gamma], [coeffs.gamma, coeffs.beta]], dtype=complex
    )
    eye = np.eye(2, dtype=complex)
    return BogoliubovMap((m + eye) / 2.0, (m - eye) / 2.0)


def apply_elements(
    coeffs: QuadratureCoefficients, elements: list[OpticalElement]
) -> QuadratureCoefficients:
    """Transform an existing state by elements applied in list order."""
    total = _annihilators_of(coeffs)
    for element in elements:
        total = total.then(bogoliubov_map(element))
    return _solve_coefficients(total)


def apply_circuit(elements: list[OpticalElement]) -> QuadratureCoefficients:
    """State produced by acting on the two-mode vacuum with `elements`."""
    if not elements:
        raise InvalidInputError("circuit must contain at least one element")
    return apply_elements(vacuum(), elements)


def two_mode_squeezed(params: SqueezeParams) -> QuadratureCoefficients:
    """Two-mode squeezed vacuum. With lam = -exp(i*phi)*tanh(r):

        alpha = beta = (1 + lam^2) / (1 - lam^2),
        gamma = -2*lam / (1 - lam^2),

    giving alpha = cosh(2r), gamma = sinh(2r) at phi = 0 and the identity
    alpha^2 - gamma^2 = 1 for every (r, phi)."""
    lam = -cmath.exp(1j * params.phi) * math.tanh(params.r)
    den = 1.0 - lam * lam
    al = (1.0 + lam * lam) / den
    return validate(al, al, -2.0 * lam / den)


def squeeze_then_onemode(
    r12: float, phi12: float, r1: float, phi1: float
) -> QuadratureCoefficients:
    """Two-mode squeeze followed by a mode-1 squeeze, in closed form.

    With l1 = exp(i*phi1)*tanh(r1), l12 = exp(i*phi12)*tanh(r12) and
    den = (1 - l1) - l12^2*(1 - conj(l1)):

        alpha = ((1 + l1) + l12^2*(1 + conj(l1))) / den
        beta  = ((1 - l1) + l12^2*(1 - conj(l1))) / den
        gamma = 2*l12*sqrt(1 - |l1|^2) / den
    """
    _check_finite(r12=r12, phi12=phi12, r1=r1, phi1=phi1)
    if r12 < 0 or r1 < 0:
        raise ValueError("squeezing magnitudes must be >= 0")
    l1 = cmath.exp(1j * phi1) * math.tanh(r1)
    l12 = cmath.exp(1j * phi12) * math.tanh(r12)
    den = (1.0 - l1) - l12 * l12 * (1.0 - l1.conjugate())
    al = ((1.0 + l1) + l12 * l12 * (1.0 + l1.conjugate())) / den
    be = ((1.0 - l1) + l12 * l12 * (1.0 - l1.conjugate())) / den
    ga = 2.0 * l12 * math.sqrt(1.0 - abs(l1) ** 2) / den
    return validate(al, be, ga)


def beamsplit_squeezed(r12: float, theta: float, phi: float) -> QuadratureCoefficients:
    """Two-mode squeeze (phase 0) followed by a beam splitter, in closed form.

    With lt = exp(i*phi)*tanh(r12):

        alpha = (1 + 2*lt*sin(theta) + lt^2) / (1 - lt^2)
        beta  = (1 - 2*lt*sin(theta) + lt^2) / (1 - lt^2)
        gamma = 2*lt*cos(theta) / (1 - lt^2)

    so theta = 0 leaves the squeezed state intact (the element is a local
    phase) and theta = pi/2 disentangles the modes completely (gamma = 0,
    leaving two oppositely squeezed product modes)."""
    _check_finite(r12=r12, theta=theta, phi=phi)
    if r12 < 0:
        raise ValueError(f"squeezing magnitude must be >= 0, got {r12}")
    lt = cmath.exp(1j * phi) * math.tanh(r12)
    den = 1.0 - lt * lt
    al = (1.0 + 2.0 * lt * math.sin(theta) + lt * lt) / den
    be = (1.0 - 2.0 * lt * math.sin(theta) + lt * lt) / den
    ga = 2.0 * lt * math.cos(theta) / den
    return validate(al, be, ga)


# ---------------------------------------------------------------------------
# circuit (de)serialization

_KINDS = {"tms", "sms", "bs", "phase"}


def element_from_dict(item: dict) -> OpticalElement:
    """Build an element from its JSON object form.

    {"kind": "tms", "r": ..., "phi": ...}
    {"kind": "sms", "mode": ..., "r": ..., "phi": ...}
    {"kind": "bs", "theta": ..., "phi": ...}
    {"kind": "phase", "mode": ..., "phi": ...}
    """
    if not isinstance(item, dict):
        raise InvalidInputError(f"circuit element must be an object, got {item!r}")
    kind = item.get("kind")
    if kind not in _KINDS:
        raise InvalidInputError(f"unknown element kind {kind!r}")
    try:
        if kind == "tms":
            return TwoModeSqueeze(SqueezeParams(float(item["r"]), float(item.get("phi", 0.0))))
        if kind == "sms":
            return OneModeSqueeze(
                int(item["mode"]),
                SqueezeParams(float(item["r"]), float(item.get("phi", 0.0))),
            )
        if kind == "bs":
            return BeamSplitter(float(item["theta"]), float(item.get("phi", 0.0)))
        return PhaseShift(int(item["mode"]), float(item["phi"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad circuit element {item!r}: {exc}") from exc


def element_to_dict(element: OpticalElement) -> dict:
    if isinstance(element, TwoModeSqueeze):
        return {"kind": "tms", "r": element.params.r, "phi": element.params.phi}
    if isinstance(element, OneModeSqueeze):
        return {
            "kind": "sms",
            "mode": element.mode,
            "r": element.params.r,
            "phi": element.params.phi,
        }
    if isinstance(element, BeamSplitter):
        return {"kind": "bs", "theta": element.theta, "phi": element.phi}
    if isinstance(element, PhaseShift):
        return {"kind": "phase", "mode": element.mode, "phi": element.phi}
    raise TypeError(f"unknown optical element {element!r}")
