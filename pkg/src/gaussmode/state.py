"""Pure two-mode Gaussian states described by wavefunction coefficients.

The state is the normalized wavefunction

    psi(q1, q2) = N * exp(-(alpha*q1^2 + beta*q2^2 + 2*gamma*q1*q2) / 2)

with complex coefficients alpha, beta, gamma. Writing alpha = a1 + i*a2 and
so on, normalizability requires a1 > 0, b1 > 0 and

    Delta^2 = a1*b1 - g1^2 > 0,       N = (Delta^2 / pi^2)^(1/4).

Everything downstream (covariance blocks, reduced-mode kernels, entanglement
measures) is an explicit function of the three coefficients, in units where
hbar = 1 and the vacuum quadrature variance is 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonFiniteError, NonNormalizableError

# positivity floor for a1, b1 and Delta^2
_EPS = 1e-12


@dataclass(frozen=True)
class QuadratureCoefficients:
    """Validated coefficient triple of a pure two-mode Gaussian state."""

    alpha: complex
    beta: complex
    gamma: complex
    delta_sq: float = field(init=False)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            z = getattr(self, name)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise NonFiniteError(f"{name} = {z} has a non-finite component")
        a1 = self.alpha.real
        b1 = self.beta.real
        g1 = self.gamma.real
        if a1 <= _EPS or b1 <= _EPS:
            raise NonNormalizableError(
                f"Re(alpha) = {a1} and Re(beta) = {b1} must both be positive"
            )
        d2 = a1 * b1 - g1 * g1
        if d2 <= _EPS:
            raise NonNormalizableError(
                f"Re(alpha)*Re(beta) - Re(gamma)^2 = {d2} must be positive"
            )
        object.__setattr__(self, "delta_sq", d2)


@dataclass(frozen=True)
class CovarianceMatrix:
    """Second moments arranged in 2x2 blocks.

    block_a holds mode 1 (q1, p1), block_b holds mode 2, block_c holds the
    cross covariances with mode-1 operators indexing rows. Same-mode q*p
    entries are symmetrized, (qp + pq)/2.
    """

    block_a: np.ndarray
    block_b: np.ndarray
    block_c: np.ndarray

    def full(self) -> np.ndarray:
        """Assemble the symmetric 4x4 matrix in (q1, p1, q2, p2) order."""
        top = np.hstack([self.block_a, self.block_c])
        bottom = np.hstack([self.block_c.T, self.block_b])
        return np.vstack([top, bottom])

    def moment_dict(self) -> dict[str, float]:
        """All ten distinct second moments keyed by operator pair."""
        a, b, c = self.block_a, self.block_b, self.block_c
        return {
            "q1q1": float(a[0, 0]),
            "q1p1": float(a[0, 1]),
            "p1p1": float(a[1, 1]),
            "q2q2": float(b[0, 0]),
            "q2p2": float(b[0, 1]),
            "p2p2": float(b[1, 1]),
            "q1q2": float(c[0, 0]),
            "q1p2": float(c[0, 1]),
            "q2p1": float(c[1, 0]),
            "p1p2": float(c[1, 1]),
        }


@dataclass(frozen=True)
class MarginalKernel:
    """Position-representation kernel of one reduced mode.

    rho(x, x') = sqrt((a - c)/pi)
                 * exp(-(a*(x^2 + x'^2) - 2*c*x*x') / 2)
                 * exp(-i*a_prime*(x^2 - x'^2) / 2)

    The phase coefficient a_prime drops out of every eigenvalue because it
    amounts to conjugation by a unitary position-dependent phase.
    """

    a: float
    a_prime: float
    c: float
    mode: int

    def __post_init__(self):
        if self.mode not in (1, 2):
            raise ValueError(f"mode must be 1 or 2, got {self.mode}")
        if not (self.a - self.c > 0 and self.a + self.c > 0):
            raise ValueError(
                f"kernel requires a > |c|, got a = {self.a}, c = {self.c}"
            )


def validate(alpha: complex, beta: complex, gamma: complex) -> QuadratureCoefficients:
    """Check finiteness and normalizability, returning the validated triple."""
    return QuadratureCoefficients(complex(alpha), complex(beta), complex(gamma))


def vacuum() -> QuadratureCoefficients:
    """Two-mode vacuum, alpha = beta = 1, gamma = 0."""
    return QuadratureCoefficients(1.0 + 0.0j, 1.0 + 0.0j, 0.0j)


def normalization(coeffs: QuadratureCoefficients) -> float:
    """Normalization constant N = (Delta^2/pi^2)^(1/4); vacuum gives pi^(-1/2)."""
    return (coeffs.delta_sq / math.pi**2) ** 0.25


def wavefunction(coeffs: QuadratureCoefficients, q1, q2):
    """Evaluate psi(q1, q2). Accepts scalars or broadcastable arrays."""
    quad = coeffs.alpha * np.square(q1) + coeffs.beta * np.square(q2) \
        + 2.0 * coeffs.gamma * np.asarray(q1) * np.asarray(q2)
    return normalization(coeffs) * np.exp(-quad / 2.0)


def covariance(coeffs: QuadratureCoefficients) -> CovarianceMatrix:
    """Second moments of the state as explicit coefficient functions.

    The position block follows from |psi|^2 being Gaussian with precision
    matrix 2*[[a1, g1], [g1, b1]]; momentum and mixed moments come from
    differentiating the exponent. The p1p2 entry looks asymmetric in the
    mode labels but the label-swapped expression is algebraically equal.
    """
    a1, a2 = coeffs.alpha.real, coeffs.alpha.imag
    b1, b2 = coeffs.beta.real, coeffs.beta.imag
    g1, g2 = coeffs.gamma.real, coeffs.gamma.imag
    d2 = coeffs.delta_sq

    q1q1 = b1 / (2 * d2)
    q2q2 = a1 / (2 * d2)
    q1q2 = -g1 / (2 * d2)

    p1p1 = (b1 * (a1 * a1 + a2 * a2) - a1 * (g1 * g1 - g2 * g2) - 2 * g1 * g2 * a2) / (2 * d2)
    p2p2 = (a1 * (b1 * b1 + b2 * b2) - b1 * (g1 * g1 - g2 * g2) - 2 * g1 * g2 * b2) / (2 * d2)
    p1p2 = ((a1 * g1 + a2 * g2) * d2 + (a1 * g2 - a2 * g1) * (a1 * b2 - g1 * g2)) / (2 * a1 * d2)

    q1p1 = (g1 * g2 - a2 * b1) / (2 * d2)
    q2p2 = (g1 * g2 - a1 * b2) / (2 * d2)
    q1p2 = (g1 * b2 - g2 * b1) / (2 * d2)
    q2p1 = (g1 * a2 - g2 * a1) / (2 * d2)

    block_a = np.array([[q1q1, q1p1], [q1p1, p1p1]])
    block_b = np.array([[q2q2, q2p2], [q2p2, p2p2]])
    block_c = np.array([[q1q2, q1p2], [q2p1, p1p2]])
    return CovarianceMatrix(block_a, block_b, block_c)


def marginal_kernel(coeffs: QuadratureCoefficients, mode: int) -> MarginalKernel:
    """Trace out the other mode and return the reduced kernel of `mode`.

    For mode 1 (mode 2 swaps alpha and beta):

        a       = (2*a1*b1 - g1^2 + g2^2) / (2*b1)
        c       = (g1^2 + g2^2) / (2*b1)
        a_prime = (a2*b1 - g1*g2) / b1

    which always satisfies a > c >= 0 for a valid state; c = 0 exactly when
    gamma = 0.
    """
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode}")
    al, be = (coeffs.alpha, coeffs.beta) if mode == 1 else (coeffs.beta, coeffs.alpha)
    a1, a2 = al.real, al.imag
    b1 = be.real
    g1, g2 = coeffs.gamma.real, coeffs.gamma.imag
    a = (2 * a1 * b1 - g1 * g1 + g2 * g2) / (2 * b1)
    c = (g1 * g1 + g2 * g2) / (2 * b1)
    a_prime = (a2 * b1 - g1 * g2) / b1
    return MarginalKernel(a=a, a_prime=a_prime, c=c, mode=mode)


def random_coefficients(
    rng: np.random.Generator, max_omega: float | None = None
) -> QuadratureCoefficients:
    """Draw a pseudo-random valid coefficient triple.

    Real parts of alpha and beta land in [0.5, 3], imaginary parts and
    Im(gamma) in [-1.5, 1.5], and Re(gamma) is scaled so the quadratic form
    stays comfortably positive. With `max_omega` set, rejection sampling
    caps the reduced-mode uncertainty sqrt(1/4 + |gamma|^2/(4*Delta^2)).
    """
    while True:
        a1 = rng.uniform(0.5, 3.0)
        b1 = rng.uniform(0.5, 3.0)
        a2 = rng.uniform(-1.5, 1.5)
        b2 = rng.uniform(-1.5, 1.5)
        g1 = rng.uniform(-0.9, 0.9) * math.sqrt(a1 * b1)
        g2 = rng.uniform(-1.5, 1.5)
        d2 = a1 * b1 - g1 * g1
        omega = math.sqrt(0.25 + (g1 * g1 + g2 * g2) / (4 * d2))
        if max_omega is not None and omega > max_omega:
            continue
        return QuadratureCoefficients(
            complex(a1, a2), complex(b1, b2), complex(g1, g2)
        )


def random_symmetric_coefficients(rng: np.random.Generator) -> QuadratureCoefficients:
    """Random triple with alpha = beta (mode-exchange symmetric state)."""
    a1 = rng.uniform(0.6, 2.5)
    a2 = rng.uniform(-1.0, 1.0)
    g1 = rng.uniform(-0.85, 0.85) * a1
    g2 = rng.uniform(-1.0, 1.0)
    al = complex(a1, a2)
    return QuadratureCoefficients(al, al, complex(g1, g2))
