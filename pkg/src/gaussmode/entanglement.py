"""Entanglement measures for pure two-mode Gaussian states.

Two independent routes are kept side by side on purpose:

* block determinants of the covariance matrix feed the separability
  indicator (partial-transpose criterion) and the purity identities;
* the reduced-mode uncertainty Omega = sqrt(det block_a) feeds the
  entanglement of formation

      E_F = (Omega + 1/2) ln(Omega + 1/2) - (Omega - 1/2) ln(Omega - 1/2)

  in nats, which is the von Neumann entropy of either reduced mode.

The reduced mode is thermal-like with geometric eigenvalues
p_m = (1 - z) z^m, z = (Omega - 1/2)/(Omega + 1/2), so closed-form entropy,
spectrum sums and purity 1/(2*Omega) can all be cross-checked numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import KernelNotPhysicalError, NotSymmetricError
from .state import CovarianceMatrix, MarginalKernel, QuadratureCoefficients, covariance

# entangled means e_s < -_EPS_SEP
_EPS_SEP = 1e-12
# |alpha - beta| tolerance for mode-exchange symmetry
_EPS_SYM = 1e-10
# below this distance from the pure point, x*ln(x) is taken as 0
_XLOGX_EPS = 1e-14
# hard cap on generated spectrum length
_MAX_TERMS = 10**6

_J = np.array([[0.0, 1.0], [-1.0, 0.0]])


@dataclass(frozen=True)
class DeterminantSet:
    """Block determinants of a two-mode covariance matrix.

    tr_term is tr(A J C J B J C^T J) with J the 2x2 symplectic unit; the
    identity det_v = det_a*det_b + det_c^2 - tr_term holds for any state.
    """

    det_a: float
    det_b: float
    det_c: float
    det_v: float
    tr_term: float


@dataclass(frozen=True)
class SimonReport:
    """Partial-transpose separability indicator.

    e_s = det_v + 1/16 - (det_a + det_b + 2*|det_c|)/4. Negative values
    witness entanglement; for pure states e_s equals det_c exactly.
    """

    e_s: float
    entangled: bool


@dataclass(frozen=True)
class EntanglementReport:
    omega: float
    e_f_nats: float
    heisenberg_residual: float
    spectrum_ratio: float

    @property
    def e_f_bits(self) -> float:
        return self.e_f_nats / math.log(2.0)


class EffectiveHamiltonian(NamedTuple):
    """Quadratic generator rho ~ exp(-kappa*H), H = (D Q^2 + E P^2 + F {Q,P})/2.

    A reduced-mode kernel only fixes the products kappa*omega, E/omega and
    F/omega, so results are reported in the unit-frequency gauge
    omega = sqrt(D*E - F^2) = 1 with the overall scale carried by kappa.
    """

    d: float
    e: float
    f: float
    omega: float
    kappa: float


@dataclass(frozen=True)
class SymmetricStandardForm:
    """Covariance standard form (1/2)*diag-block(n, n; k_q, k_p) of a
    symmetric pure state, with k_p = -k_q and n^2 - k_q^2 = 1."""

    n: float
    k_q: float
    k_p: float
    r_equiv: float


def _xlogx(x: float) -> float:
    if x < _XLOGX_EPS:
        return 0.0
    return x * math.log(x)


def determinants(cov: CovarianceMatrix) -> DeterminantSet:
    """Compute the four block invariants plus the full 4x4 determinant."""
    a, b, c = cov.block_a, cov.block_b, cov.block_c
    tr_term = float(np.trace(a @ _J @ c @ _J @ b @ _J @ c.T @ _J))
    return DeterminantSet(
        det_a=float(np.linalg.det(a)),
        det_b=float(np.linalg.det(b)),
        det_c=float(np.linalg.det(c)),
        det_v=float(np.linalg.det(cov.full())),
        tr_term=tr_term,
    )


def heisenberg_residual(dets: DeterminantSet) -> float:
    """Two-mode uncertainty residual, zero (to round-off) for pure states."""
    return dets.det_v + 1.0 / 16.0 - (dets.det_a + dets.det_b + 2.0 * dets.det_c) / 4.0


def simon_criterion(dets: DeterminantSet) -> SimonReport:
    """Partial-transpose test; flipping the sign of det_c turns the
    uncertainty residual into the separability indicator."""
    e_s = dets.det_v + 1.0 / 16.0 - (
        dets.det_a + dets.det_b + 2.0 * abs(dets.det_c)
    ) / 4.0
    return SimonReport(e_s=e_s, entangled=bool(e_s < -_EPS_SEP))


def marginal_uncertainty(coeffs: QuadratureCoefficients) -> float:
    """Omega = sqrt(1/4 + |gamma|^2 / (4*Delta^2)), the uncertainty of either
    reduced mode; Omega = 1/2 exactly for product states."""
    g = coeffs.gamma
    g_sq = g.real * g.real + g.imag * g.imag
    return math.sqrt(0.25 + g_sq / (4.0 * coeffs.delta_sq))


def spectrum_ratio(omega: float) -> float:
    """Geometric ratio z = (Omega - 1/2)/(Omega + 1/2) of the reduced mode."""
    return (omega - 0.5) / (omega + 0.5)


def entropy_from_uncertainty(omega: float) -> float:
    """Closed-form von Neumann entropy (nats) of a mode with uncertainty Omega."""
    if omega < 0.5 - 1e-12:
        raise ValueError(f"uncertainty must be >= 1/2, got {omega}")
    return _xlogx(omega + 0.5) - _xlogx(omega - 0.5)


def squeezed_eof(r: float) -> float:
    """E_F of the two-mode squeezed state with squeezing parameter r,

        cosh^2(r) ln cosh^2(r) - sinh^2(r) ln sinh^2(r)

    in nats. Even in r and zero at r = 0."""
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r}")
    c2 = math.cosh(r) ** 2
    s2 = math.sinh(r) ** 2
    return _xlogx(c2) - _xlogx(s2)


def entanglement_of_formation(coeffs: QuadratureCoefficients) -> EntanglementReport:
    """Full closed-form report: Omega, E_F in nats, the two-mode uncertainty
    residual of the covariance matrix, and the geometric spectrum ratio."""
    omega = marginal_uncertainty(coeffs)
    e_f = entropy_from_uncertainty(omega)
    residual = heisenberg_residual(determinants(covariance(coeffs)))
    return EntanglementReport(
        omega=omega,
        e_f_nats=e_f,
        heisenberg_residual=residual,
        spectrum_ratio=spectrum_ratio(omega),
    )


def geometric_spectrum(omega: float, cutoff: float = 1e-16) -> np.ndarray:
    """Eigenvalues p_m = (1 - z) z^m of the reduced mode, largest first.

    Terms below `cutoff` are dropped, so the truncated tail is bounded by
    cutoff/(1 - z). Generation is capped at 10^6 terms. A state at (or within
    round-off of) the product point returns the single eigenvalue 1.
    """
    if omega < 0.5 - 1e-12:
        raise ValueError(f"uncertainty must be >= 1/2, got {omega}")
    if not (0.0 < cutoff < 1.0):
        raise ValueError(f"cutoff must lie in (0, 1), got {cutoff}")
    z = spectrum_ratio(omega)
    if z < _XLOGX_EPS:
        return np.array([1.0])
    # largest m with (1 - z) z^m >= cutoff
    m_max = int(math.floor(math.log(cutoff / (1.0 - z)) / math.log(z)))
    m_max = min(max(m_max, 0), _MAX_TERMS - 1)
    return (1.0 - z) * z ** np.arange(m_max + 1, dtype=float)


def kernel_from_hamiltonian(
    d: float, e: float, f: float, kappa: float, mode: int = 1
) -> MarginalKernel:
    """Kernel of exp(-kappa*H)/Z for H = (D Q^2 + E P^2 + F {Q,P})/2.

    Requires D, E > 0 and D*E > F^2 so the spectrum is bound. kappa may be
    math.inf, which yields the pure ground-state kernel (c = 0).
    """
    if d <= 0 or e <= 0 or d * e - f * f <= 0:
        raise ValueError(
            f"need D, E > 0 and D*E > F^2, got D={d}, E={e}, F={f}"
        )
    if kappa <= 0:
        raise ValueError(f"kappa must be positive, got {kappa}")
    w = math.sqrt(d * e - f * f)
    mu_sq = e / (2.0 * w)
    z = 0.0 if math.isinf(kappa) else math.exp(-kappa * w)
    a = (1.0 + z * z) / (2.0 * mu_sq * (1.0 - z * z))
    c = z / (mu_sq * (1.0 - z * z))
    a_prime = f / (2.0 * w * mu_sq)
    return MarginalKernel(a=a, a_prime=a_prime, c=c, mode=mode)


def effective_hamiltonian(kernel: MarginalKernel) -> EffectiveHamiltonian:
    """Invert a reduced-mode kernel to its thermal-like generator.

    Solves c*z^2 - 2*a*z + c = 0 for the Boltzmann-like ratio z, then
    reconstructs (D, E, F) in the unit-frequency gauge. c = 0 is the pure
    case and maps to kappa = inf. Raises KernelNotPhysicalError when the
    kernel violates a > |c| or carries a negative cross term, either of
    which breaks positivity of the operator.
    """
    a, c, a_prime = kernel.a, kernel.c, kernel.a_prime
    if a <= abs(c):
        raise KernelNotPhysicalError(f"kernel requires a > |c|, got a={a}, c={c}")
    if c < 0:
        raise KernelNotPhysicalError(
            f"negative cross term c = {c} gives an operator with negative eigenvalues"
        )
    root = math.sqrt(a * a - c * c)
    mu_sq = 1.0 / (2.0 * root)
    if c == 0.0:
        z = 0.0
        kappa = math.inf
    else:
        z = (a - root) / c
        kappa = -math.log(z)
    e = 2.0 * mu_sq
    f = 2.0 * mu_sq * a_prime
    d = (1.0 + f * f) / e
    return EffectiveHamiltonian(d=d, e=e, f=f, omega=1.0, kappa=kappa)


def symmetric_standard_form(coeffs: QuadratureCoefficients) -> SymmetricStandardForm:
    """Local-unitary standard form of a mode-exchange symmetric pure state.

    The covariance matrix reduces to (1/2)*[[n, 0, k_q, 0], [0, n, 0, k_p],
    [k_q, 0, n, 0], [0, k_p, 0, n]] with n = 2*Omega = sqrt(1 + |gamma|^2 /
    Delta^2); purity forces k_p = -k_q and n^2 - k_q^2 = 1. The sign pairing
    k_q <= 0 <= k_p matches the position-anticorrelated squeezed state, whose
    equivalent squeezing

        r_equiv = ln((n - k_q)*(n + k_p)) / 4 = arccosh(n) / 2

    reproduces the state's own E_F through the squeezed-state formula.
    """
    diff = abs(coeffs.alpha - coeffs.beta)
    if diff > _EPS_SYM:
        raise NotSymmetricError(
            f"|alpha - beta| = {diff} exceeds the symmetry tolerance {_EPS_SYM}"
        )
    n = 2.0 * marginal_uncertainty(coeffs)
    k = math.sqrt(max(n * n - 1.0, 0.0))
    k_q, k_p = -k, k
    r_equiv = math.log((n - k_q) * (n + k_p)) / 4.0
    return SymmetricStandardForm(n=n, k_q=k_q, k_p=k_p, r_equiv=r_equiv)
