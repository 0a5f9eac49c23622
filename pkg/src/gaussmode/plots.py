"""Figure rendering for the CLI report paths.

Figures are written straight to files with the Agg backend; the delimited
output on stdout stays the primary machine interface. Vector formats get
date-free metadata so repeated runs stay reproducible.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import entanglement, state

_RC = {
    "figure.dpi": 110,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 9,
}


def save_figure(fig, path: str) -> str:
    """Write the figure; returns the path actually used."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    metadata = None
    suffix = out.suffix.lower()
    if suffix == ".svg":
        metadata = {"Date": None}
    elif suffix == ".pdf":
        metadata = {"CreationDate": None}
    fig.savefig(out, bbox_inches="tight", metadata=metadata)
    plt.close(fig)
    return str(out)


def analysis_figure(coeffs: state.QuadratureCoefficients):
    """Probability density contours next to the reduced-mode spectrum."""
    with plt.rc_context(_RC):
        fig, (ax_den, ax_spec) = plt.subplots(1, 2, figsize=(8.0, 3.4))

        cov = state.covariance(coeffs)
        sigma = 3.5 * float(
            np.sqrt(max(cov.block_a[0, 0], cov.block_b[0, 0]))
        )
        axis = np.linspace(-sigma, sigma, 201)
        q1, q2 = np.meshgrid(axis, axis, indexing="ij")
        density = np.abs(state.wavefunction(coeffs, q1, q2)) ** 2
        cs = ax_den.contourf(q1, q2, density, levels=24, cmap="viridis")
        fig.colorbar(cs, ax=ax_den, shrink=0.9)
        ax_den.set_xlabel("q1")
        ax_den.set_ylabel("q2")
        ax_den.set_title("|psi|^2")

        omega = entanglement.marginal_uncertainty(coeffs)
        spec = entanglement.geometric_spectrum(omega)[:24]
        ax_spec.semilogy(np.arange(spec.size), spec, "o-", ms=4)
        ax_spec.set_xlabel("level")
        ax_spec.set_ylabel("eigenvalue")
        ax_spec.set_title(f"reduced-mode spectrum (Omega = {omega:.4f})")
        fig.tight_layout()
    return fig


def sweep_figure(rows: list[dict], parameter: str):
    """Swept entanglement quantities against the parameter value."""
    values = [row["value"] for row in rows]
    with plt.rc_context(_RC):
        fig, axes = plt.subplots(3, 1, figsize=(6.4, 7.2), sharex=True)
        for ax, key, label in zip(
            axes, ("e_f_nats", "omega", "e_s"),
            ("E_F (nats)", "Omega", "E_s"),
        ):
            ax.plot(values, [row[key] for row in rows], "o-", ms=4)
            ax.set_ylabel(label)
        axes[-1].set_xlabel(parameter)
        fig.tight_layout()
    return fig


def circuit_figure(steps: list[dict]):
    """Entanglement trajectory along the circuit."""
    index = [step["step"] for step in steps]
    kinds = [step["element"]["kind"] for step in steps]
    with plt.rc_context(_RC):
        fig, (ax_ef, ax_om) = plt.subplots(2, 1, figsize=(6.4, 5.2), sharex=True)
        ax_ef.plot(index, [s["report"]["e_f_nats"] for s in steps], "o-", ms=5)
        ax_ef.set_ylabel("E_F (nats)")
        ax_om.plot(index, [s["report"]["omega"] for s in steps], "o-", ms=5)
        ax_om.set_ylabel("Omega")
        ax_om.set_xlabel("circuit step")
        ax_om.set_xticks(index)
        ax_om.set_xticklabels([f"{i}\n{k}" for i, k in zip(index, kinds)])
        fig.tight_layout()
    return fig


def verify_figure(coeffs: state.QuadratureCoefficients, numeric_eigenvalues: np.ndarray):
    """Numeric kernel eigenvalues against the closed-form geometric law."""
    omega = entanglement.marginal_uncertainty(coeffs)
    geometric = entanglement.geometric_spectrum(omega)
    count = min(24, geometric.size, numeric_eigenvalues.size)
    levels = np.arange(count)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6.0, 3.8))
        ax.semilogy(levels, geometric[:count], "o-", ms=5, label="closed form")
        ax.semilogy(levels, numeric_eigenvalues[:count], "x--", ms=6, label="grid oracle")
        ax.set_xlabel("level")
        ax.set_ylabel("eigenvalue")
        ax.legend()
        fig.tight_layout()
    return fig
