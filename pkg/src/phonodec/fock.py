"""Brute-force validator in a truncated number basis.

Integrates the full master equation for the density matrix under the
two-operator thermal channel (c1 = sqrt(gamma1) b, c2 = sqrt(gamma2) b^dag)
and extracts purity and phase-space moments, certifying the Gaussian fast
path.  Dense matrices only; intended for cutoffs up to ~80 and small
squeezing (r <= 1): the basis cost of validating r = 10 directly would be
astronomical, so the closed forms are checked here at small r and trusted
by structure at large r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .gaussian import DEFAULT_CONVENTION, SymplecticConvention


@dataclass(frozen=True)
class TruncatedDensityMatrix:
    """Density matrix in the number basis 0..n_cut, validated on construction."""

    rho: NDArray[np.complex128]
    n_cut: int

    def __post_init__(self):
        rho = np.asarray(self.rho, dtype=complex)
        if rho.shape != (self.n_cut + 1, self.n_cut + 1):
            raise ValueError("rho shape does not match cutoff")
        if abs(np.trace(rho) - 1.0) > 1e-9:
            raise ValueError("trace must be 1 within 1e-9")
        if np.abs(rho - rho.conj().T).max() > 1e-12:
            raise ValueError("rho must be Hermitian")
        if np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min() < -1e-10:
            raise ValueError("rho must be positive semidefinite")
        object.__setattr__(self, "rho", rho)


def squeezed_vacuum_fock(r: float, n_cut: int) -> NDArray[np.float64]:
    """Number-basis amplitudes of the squeezed vacuum S(r)|0>.

    c_{2n} = (-tanh r)^n sqrt((2n)!) / (2^n n! sqrt(cosh r)), odd entries 0,
    via the stable ratio recurrence.  With this sign the first quadrature is
    the squeezed one, i.e. the covariance matches phase psi = pi of the
    Gaussian-state parameterization.  Requires sinh^2 r << n_cut; an
    unusable truncation (norm deficit > 1e-4) is an error.
    """
    if r < 0 or not math.isfinite(r):
        raise ValueError("squeezing must be finite and >= 0")
    if math.sinh(r) ** 2 > 0.1 * n_cut:
        raise ValueError("cutoff too small for this squeezing")
    c = np.zeros(n_cut + 1)
    c[0] = 1.0 / math.sqrt(math.cosh(r))
    th = math.tanh(r)
    for n in range(0, (n_cut - 1) // 2):
        # c_{2n+2} / c_{2n}
        c[2 * n + 2] = -c[2 * n] * th * math.sqrt((2 * n + 1) * (2 * n + 2)) / (
            2 * (n + 1)
        )
    deficit = 1.0 - float(c @ c)
    if deficit > 1e-4:
        raise ValueError(f"cutoff too small: norm deficit {deficit:.3e}")
    return c


@dataclass(frozen=True)
class FockTrajectory:
    """Per-grid-point purity and phase-space moments, plus the final matrix."""

    t: NDArray[np.float64]
    purity: NDArray[np.float64]
    displacement: NDArray[np.float64]  # (n, 2)
    covariance: NDArray[np.float64]  # (n, 2, 2)
    occupation: NDArray[np.float64]
    final_rho: NDArray[np.complex128]


def _moments(rho: NDArray, kappa: float):
    n_levels = rho.shape[0]
    n = np.arange(n_levels, dtype=float)
    sq = np.sqrt(n)
    eb = complex(np.sum(sq[1:] * np.diagonal(rho, -1)))
    eb2 = complex(np.sum(sq[1:-1] * sq[2:] * np.diagonal(rho, -2)))
    en = float(np.real(np.sum(n * np.diagonal(rho))))
    d1 = eb.real / kappa
    d2 = eb.imag / kappa
    k2 = kappa * kappa
    s11 = (2.0 * eb2.real + 2.0 * en + 1.0) / (4.0 * k2) - d1 * d1
    s22 = (2.0 * en + 1.0 - 2.0 * eb2.real) / (4.0 * k2) - d2 * d2
    s12 = eb2.imag / (2.0 * k2) - d1 * d2
    return np.array([d1, d2]), np.array([[s11, s12], [s12, s22]]), en


def lindblad_step_integrate(
    rho0: TruncatedDensityMatrix | NDArray,
    omega: float,
    gamma1: float,
    gamma2: float,
    t_grid,
    n_cut: int | None = None,
    dt: float | None = None,
    convention: SymplecticConvention = DEFAULT_CONVENTION,
) -> FockTrajectory:
    """Integrate d rho/dt = -i w [n, rho] + gamma1 D[b] rho + gamma2 D[b^dag] rho.

    Fixed-step fourth-order integration; the step is chosen from the fastest
    Liouvillian scale (coherences up to w * n_cut, dissipation up to
    ~gamma_T * n_cut) unless given.  Raises on truncation leaks: the initial
    state must keep the population beyond 0.9 n_cut below 1e-8, and the
    top-level population must stay below 1e-6 throughout.
    """
    if isinstance(rho0, TruncatedDensityMatrix):
        rho = np.array(rho0.rho, dtype=complex)
    else:
        rho = np.array(rho0, dtype=complex)
    if n_cut is None:
        n_cut = rho.shape[0] - 1
    if rho.shape != (n_cut + 1, n_cut + 1):
        raise ValueError("rho shape does not match cutoff")
    if gamma1 < 0 or gamma2 < 0:
        raise ValueError("rates must be >= 0")
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size < 1 or np.any(np.diff(t_grid) <= 0):
        raise ValueError("t_grid must be strictly increasing")

    pops0 = np.real(np.diagonal(rho))
    high = pops0[int(math.ceil(0.9 * n_cut)):].sum()
    if high > 1e-8:
        raise ValueError(
            f"initial population {high:.3e} beyond 0.9 n_cut exceeds 1e-8"
        )

    n = np.arange(n_cut + 1, dtype=float)
    sq = np.sqrt(n)
    phase = -1j * omega * (n[:, None] - n[None, :])
    anti_down = 0.5 * (n[:, None] + n[None, :])
    anti_up = anti_down + 1.0
    w_down = np.outer(sq[1:], sq[1:])  # b rho b^dag weights
    gamma_scale = (gamma1 + gamma2) * (n_cut + 1)
    fast = abs(omega) * n_cut + gamma_scale
    if dt is None:
        dt = 0.05 / fast if fast > 0 else (t_grid[-1] - t_grid[0]) / 100.0

    def rhs(r):
        out = phase * r
        if gamma1:
            jump = np.zeros_like(r)
            jump[:-1, :-1] = w_down * r[1:, 1:]
            out += gamma1 * (jump - anti_down * r)
        if gamma2:
            jump = np.zeros_like(r)
            jump[1:, 1:] = w_down * r[:-1, :-1]
            out += gamma2 * (jump - anti_up * r)
        return out

    kappa = convention.kappa
    n_pts = t_grid.size
    purity = np.empty(n_pts)
    displacement = np.empty((n_pts, 2))
    covariance = np.empty((n_pts, 2, 2))
    occupation = np.empty(n_pts)

    def check_leak(time: float):
        top = float(np.real(rho[n_cut, n_cut]))
        if top > 1e-6:
            raise RuntimeError(
                f"cutoff leak: top-level population {top:.3e} at t = {time:.6e}"
            )

    def record(i):
        purity[i] = float(np.vdot(rho, rho).real)
        displacement[i], covariance[i], occupation[i] = _moments(rho, kappa)

    check_leak(t_grid[0])
    record(0)
    for i in range(1, n_pts):
        span = t_grid[i] - t_grid[i - 1]
        steps = max(1, int(math.ceil(span / dt)))
        h = span / steps
        for j in range(steps):
            k1 = rhs(rho)
            k2 = rhs(rho + 0.5 * h * k1)
            k3 = rhs(rho + 0.5 * h * k2)
            k4 = rhs(rho + h * k3)
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            rho = 0.5 * (rho + rho.conj().T)
            check_leak(t_grid[i - 1] + (j + 1) * h)
        record(i)

    return FockTrajectory(
        t=t_grid,
        purity=purity,
        displacement=displacement,
        covariance=covariance,
        occupation=occupation,
        final_rho=rho,
    )


def third_order_quadrature_moments(
    rho: NDArray, convention: SymplecticConvention = DEFAULT_CONVENTION
) -> float:
    """Largest symmetrized third-order central quadrature moment.

    Zero for any Gaussian state; used to certify that the master-equation
    evolution preserves Gaussianity.
    """
    dim = rho.shape[0]
    sq = np.sqrt(np.arange(1, dim))
    b = np.diag(sq, k=1).astype(complex)
    x1 = (b + b.conj().T) / (2.0 * convention.kappa)
    x2 = 1j * (b.conj().T - b) / (2.0 * convention.kappa)
    d = [float(np.trace(x @ rho).real) for x in (x1, x2)]
    xc = [x1 - d[0] * np.eye(dim), x2 - d[1] * np.eye(dim)]
    worst = 0.0
    for i in range(2):
        for j in range(i, 2):
            for k in range(j, 2):
                acc = 0.0 + 0.0j
                perms = ((i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i))
                for p in perms:
                    acc += np.trace(xc[p[0]] @ xc[p[1]] @ xc[p[2]] @ rho)
                worst = max(worst, abs(acc) / 6.0)
    return worst
