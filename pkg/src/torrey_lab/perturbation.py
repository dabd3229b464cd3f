"""Perturbative eigenvalue of the fundamental mode with wall relaxation.

The unperturbed basis consists of separable modes sin(kappa_p z + delta_p)
per axis, with wave numbers fixed by the Robin wall condition
(lambda/L) K + n.grad K = 0.  A weak non-uniform field B1(r) then shifts
the fundamental eigenvalue in standard (non-Hermitian) perturbation
theory: the first-order correction i*gamma*b00 is purely imaginary, the
second-order sum over excited modes is purely real and raises the decay
rate.  For a linear gradient the second-order sum has the closed form
Gamma_G = gamma^2 G^2 L^4 / (120 D), which is what the T2-vs-gradient law
uses to extract the diffusion constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .core import (ComplexEigenvalue, ConfigError, PhysicalConfig,
                   to_dimensionless)

LAMBDA_MAX = 0.5
DEFAULT_P_MAX = 50
DEFAULT_QUAD_POINTS = 65


def solve_kappa(lam: float, p: int, L: float) -> float:
    """Robin wave number kappa_p, the root on the branch containing p*pi/L.

    Even p gives even modes (tan(kL/2) = lam/(kL)), odd p gives odd modes
    (tan(kL/2) = -kL/lam); both are solved in pole-free polynomial-trig
    form.  lam = 0 returns p*pi/L exactly.
    """
    if lam < 0.0 or lam > LAMBDA_MAX:
        raise ConfigError(f"wall lambda must be in [0, {LAMBDA_MAX}], got {lam}")
    if p < 0:
        raise ValueError("mode index p must be >= 0")
    if L <= 0.0:
        raise ValueError("cell length must be positive")
    if lam == 0.0:
        return p * math.pi / L

    if p % 2 == 0:
        def f(u):  # u = kappa * L
            return u * math.sin(0.5 * u) - lam * math.cos(0.5 * u)
    else:
        def f(u):
            return u * math.cos(0.5 * u) + lam * math.sin(0.5 * u)

    if p == 0:
        lo, hi = 1e-12, math.pi - 1e-12
    else:
        lo, hi = p * math.pi, p * math.pi + 0.5 * math.pi
        # root sits just above p*pi for lam > 0
        if f(lo) == 0.0:
            return p * math.pi / L
        if f(lo) * f(hi) > 0.0:
            lo = p * math.pi - 0.25 * math.pi
    if f(lo) * f(hi) > 0.0:
        raise ConfigError(f"failed to bracket kappa root for p={p}, lambda={lam}")
    u = optimize.brentq(f, lo, hi, xtol=1e-15, rtol=8.9e-16)
    return u / L


@dataclass(frozen=True)
class RobinModeBasis:
    """Per-axis Robin basis: wave numbers, phase shifts and normalizations.

    phi_p(z) = sin(kappa_p z + delta_p) / norm_p on [-L/2, +L/2] with
    delta_p = pi/2 for even p (even modes) and 0 for odd p.
    """
    lam: float
    L: float
    kappa: np.ndarray
    delta: np.ndarray
    norm: np.ndarray

    def evaluate(self, p: int, z: np.ndarray) -> np.ndarray:
        return np.sin(self.kappa[p] * z + self.delta[p]) / self.norm[p]


def robin_basis(lam: float, L: float, p_max: int = DEFAULT_P_MAX) -> RobinModeBasis:
    """Robin mode basis up to index p_max along one axis."""
    kappa = np.array([solve_kappa(lam, p, L) for p in range(p_max + 1)])
    delta = np.array([0.5 * math.pi if p % 2 == 0 else 0.0
                      for p in range(p_max + 1)])
    if lam == 0.0:
        # constant fundamental mode: norm_0^2 = L; excited modes: L/2
        extra = np.zeros_like(kappa)
        extra[0] = 0.5 * L
    else:
        extra = lam * L / (kappa**2 * L**2 + lam**2)
    norm = np.sqrt(0.5 * L + extra)
    return RobinModeBasis(lam=lam, L=L, kappa=kappa, delta=delta, norm=norm)


def wall_relaxation(lam: float, config: PhysicalConfig) -> float:
    """Wall-induced decay rate of the fundamental 3-D mode, D*kappa_000^2.

    For small lambda this approaches 6*lambda*D/L^2.
    """
    kappa0 = solve_kappa(lam, 0, config.cell_length)
    return 3.0 * config.diffusion * kappa0**2


def gradient_coupling(p: int, G: float, L: float) -> float:
    """Linear-gradient matrix element between the fundamental and mode 2p-1.

    Only odd z-modes couple; the element is 2*sqrt(2)*G*L/((2p-1)^2 pi^2).
    """
    if p < 1:
        raise ValueError("coupling index p must be >= 1")
    n = 2 * p - 1
    return 2.0 * math.sqrt(2.0) * G * L / (n * n * math.pi**2)


def gradient_relaxation(config: PhysicalConfig) -> float:
    """Closed-form gradient-induced decay rate gamma^2 G^2 L^4 / (120 D).

    Valid in the small-gradient regime (|g'| up to about 1).
    """
    g, G, L = config.gamma, config.gradient, config.cell_length
    return g * g * G * G * L**4 / (120.0 * config.diffusion)


def gradient_relaxation_mode_sum(config: PhysicalConfig, p_max: int = 100) -> float:
    """Partial mode sum behind the closed-form gradient decay rate."""
    D, L = config.diffusion, config.cell_length
    total = 0.0
    for p in range(1, p_max + 1):
        b = gradient_coupling(p, config.gradient, L)
        kappa = (2 * p - 1) * math.pi / L
        total += config.gamma**2 * b * b / (D * kappa**2)
    return total


def t2_curve(config: PhysicalConfig, gamma2min: float, G_list) -> np.ndarray:
    """T2(G) from 1/T2 = Gamma_2,min + gamma^2 G^2 L^4/(120 D)."""
    if gamma2min <= 0.0:
        raise ConfigError("gamma2min must be positive")
    G = np.asarray(G_list, dtype=float)
    rate = gamma2min + config.gamma**2 * G**2 * config.cell_length**4 \
        / (120.0 * config.diffusion)
    return 1.0 / rate


def fit_t2_curve(G_values, t2_values, gamma: float, L: float,
                 t2_sigma=None) -> tuple[float, float]:
    """Recover (D, Gamma_2,min) from a measured T2(G) curve.

    Weighted linear least squares of 1/T2 on G^2; weights follow from the
    T2 uncertainties when given.
    """
    G = np.asarray(G_values, dtype=float)
    T2 = np.asarray(t2_values, dtype=float)
    y = 1.0 / T2
    if t2_sigma is not None:
        sig = np.asarray(t2_sigma, dtype=float) / T2**2  # sigma of 1/T2
        w = 1.0 / sig
    else:
        w = np.ones_like(y)
    A = np.column_stack([np.ones_like(G), G**2]) * w[:, None]
    coef, *_ = np.linalg.lstsq(A, y * w, rcond=None)
    gamma2min, slope = coef
    if slope <= 0.0:
        raise ConfigError("T2(G) curve has no positive quadratic component")
    D = gamma**2 * L**4 / (120.0 * slope)
    return float(D), float(gamma2min)


@dataclass(frozen=True)
class FieldProfile:
    """Non-uniform field B1 sampled on a 3-D tensor grid (cm, nT)."""
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        expected = (self.x.size, self.y.size, self.z.size)
        if self.values.shape != expected:
            raise ConfigError(
                f"field values shape {self.values.shape} != grid {expected}")


def sample_field(fn, L: float, n: int = DEFAULT_QUAD_POINTS) -> FieldProfile:
    """Sample callable B1(x, y, z) on an n^3 tensor grid over the cell."""
    ax = np.linspace(-L / 2.0, L / 2.0, n)
    X, Y, Z = np.meshgrid(ax, ax, ax, indexing="ij")
    return FieldProfile(x=ax, y=ax, z=ax, values=np.asarray(fn(X, Y, Z), dtype=float))


@dataclass(frozen=True)
class S0Result:
    """Perturbative fundamental eigenvalue and bookkeeping of the mode sum."""
    eigenvalue: ComplexEigenvalue
    first_order: complex
    second_order: float
    tail_estimate: float
    tail_ok: bool


def s0_perturbative(config: PhysicalConfig, field_profile: FieldProfile, *,
                    p_max: int = 10, tail_rtol: float = 1e-6) -> S0Result:
    """Fundamental eigenvalue with a weak non-uniform field, to 2nd order.

    Couplings b_{0,alpha} are tensor-product trapezoid quadratures of
    phi_0 B1 phi_alpha over the cell; the sum runs over all excited modes
    with per-axis index <= p_max.  The last per-axis shell estimates the
    truncation tail, flagged when it exceeds ``tail_rtol`` of the
    second-order term.
    """
    lam = config.wall_lambda
    L = config.cell_length
    D = config.diffusion
    basis = robin_basis(lam, L, p_max)
    kappa2 = basis.kappa**2
    if np.any(np.diff(kappa2) <= 0.0):
        raise ConfigError("degenerate Robin wave numbers in the basis")

    def axis_matrix(axis_grid):
        # rows: mode p weighted by phi_0 and trapezoid weights
        w = np.empty_like(axis_grid)
        d = np.diff(axis_grid)
        w[0] = d[0] / 2.0
        w[-1] = d[-1] / 2.0
        w[1:-1] = (d[:-1] + d[1:]) / 2.0
        phi0 = basis.evaluate(0, axis_grid)
        rows = np.stack([basis.evaluate(p, axis_grid) for p in range(p_max + 1)])
        return rows * (phi0 * w)[None, :]

    Mx = axis_matrix(field_profile.x)
    My = axis_matrix(field_profile.y)
    Mz = axis_matrix(field_profile.z)
    # b[m, n, p] = sum_ijk Mx[m,i] My[n,j] Mz[p,k] B1[i,j,k]
    b = np.einsum("mi,nj,pk,ijk->mnp", Mx, My, Mz, field_profile.values,
                  optimize=True)

    b00 = b[0, 0, 0]
    shell = np.stack(np.meshgrid(*([np.arange(p_max + 1)] * 3),
                                 indexing="ij")).max(axis=0)
    k2 = kappa2[:, None, None] + kappa2[None, :, None] + kappa2[None, None, :]
    denom = D * (k2 - 3.0 * kappa2[0])
    excited = shell > 0
    second_terms = np.zeros_like(b)
    second_terms[excited] = config.gamma**2 * b[excited]**2 / denom[excited]
    second = float(second_terms.sum())
    tail = float(np.abs(second_terms[shell == p_max]).sum())
    tail_ok = tail <= tail_rtol * max(abs(second), 1e-300)

    s0 = (3.0 * D * kappa2[0] + config.gamma_collision
          + 1j * config.gamma * config.bias_field
          + 1j * config.gamma * b00 + second)
    problem = to_dimensionless(config)
    q = (s0 - problem.constant_shift) / problem.eigen_scale
    eig = ComplexEigenvalue(q=q, decay=s0.real, frequency=s0.imag)
    return S0Result(eigenvalue=eig, first_order=1j * config.gamma * b00,
                    second_order=second, tail_estimate=tail, tail_ok=tail_ok)
