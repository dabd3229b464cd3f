"""Synthesis of free-induction-decay signals.

Three generators live here: the closed-form two-mode signal at a probe
position (valid in the broken phase), the general sum of decaying
sinusoids with Gaussian white noise, and the symmetric quadrupole triplet.
There is also the exact-solution route, which expands a uniform initial
polarization on the numerically computed eigenmodes and returns per-mode
amplitudes, decay rates, frequencies and phases at the probe position;
the Monte-Carlo benchmark draws its ground-truth parameters from it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import (ConfigError, PhaseError, PhysicalConfig, TWO_PI,
                   physical_eigenvalue, to_dimensionless)
from .eigensolver import (eigenmode, solve_spectrum, two_mode,
                          uniform_projection)


def wrap_angle(x: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    w = math.remainder(x, TWO_PI)
    if w <= -math.pi:
        w += TWO_PI
    return w


class TimeSeries(NamedTuple):
    t: np.ndarray
    y: np.ndarray


@dataclass(frozen=True)
class FidComponent:
    """One decaying sinusoid A * exp(-t/tau) * sin(omega t + phase)."""
    amplitude: float
    tau: float
    omega: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        if not self.amplitude > 0.0:
            raise ConfigError("component amplitude must be positive")
        if not self.tau > 0.0:
            raise ConfigError("component decay time must be positive")


@dataclass(frozen=True)
class FidModel:
    """Sum-of-decaying-sinusoids signal model plus sampling and noise.

    The duration must cover at least five decay times and the sample rate
    must sit comfortably above Nyquist (2*pi*rate > 4*max omega).
    """
    components: tuple[FidComponent, ...]
    noise_sigma: float = 0.0
    sample_rate: float = 1000.0
    duration: float = 10.0

    def __post_init__(self) -> None:
        if not self.components:
            raise ConfigError("model needs at least one component")
        if self.noise_sigma < 0.0:
            raise ConfigError("noise_sigma must be >= 0")
        if self.sample_rate <= 0.0 or self.duration <= 0.0:
            raise ConfigError("sample_rate and duration must be positive")
        max_tau = max(c.tau for c in self.components)
        if self.duration < 5.0 * max_tau - 1e-12:
            raise ConfigError(
                f"duration {self.duration} shorter than 5*max(tau) = {5*max_tau}")
        max_omega = max(abs(c.omega) for c in self.components)
        if TWO_PI * self.sample_rate <= 4.0 * max_omega:
            raise ConfigError("sample rate too low for the highest frequency")

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        """Noise-free model value on an arbitrary time grid."""
        t = np.asarray(t, dtype=float)
        y = np.zeros_like(t)
        for c in self.components:
            y += c.amplitude * np.exp(-t / c.tau) * np.sin(c.omega * t + c.phase)
        return y


@dataclass(frozen=True)
class ProbeGeometry:
    """Probe-beam position on the z axis (cm) and FID time origin (s)."""
    z_p: float
    t0: float = 0.0


def synthesize(model: FidModel, seed: int) -> TimeSeries:
    """Sample the model with i.i.d. Gaussian noise; identical for equal seeds."""
    n = int(round(model.duration * model.sample_rate))
    t = np.arange(n) / model.sample_rate
    y = model.evaluate(t)
    if model.noise_sigma > 0.0:
        rng = np.random.default_rng(seed)
        y = y + rng.normal(0.0, model.noise_sigma, n)
    return TimeSeries(t=t, y=y)


# ----------------------------------------------------------------------
# two-mode closed form
# ----------------------------------------------------------------------

def _two_mode_probe(config: PhysicalConfig, probe: ProbeGeometry):
    """Common two-mode quantities at one probe position."""
    L = config.cell_length
    if abs(probe.z_p) >= L / 2.0:
        raise ConfigError("probe position must lie inside the cell")
    system = two_mode(config)
    if abs(system.g) <= 1.0:
        raise PhaseError(
            "two-mode closed form needs the broken phase (|g| > 1); "
            "use the eigenmode expansion in the symmetric phase")
    phi = system.phi
    i_sin = math.sin(math.pi * probe.z_p / L)
    # nu_pm(z_p) up to the common mode-normalization factor
    nu_p = complex(1.0 / math.sqrt(2.0) - math.cos(phi) * i_sin,
                   math.sin(phi) * i_sin)
    nu_m = complex(1.0 / math.sqrt(2.0) + math.cos(phi) * i_sin,
                   math.sin(phi) * i_sin)
    split = system.epsilon * math.sqrt(system.g**2 - 1.0)
    gamma2 = config.gamma_collision + system.epsilon
    omega0 = config.gamma * config.bias_field
    return system, phi, nu_p, nu_m, split, gamma2, omega0


def fid_two_mode(config: PhysicalConfig, probe: ProbeGeometry, t_grid,
                 amplitude_scale: float = 1.0) -> np.ndarray:
    """Closed-form broken-phase FID at the probe position.

    Both oscillations share the decay Gamma_2c + epsilon; their frequencies
    are gamma*B0 +- epsilon*sqrt(g^2-1).  The probe time origin t0 advances
    the oscillation phases only (the common decay factor is absorbed in the
    amplitude scale).
    """
    system, phi, nu_p, nu_m, split, gamma2, omega0 = _two_mode_probe(config, probe)
    t = np.asarray(t_grid, dtype=float)
    a_p, beta_p = abs(nu_p), cmath.phase(nu_p)
    a_m, beta_m = abs(nu_m), cmath.phase(nu_m)
    w_p, w_m = omega0 + split, omega0 - split
    pref = amplitude_scale / (math.sqrt(2.0) * math.cos(phi))
    env = np.exp(-gamma2 * t)
    return pref * env * (
        a_p * np.cos(w_p * t + w_p * probe.t0 - (beta_p + phi))
        + a_m * np.cos(w_m * t + w_m * probe.t0 - (beta_m - phi)))


def two_mode_components(config: PhysicalConfig, probe: ProbeGeometry,
                        amplitude_scale: float = 1.0) -> tuple[FidComponent, FidComponent]:
    """The two-mode signal as general sine components (plus then minus mode).

    Pointwise, ``sum(components).evaluate(t)`` equals ``fid_two_mode`` on
    the same grid; frequencies are folded positive with the phase convention
    cos(w t + theta) = sin(|w| t + pi/2 + sign(w) theta).
    """
    system, phi, nu_p, nu_m, split, gamma2, omega0 = _two_mode_probe(config, probe)
    pref = amplitude_scale / (math.sqrt(2.0) * math.cos(phi))
    comps = []
    for nu, sign in ((nu_p, +1.0), (nu_m, -1.0)):
        a, beta = abs(nu), cmath.phase(nu)
        w = omega0 + sign * split
        theta = w * probe.t0 - (beta + sign * phi)
        amp = pref * a
        if amp < 0.0:
            amp, theta = -amp, theta + math.pi
        phase = wrap_angle(0.5 * math.pi + math.copysign(1.0, w) * theta)
        comps.append(FidComponent(amplitude=amp, tau=1.0 / gamma2,
                                  omega=abs(w), phase=phase))
    return tuple(comps)


def amplitude_ratio(g: float, z_p: float, L: float) -> float:
    """Broken-phase amplitude ratio a_plus / a_minus at probe position z_p."""
    if abs(g) <= 1.0:
        raise PhaseError("amplitude ratio requires |g| > 1")
    i_sin = math.sin(math.pi * z_p / L)
    cos_phi = math.sqrt(g * g - 1.0) / g
    num = 1.0 - 2.0 * math.sqrt(2.0) * cos_phi * i_sin + 2.0 * i_sin**2
    den = 1.0 + 2.0 * math.sqrt(2.0) * cos_phi * i_sin + 2.0 * i_sin**2
    return math.sqrt(num / den)


def eta_two_mode(g: float, z_p: float, L: float) -> float:
    """Min/max amplitude ratio eta at the probe (always <= 1)."""
    r = amplitude_ratio(g, z_p, L)
    return min(r, 1.0 / r)


def phase_difference(g: float, z_p: float, L: float, t0: float,
                     omega_split: float, gradient_sign: float) -> float:
    """Initial phase difference of the two broken-phase oscillations.

    ``omega_split`` is omega_plus - omega_minus (rad/s).  The sign follows
    the convention that the difference is theta_plus - theta_minus for
    negative gradients and theta_minus - theta_plus for positive ones;
    the result is wrapped to (-pi, pi].
    """
    if abs(g) <= 1.0:
        raise PhaseError("phase difference requires |g| > 1")
    if gradient_sign == 0.0:
        raise ValueError("gradient_sign must be nonzero")
    phi = math.atan2(1.0 / g, math.sqrt(g * g - 1.0) / g)
    i_sin = math.sin(math.pi * z_p / L)
    nu_p = complex(1.0 / math.sqrt(2.0) - math.cos(phi) * i_sin,
                   math.sin(phi) * i_sin)
    nu_m = complex(1.0 / math.sqrt(2.0) + math.cos(phi) * i_sin,
                   math.sin(phi) * i_sin)
    beta_p, beta_m = cmath.phase(nu_p), cmath.phase(nu_m)
    raw = omega_split * t0 - (beta_p - beta_m) - 2.0 * phi
    sign = 1.0 if gradient_sign < 0.0 else -1.0
    return wrap_angle(sign * raw)


# ----------------------------------------------------------------------
# quadrupole triplet
# ----------------------------------------------------------------------

def quadrupole_triplet(center_omega: float, delta_q: float, amplitudes,
                       taus, *, noise_sigma: float = 0.0,
                       sample_rate: float | None = None,
                       duration: float | None = None) -> FidModel:
    """Symmetric three-line model at center and center +- delta_q, zero phases."""
    if delta_q < 0.0:
        raise ConfigError("quadrupole splitting must be >= 0")
    amplitudes = tuple(float(a) for a in amplitudes)
    taus = tuple(float(tau) for tau in taus)
    if len(amplitudes) != 3 or len(taus) != 3:
        raise ConfigError("triplet needs exactly three amplitudes and taus")
    omegas = (center_omega - delta_q, center_omega, center_omega + delta_q)
    comps = tuple(FidComponent(amplitude=a, tau=tau, omega=w)
                  for a, tau, w in zip(amplitudes, taus, omegas))
    if sample_rate is None:
        sample_rate = 4.2 * max(abs(w) for w in omegas) / TWO_PI
    if duration is None:
        duration = 5.0 * max(taus)
    return FidModel(components=comps, noise_sigma=noise_sigma,
                    sample_rate=sample_rate, duration=duration)


# ----------------------------------------------------------------------
# exact-solution route
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ModeSignal:
    """One eigenmode's contribution A*cos(omega t + theta)*exp(-decay t)."""
    amplitude: float
    decay: float
    frequency: float     # signed, rad/s
    theta: float


def exact_fid_components(config: PhysicalConfig, z_p: float,
                         n_modes: int = 2, *, n_grid: int = 1601,
                         amplitude_scale: float = 1.0) -> list[ModeSignal]:
    """Per-mode FID parameters from the exact eigenmode expansion.

    A uniform initial polarization is projected on the eigenmodes with the
    bilinear inner product; each mode contributes
    |c_k M_k(z_p)| cos(omega_k t + theta_k) exp(-Gamma_k t) to the probe
    signal.  ``amplitude_scale`` multiplies all amplitudes.
    """
    L = config.cell_length
    if abs(z_p) >= L / 2.0:
        raise ConfigError("probe position must lie inside the cell")
    problem = to_dimensionless(config)
    qs = solve_spectrum(problem.g_prime, max(1, n_modes - 1))
    zeta_p = 2.0 * z_p / L
    out = []
    for k in range(n_modes):
        mode = eigenmode(problem.g_prime, qs[k], n_grid=n_grid, index=k)
        c = uniform_projection(mode)
        mp = complex(np.interp(zeta_p, mode.grid, mode.values.real),
                     np.interp(zeta_p, mode.grid, mode.values.imag))
        weight = c * mp
        eig = physical_eigenvalue(problem, qs[k])
        out.append(ModeSignal(amplitude=amplitude_scale * abs(weight),
                              decay=eig.decay,
                              frequency=eig.frequency,
                              theta=-cmath.phase(weight)))
    return out


def mode_signals_to_components(signals, t0: float = 0.0) -> tuple[FidComponent, ...]:
    """Fold signed-frequency cosine modes into positive-frequency sine components."""
    comps = []
    for s in signals:
        theta = s.theta + s.frequency * t0
        phase = wrap_angle(0.5 * math.pi + math.copysign(1.0, s.frequency) * theta)
        comps.append(FidComponent(amplitude=s.amplitude, tau=1.0 / s.decay,
                                  omega=abs(s.frequency), phase=phase))
    return tuple(comps)
