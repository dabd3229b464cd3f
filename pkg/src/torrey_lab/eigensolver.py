"""Exact eigenvalues and eigenmodes of the dimensionless gradient eigenproblem.

The problem solved here is

    M''(zeta) - i g' zeta M(zeta) = -q M(zeta),   M'(+-1) = 0,

for the dimensionless eigenvalues q_0, q_1, ... as functions of the
normalized gradient g'.  Eigenvalues are found by complex shooting: the
initial-value problem is integrated from zeta = -1 with M(-1) = 1,
M'(-1) = 0 by a fixed-step RK4 scheme, and zeros of the boundary mismatch
M'(+1) in q are located by Newton iteration with continuation in g'.
Shooting avoids the Airy-function representation, which is singular at
g' = 0; an Airy evaluation is kept only as a cross-check in the test suite.

Eigenvalue ordering: ascending Re[q], ties broken by ascending Im[q], so
q_0 is the eigenvalue with the smallest real part and negative imaginary
part in the broken phase.

Pairs (q_{2p-2}, q_{2p-1}) merge at exceptional points g'_p and turn into
complex-conjugate pairs above.  The EP positions are analytic,
g'_p = (27*sqrt(3)/32) j_p^2 with j_p the p-th positive zero of the Bessel
function of order -2/3, which this module evaluates locally (power series
plus large-argument asymptotics).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize

from .core import (BranchCollision, NumericFailure, PhaseError,
                   PhysicalConfig, RootNotConverged, to_dimensionless)

DEFAULT_N_STEPS = 2000
DEFAULT_N_GRID = 801
DEFAULT_K_MAX = 3
NEWTON_TOL = 1e-10
# g'_p = EP_PREFACTOR * j_p^2
EP_PREFACTOR = 27.0 * math.sqrt(3.0) / 32.0
# treat |g' - g'_p| below this as sitting exactly on the EP
EP_DEGENERATE_TOL = 1e-6
# continuation step control
_BASE_STEP = 0.1
_EP_SLOW_RANGE = 0.2
_EP_JUMP = 0.01


# ----------------------------------------------------------------------
# shooting integrator
# ----------------------------------------------------------------------

def _shoot(qs, g_prime, n_steps=DEFAULT_N_STEPS, record_every=0):
    """Integrate the shooting IVP for a batch of trial eigenvalues.

    Returns ``(mismatch, scale)`` where ``mismatch = M'(+1)`` and ``scale``
    is the running maximum of |M| along each trajectory; with
    ``record_every = r`` also returns the M samples at every r-th step.
    """
    qs = np.atleast_1d(np.asarray(qs, dtype=complex))
    h = 2.0 / n_steps
    zeta = -1.0 + h * np.arange(n_steps + 1)
    igz = 1j * g_prime * zeta
    igz_mid = 1j * g_prime * (zeta[:-1] + 0.5 * h)

    M = np.ones_like(qs)
    P = np.zeros_like(qs)
    scale = np.ones(qs.shape)
    traj = None
    if record_every:
        n_rec = n_steps // record_every + 1
        traj = np.empty((n_rec,) + qs.shape, dtype=complex)
        traj[0] = M
        ri = 1

    h2 = 0.5 * h
    h6 = h / 6.0
    for i in range(n_steps):
        c0 = igz[i] - qs
        cm = igz_mid[i] - qs
        c1 = igz[i + 1] - qs
        k1p = c0 * M
        k2m = P + h2 * k1p
        k2p = cm * (M + h2 * P)
        k3m = P + h2 * k2p
        k3p = cm * (M + h2 * k2m)
        k4m = P + h * k3p
        k4p = c1 * (M + h * k3m)
        M = M + h6 * (P + 2.0 * k2m + 2.0 * k3m + k4m)
        P = P + h6 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        np.maximum(scale, np.abs(M), out=scale)
        if record_every and (i + 1) % record_every == 0:
            traj[ri] = M
            ri += 1

    if not (np.all(np.isfinite(M)) and np.all(np.isfinite(P))):
        raise NumericFailure(
            f"shooting integration overflowed at g'={g_prime!r}; "
            "reduce |q| range or increase n_steps")
    if record_every:
        return P, scale, traj
    return P, scale


def boundary_mismatch(q: complex, g_prime: float,
                      n_steps: int = DEFAULT_N_STEPS) -> complex:
    """Boundary mismatch M'(+1) of the shooting solution; zero at eigenvalues."""
    f, _ = _shoot(q, g_prime, n_steps)
    return complex(f[0])


def _newton(seeds, g_prime, *, tol=NEWTON_TOL, n_steps=DEFAULT_N_STEPS,
            max_iter=60):
    """Batched complex Newton on the boundary mismatch.

    The q-derivative is taken by central differences with step
    1e-7 * max(1, |q|); convergence requires |mismatch| < tol relative to
    the trajectory scale.
    """
    q = np.atleast_1d(np.asarray(seeds, dtype=complex)).copy()
    n = q.size
    done = np.zeros(n, dtype=bool)
    for _ in range(max_iter):
        hstep = 1e-7 * np.maximum(1.0, np.abs(q))
        batch = np.concatenate([q, q + hstep, q - hstep])
        f, scale = _shoot(batch, g_prime, n_steps)
        f0, fp, fm = f[:n], f[n:2 * n], f[2 * n:]
        done |= np.abs(f0) <= tol * scale[:n]
        if np.all(done):
            return q
        deriv = (fp - fm) / (2.0 * hstep)
        bad = ~done & (deriv == 0)
        if np.any(bad):
            raise RootNotConverged(
                f"vanishing mismatch derivative at g'={g_prime!r}, q={q[bad]!r}")
        dq = np.where(done, 0.0, f0 / deriv)
        q = q - dq
        # machine-precision stagnation counts as converged
        done |= np.abs(dq) <= 1e-14 * np.maximum(1.0, np.abs(q))
    raise RootNotConverged(
        f"Newton did not converge at g'={g_prime!r} for seeds {seeds!r}")


# ----------------------------------------------------------------------
# Bessel J_{-2/3} and EP positions
# ----------------------------------------------------------------------

_NU = -2.0 / 3.0


def _bessel_j_series(nu: float, x: float) -> float:
    """Power series for J_nu(x); accurate for moderate x."""
    x2 = 0.25 * x * x
    term = (0.5 * x) ** nu / math.gamma(nu + 1.0)
    total = term
    for m in range(1, 80):
        term *= -x2 / (m * (m + nu))
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def _bessel_j_asymptotic(nu: float, x: float) -> float:
    """Large-argument (Hankel) asymptotic expansion of J_nu(x)."""
    mu = 4.0 * nu * nu
    chi = x - (0.5 * nu + 0.25) * math.pi
    # P = sum (-1)^m a_{2m} / x^{2m}, Q = sum (-1)^m a_{2m+1} / x^{2m+1}
    p_sum, q_sum = 1.0, 0.0
    ak = 1.0
    for k in range(1, 14):
        ak *= (mu - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        m, r = divmod(k, 2)
        if r == 1:
            q_sum += ak * (-1.0) ** m
        else:
            p_sum += ak * (-1.0) ** m
    return math.sqrt(2.0 / (math.pi * x)) * (p_sum * math.cos(chi)
                                             - q_sum * math.sin(chi))


def bessel_j23(x: float) -> float:
    """J_{-2/3}(x) for x > 0, series below x = 12 and asymptotics above."""
    if x <= 0.0:
        raise ValueError("bessel_j23 requires x > 0")
    if x <= 12.0:
        return _bessel_j_series(_NU, x)
    return _bessel_j_asymptotic(_NU, x)


@lru_cache(maxsize=None)
def bessel_j23_zero(p: int) -> float:
    """p-th positive zero of J_{-2/3}, by bracketing a McMahon estimate."""
    if p < 1:
        raise ValueError("zero index p must be >= 1")
    if p > 10:
        raise ValueError("zeros supported for p <= 10")
    # McMahon: j_p ~ beta - (mu-1)/(8 beta), beta = (p + nu/2 - 1/4) pi
    beta = (p + 0.5 * _NU - 0.25) * math.pi
    mu = 4.0 * _NU * _NU
    guess = beta - (mu - 1.0) / (8.0 * beta)
    half = 0.6
    lo = max(guess - half, 1e-6)
    hi = guess + half
    flo, fhi = bessel_j23(lo), bessel_j23(hi)
    for _ in range(8):
        if flo * fhi < 0.0:
            break
        lo = max(lo - 0.3, 1e-6)
        hi += 0.3
        flo, fhi = bessel_j23(lo), bessel_j23(hi)
    else:
        raise RootNotConverged(f"could not bracket Bessel zero p={p}")
    return optimize.brentq(bessel_j23, lo, hi, xtol=1e-14, rtol=1e-15)


def ep_location(p: int) -> tuple[float, float]:
    """Exceptional point p: returns (g'_p, q_p) with q_p = g'_p / sqrt(3)."""
    if p < 1:
        raise ValueError("EP index p must be >= 1")
    jp = bessel_j23_zero(p)
    g_p = EP_PREFACTOR * jp * jp
    return g_p, g_p / math.sqrt(3.0)


def ep_gradient(config: PhysicalConfig, p: int = 1) -> float:
    """|G| at which the p-th EP occurs for this configuration, nT/cm."""
    g_p, _ = ep_location(p)
    L = config.cell_length
    return 8.0 * config.diffusion * g_p / (abs(config.gamma) * L**3)


# ----------------------------------------------------------------------
# spectrum continuation
# ----------------------------------------------------------------------

@dataclass
class _Pair:
    """Continuation state of one eigenvalue pair (modes 2p-2 and 2p-1)."""
    index: int            # 1-based pair index
    g_ep: float
    q_ep: float
    broken: bool = False
    q_lo: complex = 0j    # broken: the Im < 0 member; else smaller real root
    q_hi: complex = 0j    # unused when broken (partner is the conjugate)
    degenerate: bool = False

    def eigenvalues(self):
        if self.degenerate:
            return [complex(self.q_ep), complex(self.q_ep)]
        if self.broken:
            return [self.q_lo, self.q_lo.conjugate()]
        return [self.q_lo, self.q_hi]


def _snap_real(q: complex) -> complex:
    if abs(q.imag) < 1e-9 * max(1.0, abs(q.real)):
        return complex(q.real, 0.0)
    return q


def _newton_pairs(pairs, g, n_steps, tol):
    """One Newton polish of all tracked roots at gradient g."""
    seeds, owners = [], []
    for pr in pairs:
        if pr.degenerate:
            continue
        if pr.broken:
            seeds.append(pr.q_lo)
            owners.append((pr, "lo"))
        else:
            seeds.append(pr.q_lo)
            owners.append((pr, "lo"))
            seeds.append(pr.q_hi)
            owners.append((pr, "hi"))
    if not seeds:
        return
    roots = _newton(seeds, g, tol=tol, n_steps=n_steps)
    for (pr, slot), root in zip(owners, roots):
        if pr.broken:
            if root.imag > 0:
                root = root.conjugate()
            pr.q_lo = root
        else:
            root = _snap_real(root)
            if slot == "lo":
                pr.q_lo = root
            else:
                pr.q_hi = root
    for pr in pairs:
        if pr.broken or pr.degenerate:
            continue
        if pr.q_lo.real > pr.q_hi.real:
            pr.q_lo, pr.q_hi = pr.q_hi, pr.q_lo
        gap = abs(pr.q_lo - pr.q_hi)
        if gap < 1e-6 * max(1.0, abs(pr.q_hi)) and abs(g - pr.g_ep) > 1e-3:
            raise BranchCollision(
                f"pair {pr.index} roots collided at g'={g!r} away from its EP")


def _jump_over_ep(pair, g_after, n_steps, tol):
    """Reseed a pair just past its EP on both broken branches."""
    dd = g_after - pair.g_ep
    if dd <= 0:
        raise ValueError("jump target must lie above the EP")
    # splitting opens as ~2.34 sqrt(g'-g'_p); seed half that below the axis
    seed = complex(pair.q_ep, -1.17 * math.sqrt(dd))
    root = _newton([seed], g_after, tol=tol, n_steps=n_steps)[0]
    if root.imag > 0:
        root = root.conjugate()
    if abs(root.imag) < 0.2 * 1.17 * math.sqrt(dd):
        raise BranchCollision(
            f"pair {pair.index} failed to split past its EP at g'={g_after!r}")
    pair.broken = True
    pair.q_lo = root
    pair.q_hi = 0j


def _march(targets, n_pairs, n_steps, tol):
    """Continue all pairs from g'=0 through the sorted positive targets.

    Yields (g_target, snapshot) with snapshot a list of per-pair states.
    """
    pairs = []
    for p in range(1, n_pairs + 1):
        g_ep, q_ep = ep_location(p)
        k_lo, k_hi = 2 * p - 2, 2 * p - 1
        pairs.append(_Pair(index=p, g_ep=g_ep, q_ep=q_ep,
                           q_lo=complex((k_lo * math.pi / 2.0) ** 2),
                           q_hi=complex((k_hi * math.pi / 2.0) ** 2)))
    g = 0.0
    for target in targets:
        while g < target - 1e-15:
            # exact-EP request: park the pair on its analytic double root
            hit = [pr for pr in pairs
                   if not pr.broken and abs(target - pr.g_ep) < EP_DEGENERATE_TOL]
            if hit and target - g <= _EP_JUMP:
                for pr in hit:
                    pr.degenerate = True
                others = [pr for pr in pairs if not pr.degenerate]
                if others:
                    _advance_plain(others, target, n_steps, tol)
                g = target
                break
            dg = _BASE_STEP
            for pr in pairs:
                if pr.degenerate:
                    continue
                d = pr.g_ep - g
                if not pr.broken and 0.0 < d < _EP_SLOW_RANGE:
                    dg = min(dg, max(0.5 * d, 1e-7))
                if pr.broken and 0.0 < g - pr.g_ep < _EP_SLOW_RANGE:
                    dg = min(dg, max(g - pr.g_ep, 5e-3))
            # cross an EP by jumping from just below to just above it
            jumper = None
            for pr in pairs:
                if (not pr.broken and not pr.degenerate
                        and g >= pr.g_ep - _EP_JUMP
                        and target > pr.g_ep + EP_DEGENERATE_TOL):
                    jumper = pr
                    break
            if jumper is not None:
                g_next = min(max(g, jumper.g_ep) + _EP_JUMP, target)
                _jump_over_ep(jumper, g_next, n_steps, tol)
                rest = [pr for pr in pairs if pr is not jumper and not pr.degenerate]
                if rest:
                    _newton_pairs(rest, g_next, n_steps, tol)
                g = g_next
                continue
            g_next = min(g + dg, target)
            live = [pr for pr in pairs if not pr.degenerate]
            _newton_pairs(live, g_next, n_steps, tol)
            g = g_next
        yield target, [_Pair(**vars(pr)) for pr in pairs]
        for pr in pairs:
            pr.degenerate = False


def _advance_plain(pairs, g, n_steps, tol):
    _newton_pairs(pairs, g, n_steps, tol)


def _assemble(snapshot, k_max, conjugate):
    qs = []
    degenerate = []
    for pr in snapshot:
        qs.extend(pr.eigenvalues())
        if pr.degenerate:
            degenerate.append(pr.index)
    qs = np.asarray(qs, dtype=complex)
    if conjugate:
        qs = np.conj(qs)
    order = np.lexsort((qs.imag, qs.real))
    qs = qs[order][:k_max + 1]
    return qs, tuple(degenerate)


def classify_phase(eigenvalues) -> str:
    """Label a sorted spectrum symmetric/broken from Im[q_0]."""
    q0 = complex(eigenvalues[0])
    if abs(q0.imag) > 1e-7 * max(1.0, abs(q0.real)):
        return "broken"
    return "symmetric"


@dataclass(frozen=True)
class SpectrumResult:
    g_prime: float
    eigenvalues: np.ndarray
    phase: str
    degenerate_pairs: tuple[int, ...]


@dataclass(frozen=True)
class SpectrumSweep:
    """Eigenvalues q_0..q_kmax on an ordered grid of g' values."""
    g_values: np.ndarray
    eigenvalues: np.ndarray          # shape (len(g_values), k_max + 1)
    phase_labels: tuple[str, ...]


def solve_spectrum(g_prime: float, k_max: int = DEFAULT_K_MAX, *,
                   n_steps: int = DEFAULT_N_STEPS, tol: float = NEWTON_TOL,
                   return_info: bool = False):
    """Eigenvalues q_0 .. q_kmax at one gradient, sorted by (Re, Im).

    Roots are continued from the g'=0 seeds q_k = (k pi/2)^2; an input
    within ``EP_DEGENERATE_TOL`` of an exceptional point returns the doubly
    counted EP eigenvalue, flagged in the ``return_info`` result.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if not math.isfinite(g_prime):
        raise ValueError("g_prime must be finite")
    n_pairs = (k_max + 2) // 2
    gp = abs(g_prime)
    if gp == 0.0:
        qs = np.array([complex((k * math.pi / 2.0) ** 2)
                       for k in range(k_max + 1)])
        result = SpectrumResult(g_prime, qs, "symmetric", ())
    else:
        (_, snapshot), = _march([gp], n_pairs, n_steps, tol)
        qs, degenerate = _assemble(snapshot, k_max, conjugate=g_prime < 0)
        result = SpectrumResult(g_prime, qs, classify_phase(qs), degenerate)
    if return_info:
        return result
    return result.eigenvalues


def spectrum_sweep(g_values, k_max: int = DEFAULT_K_MAX, *,
                   n_steps: int = DEFAULT_N_STEPS,
                   tol: float = NEWTON_TOL) -> SpectrumSweep:
    """Spectrum on a grid of g' values with a single continuation pass.

    The g' values may have either sign; the march runs over |g'| in
    ascending order and results are reported in the input order.
    """
    g_values = np.asarray(g_values, dtype=float)
    if g_values.ndim != 1 or g_values.size == 0:
        raise ValueError("g_values must be a non-empty 1-D sequence")
    n_pairs = (k_max + 2) // 2
    mags = np.abs(g_values)
    order = np.argsort(mags, kind="stable")
    targets, owners = [], {}
    for idx in order:
        m = mags[idx]
        owners.setdefault(m, []).append(idx)
        if m > 0 and (not targets or m > targets[-1]):
            targets.append(m)

    eigen = np.empty((g_values.size, k_max + 1), dtype=complex)
    if 0.0 in owners:
        qs0 = np.array([complex((k * math.pi / 2.0) ** 2)
                        for k in range(k_max + 1)])
        for idx in owners[0.0]:
            eigen[idx] = qs0
    for g_reached, snapshot in _march(targets, n_pairs, n_steps, tol):
        for idx in owners[g_reached]:
            qs, _ = _assemble(snapshot, k_max, conjugate=g_values[idx] < 0)
            eigen[idx] = qs
    labels = tuple(classify_phase(eigen[i]) for i in range(g_values.size))
    return SpectrumSweep(g_values=g_values, eigenvalues=eigen,
                         phase_labels=labels)


# ----------------------------------------------------------------------
# eigenmodes and PT-symmetry metrics
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class EigenMode:
    """Sampled eigenmode on a uniform zeta grid, normalized to max |M| = 1."""
    grid: np.ndarray
    values: np.ndarray
    index: int
    q: complex


def eigenmode(g_prime: float, q: complex, n_grid: int = DEFAULT_N_GRID, *,
              index: int = -1, n_steps: int = DEFAULT_N_STEPS) -> EigenMode:
    """Shooting trajectory of a converged eigenvalue, sampled on n_grid points."""
    if n_grid < 3:
        raise ValueError("n_grid must be >= 3")
    sub = max(1, int(math.ceil(n_steps / (n_grid - 1))))
    total = sub * (n_grid - 1)
    _, _, traj = _shoot(q, g_prime, n_steps=total, record_every=sub)
    values = traj[:, 0]
    values = values / np.max(np.abs(values))
    grid = np.linspace(-1.0, 1.0, n_grid)
    return EigenMode(grid=grid, values=values, index=index, q=complex(q))


def uniform_projection(mode: EigenMode) -> complex:
    """Expansion coefficient of the uniform state on this mode.

    The gradient operator is complex symmetric under the bilinear (no
    conjugation) inner product, so c = <M, 1> / <M, M> with plain integrals.
    """
    num = np.trapezoid(mode.values, mode.grid)
    den = np.trapezoid(mode.values * mode.values, mode.grid)
    return complex(num / den)


def _pt_gauge(values: np.ndarray) -> np.ndarray:
    """Rotate a shooting mode into its PT gauge.

    For shooting-normalized modes the PT image satisfies
    M*(-zeta) = M*(+1) M(zeta), so the PT-symmetric representative is
    exp(i psi) M with psi = -arg(M(+1)) / 2 (up to an overall sign).
    """
    end = values[-1]
    if end == 0:
        return values
    psi = -0.5 * cmath.phase(end)
    return values * cmath.exp(1j * psi)


def pt_symmetry_metrics(m0: EigenMode, m1: EigenMode) -> tuple[float, float, float]:
    """Asymmetry integrals (eps1(M0), eps1(M1), eps12) on a shared grid.

    eps1(M) compares M with its parity-conjugate image; eps12 compares M0
    with the image of M1.  Integrals are trapezoidal; each mode is first
    rotated to its PT gauge, and the leftover sign freedom in eps12 is
    resolved by taking the smaller of the two sign choices.
    """
    g0, g1 = m0.grid, m1.grid
    if g0.shape != g1.shape or not np.allclose(g0, g1, atol=1e-12):
        raise ValueError("modes must share one grid")
    if not np.allclose(g0, -g0[::-1], atol=1e-12):
        raise ValueError("grid must be symmetric about zeta = 0")

    w0 = _pt_gauge(m0.values)
    w1 = _pt_gauge(m1.values)
    norm0 = np.trapezoid(np.abs(w0), g0)
    norm1 = np.trapezoid(np.abs(w1), g0)
    eps1_m0 = np.trapezoid(np.abs(w0 - np.conj(w0[::-1])), g0) / norm0
    eps1_m1 = np.trapezoid(np.abs(w1 - np.conj(w1[::-1])), g0) / norm1
    image = np.conj(w1[::-1])
    eps12 = min(np.trapezoid(np.abs(w0 - image), g0),
                np.trapezoid(np.abs(w0 + image), g0)) / norm0
    return float(eps1_m0), float(eps1_m1), float(eps12)


# ----------------------------------------------------------------------
# two-mode reduction and splitting law
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class TwoModeSystem:
    """Reduced two-mode model: splitting scale epsilon and coupling g.

    Eigenvalues xi_pm = +-epsilon*sqrt(1-g^2) are real for |g| < 1 and
    purely imaginary for |g| > 1; the mixing angle phi is defined only in
    the broken phase.
    """
    epsilon: float
    g: float
    xi_plus: complex
    xi_minus: complex

    @property
    def phi(self) -> float:
        if abs(self.g) <= 1.0:
            raise PhaseError("mixing angle is defined only for |g| > 1")
        sin_phi = 1.0 / self.g
        cos_phi = math.sqrt(self.g * self.g - 1.0) / self.g
        return math.atan2(sin_phi, cos_phi)


TWO_MODE_COUPLING = 32.0 * math.sqrt(2.0) / math.pi**4
TWO_MODE_EP_GPRIME = math.pi**4 / (32.0 * math.sqrt(2.0))


def two_mode(config: PhysicalConfig) -> TwoModeSystem:
    """Two-mode reduction of a configuration (wall relaxation neglected)."""
    problem = to_dimensionless(config)
    L = config.cell_length
    epsilon = config.diffusion * math.pi**2 / (2.0 * L * L)
    g = TWO_MODE_COUPLING * problem.g_prime
    xi_plus = epsilon * cmath.sqrt(1.0 - g * g)
    return TwoModeSystem(epsilon=epsilon, g=g, xi_plus=xi_plus,
                         xi_minus=-xi_plus)


@dataclass(frozen=True)
class SplittingResult:
    delta: float
    phase: str


def frequency_splitting(g_prime: float, *, n_steps: int = DEFAULT_N_STEPS,
                        tol: float = NEWTON_TOL) -> SplittingResult:
    """Dimensionless frequency splitting Im[q_1] - Im[q_0] of the first pair.

    Symmetric-phase input returns delta = 0 with the phase flag set.
    """
    result = solve_spectrum(g_prime, 1, n_steps=n_steps, tol=tol,
                            return_info=True)
    if result.phase == "symmetric":
        return SplittingResult(0.0, "symmetric")
    q0, q1 = result.eigenvalues
    return SplittingResult(float(q1.imag - q0.imag), "broken")
