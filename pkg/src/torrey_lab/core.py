"""Physical parameters, unit conventions and the dimensionless reduction.

All frequencies inside the library are angular (rad/s); anything written to
the CLI or to files is reported in Hz via division by 2*pi.  Signed
quantities (gyromagnetic ratio, gradient, bias field) keep their sign
everywhere; magnitudes are taken only where an estimator is defined with
absolute values.

Units used throughout:

==================  =======================
gyromagnetic ratio  rad s^-1 nT^-1
diffusion constant  cm^2 s^-1
lengths             cm
magnetic field      nT
field gradient      nT cm^-1
rates               s^-1
==================  =======================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

TWO_PI = 2.0 * math.pi

# 129Xe gyromagnetic ratio, rad s^-1 nT^-1 (gamma/2pi = -11.777 mHz/nT).
GAMMA_129 = -TWO_PI * 11.777e-3
# gamma_129 / gamma_131
GAMMA_RATIO = -3.373417
# 131Xe gyromagnetic ratio derived from the ratio above.
GAMMA_131 = GAMMA_129 / GAMMA_RATIO
# Default bias field, chosen so |gamma_129 * B0| / 2pi = 257.45 Hz.
BIAS_FIELD_DEFAULT = 257.45 / 11.777e-3


class ConfigError(ValueError):
    """Invalid or inconsistent configuration input."""


class NumericFailure(RuntimeError):
    """A numerical routine produced non-finite intermediate values."""


class RootNotConverged(RuntimeError):
    """Root iteration did not converge within the iteration budget."""


class BranchCollision(RuntimeError):
    """Two tracked eigenvalue branches collided away from a known EP."""


class FitNotConverged(RuntimeError):
    """Nonlinear least-squares fit did not converge."""


class PhaseError(ValueError):
    """Operation requested in the wrong PT phase."""


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ConfigError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class PhysicalConfig:
    """Cell geometry, transport and field parameters of one spin species.

    Defaults correspond to the 129Xe cell used throughout: D = 0.211 cm^2/s,
    L = 0.8 cm, Gamma_2c = 0.306 1/s and |gamma B0|/2pi = 257.45 Hz.
    """

    gamma: float = GAMMA_129
    diffusion: float = 0.211
    cell_length: float = 0.8
    gradient: float = 0.0
    bias_field: float = BIAS_FIELD_DEFAULT
    gamma_collision: float = 0.306
    wall_lambda: float = 0.0

    def __post_init__(self) -> None:
        for name in ("gamma", "diffusion", "cell_length", "gradient",
                     "bias_field", "gamma_collision", "wall_lambda"):
            _require_finite(name, getattr(self, name))
        if self.gamma == 0.0:
            raise ConfigError("gamma must be nonzero")
        if self.diffusion <= 0.0:
            raise ConfigError("diffusion must be positive")
        if self.cell_length <= 0.0:
            raise ConfigError("cell_length must be positive")
        if self.gamma_collision < 0.0:
            raise ConfigError("gamma_collision must be >= 0")
        if self.wall_lambda < 0.0:
            raise ConfigError("wall_lambda must be >= 0")

    def replace(self, **kwargs) -> "PhysicalConfig":
        fields = {
            "gamma": self.gamma,
            "diffusion": self.diffusion,
            "cell_length": self.cell_length,
            "gradient": self.gradient,
            "bias_field": self.bias_field,
            "gamma_collision": self.gamma_collision,
            "wall_lambda": self.wall_lambda,
        }
        fields.update(kwargs)
        return PhysicalConfig(**fields)


@dataclass(frozen=True)
class DimensionlessProblem:
    """Reduction of :class:`PhysicalConfig` to the dimensionless eigenproblem.

    ``g_prime = gamma*G*L^3/(8 D)`` is the normalized gradient,
    ``eigen_scale = 4 D / L^2`` converts a dimensionless eigenvalue q into a
    rate, and ``constant_shift = Gamma_2c + i*gamma*B0`` is the uniform-field
    offset common to all eigenvalues.
    """

    g_prime: float
    eigen_scale: float
    constant_shift: complex

    def __post_init__(self) -> None:
        if not self.eigen_scale > 0.0:
            raise ConfigError("eigen_scale must be positive")


@dataclass(frozen=True)
class ComplexEigenvalue:
    """One eigenvalue in both views: dimensionless q and physical s.

    ``s = constant_shift + q*eigen_scale`` with decay ``Re[s]`` (1/s) and
    angular frequency ``Im[s]`` (rad/s).
    """

    q: complex
    decay: float
    frequency: float


def to_dimensionless(config: PhysicalConfig) -> DimensionlessProblem:
    """Reduce a physical configuration to the dimensionless eigenproblem."""
    L = config.cell_length
    g_prime = config.gamma * config.gradient * L**3 / (8.0 * config.diffusion)
    eigen_scale = 4.0 * config.diffusion / L**2
    shift = complex(config.gamma_collision, config.gamma * config.bias_field)
    return DimensionlessProblem(g_prime=g_prime, eigen_scale=eigen_scale,
                                constant_shift=shift)


def physical_eigenvalue(problem: DimensionlessProblem, q: complex) -> ComplexEigenvalue:
    """Convert a dimensionless eigenvalue q into decay rate and frequency."""
    s = problem.constant_shift + complex(q) * problem.eigen_scale
    return ComplexEigenvalue(q=complex(q), decay=s.real, frequency=s.imag)


_CONFIG_KEYS = ("gamma", "diffusion", "cell_length", "gradient",
                "bias_field", "gamma_collision", "wall_lambda")


def config_from_dict(data: dict) -> PhysicalConfig:
    """Build a PhysicalConfig from a mapping, tolerating a [cell] section."""
    if "cell" in data and isinstance(data["cell"], dict):
        data = data["cell"]
    unknown = set(data) - set(_CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    kwargs = {}
    for key in _CONFIG_KEYS:
        if key in data:
            value = data[key]
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"config key {key} must be a number")
            kwargs[key] = float(value)
    return PhysicalConfig(**kwargs)


def load_config(path: str | Path) -> PhysicalConfig:
    """Load a PhysicalConfig from a TOML file.

    Keys mirror the PhysicalConfig fields (units as in the class docs) and
    may live at top level or under a ``[cell]`` table.
    """
    path = Path(path)
    try:
        with path.open("rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    return config_from_dict(data)
