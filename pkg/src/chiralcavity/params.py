"""Model parameters, unit conventions, and derived rate constants.

Every frequency-like quantity is stored internally as an angular frequency
in rad/s.  Configuration files and CLI flags quote ordinary frequencies
nu = omega/(2*pi) in Hz; the conversion happens exactly once, at the I/O
boundary (see `config`).  The drive is configured as the photon flux
eps_d**2/(2*pi) in Hz and stored as the real amplitude eps_d >= 0 in
(rad/s)**0.5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import ValidationError

TWO_PI = 2.0 * math.pi


def angular_from_hz(nu_hz: float) -> float:
    """Convert an ordinary frequency in Hz to an angular frequency in rad/s."""
    return TWO_PI * nu_hz


def hz_from_angular(omega: float) -> float:
    """Convert an angular frequency in rad/s to an ordinary frequency in Hz."""
    return omega / TWO_PI


def drive_amp_from_flux_hz(flux_hz: float) -> float:
    """Convert a drive photon flux eps_d**2/(2*pi) in Hz to the amplitude eps_d."""
    if flux_hz < 0.0:
        raise ValidationError("drive_flux_hz must be nonnegative")
    return math.sqrt(TWO_PI * flux_hz)


def flux_hz_from_drive_amp(drive_amp: float) -> float:
    """Inverse of :func:`drive_amp_from_flux_hz`."""
    return drive_amp * drive_amp / TWO_PI


@dataclass(frozen=True)
class ModelParams:
    """Full parameter set of the driven-cavity chiral-ensemble model.

    Attributes
    ----------
    g_a:
        Single-molecule cavity coupling (rad/s, real >= 0).
    omega31_rabi, omega32_rabi:
        Rabi couplings of the two classical fields (rad/s, real >= 0).
    phi:
        Overall loop phase in radians.  Left-handed molecules carry phi,
        right-handed molecules carry phi + pi.
    delta_a, delta_21, delta_31:
        Signed detunings (rad/s) of the cavity, the two-photon, and the
        one-photon transitions.
    kappa_a:
        Total cavity decay rate (rad/s, > 0).
    gamma_A, gamma_B:
        Decay rates of the two collective molecular modes (rad/s, > 0).
    drive_amp:
        Drive amplitude eps_d in (rad/s)**0.5, real >= 0.
    n_total:
        Total number of molecules N (stored as a real number).
    eta:
        Enantiomeric excess (N_L - N_R)/N in [-1, 1].
    """

    g_a: float
    omega31_rabi: float
    omega32_rabi: float
    phi: float
    delta_a: float
    delta_21: float
    delta_31: float
    kappa_a: float
    gamma_A: float
    gamma_B: float
    drive_amp: float
    n_total: float
    eta: float

    def replace(self, **changes) -> "ModelParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class RateConstants:
    """Complex damping constants K_a = kappa_a + i*delta_a etc."""

    K_a: complex
    K_A: complex
    K_B: complex


def validate_params(p: ModelParams) -> ModelParams:
    """Return `p` unchanged if every invariant holds.

    Raises
    ------
    ValidationError
        Naming the first violated invariant.
    """
    for name in (
        "g_a", "omega31_rabi", "omega32_rabi", "phi", "delta_a", "delta_21",
        "delta_31", "kappa_a", "gamma_A", "gamma_B", "drive_amp", "n_total",
        "eta",
    ):
        if not math.isfinite(getattr(p, name)):
            raise ValidationError(f"{name} must be finite")
    if p.kappa_a <= 0.0:
        raise ValidationError("kappa_a must be positive")
    if p.gamma_A <= 0.0:
        raise ValidationError("gamma_A must be positive")
    if p.gamma_B <= 0.0:
        raise ValidationError("gamma_B must be positive")
    if p.g_a < 0.0:
        raise ValidationError("g_a must be nonnegative")
    if p.omega31_rabi < 0.0:
        raise ValidationError("omega31_rabi must be nonnegative")
    if p.omega32_rabi < 0.0:
        raise ValidationError("omega32_rabi must be nonnegative")
    if p.drive_amp < 0.0:
        raise ValidationError("drive_amp must be nonnegative")
    # N = 0 is the legitimate empty-cavity limit; only negative counts are bad.
    if p.n_total < 0.0:
        raise ValidationError("n_total must be nonnegative")
    if not -1.0 <= p.eta <= 1.0:
        raise ValidationError("eta out of range [-1, 1]")
    return p


def species_counts(p: ModelParams) -> tuple[float, float]:
    """Left- and right-handed molecule numbers (N_L, N_R).

    N_L = N(1 + eta)/2 and N_R = N(1 - eta)/2, so N_L + N_R = N exactly.
    """
    n_left = p.n_total * (1.0 + p.eta) / 2.0
    n_right = p.n_total * (1.0 - p.eta) / 2.0
    return n_left, n_right


def rate_constants(p: ModelParams) -> RateConstants:
    """Complex rate constants of the three damped modes."""
    return RateConstants(
        K_a=complex(p.kappa_a, p.delta_a),
        K_A=complex(p.gamma_A, p.delta_21),
        K_B=complex(p.gamma_B, p.delta_31),
    )
