"""Working-state transition frequencies and phase-matching geometry.

Only the J = 0, 1 rigid-rotor levels enter: the working states are the
rotational ground state, the vibrationally excited 1_11 state, and the
vibrationally excited 1_10 doublet.  A general asymmetric-top
diagonalization is deliberately out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnboundedSampleSize, ValidationError
from .params import TWO_PI, angular_from_hz

SPEED_OF_LIGHT = 299_792_458.0  # m/s


@dataclass(frozen=True)
class RotorSpec:
    """Rotational constants A >= B >= C > 0 and the vibrational frequency.

    All four values are angular frequencies in rad/s.
    """

    A: float
    B: float
    C: float
    omega_vib: float


@dataclass(frozen=True)
class TransitionFrequencies:
    """Bare transition angular frequencies of the cyclic three-level loop.

    omega32 is stored as omega31 - omega21, so the loop closes exactly.
    """

    omega21: float
    omega31: float
    omega32: float


@dataclass(frozen=True)
class BeamGeometry:
    """Unit propagation directions of the three fields."""

    k31_direction: tuple[float, float, float]
    ka_direction: tuple[float, float, float]
    k32_direction: tuple[float, float, float]


#: Geometry minimizing the residual wavevector: the two optical beams run
#: parallel and the low-frequency beam is perpendicular to them.
MINIMAL_MISMATCH_GEOMETRY = BeamGeometry(
    k31_direction=(1.0, 0.0, 0.0),
    ka_direction=(1.0, 0.0, 0.0),
    k32_direction=(0.0, 1.0, 0.0),
)

#: 1,2-propanediol: rotational constants and the OH-stretch frequency.
PROPANEDIOL = RotorSpec(
    A=angular_from_hz(8524.405e6),
    B=angular_from_hz(3635.492e6),
    C=angular_from_hz(2788.699e6),
    omega_vib=angular_from_hz(100.950e12),
)


def validate_rotor(r: RotorSpec) -> RotorSpec:
    """Check asymmetric-top ordering A >= B >= C > 0 and omega_vib >= 0."""
    if not (r.C > 0.0 and r.A >= r.B >= r.C):
        raise ValidationError("rotational constants must satisfy A >= B >= C > 0")
    if r.omega_vib < 0.0:
        raise ValidationError("omega_vib must be nonnegative")
    return r


def j1_level_energy(r: RotorSpec, ka: int, kc: int) -> float:
    """Rigid-rotor energy (as angular frequency) of a J = 1 level.

    Supported levels, in |J_{Ka Kc}> labeling: 1_01 -> B + C,
    1_11 -> A + C, 1_10 -> A + B.  The energy is M-independent.
    """
    if (ka, kc) == (0, 1):
        return r.B + r.C
    if (ka, kc) == (1, 1):
        return r.A + r.C
    if (ka, kc) == (1, 0):
        return r.A + r.B
    raise ValidationError(f"unsupported J=1 level (ka, kc) = ({ka}, {kc})")


def transition_frequencies(r: RotorSpec) -> TransitionFrequencies:
    """Transition frequencies of the working cyclic three-level system.

    State |2> sits on the vibrationally excited 1_11 level and |3> on the
    vibrationally excited 1_10 doublet, so omega32 reduces to B - C.
    """
    validate_rotor(r)
    omega21 = r.omega_vib + j1_level_energy(r, 1, 1)
    omega31 = r.omega_vib + j1_level_energy(r, 1, 0)
    return TransitionFrequencies(
        omega21=omega21,
        omega31=omega31,
        omega32=omega31 - omega21,
    )


def _unit(label: str, v: tuple[float, float, float]) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValidationError(f"{label} must be a 3-vector")
    if abs(float(np.linalg.norm(arr)) - 1.0) > 1e-9:
        raise ValidationError(f"{label} must have unit norm")
    return arr


def phase_mismatch(
    tf: TransitionFrequencies,
    geometry: BeamGeometry = MINIMAL_MISMATCH_GEOMETRY,
    delta_21: float = 0.0,
    delta_31: float = 0.0,
) -> float:
    """Magnitude of the residual wavevector k31 - ka - k32 in rad/m.

    The field frequencies follow the resonance conventions: the 31 beam
    runs at omega31 - delta_31, the drive (and hence the intracavity
    field) at omega21 - delta_21, and the 32 beam closes the three-photon
    condition nu_31 = nu_d + nu_32.  Operating on a polariton peak offsets
    nu_d by the collective coupling (~1e-6 of the optical frequency);
    that shift is negligible against the acceptance band and the default
    delta_21 = 0 ignores it.
    """
    u31 = _unit("k31_direction", geometry.k31_direction)
    ua = _unit("ka_direction", geometry.ka_direction)
    u32 = _unit("k32_direction", geometry.k32_direction)

    nu_d = tf.omega21 - delta_21
    nu_31 = tf.omega31 - delta_31
    nu_32 = nu_31 - nu_d
    if nu_d <= 0.0 or nu_31 <= 0.0:
        raise ValidationError("field frequencies must be positive")

    dk = (nu_31 * u31 - nu_d * ua - nu_32 * u32) / SPEED_OF_LIGHT
    return float(np.linalg.norm(dk))


def max_sample_size(dk: float, margin: float = 1.0) -> float:
    """Largest sample size l with |dk| * l <= margin * 2*pi.

    `margin` < 1 expresses how strongly the phase-matching inequality
    should hold; margin = 1 returns the bare bound 2*pi/|dk|.
    """
    if not 0.0 < margin <= 1.0:
        raise ValidationError("margin must lie in (0, 1]")
    if dk < 0.0:
        raise ValidationError("phase mismatch must be nonnegative")
    if dk == 0.0:
        raise UnboundedSampleSize("perfect phase matching: sample size unbounded")
    return margin * TWO_PI / dk
