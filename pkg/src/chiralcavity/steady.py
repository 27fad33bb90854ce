"""Mean-field steady state of the driven cavity and derived observables.

Two independent routes to the steady state are both first class, because
their agreement is the model's central self-check:

* the closed-form intracavity amplitude (and its back-substituted
  collective amplitudes), and
* a dense 5x5 complex linear solve of the full mean-field equations by
  Gaussian elimination with partial pivoting.

The mean-value vector is ordered (a, A_L, A_R, B_L, B_R).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, SingularSystemError, ValidationError
from .params import ModelParams, rate_constants, species_counts

MODE_LABELS = ("a", "A_L", "A_R", "B_L", "B_R")

#: Relative residual ceiling for the linear route.
RESIDUAL_TOL = 1e-10

#: Excited-state fraction above which the low-excitation model is suspect.
P_E_WARNING_THRESHOLD = 0.1

WARN_LOW_EXCITATION = "low_excitation_limit_exceeded"


@dataclass(frozen=True)
class DriftSystem:
    """Drift matrix and constant source of the mean-field equations.

    The mean-value vector v obeys dv/dt = matrix @ v + source.  `params`
    keeps the originating parameter set for diagnostics; hand-built
    systems may leave it None.
    """

    matrix: np.ndarray
    source: np.ndarray
    params: ModelParams | None = None


@dataclass(frozen=True)
class SteadyState:
    """The five complex mode amplitudes with the solve residual attached."""

    a: complex
    A_L: complex
    A_R: complex
    B_L: complex
    B_R: complex
    residual: float = 0.0
    warnings: tuple[str, ...] = ()

    def vector(self) -> np.ndarray:
        return np.array([self.a, self.A_L, self.A_R, self.B_L, self.B_R],
                        dtype=complex)


def chiral_phase_factors(phi: float) -> tuple[complex, complex]:
    """exp(i*phi_Q) for the two handednesses.

    The right-handed factor is the exact negation of the left-handed one,
    so racemic cancellations stay exact in floating point.
    """
    left = cmath.exp(1j * phi)
    return left, -left


def build_drift(p: ModelParams) -> DriftSystem:
    """Assemble the 5x5 drift matrix and source vector.

    The cavity row couples to A_Q with -i*g_a*sqrt(N_Q); each A_Q row
    couples back to the cavity the same way and to its B_Q partner with
    -i*Omega32*exp(-i*phi_Q); each B_Q row couples to A_Q with
    -i*Omega32*exp(+i*phi_Q) and carries the pump -i*Omega31*sqrt(N_Q).
    """
    n_left, n_right = species_counts(p)
    s_left = math.sqrt(n_left)
    s_right = math.sqrt(n_right)
    ph_left, ph_right = chiral_phase_factors(p.phi)
    k = rate_constants(p)

    m = np.zeros((5, 5), dtype=complex)
    m[0, 0] = -k.K_a
    m[0, 1] = -1j * p.g_a * s_left
    m[0, 2] = -1j * p.g_a * s_right

    m[1, 0] = -1j * p.g_a * s_left
    m[1, 1] = -k.K_A
    m[1, 3] = -1j * p.omega32_rabi * ph_left.conjugate()

    m[2, 0] = -1j * p.g_a * s_right
    m[2, 2] = -k.K_A
    m[2, 4] = -1j * p.omega32_rabi * ph_right.conjugate()

    m[3, 1] = -1j * p.omega32_rabi * ph_left
    m[3, 3] = -k.K_B

    m[4, 2] = -1j * p.omega32_rabi * ph_right
    m[4, 4] = -k.K_B

    source = np.zeros(5, dtype=complex)
    source[0] = math.sqrt(p.kappa_a) * p.drive_amp
    source[3] = -1j * p.omega31_rabi * s_left
    source[4] = -1j * p.omega31_rabi * s_right

    return DriftSystem(matrix=m, source=source, params=p)


def gaussian_solve(matrix: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, float]:
    """Solve matrix @ x = rhs by elimination with partial pivoting.

    Returns the solution and a cheap condition estimate (max/min pivot
    magnitude).  Kept dependency-free so the route stays auditable
    against the closed form.
    """
    a = np.array(matrix, dtype=complex)
    b = np.array(rhs, dtype=complex)
    n = a.shape[0]
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    tiny = n * np.finfo(float).eps * scale
    pivots = np.empty(n)

    for col in range(n):
        rel = int(np.argmax(np.abs(a[col:, col])))
        piv_row = col + rel
        piv = abs(a[piv_row, col])
        if piv <= tiny:
            raise SingularSystemError(
                f"singular drift matrix: pivot {piv:.3e} at column {col}",
                condition_estimate=math.inf,
            )
        if piv_row != col:
            a[[col, piv_row]] = a[[piv_row, col]]
            b[[col, piv_row]] = b[[piv_row, col]]
        pivots[col] = piv
        for row in range(col + 1, n):
            f = a[row, col] / a[col, col]
            if f != 0:
                a[row, col:] -= f * a[col, col:]
                b[row] -= f * b[col]

    x = np.zeros(n, dtype=complex)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - np.dot(a[row, row + 1:], x[row + 1:])) / a[row, row]

    cond_estimate = float(pivots.max() / pivots.min())
    return x, cond_estimate


def _warnings_for(v: np.ndarray, p: ModelParams | None) -> tuple[str, ...]:
    if p is None:
        return ()
    state = SteadyState(a=complex(v[0]), A_L=complex(v[1]), A_R=complex(v[2]),
                        B_L=complex(v[3]), B_R=complex(v[4]))
    if excitation_fraction(state, p) > P_E_WARNING_THRESHOLD:
        return (WARN_LOW_EXCITATION,)
    return ()


def steady_state_from_vector(v: np.ndarray, d: DriftSystem) -> SteadyState:
    """Package a solution vector, attaching residual and warnings."""
    res = float(np.linalg.norm(d.matrix @ v + d.source))
    src = float(np.linalg.norm(d.source))
    rel = res / src if src > 0.0 else res
    return SteadyState(
        a=complex(v[0]), A_L=complex(v[1]), A_R=complex(v[2]),
        B_L=complex(v[3]), B_R=complex(v[4]),
        residual=rel, warnings=_warnings_for(v, d.params),
    )


def solve_steady_linear(d: DriftSystem) -> SteadyState:
    """Steady state from the dense linear solve of matrix @ v = -source."""
    v, cond = gaussian_solve(d.matrix, -d.source)
    state = steady_state_from_vector(v, d)
    if state.residual > RESIDUAL_TOL:
        raise SingularSystemError(
            f"ill-conditioned steady-state system: relative residual "
            f"{state.residual:.3e} (condition estimate {cond:.3e})",
            condition_estimate=cond,
        )
    return state


def _closed_form_pieces(p: ModelParams):
    n_left, n_right = species_counts(p)
    k = rate_constants(p)
    loop = k.K_A * k.K_B + p.omega32_rabi ** 2
    denominator = k.K_a * loop + p.g_a ** 2 * p.n_total * k.K_B
    chiral = (1j * (n_left - n_right) * p.g_a * p.omega31_rabi
              * p.omega32_rabi * cmath.exp(-1j * p.phi))
    drive = math.sqrt(p.kappa_a) * p.drive_amp * loop
    return chiral, drive, denominator, loop, k


def intracavity_amplitude_closed(p: ModelParams) -> complex:
    """Closed-form steady-state intracavity amplitude <a>.

    The chirality-dependent term is proportional to N_L - N_R and
    interferes with the drive term; their ratio carries the excess.
    """
    chiral, drive, denominator, _, _ = _closed_form_pieces(p)
    if denominator == 0:
        raise NumericalError("vanishing denominator in closed-form amplitude")
    return (chiral + drive) / denominator


def steady_state_closed(p: ModelParams) -> SteadyState:
    """All five amplitudes by back-substituting the closed-form <a>."""
    a = intracavity_amplitude_closed(p)
    n_left, n_right = species_counts(p)
    ph_left, ph_right = chiral_phase_factors(p.phi)
    k = rate_constants(p)
    loop = k.K_A * k.K_B + p.omega32_rabi ** 2

    amps = []
    for n_q, ph_q in ((n_left, ph_left), (n_right, ph_right)):
        s_q = math.sqrt(n_q)
        a_q = (-1j * p.g_a * s_q * k.K_B * a
               - p.omega31_rabi * p.omega32_rabi * s_q * ph_q.conjugate()) / loop
        b_q = -1j * (p.omega31_rabi * s_q + p.omega32_rabi * ph_q * a_q) / k.K_B
        amps.append((a_q, b_q))

    v = np.array([a, amps[0][0], amps[1][0], amps[0][1], amps[1][1]],
                 dtype=complex)
    return steady_state_from_vector(v, build_drift(p))


def transmission(p: ModelParams) -> float:
    """Steady-state drive transmission T = kappa_a * |<a>|**2 / eps_d**2."""
    if p.drive_amp <= 0.0:
        raise ValidationError("transmission requires a nonzero drive amplitude")
    a = intracavity_amplitude_closed(p)
    return p.kappa_a * abs(a) ** 2 / p.drive_amp ** 2


def phase_branch(phi: float) -> int:
    """+1 for phi an even multiple of pi, -1 for an odd multiple."""
    turns = phi / math.pi
    nearest = round(turns)
    if abs(turns - nearest) > 1e-9:
        raise ValidationError(
            "optimal-transmission branch requires phi to be an integer "
            "multiple of pi")
    return 1 if nearest % 2 == 0 else -1


def optimal_transmission(p: ModelParams) -> float:
    """Approximate transmission at the polariton peak Delta_21 = g_a*sqrt(N).

    Valid when the collective coupling dominates every other rate; the
    sign of the chiral term follows the phi branch.
    """
    if p.drive_amp <= 0.0:
        raise ValidationError("optimal transmission requires a nonzero drive")
    branch = phase_branch(p.phi)
    drive_side = math.sqrt(p.kappa_a) * p.drive_amp * p.gamma_B
    chiral_side = math.sqrt(p.n_total) * p.omega31_rabi * p.omega32_rabi
    denom = (p.gamma_A * p.gamma_B + p.kappa_a * p.gamma_B
             + p.omega32_rabi ** 2)
    peak = (drive_side + branch * chiral_side * p.eta) / denom
    return p.kappa_a / p.drive_amp ** 2 * peak ** 2


def delta_t_op(p: ModelParams) -> float:
    """Contrast between the enantiopure optimal transmissions (eta = +-1)."""
    return (optimal_transmission(p.replace(eta=1.0))
            - optimal_transmission(p.replace(eta=-1.0)))


def monotonicity_margin(p: ModelParams) -> float:
    """sqrt(kappa_a)*eps_d*Gamma_B - sqrt(N)*Omega31*Omega32.

    Nonnegative exactly when the optimal transmission is monotone in the
    excess, i.e. when a measured transmission identifies a unique eta.
    """
    return (math.sqrt(p.kappa_a) * p.drive_amp * p.gamma_B
            - math.sqrt(p.n_total) * p.omega31_rabi * p.omega32_rabi)


def excitation_fraction(s: SteadyState, p: ModelParams) -> float:
    """Excited-state fraction P_e under the mean-field factorization.

    Each species contributes (|A_Q|**2 + |B_Q|**2)/N_Q; a species with no
    molecules contributes zero.
    """
    n_left, n_right = species_counts(p)
    total = 0.0
    if n_left > 0.0:
        total += (abs(s.A_L) ** 2 + abs(s.B_L) ** 2) / n_left
    if n_right > 0.0:
        total += (abs(s.A_R) ** 2 + abs(s.B_R) ** 2) / n_right
    return total


def rabi_peak_detuning(p: ModelParams) -> tuple[float, float]:
    """Polariton-peak detunings +-g_a*sqrt(N) from vacuum Rabi splitting."""
    peak = p.g_a * math.sqrt(p.n_total)
    return peak, -peak
