"""Finite-dimensional spin-j algebra and spin coherent states.

States live in the (2j+1)-dimensional |j,m> basis ordered m = j, j-1, ..., -j,
so the vector index equals the Dicke excitation number n = j - m.  hbar = 1.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import lgamma, pi

import numpy as np

from spintangle.errors import ParameterError, StateError

_NORM_ATOL = 1e-8


def validate_j(j):
    """Return j as a float after checking it is a positive half-integer."""
    j = float(j)
    two_j = 2.0 * j
    if j <= 0 or two_j != round(two_j):
        raise ParameterError(f"j must be a positive half-integer, got {j}")
    return j


def dim(j):
    """Hilbert-space dimension 2j+1."""
    return round(2 * validate_j(j)) + 1


def ln_binom(n, k):
    """log of the binomial coefficient C(n, k)."""
    return lgamma(n + 1) - lgamma(k + 1) - lgamma(n - k + 1)


@lru_cache(maxsize=None)
def ln_factorials(n):
    """Read-only array of ln k! for k = 0..n."""
    vals = np.array([lgamma(k + 1.0) for k in range(n + 1)])
    vals.flags.writeable = False
    return vals


@dataclass(frozen=True)
class BlochAngles:
    """Direction on the sphere: polar theta in [0, pi], azimuth phi in [-pi, pi).

    phi is wrapped into range on construction; theta out of range is an error.
    """

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        if not (-1e-12 <= theta <= pi + 1e-12):
            raise ParameterError(f"theta must lie in [0, pi], got {theta}")
        theta = min(max(theta, 0.0), pi)
        phi = (float(self.phi) + pi) % (2 * pi) - pi
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def unit_vector(self):
        """Cartesian unit vector (sin t cos p, sin t sin p, cos t)."""
        st = np.sin(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])


def angles_from_unit_vector(v):
    """BlochAngles of a unit 3-vector; phi := 0 exactly at the poles."""
    v = np.asarray(v, dtype=float)
    theta = float(np.arccos(np.clip(v[2], -1.0, 1.0)))
    phi = float(np.arctan2(v[1], v[0]))
    if theta == 0.0 or theta == pi:
        phi = 0.0
    return BlochAngles(theta, phi)


@dataclass(frozen=True, eq=False)
class SpinState:
    """Normalized amplitude vector over |j,m>, index n = j - m."""

    j: float
    amplitudes: np.ndarray

    def __post_init__(self):
        j = validate_j(self.j)
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (round(2 * j) + 1,):
            raise StateError(
                f"amplitude vector has shape {amps.shape}, expected ({round(2 * j) + 1},)"
            )
        nrm2 = float(np.vdot(amps, amps).real)
        if abs(nrm2 - 1.0) > _NORM_ATOL:
            raise StateError(f"state is not normalized: |psi|^2 = {nrm2}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self):
        return self.amplitudes.shape[0]


@dataclass(frozen=True)
class AngularMomentumOps:
    """Dense J_x, J_y, J_z for one spin-j irrep (J_z diagonal, entries m)."""

    j: float
    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray


def _raising_weights(j):
    # superdiagonal of J+ at (i-1, i):  sqrt(j(j+1) - m(m+1)) with m = j - i
    i = np.arange(1, round(2 * j) + 1)
    m = j - i
    return np.sqrt(j * (j + 1) - m * (m + 1))


def angular_momentum_ops(j):
    """Build the spin-j angular momentum matrices.

    J+ has matrix elements sqrt(j(j+1) - m(m+1)) one place above the
    diagonal; J_x = (J+ + J-)/2 and J_y = (J+ - J-)/(2i).
    """
    j = validate_j(j)
    d = round(2 * j) + 1
    w = _raising_weights(j)
    jp = np.zeros((d, d))
    jp[np.arange(d - 1), np.arange(1, d)] = w
    jx = (jp + jp.T) / 2.0
    jy = (jp - jp.T) / 2.0j
    jz = np.diag(j - np.arange(d, dtype=float))
    return AngularMomentumOps(j, jx, jy, jz)


def scs_state(j, angles):
    """Spin coherent state |j, theta, phi> in the Dicke basis.

    Closed form: amplitude sqrt(C(2j,n)) cos(t/2)^(2j-n) sin(t/2)^n e^(i n phi)
    on n excitations.  Magnitudes are accumulated in log space so large j
    stays finite, then the vector is normalized.
    """
    j = validate_j(j)
    n_qubits = round(2 * j)
    half = angles.theta / 2.0
    c, s = np.cos(half), np.sin(half)
    amps = np.zeros(n_qubits + 1, dtype=np.complex128)
    if s == 0.0:
        amps[0] = 1.0
    elif c == 0.0:
        amps[-1] = np.exp(1j * n_qubits * angles.phi)
    else:
        n = np.arange(n_qubits + 1)
        lf = ln_factorials(n_qubits)
        ln_mag = (
            0.5 * (lf[-1] - lf[n] - lf[n_qubits - n])
            + (n_qubits - n) * np.log(c)
            + n * np.log(s)
        )
        mag = np.exp(ln_mag - ln_mag.max())
        amps = mag * np.exp(1j * n * angles.phi)
        amps /= np.linalg.norm(amps)
    return SpinState(j, amps)


def scs_state_expm(j, angles):
    """Rotation-operator construction exp[i t (J_x sin p - J_y cos p)]|j,j>.

    Exact up to eigendecomposition rounding; kept as an independent check on
    the closed form (global phases may differ).
    """
    j = validate_j(j)
    ops = angular_momentum_ops(j)
    h = angles.theta * (ops.jx * np.sin(angles.phi) - ops.jy * np.cos(angles.phi))
    w, v = np.linalg.eigh(h)
    highest = np.zeros(v.shape[0], dtype=np.complex128)
    highest[0] = 1.0
    amps = v @ (np.exp(1j * w) * (v.conj().T @ highest))
    amps /= np.linalg.norm(amps)
    return SpinState(j, amps)


def expectation_j(state):
    """(<J_x>, <J_y>, <J_z>) of a SpinState, via the tridiagonal structure."""
    a = state.amplitudes
    w = _raising_weights(state.j)
    jplus = np.sum(w * np.conj(a[:-1]) * a[1:])
    m = state.j - np.arange(a.shape[0])
    jz = float(np.sum(m * np.abs(a) ** 2))
    return np.array([jplus.real, jplus.imag, jz])


def bloch_from_expectation(v, j):
    """Direction of an expectation vector, or None when it is too short.

    Directions shorter than 1e-9 * j are treated as degenerate (the caller
    can fall back to a classical reference point).
    """
    j = validate_j(j)
    v = np.asarray(v, dtype=float)
    r = float(np.linalg.norm(v))
    if r > j * (1 + 1e-9):
        raise ParameterError(f"expectation vector length {r} exceeds j = {j}")
    if r < 1e-9 * j:
        return None
    return angles_from_unit_vector(v / r)


def state_overlap(a, b):
    """Inner product <a|b> of two states with the same j."""
    if a.j != b.j:
        raise ParameterError(f"states have different j: {a.j} vs {b.j}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))
