"""Dense two-qubit operator algebra.

Operators are plain 4x4 complex numpy arrays over the product basis
|00>, |01>, |10>, |11>, with the first tensor factor acting as the control
qubit.  Rotations and Heisenberg evolutions are evaluated analytically,
never through a generic matrix exponential, so results are exact up to
round-off.

Global phases are kept on every operator (the Ising-isolation construction
carries an explicit minus sign that downstream audits rely on); only
``fidelity`` and ``equal_up_to_global_phase`` are phase-insensitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

IDENTITY4 = np.eye(4, dtype=complex)

#: Canonical CNOT, control = first factor.
CNOT = np.array(
    [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ],
    dtype=complex,
)

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)


def pauli_kron(p: str, q: str) -> np.ndarray:
    """Kronecker product of two single-qubit Pauli matrices, e.g. ('Z', 'X')."""
    try:
        return np.kron(PAULI_1Q[p], PAULI_1Q[q])
    except KeyError as exc:
        raise ValueError(f"unknown Pauli label {exc.args[0]!r}, expected one of I, X, Y, Z") from None


def pauli_string(label: str) -> np.ndarray:
    """Two-letter Pauli string to a 4x4 matrix, e.g. 'ZZ' -> sigma_Z (x) sigma_Z."""
    if len(label) != 2:
        raise ValueError(f"expected a two-letter Pauli string, got {label!r}")
    return pauli_kron(label[0], label[1])


def _anticommute(a: np.ndarray, b: np.ndarray) -> bool:
    return bool(np.max(np.abs(a @ b + b @ a)) < 1e-12)


@dataclass(frozen=True)
class PauliAxis:
    """Rotation generator: a Pauli string, optionally tilted toward a second one.

    The tilted generator is cos(tilt) * primary + sin(tilt) * secondary.  The
    two strings must anticommute so the combination still squares to the
    identity and the Euler rotation formula applies.
    """

    primary: str
    secondary: str | None = None
    tilt: float = 0.0

    def __post_init__(self) -> None:
        pauli_string(self.primary)
        if self.secondary is not None:
            p = pauli_string(self.primary)
            s = pauli_string(self.secondary)
            if not _anticommute(p, s):
                raise ValueError(
                    f"tilt pair {self.primary!r}, {self.secondary!r} must anticommute"
                )
        elif self.tilt != 0.0:
            raise ValueError("tilt angle given without a secondary axis")

    def matrix(self) -> np.ndarray:
        g = pauli_string(self.primary)
        if self.secondary is None:
            return g
        return math.cos(self.tilt) * g + math.sin(self.tilt) * pauli_string(self.secondary)


def rotation(generator: PauliAxis | str, angle: float) -> np.ndarray:
    """Two-qubit rotation exp(-i * angle/2 * G) in closed Euler form.

    ``generator`` may be a ``PauliAxis`` or a bare two-letter string.  G is
    guaranteed to square to the identity, so the exponential reduces to
    cos(angle/2) * I - i sin(angle/2) * G exactly.
    """
    if isinstance(generator, str):
        generator = PauliAxis(generator)
    g = generator.matrix()
    return math.cos(angle / 2.0) * IDENTITY4 - 1.0j * math.sin(angle / 2.0) * g


# Singlet projector |s><s| with |s> = (|01> - |10>)/sqrt(2); the isotropic
# exchange generator XX + YY + ZZ is -3 on the singlet and +1 on the triplet.
_SINGLET = np.zeros((4, 1), dtype=complex)
_SINGLET[1, 0] = 1.0 / math.sqrt(2.0)
_SINGLET[2, 0] = -1.0 / math.sqrt(2.0)
_P_SINGLET = _SINGLET @ _SINGLET.conj().T
_P_TRIPLET = IDENTITY4 - _P_SINGLET


def heisenberg_evolution(phase: float) -> np.ndarray:
    """exp(-i * phase * (XX + YY + ZZ)) via the triplet/singlet eigenstructure.

    ``phase`` is the dimensionless product J*t/hbar.  Triplet states pick up
    exp(-i*phase), the singlet picks up exp(+3i*phase).
    """
    if not math.isfinite(phase):
        raise ValueError("evolution phase must be finite")
    return np.exp(-1.0j * phase) * _P_TRIPLET + np.exp(3.0j * phase) * _P_SINGLET


def fidelity(u: np.ndarray, v_ideal: np.ndarray) -> float:
    """Trace overlap |Tr(U^dag V)| / Tr(V^dag V); 1.0 iff U = V up to phase."""
    denom = float(np.trace(v_ideal.conj().T @ v_ideal).real)
    if denom < 1e-300:
        raise ValueError("ideal operator has zero norm")
    return float(abs(np.trace(u.conj().T @ v_ideal))) / denom


def equal_up_to_global_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> bool:
    """True iff u = c*v entrywise within tol for some unit-modulus scalar c."""
    flat_v = np.asarray(v).ravel()
    k = int(np.argmax(np.abs(flat_v)))
    pivot = flat_v[k]
    if abs(pivot) <= tol:
        return bool(np.max(np.abs(u)) <= tol)
    c = np.asarray(u).ravel()[k] / pivot
    if abs(abs(c) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(u - c * v)) <= tol)


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(u.conj().T @ u - IDENTITY4)) <= tol)
