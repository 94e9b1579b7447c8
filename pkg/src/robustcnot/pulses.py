"""Pulse sequences for CNOT gates built from an isotropic exchange interaction.

A :class:`PulseSeq` is an ordered tuple of primitive steps.  Step lists are
written in left-to-right matrix-product order: ``simulate`` returns
``M(steps[0]) @ M(steps[1]) @ ...``, so the last list element acts first on a
state vector.

Construction ladder:

* ``build_isolated_zz``  -- conjugating the bare exchange evolution with Z_pi
  on the control turns it into a pure ZZ rotation (with an overall minus
  sign), exactly, for any fractional coupling error.
* ``build_bb1``          -- the fully compensating composite
  (theta/2)_0 pi_phi 2pi_(3phi) pi_phi (theta/2)_0 with
  phi = arccos(-theta/4pi); tilted constituents are realized by perfect
  Y rotations on the target.
* ``build_level``        -- level 0 is the bare isolated pulse, level 1 the
  composite of tilted level-0 pulses, level >= 2 re-isolates the previous
  level (N_r slices of W . P . W^dag . P with W = Z_pi on the target) before
  feeding it back into the composite.
* ``build_cnot``         -- Hadamard / parallel-Z wrapper around the level
  pulse; equals the canonical CNOT up to global phase at zero error.

Single-qubit steps are always exact; only the exchange evolutions carry the
fractional error Delta, which scales their rotation angle by (1 + Delta).
All sequence objects are immutable and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Union

import numpy as np

from .su4 import CNOT, HADAMARD, PAULI_1Q, fidelity, heisenberg_evolution

CONTROL = "control"
TARGET = "target"

_AXES = ("X", "Y", "Z", "H")
_QUBITS = (CONTROL, TARGET)

#: Highest supported implementation level; beyond this the sequences exceed
#: 1e5 steps without adding anything checkable.
LEVEL_CAP = 3

DEFAULT_NR = 8


@dataclass(frozen=True)
class SingleQubitRotation:
    """Perfect single-qubit rotation exp(-i*angle/2 * sigma_axis).

    Axis 'H' denotes the Hadamard gate (a pi rotation about (X+Z)/sqrt(2),
    stored as the exact Hadamard matrix); its angle must be pi.
    """

    qubit: str
    axis: str
    angle: float

    def __post_init__(self) -> None:
        if self.qubit not in _QUBITS:
            raise ValueError(f"qubit must be one of {_QUBITS}, got {self.qubit!r}")
        if self.axis not in _AXES:
            raise ValueError(f"axis must be one of {_AXES}, got {self.axis!r}")
        if self.axis == "H" and self.angle != math.pi:
            raise ValueError("Hadamard steps have a fixed angle of pi")


@dataclass(frozen=True)
class HeisenbergEvolution:
    """Free exchange evolution contributing ``zz_angle`` of ZZ rotation.

    ``zz_angle`` is the ZZ rotation angle this evolution contributes under
    nominal coupling once isolated (two evolutions of zz_angle theta/2 make
    an isolated ZZ rotation by theta).  The direction of evolution is fixed,
    so the angle must be positive; signs are carried by the conjugating
    single-qubit gates.
    """

    zz_angle: float

    def __post_init__(self) -> None:
        if not (self.zz_angle > 0.0):
            raise ValueError("zz_angle must be positive")


@dataclass(frozen=True)
class ParallelGroup:
    """Single-qubit rotations executed simultaneously on distinct qubits."""

    members: tuple[SingleQubitRotation, ...]

    def __post_init__(self) -> None:
        qubits = [m.qubit for m in self.members]
        if len(set(qubits)) != len(qubits):
            raise ValueError("parallel group members must act on distinct qubits")


PulseStep = Union[SingleQubitRotation, HeisenbergEvolution, ParallelGroup]


@dataclass(frozen=True)
class PulseSeq:
    """Immutable sequence of pulse steps with implementation metadata."""

    steps: tuple[PulseStep, ...]
    level: int = 0
    n_r: int = 1

    @property
    def total_zz_angle(self) -> float:
        """Nominal total ZZ rotation angle, recomputed from the step list."""
        return sum(s.zz_angle for s in self.steps if isinstance(s, HeisenbergEvolution))


@dataclass(frozen=True)
class ErrorModel:
    """Fractional error of the actual coupling relative to the assumed one."""

    delta: float

    def __post_init__(self) -> None:
        # delta = -1 would mean zero coupling and no entangling action at all.
        if not (self.delta > -1.0):
            raise ValueError("fractional error must stay above -1")


# ---------------------------------------------------------------------------
# step matrices
# ---------------------------------------------------------------------------

_I2 = np.eye(2, dtype=complex)


def _single_qubit_matrix(axis: str, angle: float) -> np.ndarray:
    if axis == "H":
        return HADAMARD
    return math.cos(angle / 2.0) * _I2 - 1.0j * math.sin(angle / 2.0) * PAULI_1Q[axis]


def step_matrix(step: PulseStep, delta: float = 0.0) -> np.ndarray:
    """4x4 matrix of one step under fractional coupling error ``delta``."""
    if isinstance(step, SingleQubitRotation):
        m = _single_qubit_matrix(step.axis, step.angle)
        if step.qubit == CONTROL:
            return np.kron(m, _I2)
        return np.kron(_I2, m)
    if isinstance(step, ParallelGroup):
        u = np.eye(4, dtype=complex)
        for member in step.members:
            u = u @ step_matrix(member, delta)
        return u
    if isinstance(step, HeisenbergEvolution):
        return heisenberg_evolution(0.5 * step.zz_angle * (1.0 + delta))
    raise TypeError(f"unknown pulse step {step!r}")


def simulate(seq: PulseSeq, error: ErrorModel | float = 0.0) -> np.ndarray:
    """Left-to-right product of step matrices under a fractional error.

    Distinct step values are memoized per call; concatenated sequences repeat
    a handful of step kinds thousands of times.
    """
    delta = error.delta if isinstance(error, ErrorModel) else float(error)
    if not (delta > -1.0):
        raise ValueError("fractional error must stay above -1")
    cache: dict[PulseStep, np.ndarray] = {}
    u = np.eye(4, dtype=complex)
    for step in seq.steps:
        m = cache.get(step)
        if m is None:
            m = step_matrix(step, delta)
            cache[step] = m
        u = u @ m
    return u


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def build_isolated_zz(theta: float) -> PulseSeq:
    """Isolated ZZ rotation by ``theta`` from two bare exchange evolutions.

    The four-step sequence Z_pi(control) E Z_pi(control) E simulates to
    -exp(-i*theta/2 * ZZ) at zero error (global phase included) and to
    -exp(-i*theta/2 * (1+Delta) * ZZ) exactly under fractional error Delta.
    """
    if not (theta > 0.0):
        raise ValueError("rotation angle must be positive")
    z_pi = SingleQubitRotation(CONTROL, "Z", math.pi)
    evol = HeisenbergEvolution(theta / 2.0)
    return PulseSeq((z_pi, evol, z_pi, evol))


def build_tilted(theta: float, a: float, inner: PulseSeq) -> PulseSeq:
    """Tilt an inner ZZ-rotation pulse toward the ZX axis by angle ``a``.

    Wraps the inner sequence in perfect Y_a / Y_-a rotations on the target.
    A zero tilt returns the inner sequence unchanged (no identity gates are
    emitted, which is what keeps the published gate counts exact).
    """
    if a == 0.0:
        return inner
    wrap_in = SingleQubitRotation(TARGET, "Y", a)
    wrap_out = SingleQubitRotation(TARGET, "Y", -a)
    return PulseSeq((wrap_in, *inner.steps, wrap_out), level=inner.level, n_r=inner.n_r)


def bb1_tilt_angle(theta: float) -> float:
    """Composite-pulse tilt phi = arccos(-theta / 4pi)."""
    return math.acos(-theta / (4.0 * math.pi))


def build_bb1(
    theta: float,
    constituent_builder: Callable[[float, float], PulseSeq],
    level: int = 1,
    n_r: int = 1,
) -> PulseSeq:
    """Fully compensating composite rotation by ``theta`` about ZZ.

    The five constituents (theta/2)_0, pi_phi, 2pi_(3phi), pi_phi,
    (theta/2)_0 are produced by ``constituent_builder(angle, tilt)``.
    Nominal total ZZ angle is theta + 4pi.
    """
    if not (0.0 < theta <= 2.0 * math.pi):
        raise ValueError("composite rotation angle must lie in (0, 2pi]")
    phi = bb1_tilt_angle(theta)
    parts = (
        (theta / 2.0, 0.0),
        (math.pi, phi),
        (2.0 * math.pi, 3.0 * phi),
        (math.pi, phi),
        (theta / 2.0, 0.0),
    )
    steps: list[PulseStep] = []
    for angle, tilt in parts:
        steps.extend(constituent_builder(angle, tilt).steps)
    return PulseSeq(tuple(steps), level=level, n_r=n_r)


def _reisolate(angle: float, sub_level: int, n_r: int) -> PulseSeq:
    """N_r slices of W . P . W^dag . P, with P a lower-level pulse.

    W = Z_pi on the target negates ZX/ZY residual generators of P while
    preserving ZZ, so the slice pattern strips the off-axis residue a
    composite pulse leaves behind before it is fed into the next level.
    Each slice applies P twice, so P carries angle/(2*N_r).
    """
    inner = build_level(angle / (2.0 * n_r), sub_level, n_r)
    w = SingleQubitRotation(TARGET, "Z", math.pi)
    w_dag = SingleQubitRotation(TARGET, "Z", -math.pi)
    steps: list[PulseStep] = []
    for _ in range(n_r):
        steps.append(w)
        steps.extend(inner.steps)
        steps.append(w_dag)
        steps.extend(inner.steps)
    return PulseSeq(tuple(steps), level=sub_level, n_r=n_r)


def build_level(theta: float, level: int, n_r: int = DEFAULT_NR) -> PulseSeq:
    """Robust ZZ rotation by ``theta`` at the given implementation level.

    Level 0 is the bare isolated pulse.  Level 1 composes tilted level-0
    pulses directly (they are exact ZZ rotations even under error, so no
    re-isolation is needed; this is what yields the 16 single-qubit /
    10 two-qubit gate census).  Levels >= 2 re-isolate the previous level
    first.
    """
    if not (theta > 0.0):
        raise ValueError("rotation angle must be positive")
    if level < 0:
        raise ValueError("implementation level must be non-negative")
    if level > LEVEL_CAP:
        raise ValueError(f"implementation level {level} unsupported (cap {LEVEL_CAP})")
    if n_r < 1:
        raise ValueError("slice count must be at least 1")
    if level == 0:
        return build_isolated_zz(theta)

    def constituent(angle: float, tilt: float) -> PulseSeq:
        if level == 1:
            inner = build_isolated_zz(angle)
        else:
            inner = _reisolate(angle, level - 1, n_r)
        return build_tilted(angle, tilt, inner)

    return build_bb1(theta, constituent, level=level, n_r=n_r)


@lru_cache(maxsize=32)
def build_cnot(level: int, n_r: int = DEFAULT_NR) -> PulseSeq:
    """CNOT from a robust pi/2 ZZ rotation plus perfect one-qubit gates.

    Step order (left-to-right matrix product):
    (I x H) . U_zz(pi/2) . (Z_-pi/2 || Z_-pi/2) . (I x H), which equals the
    canonical CNOT up to global phase at zero error; the single-qubit Z
    factors commute with the ZZ core, and the parallel pair executes both
    Z_-pi/2 rotations simultaneously.
    """
    core = build_level(math.pi / 2.0, level, n_r)
    had = SingleQubitRotation(TARGET, "H", math.pi)
    z_pair = ParallelGroup(
        (
            SingleQubitRotation(CONTROL, "Z", -math.pi / 2.0),
            SingleQubitRotation(TARGET, "Z", -math.pi / 2.0),
        )
    )
    return PulseSeq((had, *core.steps, z_pair, had), level=level, n_r=n_r)


def cnot_error(level: int, delta: float, n_r: int = DEFAULT_NR) -> float:
    """1 - F of the simulated CNOT against the canonical CNOT."""
    u = simulate(build_cnot(level, n_r), delta)
    return max(0.0, 1.0 - fidelity(u, CNOT))


# ---------------------------------------------------------------------------
# line-oriented serialization
# ---------------------------------------------------------------------------


def dump_steps(seq: PulseSeq) -> str:
    """One step per line: SQ <qubit> <axis> <angle>, EV <zz_angle>, PAR <k>.

    A leading comment carries the level / N_r metadata so a dump re-parses to
    an identical sequence.  Angles are written with repr precision and
    round-trip bit-exactly.
    """
    lines = [f"# pulseseq level={seq.level} nr={seq.n_r}"]

    def sq_line(s: SingleQubitRotation) -> str:
        return f"SQ {s.qubit} {s.axis} {s.angle!r}"

    for step in seq.steps:
        if isinstance(step, SingleQubitRotation):
            lines.append(sq_line(step))
        elif isinstance(step, HeisenbergEvolution):
            lines.append(f"EV {step.zz_angle!r}")
        elif isinstance(step, ParallelGroup):
            lines.append(f"PAR {len(step.members)}")
            lines.extend(sq_line(m) for m in step.members)
        else:
            raise TypeError(f"unknown pulse step {step!r}")
    return "\n".join(lines) + "\n"


def parse_steps(text: str) -> PulseSeq:
    """Inverse of :func:`dump_steps`."""
    level = 0
    n_r = 1
    steps: list[PulseStep] = []
    lines = [ln.strip() for ln in text.splitlines()]
    i = 0

    def parse_sq(line: str, lineno: int) -> SingleQubitRotation:
        fields = line.split()
        if len(fields) != 4 or fields[0] != "SQ":
            raise ValueError(f"line {lineno}: expected 'SQ <qubit> <axis> <angle>', got {line!r}")
        return SingleQubitRotation(fields[1], fields[2], float(fields[3]))

    while i < len(lines):
        line = lines[i]
        i += 1
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("# pulseseq"):
                for token in line.split()[2:]:
                    key, _, value = token.partition("=")
                    if key == "level":
                        level = int(value)
                    elif key == "nr":
                        n_r = int(value)
            continue
        kind = line.split(None, 1)[0]
        if kind == "SQ":
            steps.append(parse_sq(line, i))
        elif kind == "EV":
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"line {i}: expected 'EV <zz_angle>', got {line!r}")
            steps.append(HeisenbergEvolution(float(fields[1])))
        elif kind == "PAR":
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"line {i}: expected 'PAR <k>', got {line!r}")
            k = int(fields[1])
            members = []
            for _ in range(k):
                if i >= len(lines):
                    raise ValueError(f"line {i}: parallel group truncated")
                members.append(parse_sq(lines[i], i + 1))
                i += 1
            steps.append(ParallelGroup(tuple(members)))
        else:
            raise ValueError(f"line {i}: unknown step kind {kind!r}")
    return PulseSeq(tuple(steps), level=level, n_r=n_r)


def iter_single_qubit_steps(seq: PulseSeq) -> Iterable[SingleQubitRotation]:
    """All single-qubit rotations in order, expanding parallel groups."""
    for step in seq.steps:
        if isinstance(step, SingleQubitRotation):
            yield step
        elif isinstance(step, ParallelGroup):
            yield from step.members
