"""Robust composite-pulse CNOT gates from an exchange interaction.

A CNOT built from an isotropic exchange coupling inherits any fractional
error in that coupling as a systematic over- or under-rotation.  This
package simulates pulse sequences that compensate such errors (exact Ising
isolation, fully compensating composite rotations, and their concatenation),
prices them in gate counts and wall-clock time, and budgets the measurement
cost of characterizing the coupling instead of concatenating further.
"""

from .su4 import (
    CNOT,
    PauliAxis,
    equal_up_to_global_phase,
    fidelity,
    heisenberg_evolution,
    pauli_kron,
    rotation,
)
from .pulses import (
    ErrorModel,
    HeisenbergEvolution,
    ParallelGroup,
    PulseSeq,
    SingleQubitRotation,
    build_bb1,
    build_cnot,
    build_isolated_zz,
    build_level,
    build_tilted,
    cnot_error,
    dump_steps,
    parse_steps,
    simulate,
)
from .costs import (
    CostReport,
    TimingModel,
    census,
    cnot_cost,
    count_recurrence,
    infer_nr,
    schedule_time,
    total_zz_angle,
    two_qubit_unit_time,
)
from .exchange import (
    ExchangeRow,
    ExchangeTable,
    default_table,
    delta0,
    fidelity_vs_separation,
    load_table,
    write_table,
)
from .characterization import (
    CharacterizationPlan,
    DecoherenceModel,
    delta_c,
    delta_c_exact,
    error_vs_measurements,
    error_with_decoherence,
    exchange_uncertainty,
    freq_uncertainty,
    min_measurements,
)

__version__ = "0.1.0"
