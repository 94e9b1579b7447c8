import math

import numpy as np
import pytest

from robustcnot.su4 import CNOT, PauliAxis, equal_up_to_global_phase, fidelity, rotation
from robustcnot.pulses import (
    CONTROL,
    TARGET,
    ErrorModel,
    HeisenbergEvolution,
    ParallelGroup,
    PulseSeq,
    SingleQubitRotation,
    bb1_tilt_angle,
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

ZZ_QUARTER = rotation("ZZ", math.pi / 2)


def closed_form_error(delta: float) -> float:
    return 1.0 - math.cos(math.pi * delta / 4.0)


# ---------------------------------------------------------------------------
# step and sequence types
# ---------------------------------------------------------------------------


def test_parallel_group_rejects_same_qubit():
    with pytest.raises(ValueError):
        ParallelGroup(
            (
                SingleQubitRotation(TARGET, "Z", 1.0),
                SingleQubitRotation(TARGET, "X", 1.0),
            )
        )


def test_evolution_rejects_nonpositive_angle():
    with pytest.raises(ValueError):
        HeisenbergEvolution(0.0)
    with pytest.raises(ValueError):
        HeisenbergEvolution(-0.1)


def test_error_model_bounds():
    assert ErrorModel(-0.99).delta == -0.99
    with pytest.raises(ValueError):
        ErrorModel(-1.0)


def test_hadamard_step_angle_is_pinned():
    with pytest.raises(ValueError):
        SingleQubitRotation(TARGET, "H", math.pi / 2)


# ---------------------------------------------------------------------------
# build_isolated_zz
# ---------------------------------------------------------------------------


def test_isolated_zz_exact_with_global_phase():
    seq = build_isolated_zz(math.pi / 2)
    got = simulate(seq, 0.0)
    # The minus sign is part of the construction and must survive.
    assert np.max(np.abs(got - (-ZZ_QUARTER))) < 1e-12
    assert equal_up_to_global_phase(got, ZZ_QUARTER, 1e-12)


def test_isolated_zz_error_scales_angle_exactly():
    got = simulate(build_isolated_zz(math.pi / 2), 0.3)
    want = -rotation("ZZ", 0.65 * math.pi)
    assert np.max(np.abs(got - want)) < 1e-12


def test_isolated_zz_step_census():
    seq = build_isolated_zz(math.pi / 2)
    kinds = [type(s).__name__ for s in seq.steps]
    assert kinds == ["SingleQubitRotation", "HeisenbergEvolution"] * 2
    assert abs(seq.total_zz_angle - math.pi / 2) < 1e-15


def test_isolated_zz_rejects_nonpositive_angle():
    with pytest.raises(ValueError):
        build_isolated_zz(0.0)


# ---------------------------------------------------------------------------
# build_tilted
# ---------------------------------------------------------------------------


def test_tilted_zero_angle_is_inner():
    inner = build_isolated_zz(1.0)
    assert build_tilted(1.0, 0.0, inner) is inner


def test_tilted_half_pi_gives_pure_zx_rotation():
    seq = build_tilted(math.pi, math.pi / 2, build_isolated_zz(math.pi))
    got = simulate(seq, 0.0)
    assert equal_up_to_global_phase(got, rotation("ZX", math.pi), 1e-12)


def test_tilted_rotation_with_error_stays_on_axis():
    # Tilt wrappers are perfect, so only the rotation angle picks up the error.
    a = math.acos(-1.0 / 8.0)
    seq = build_tilted(math.pi, a, build_isolated_zz(math.pi))
    got = simulate(seq, 0.2)
    want = rotation(PauliAxis("ZZ", "ZX", a), 1.2 * math.pi)
    assert equal_up_to_global_phase(got, want, 1e-12)


# ---------------------------------------------------------------------------
# build_bb1
# ---------------------------------------------------------------------------


def test_bb1_tilt_angle_value():
    assert abs(bb1_tilt_angle(math.pi / 2) - 1.696124) < 1e-6
    assert abs(math.cos(bb1_tilt_angle(math.pi / 2)) + 1.0 / 8.0) < 1e-15


def test_bb1_exact_at_zero_error():
    seq = build_level(math.pi / 2, 1)
    assert equal_up_to_global_phase(simulate(seq, 0.0), ZZ_QUARTER, 1e-12)


def test_bb1_total_zz_angle():
    seq = build_level(math.pi / 2, 1)
    assert abs(seq.total_zz_angle - (math.pi / 2 + 4 * math.pi)) < 1e-12


def test_bb1_suppresses_ten_percent_error():
    seq = build_level(math.pi / 2, 1)
    err = 1.0 - fidelity(simulate(seq, 0.1), ZZ_QUARTER)
    assert err < 1e-4


def test_bb1_rejects_angles_outside_range():
    def constituent(angle, tilt):
        return build_tilted(angle, tilt, build_isolated_zz(angle))

    with pytest.raises(ValueError):
        build_bb1(0.0, constituent)
    with pytest.raises(ValueError):
        build_bb1(2 * math.pi + 0.1, constituent)
    build_bb1(2 * math.pi, constituent)


# ---------------------------------------------------------------------------
# build_level / build_cnot
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("level", [0, 1, 2])
@pytest.mark.parametrize("n_r", [1, 4, 8])
def test_zero_error_exactness(level, n_r):
    got = simulate(build_cnot(level, n_r), 0.0)
    assert equal_up_to_global_phase(got, CNOT, 1e-9)


def test_level2_total_zz_angle():
    seq = build_level(math.pi / 2, 2, 8)
    assert abs(seq.total_zz_angle - 324.5 * math.pi) < 1e-9


def test_level_cap():
    with pytest.raises(ValueError):
        build_level(math.pi / 2, 4, 2)
    with pytest.raises(ValueError):
        build_level(math.pi / 2, -1, 2)
    with pytest.raises(ValueError):
        build_level(math.pi / 2, 2, 0)


def test_cnot_level0_step_census():
    seq = build_cnot(0, 1)
    singles = sum(
        len(s.members) if isinstance(s, ParallelGroup) else 1
        for s in seq.steps
        if not isinstance(s, HeisenbergEvolution)
    )
    twos = sum(1 for s in seq.steps if isinstance(s, HeisenbergEvolution))
    assert (singles, twos) == (6, 2)


def test_cnot_level1_fidelity_at_one_site_deviation():
    f = fidelity(simulate(build_cnot(1, 8), -0.49), CNOT)
    assert abs(f - 0.99) < 0.005


def test_simulate_accepts_error_model():
    a = simulate(build_cnot(0, 1), ErrorModel(0.2))
    b = simulate(build_cnot(0, 1), 0.2)
    assert np.array_equal(a, b)


# ---------------------------------------------------------------------------
# cnot_error
# ---------------------------------------------------------------------------


def test_cnot_error_zero_at_zero_delta():
    for level in (0, 1, 2):
        assert cnot_error(level, 0.0, 8) < 1e-12


def test_cnot_error_closed_form_on_grid():
    for delta in np.linspace(-0.9, 0.9, 181):
        assert abs(cnot_error(0, float(delta), 1) - closed_form_error(float(delta))) < 1e-12


def test_cnot_error_symmetry():
    # |cos| evenness; the two simulation paths agree to round-off.
    for delta in np.linspace(0.05, 0.9, 18):
        assert abs(cnot_error(0, float(delta)) - cnot_error(0, -float(delta))) < 1e-15


def test_level_ordering_and_crossover():
    for delta in np.linspace(-0.9, 0.9, 37):
        d = float(delta)
        e0, e1, e2 = (cnot_error(lvl, d, 8) for lvl in (0, 1, 2))
        assert e1 <= e0 + 1e-12
        assert e2 <= e1 + 1e-12
    # Beyond the correctable range the composite loses to the bare gate.
    assert cnot_error(1, 1.2, 8) > cnot_error(0, 1.2, 8)


def test_scaling_exponents():
    deltas = np.geomspace(1e-3, 1e-1, 21)
    for level, lo, hi in ((0, 1.9, 2.1), (1, 5.7, 6.3)):
        errs = np.array([cnot_error(level, float(d), 8) for d in deltas])
        # 1 - F underflows double precision below ~1e-13; fit the clean part.
        usable = errs > 1e-13
        slope = np.polyfit(np.log(deltas[usable]), np.log(errs[usable]), 1)[0]
        assert lo < slope < hi, (level, slope)


def test_wrapper_cancellation():
    # The CNOT error equals the bare core pulse error against the ideal
    # quarter turn: the perfect single-qubit wrappers cancel in the trace.
    for level in (0, 1, 2):
        for delta in (0.3, -0.49):
            whole = cnot_error(level, delta, 8)
            core = 1.0 - fidelity(
                simulate(build_level(math.pi / 2, level, 8), delta), ZZ_QUARTER
            )
            assert abs(whole - core) < 1e-12


def test_simulate_rejects_delta_at_minus_one():
    with pytest.raises(ValueError):
        simulate(build_cnot(0, 1), -1.0)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("level,n_r", [(0, 1), (1, 8), (2, 4)])
def test_dump_parse_round_trip(level, n_r):
    seq = build_cnot(level, n_r)
    assert parse_steps(dump_steps(seq)) == seq


def test_dump_format_lines():
    text = dump_steps(build_cnot(0, 1))
    lines = text.splitlines()
    assert lines[0].startswith("# pulseseq")
    assert lines[1] == f"SQ target H {math.pi!r}"
    assert any(line.startswith("EV ") for line in lines)
    par_idx = next(i for i, line in enumerate(lines) if line.startswith("PAR "))
    assert lines[par_idx] == "PAR 2"
    assert lines[par_idx + 1].startswith("SQ control Z ")
    assert lines[par_idx + 2].startswith("SQ target Z ")


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_steps("XX 1 2 3\n")
    with pytest.raises(ValueError):
        parse_steps("PAR 2\nSQ control Z 1.0\n")


def test_sequences_are_immutable():
    seq = build_cnot(0, 1)
    with pytest.raises(AttributeError):
        seq.level = 3
    with pytest.raises(AttributeError):
        seq.steps[0].angle = 1.0
