"""Acceptance suite: every release criterion at its stated tolerance.

Run with ``pytest -s tests/test_acceptance.py -v`` to see one pass/fail line
per criterion.
"""

import filecmp
import math
import time

import numpy as np
import pytest

from robustcnot.characterization import (
    error_vs_measurements,
    exchange_uncertainty,
    min_measurements,
)
from robustcnot.cli import main
from robustcnot.costs import census, cnot_cost, count_recurrence, two_qubit_unit_time
from robustcnot.pulses import build_cnot, cnot_error, simulate
from robustcnot.su4 import CNOT, equal_up_to_global_phase, fidelity


def check(name: str, ok: bool, detail: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def figures(tmp_path_factory):
    """Two full default runs; returns (first-run seconds, dir_a, dir_b)."""
    dir_a = tmp_path_factory.mktemp("figures_a")
    dir_b = tmp_path_factory.mktemp("figures_b")
    start = time.perf_counter()
    assert main(["make-figures", "--out-dir", str(dir_a)]) == 0
    elapsed = time.perf_counter() - start
    assert main(["make-figures", "--out-dir", str(dir_b)]) == 0
    return elapsed, dir_a, dir_b


def test_c01_gate_time_table(tmp_path):
    start = time.perf_counter()
    out = tmp_path / "table1.csv"
    rc = main(["table1", "--out", str(out)])
    elapsed = time.perf_counter() - start
    lines = out.read_text().splitlines()
    rows = [line.split(",") for line in lines[2:] if not line.startswith("#")]
    t1q = [float(r[4]) for r in rows]
    t2q = [float(r[5]) for r in rows]
    total = [float(r[6]) for r in rows]
    ok = (
        rc == 0
        and all(r[1] == "8" for r in rows)
        and all(abs(a - b) <= 0.005 for a, b in zip(t2q, (3.92, 35.28, 2544.08)))
        and t1q[0] == 180.0
        and abs(t1q[1] - 716.0) <= 0.5
        and abs(total[2] - 55800.88) / 55800.88 <= 0.05
        and any(line.startswith("# discrepancy:") for line in lines)
        and elapsed < 1.0
    )
    check(
        "gate-time table (N_r inferred = 8, 2q exact, level-2 within 5%)",
        ok,
        f"t2q={t2q} t1q={t1q} total2={total[2]:.2f} in {elapsed:.2f}s",
    )


def test_c02_gate_count_recurrences():
    ok = count_recurrence(1, 8) == (16, 20, 10) and count_recurrence(2, 8) == (1446, 1450, 800)
    detail = f"level1={count_recurrence(1, 8)} level2={count_recurrence(2, 8)}"
    for level in (1, 2):
        for n_r in (1, 4, 8):
            want = count_recurrence(level, n_r)[2]
            got = census(build_cnot(level, n_r))[1]
            ok = ok and got == want
            if got != want:
                detail += f" mismatch level={level} n_r={n_r}: {got} != {want}"
    check("gate-count recurrences and structural two-qubit census", ok, detail)


def test_c03_closed_form_oracle():
    start = time.perf_counter()
    grid = np.linspace(-0.9, 0.9, 181)
    worst = max(
        abs(cnot_error(0, float(d)) - (1 - math.cos(math.pi * float(d) / 4))) for d in grid
    )
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 1.0
    check("uncorrected error equals 1 - cos(pi*delta/4)", ok, f"worst={worst:.2e} in {elapsed:.2f}s")


def test_c04_scaling_exponents():
    deltas = np.geomspace(1e-3, 1e-1, 21)
    slopes = {}
    for level in (0, 1):
        errs = np.array([cnot_error(level, float(d), 8) for d in deltas])
        usable = errs > 1e-13  # below this 1 - F drowns in double round-off
        slopes[level] = float(np.polyfit(np.log(deltas[usable]), np.log(errs[usable]), 1)[0])
    ok = abs(slopes[0] - 2.0) <= 0.1 and abs(slopes[1] - 6.0) <= 0.3
    check("error scaling exponents 2.0 +- 0.1 and 6.0 +- 0.3", ok, f"slopes={slopes}")


def test_c05_level_ordering_and_exactness():
    grid = np.linspace(-0.949, 0.949, 191)
    ok = True
    worst = ""
    for d in grid:
        e0, e1, e2 = (cnot_error(level, float(d), 8) for level in (0, 1, 2))
        # 1e-12 absorbs matrix round-off where all three errors vanish.
        if not (e2 <= e1 + 1e-12 and e1 <= e0 + 1e-12):
            ok = False
            worst = f"ordering broken at delta={d:.3f}: {e0:.3e} {e1:.3e} {e2:.3e}"
            break
    for level in (0, 1, 2):
        exact = cnot_error(level, 0.0, 8) < 1e-12
        matches = equal_up_to_global_phase(simulate(build_cnot(level, 8), 0.0), CNOT, 1e-9)
        if not (exact and matches):
            ok = False
            worst += f" level {level} not exact at delta=0"
    check("level ordering on (-0.95, 0.95) and exactness at delta = 0", ok, worst)


def test_c06_fidelity_ladder_at_one_site_deviation():
    delta = -0.49
    f0 = fidelity(simulate(build_cnot(0, 8), delta), CNOT)
    f1 = fidelity(simulate(build_cnot(1, 8), delta), CNOT)
    f2 = fidelity(simulate(build_cnot(2, 8), delta), CNOT)
    closed = math.cos(math.pi * delta / 4)
    ok = (
        f0 >= 0.92
        and abs(f0 - closed) < 1e-12
        and abs(f0 - 0.9269) <= 1e-4
        and f1 >= 0.99 - 0.005
        and f2 > 0.9999
    )
    check(
        "fidelity ladder at delta0 = -0.49 (0.9269 / >=0.985 / >0.9999)",
        ok,
        f"f0={f0:.6f} f1={f1:.6f} f2={f2:.6f}",
    )


def test_c07_characterization_budget():
    n = min_measurements(0.1, 10)
    unc = exchange_uncertainty(156, 10)
    err = error_vs_measurements(1, [156], 10)[0].error
    ok = n == 156 and abs(unc - 0.1) <= 1e-12 and err < 1e-4
    check(
        "characterization budget (156 measurements, 10% uncertainty, level-1 error < 1e-4)",
        ok,
        f"n={n} uncertainty={unc} error={err:.2e}",
    )


def test_c08_timing_physics():
    # Recomputed here from the constants alone, independent of the scheduler.
    hbar_ev_s = 6.58211915e-16
    j_ev = 0.132e-6
    expected_ns = 2 * (math.pi / 8) * hbar_ev_s / (2 * j_ev) * 1e9
    got = two_qubit_unit_time(0.132)
    ok = abs(got - expected_ns) < 1e-9 and abs(got - 1.96) <= 0.02
    check("two-qubit unit time from hbar and J_ZZ = 2J alone", ok, f"{got:.4f} ns")


def test_c09_make_figures_performance(figures):
    elapsed, dir_a, _ = figures
    produced = sorted(p.name for p in dir_a.iterdir())
    ok = elapsed < 10.0 and len(produced) == 6
    check("full make-figures under 10 s", ok, f"{elapsed:.2f}s, files={produced}")


def test_c10_determinism(figures):
    _, dir_a, dir_b = figures
    names = sorted(p.name for p in dir_a.iterdir())
    match, mismatch, errors = filecmp.cmpfiles(dir_a, dir_b, names, shallow=False)
    ok = sorted(match) == names and not mismatch and not errors
    check("repeated runs byte-identical", ok, f"match={len(match)}/{len(names)}")
