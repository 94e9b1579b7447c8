"""Trading measurement budget against pulse concatenation.

Concatenating composite pulses is exponentially expensive in gate time.
The alternative: spend N measurements estimating the coupling first, which
shrinks the fractional error the single composite application must absorb.
The uncertainty after N measurements (N_t sampled time points) is
4*sqrt(6) / (N_t * sqrt(N - 6 N_t)); at N_t = 10, reaching the 10% level
takes 156 measurements, and one composite application then sits well below
a 1e-4 error target with a sub-microsecond gate.
"""

from robustcnot import (
    cnot_cost,
    error_vs_measurements,
    error_with_decoherence,
    exchange_uncertainty,
    min_measurements,
)

N_T = 10
print(f"time points N_t = {N_T}")
for target in (0.2, 0.1, 0.05, 0.01):
    n = min_measurements(target, N_T)
    print(f"  {target:5.2f} fractional uncertainty needs N >= {n}")

n10 = min_measurements(0.1, N_T)
print(f"\nat the 10% budget (N = {n10}, uncertainty {exchange_uncertainty(n10, N_T):.3f}):")
grid = [n10]
for level in (0, 1, 2):
    err = error_vs_measurements(level, grid, N_T)[0].error
    print(f"  level {level}: systematic error {err:.3e}")

print("\nversus spending the budget on more measurements, single application:")
for n in (70, 100, 156, 444, 1000, 10000):
    pt = error_vs_measurements(1, [n], N_T)[0]
    print(f"  N={n:6d}: uncertainty {pt.frac_uncertainty:7.4f} -> error {pt.error:.3e}")

t1 = cnot_cost(1, 8).t_total_ns
t2 = cnot_cost(2, 8).t_total_ns
print(
    f"\ngate time: one application {t1:.0f} ns vs two applications {t2:.0f} ns; "
    f"dephasing floors (T2 = 60 ms): {error_with_decoherence(0.0, t1):.2e} "
    f"vs {error_with_decoherence(0.0, t2):.2e}"
)
