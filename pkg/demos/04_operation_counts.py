"""
Operation counts
================

Instrumented inner-loop counts of the row recurrence on dense two-column
models, with a log-log fit.
"""

# %%
import numpy as np

from bubblecut.bench import fit_exponent, run_bench

records = run_bench([25, 50, 100, 200, 400], seed=0)
for r in records:
    print(f"n={r.n:4d} ops={r.op_count:12d} bound={r.bound:14d} time={r.wall_time:.3f}s")
print("fitted exponent:", round(fit_exponent(records), 3))

# %% Successive ratios approach 2**4 as n grows
ops = np.array([r.op_count for r in records], dtype=float)
print("ratios:", np.round(ops[1:] / ops[:-1], 2))

# %% Optional plot
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    n = [r.n for r in records]
    plt.loglog(n, ops, "o-", label="op_count")
    plt.loglog(n, [r.bound for r in records], "--", label="sum c_j^2 c_(j+1)^2")
    plt.xlabel("n")
    plt.legend()
    plt.savefig("operation_counts.png", dpi=120)
