# %% [markdown]
# # Which strategy wins where
#
# Labels: 1 symmetric split with private messages only, 2 orthogonal,
# 3 asymmetric split, 4 symmetric split.

# %%
import numpy as np

from hkrates import GridScan, boundary_scan, scan

for b in boundary_scan(100.0):
    print(f"a = {b.a:.4f}: {b.left.name} -> {b.right.name}")

# %% [markdown]
# A coarse text map over `a` (columns) and `P` in dB (rows).

# %%
grid = scan(GridScan(x_min=0.02, x_max=0.98, x_steps=49, y_min=0, y_max=40, y_steps=11))
labels = np.array([int(r.label) for r in grid.rows]).reshape(grid.y_steps, grid.x_steps)
for p_db, line in zip(grid.y_values[::-1], labels[::-1]):
    print(f"{p_db:5.1f} dB  " + "".join(map(str, line)))

# %% [markdown]
# The same information in SNR/INR coordinates.  Zeros mark INR >= SNR,
# which is outside the weak-interference model.

# %%
grid = scan(GridScan(axes="snr-inr", x_min=0, x_max=40, x_steps=41, y_min=0, y_max=40, y_steps=21))
labels = np.array([int(r.label) for r in grid.rows]).reshape(grid.y_steps, grid.x_steps)
for inr, line in zip(grid.y_values[::-1], labels[::-1]):
    print(f"INR {inr:4.0f}  " + "".join(map(str, line)))
