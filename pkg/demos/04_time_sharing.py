# %% [markdown]
# # How much does time sharing buy?
#
# Two-slot sharing with unequal powers and the four-slot scheme that mixes
# the asymmetric split with its mirror image, both against the best
# single-slot strategy at P = 20 dB.

# %%
import numpy as np

from hkrates import ChannelParams, r_sason, r_ts, ts_advantage

rows = []
for a in np.linspace(0.02, 0.98, 25):
    ts, sason = ts_advantage(ChannelParams(float(a), 100.0))
    rows.append((a, ts, sason))
    print(f"a={a:5.3f}  two-slot +{ts:.4f}  four-slot +{sason:.4f}")

best = max(rows, key=lambda r: max(r[1], r[2]))
print(f"largest gain {max(best[1:]):.4f} bits at a = {best[0]:.3f}")

# %% [markdown]
# The winning configuration at that point.

# %%
ch = ChannelParams(float(best[0]), 100.0)
print(r_ts(ch).extras["config"])
print(r_sason(ch).extras["config"])
