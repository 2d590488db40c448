# %% [markdown]
# # Rates at a single channel
#
# A symmetric two-user Gaussian interference channel with cross gain `a`
# and transmit power `P`.  We compare the optimized rate splits against
# orthogonal signalling and the "treat-within-one-bit" split `lambda = 1/(aP)`.

# %%
import numpy as np

from hkrates import ChannelParams, hk_sum_rate, r_asym, r_etw, r_orth, r_rs, r_sym

ch = ChannelParams(a=0.5, p=100.0)
for fn in (r_sym, r_asym, r_rs, r_orth, r_etw):
    res = fn(ch)
    print(f"{res.scheme:5s} {res.rate:.6f} bits  split={res.split}")

# %% [markdown]
# The symmetric optimum sits where the two bounds on the common rate cross.
# Scanning the diagonal by hand lands on the same value.

# %%
lam = np.linspace(0, 1, 100_001)
diag = hk_sum_rate(ch, lam, lam)
print("grid max on diagonal:", diag.max(), "at", lam[diag.argmax()])
print("closed form:         ", r_sym(ch).rate, "at", r_sym(ch).split.lambda1)

# %% [markdown]
# Giving one user no private power and tuning the other is better here.

# %%
edge = hk_sum_rate(ch, np.zeros_like(lam), lam)
print("grid max on edge:", edge.max(), "at", lam[edge.argmax()])
print("bisection root:  ", r_asym(ch).rate, "at", r_asym(ch).split.lambda2)
