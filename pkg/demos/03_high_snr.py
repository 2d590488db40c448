# %% [markdown]
# # High-SNR offsets
#
# As `P` grows every scheme behaves like `log2(P) + dR(a)`.  The offsets
# decide the ranking at high power.

# %%
import numpy as np

from hkrates.asymptotics import OFFSET_SCHEMES, crossover, delta_offset, offset_convergence

for a in (0.05, 0.1, 0.3, 0.6, 0.9):
    print(f"a={a:4.2f}  " + "  ".join(f"{s}={delta_offset(s, a):.4f}" for s in OFFSET_SCHEMES))

print("Sym/Asym crossover:", crossover("Sym", "Asym"))
print("Sym/Orth crossover:", crossover("Sym", "Orth"), "vs sqrt(5)-2 =", np.sqrt(5) - 2)

# %% [markdown]
# Finite-power offsets approach the limit roughly like `1/P`.

# %%
for p, off in offset_convergence("Asym", 0.5, np.logspace(1, 8, 8)):
    print(f"P = {p:8.0e}   R - log2 P = {off:.6f}   limit {delta_offset('Asym', 0.5):.6f}")
