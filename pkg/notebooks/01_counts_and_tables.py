# %% [markdown]
# # Counts and triangles
#
# Every counted family can be evaluated three ways: a closed form, a
# coefficient of its generating function, and brute-force enumeration.
# This script tours the small cases and prints a few triangles.

# %%
from dyckstat import brute_count, count, named_gf, scan_peaks, triangle

# %% [markdown]
# ## Peaks of a single path
#
# Each maximal run u^a d^b is a peak; its weight is min(a, b) and its class
# says which side is longer.

# %%
for rec in scan_peaks("uduuudduuddd"):
    print(rec.start, rec.ups, rec.downs, rec.weight, rec.cls.value)

# %% [markdown]
# ## Three methods, one number

# %%
for cid in ("S", "L", "S_STAR", "V", "V_STAR"):
    n, k = 5, 1
    print(cid, count(cid, n, k), named_gf(cid, n, k)[n], brute_count(cid, n, k))

# %% [markdown]
# ## A triangle as a Riordan array

# %%
R = triangle("2.2", 7)
for n in range(8):
    print(" ".join(f"{R.entry(n, k):5d}" for k in range(n + 1)))

# %% [markdown]
# ## Totals

# %%
for cid in ("SP_TOTAL", "AP_TOTAL", "SV_TOTAL"):
    print(cid, [count(cid, n) for n in range(8)])
