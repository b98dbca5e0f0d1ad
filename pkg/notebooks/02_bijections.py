# %% [markdown]
# # Bijections, step by step
#
# A marked peak or valley is turned into a pair of paths and back.  Each
# map is checked here on one example and exhaustively in the test suite.

# %%
from dyckstat import (MarkedPath, Statistic, eta, eta_inv, mark_at, phi, phi_inv,
                      pyramid_drop, pyramid_lift, theta, theta_inv)
from dyckstat.diagram import render_pair, render_path

# %% [markdown]
# ## Symmetric peak of weight one to a pair
#
# Point 10 is the apex of the marked peak.

# %%
m = mark_at("uduuuduudududuuddddudduudd", Statistic.PEAK, 10)
pair = phi(m)
print(m.path, "->", pair)
assert phi_inv(pair) == m

# %% [markdown]
# ## Raising a peak by a pyramid

# %%
lifted = pyramid_lift(m, 2)
print(lifted.path, lifted.record.weight)
assert pyramid_drop(lifted, 2) == m

# %% [markdown]
# ## A valley and its pair

# %%
v = mark_at("uduuudu" "u" "ud" "u" "dduu" "d" "d" "ud" "d" "dduudd", Statistic.VALLEY, 13)
p = theta(v)
print(p)
assert theta_inv(p) == v

# %% [markdown]
# ## Peaks to valleys

# %%
w = eta(MarkedPath("uududd", Statistic.PEAK, 0))
print(w.path, w.statistic.value, w.index)
assert eta_inv(w).path.steps == "uududd"

# %% [markdown]
# ## Pictures
#
# The SVG text can be written to a file and opened in a browser.

# %%
svg = render_pair(p.first, p.second)
print(len(svg), "bytes;", render_path(v).count("<polygon"), "marked region")
