# %% [markdown]
# # Self-verification
#
# The verification suites compare printed tables, sequence prefixes, series
# identities and bijection round trips against enumeration.

# %%
from dyckstat import verify_suite

# %%
for suite in ("sequences", "series", "bijections"):
    r = verify_suite(suite, 5)
    print(f"{suite:10s} {len(r.checks) - len(r.failures)}/{len(r.checks)} in {r.seconds:.2f}s")

# %% [markdown]
# ## The printed tables
#
# One printed cell disagrees with all three methods.  The disagreement is a
# transposition of digits in the printed value, so it is reported rather
# than hidden.

# %%
r = verify_suite("tables", 7)
for c in r.failures:
    print(c.name, "-", c.detail)
