"""Pinned parameter grids for the standard verification runs.

Sweep defaults live here, under a version tag, so a report produced by
`spex verify ...` or `spex sweep ...` with no explicit parameters is
reproducible from the package version alone. Bump GRID_VERSION whenever a
value changes.
"""

GRID_VERSION = 1

# all-pairs family ordering runs at these orders (a ranges over every value
# admitted by the sqrt(2n-4)/4 cap at each order)
LEMMA1_SWEEP_ORDERS = (40, 60, 80)

# merge + interval sweep: every split of n-2 into n1 >= n2 >= k+2
LEMMA2_SWEEP = {"n": 300, "k": 0}

# exhaustive admissible-forest maximization
ARGMAX_SWEEP = {"n": 259, "k": 0, "max_parts": 3}

# seeded random entry-bound sample
ENTRY_BOUNDS_SAMPLE = {"count": 200, "n_lo": 20, "n_hi": 100,
                       "seed": 20260817}
