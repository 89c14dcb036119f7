"""Exhaustive-search size bounds.

``LATDUAL_BOUND_OVERRIDE=<n>`` raises every bound below to at least ``n``.
Searches past the defaults can be very slow.
"""

import os

DEFAULT_MAX_LATTICE = 12  # sublattice / filter subset scans
DEFAULT_DEFINITIONAL = 20  # subset-quantifier oracles
DEFAULT_MAX_POSET = 5
DEFAULT_MAX_SPACE_POINTS = 4


def _override():
    raw = os.environ.get("LATDUAL_BOUND_OVERRIDE", "").strip()
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


def max_lattice():
    return max(DEFAULT_MAX_LATTICE, _override())


def definitional_bound():
    return max(DEFAULT_DEFINITIONAL, _override())


def max_poset():
    return max(DEFAULT_MAX_POSET, _override())


def max_space_points():
    return max(DEFAULT_MAX_SPACE_POINTS, _override())
