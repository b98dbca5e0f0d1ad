"""Symmetric and asymmetric peaks and valleys in Dyck paths.

Exact counts three ways (closed forms, generating functions, enumeration)
plus the constructive bijections behind them.
"""
from .errors import DomainError, DyckError, InvariantError, ResourceError
from .paths import (
    DYCK,
    FREE,
    LatticePath,
    PathKind,
    enumerate_paths,
    enumerate_primitive,
    enumerate_words,
    partial,
)
from .stats import (
    MarkedPath,
    PeakRecord,
    Statistic,
    SymmetryClass,
    ValleyRecord,
    count_stat,
    mark_at,
    marked_family,
    marked_set,
    scan,
    scan_peaks,
    scan_valleys,
)
from .series import RiordanArray, Series, named_gf, riordan_entry, triangle
from .formulas import count
from .oracle import brute_count
from .bijections import (
    PathPair,
    enumerate_E,
    enumerate_F,
    eta,
    eta_inv,
    phi,
    phi_inv,
    phi_prime,
    phi_prime_inv,
    pyramid_drop,
    pyramid_lift,
    rho,
    rho_inv,
    theta,
    theta_inv,
    valley_shift,
    valley_shift_inv,
)
from .verify import verify_suite

__version__ = "0.1.0"
