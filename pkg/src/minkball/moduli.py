"""Extremal functions on the Minkowski-Cohn moduli surface.

Every admissible lattice of D_p with three boundary pairs is, up to the
symmetries of the ball, described by a point (p, sigma) of the strip
1 <= sigma <= sigma_p.  The critical determinant is the smaller of the two
endpoint values, which one depending on where p sits relative to 2 and p0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .kernels import (_check_p, ball_area, find_p0, moduli_delta, sigma_p,
                      tau_of_sigma, tau_p)

BRANCH_SIGMA_P = "sigma_p"  # Delta(p, sigma_p) = sigma_p / 2, lattice through (1, 0)
BRANCH_ONE = "one"  # Delta(p, 1), lattice through (-2^(-1/p), 2^(-1/p))


@dataclass(frozen=True)
class ModuliPoint:
    p: float
    sigma: float
    tau: float
    delta: float


class DomainClass(enum.Enum):
    WATSON = "Watson"
    DAVIS = "Davis"
    CHEBYSHEV_MORDELL = "ChebyshevMordell"


def delta_moduli(p: float, sigma: float) -> ModuliPoint:
    tau = tau_of_sigma(p, sigma)
    return ModuliPoint(p, sigma, tau, moduli_delta(p, sigma, tau))


def delta_zero(p: float) -> float:
    _check_p(p)
    return 0.5 * sigma_p(p)


def delta_one(p: float) -> float:
    t = tau_p(p)
    return 4.0 ** (-1.0 / p) * (1.0 + t) / (1.0 - t)


def critical_branch(p: float) -> str:
    """Which endpoint of the moduli strip is critical; sigma_p wins ties at 2 and p0."""
    _check_p(p)
    return BRANCH_SIGMA_P if 2.0 <= p <= find_p0() else BRANCH_ONE


def critical_determinant(p: float) -> float:
    return delta_zero(p) if critical_branch(p) == BRANCH_SIGMA_P else delta_one(p)


def critical_determinant_scaled(p: float, m: int) -> float:
    """Critical determinant of 2^m D_p."""
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    return 4.0 ** int(m) * critical_determinant(p)


def classify_domain(p: float, m: int = 1) -> DomainClass:
    if not (math.isfinite(p) and p >= 1):
        raise DomainError(f"p must be >= 1, got {p}")
    if int(m) != m or m < 1:
        raise DomainError(f"domains are 2^m D_p with m >= 1, got m={m}")
    if p < 2:
        return DomainClass.WATSON
    if p < find_p0():
        return DomainClass.DAVIS
    return DomainClass.CHEBYSHEV_MORDELL


def packing_density(p: float) -> float:
    """Density of the densest lattice packing of translates of D_p.

    A lattice packs D_p exactly when it is admissible for the difference body
    2 D_p, so the density is area(D_p) / Delta(2 D_p).
    """
    return ball_area(p) / critical_determinant_scaled(p, 1)


def hermite_constant_2d(p: float) -> float:
    """sup over lattices of min_norm / det^(1/2), unsquared distance function."""
    return critical_determinant(p) ** -0.5


def hermite_constant_squared(p: float) -> float:
    """The same supremum with the squared distance function (classical convention)."""
    return 1.0 / critical_determinant(p)


def diophantine_constant(p: float) -> float:
    """Smallest c such that |ax+by|^p + |gx+dy|^p <= c |ad-bg|^(p/2) always has a
    nonzero integer solution."""
    return critical_determinant(p) ** (-0.5 * p)


def hexagon_area_moduli(p: float, sigma: float) -> float:
    return 3.0 * delta_moduli(p, sigma).delta


def circumscribed_hexagon_area_moduli(p: float, sigma: float) -> float:
    return 4.0 * delta_moduli(p, sigma).delta


def min_inscribed_hexagon_area(p: float) -> float:
    if critical_branch(p) == BRANCH_SIGMA_P:
        return 1.5 * sigma_p(p)
    return 3.0 * delta_one(p)


def min_circumscribed_hexagon_area(p: float) -> float:
    if critical_branch(p) == BRANCH_SIGMA_P:
        return 2.0 * sigma_p(p)
    t = tau_p(p)
    return 4.0 ** (1.0 - 1.0 / p) * (1.0 + t) / (1.0 - t)
