"""Brute-force search for the smallest admissible three-boundary-pair lattice.

This path shares no formulas with :mod:`minkball.moduli`: it walks a first
basis vector along the boundary of D_p, solves for the second vector so that
the sum also lies on the boundary, and keeps the smallest determinant.  Root
solves go through scipy rather than :mod:`minkball.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NoFeasiblePoint, SingularForm
from .geometry import Ball, Lattice2, Point2, is_admissible, norm_p

DEFAULT_ROUNDS = 3
GRID_DIVISIONS = 2000
PAIR_TOL = 1e-7
ALTERNATE_GAP = 1e-3
FORM_SEED = 20240917


@dataclass(frozen=True)
class SearchCertificate:
    p: float
    best_lattice: Lattice2
    best_det: float
    grid_resolution: float
    refinement_rounds: int
    best_s: float = 0.0
    # (s, det) of other local minima within ALTERNATE_GAP of the best
    alternates: tuple = field(default_factory=tuple)
    admissible: bool = False
    boundary_pairs: bool = False

    @property
    def valid(self) -> bool:
        return self.admissible and self.boundary_pairs


@dataclass(frozen=True)
class VerifyReport:
    p: float
    closed_form: float
    oracle: float
    rel_error: float
    rel_tol: float
    passed: bool
    certificate: SearchCertificate


def _on_boundary(x: float, y: float, p: float) -> tuple[float, float]:
    r = (abs(x) ** p + abs(y) ** p) ** (1.0 / p)
    return x / r, y / r


def _partner(p: float, s: float) -> tuple[Lattice2, float]:
    """Lattice with a1 on the boundary at slope s and a2, a1 + a2 on the boundary."""
    a1 = _on_boundary(1.0, s, p)
    theta1 = math.atan2(a1[1], a1[0])

    def excess(theta: float) -> float:
        a2 = _on_boundary(math.cos(theta), math.sin(theta), p)
        return (abs(a1[0] + a2[0]) ** p + abs(a1[1] + a2[1]) ** p) ** (1.0 / p) - 1.0

    eps = 1e-9
    theta = brentq(excess, theta1 + eps, theta1 + math.pi - eps, xtol=1e-15, rtol=1e-15, maxiter=200)
    a2 = _on_boundary(math.cos(theta), math.sin(theta), p)
    det = a1[0] * a2[1] - a1[1] * a2[0]
    return Lattice2(Point2(*a1), Point2(*a2)), det


def _scan(p: float, grid: np.ndarray) -> np.ndarray:
    dets = np.full(grid.shape, np.inf)
    for k, s in enumerate(grid):
        try:
            dets[k] = _partner(p, float(s))[1]
        except (ValueError, RuntimeError):
            pass
    return dets


def _refine(p: float, s: float, step: float, rounds: int, hi: float) -> tuple[float, float]:
    best_s, best_det = s, _partner(p, s)[1]
    for _ in range(rounds):
        grid = np.clip(np.linspace(best_s - step, best_s + step, 21), 0.0, hi)
        dets = _scan(p, grid)
        k = int(np.argmin(dets))
        if dets[k] < best_det or (dets[k] == best_det and grid[k] < best_s):
            best_s, best_det = float(grid[k]), float(dets[k])
        step /= 10.0
    return best_s, best_det


def has_three_boundary_pairs(lat: Lattice2, p: float, tol: float = PAIR_TOL) -> bool:
    pts = (lat.a1, lat.a2, lat.a1 + lat.a2)
    return all(abs(norm_p(q, p) - 1.0) <= tol for q in pts)


def oracle_min_det(p: float, resolution: float | None = None,
                   rounds: int = DEFAULT_ROUNDS) -> SearchCertificate:
    """Minimise |det(a1, a2)| subject to a1, a2, a1 + a2 on the boundary of D_p.

    a1 is walked over slopes s in [0, sigma_p] on a grid of the given
    resolution (default sigma_p / 2000); every grid-level local minimum is
    then refined ``rounds`` times, each round shrinking the window tenfold.
    Ties go to the smaller s.
    """
    if not (math.isfinite(p) and p > 1):
        raise DomainError(f"p must be > 1, got {p}")
    if rounds < 1:
        raise DomainError(f"rounds must be >= 1, got {rounds}")
    hi = (2.0**p - 1.0) ** (1.0 / p)
    if resolution is None:
        resolution = hi / GRID_DIVISIONS
    if not resolution > 0:
        raise DomainError(f"resolution must be positive, got {resolution}")

    grid = np.linspace(0.0, hi, max(int(math.ceil(hi / resolution)), 2) + 1)
    dets = _scan(p, grid)
    if not np.isfinite(dets).any():
        raise NoFeasiblePoint(f"no boundary partner found for any slope at p={p}")

    padded = np.concatenate(([np.inf], dets, [np.inf]))
    local = np.flatnonzero((dets <= padded[:-2]) & (dets <= padded[2:]) & np.isfinite(dets))
    step = float(grid[1] - grid[0])
    minima = sorted((_refine(p, float(grid[k]), step, rounds, hi) for k in local),
                    key=lambda sd: (sd[1], sd[0]))
    best_s, best_det = minima[0]

    alternates = []
    for s, d in minima[1:]:
        if d - best_det > ALTERNATE_GAP * best_det:
            break
        if all(abs(s - t) > 0.05 * hi for t, _ in [(best_s, best_det), *alternates]):
            alternates.append((s, d))

    lat = _partner(p, best_s)[0]
    return SearchCertificate(
        p=p,
        best_lattice=lat,
        best_det=best_det,
        grid_resolution=resolution,
        refinement_rounds=rounds,
        best_s=best_s,
        alternates=tuple(alternates),
        admissible=is_admissible(lat, Ball(p), 1e-9),
        boundary_pairs=has_three_boundary_pairs(lat, p),
    )


def verify_critical(p: float, rel_tol: float = 1e-3) -> VerifyReport:
    from .moduli import critical_determinant

    cert = oracle_min_det(p)
    closed = critical_determinant(p)
    err = abs(cert.best_det - closed) / closed
    return VerifyReport(p, closed, cert.best_det, err, rel_tol,
                        bool(err <= rel_tol and cert.valid), cert)


def min_form_value(p: float, alpha: float, beta: float, gamma: float, delta: float,
                   box: int = 20) -> float:
    """min over nonzero |x|, |y| <= box of (|ax+by|^p + |gx+dy|^p) / |ad-bg|^(p/2)."""
    det = alpha * delta - beta * gamma
    if det == 0.0:
        raise SingularForm("alpha*delta - beta*gamma vanishes")
    if int(box) != box or box < 1:
        raise DomainError(f"box must be a positive integer, got {box}")
    r = np.arange(-int(box), int(box) + 1, dtype=float)
    x, y = np.meshgrid(r, r, indexing="ij")
    vals = np.abs(alpha * x + beta * y) ** p + np.abs(gamma * x + delta * y) ** p
    vals[int(box), int(box)] = np.inf
    return float(vals.min() / abs(det) ** (0.5 * p))


def form_of_lattice(lat: Lattice2) -> tuple[float, float, float, float]:
    """(alpha, beta, gamma, delta) with (alpha x + beta y, gamma x + delta y) = x a1 + y a2."""
    return lat.a1.x, lat.a2.x, lat.a1.y, lat.a2.y


def random_forms(n: int, seed: int = FORM_SEED, min_det: float = 0.5) -> list[tuple[float, ...]]:
    """Reproducible non-singular forms with entries uniform in [-2, 2]."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        a, b, g, d = rng.uniform(-2.0, 2.0, size=4)
        if abs(a * d - b * g) >= min_det:
            out.append((float(a), float(b), float(g), float(d)))
    return out
