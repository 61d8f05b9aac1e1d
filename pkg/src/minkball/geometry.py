"""Minkowski balls, rank-2 lattices, shells and the two critical lattice families."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DegenerateLattice, DomainError
from .kernels import _check_p, sigma_p, tau_p

BOUNDARY_TOL = 1e-9
ADMISSIBLE_TOL = 1e-9
BOX_SAFETY = 1.5


class Point2(NamedTuple):
    x: float
    y: float

    def __add__(self, other):  # vector addition, not tuple concatenation
        return Point2(self.x + other[0], self.y + other[1])

    def __neg__(self):
        return Point2(-self.x, -self.y)

    def scale(self, t: float) -> "Point2":
        return Point2(t * self.x, t * self.y)


@dataclass(frozen=True)
class Ball:
    """The body 2^m * D_p with D_p = {|x|^p + |y|^p < 1}."""

    p: float
    m: int = 0

    def __post_init__(self):
        _check_p(self.p, lower_inclusive=True)
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"scale exponent m must be a non-negative integer, got {self.m}")

    @property
    def radius(self) -> float:
        return 2.0**self.m

    def contains(self, pt) -> bool:
        return norm_p(pt, self.p) < self.radius


@dataclass(frozen=True)
class Lattice2:
    a1: Point2
    a2: Point2

    def __post_init__(self):
        object.__setattr__(self, "a1", Point2(*map(float, self.a1)))
        object.__setattr__(self, "a2", Point2(*map(float, self.a2)))

    @property
    def det(self) -> float:
        return lattice_det(self)

    def point(self, i: int, j: int) -> Point2:
        return Point2(i * self.a1.x + j * self.a2.x, i * self.a1.y + j * self.a2.y)

    def scaled(self, t: float) -> "Lattice2":
        return Lattice2(self.a1.scale(t), self.a2.scale(t))


@dataclass(frozen=True)
class Shell:
    points: list[Point2]
    norm_value: float
    p: float = field(default=2.0)

    def __len__(self):
        return len(self.points)


def norm_p(pt, p: float) -> float:
    x, y = abs(pt[0]), abs(pt[1])
    if math.isinf(p):
        return max(x, y)
    big = max(x, y)
    if big == 0.0:
        return 0.0
    # factor out the larger coordinate against overflow for large p
    return big * (1.0 + (min(x, y) / big) ** p) ** (1.0 / p)


def _signed_det(lat: Lattice2) -> float:
    return lat.a1.x * lat.a2.y - lat.a1.y * lat.a2.x


def lattice_det(lat: Lattice2) -> float:
    d = abs(_signed_det(lat))
    if d == 0.0 or not math.isfinite(d):
        raise DegenerateLattice(f"basis {lat.a1}, {lat.a2} spans no lattice")
    return d


def gauss_reduce(lat: Lattice2) -> Lattice2:
    """Lagrange-Gauss reduction: |b1| <= |b2| and |<b1, b2>| <= |b1|^2 / 2."""
    lattice_det(lat)
    u, v = lat.a1, lat.a2

    def sq(w):
        return w.x * w.x + w.y * w.y

    if sq(u) > sq(v):
        u, v = v, u
    for _ in range(10_000):
        k = round((u.x * v.x + u.y * v.y) / sq(u))
        v = Point2(v.x - k * u.x, v.y - k * u.y)
        if sq(v) >= sq(u):
            return Lattice2(u, v)
        u, v = v, u
    raise DegenerateLattice("Gauss reduction did not terminate; basis is numerically degenerate")


def _euclidean_bound(radius: float, p: float) -> float:
    # sup of |v|_2 over |v|_p <= radius
    return radius * max(1.0, 2.0 ** (0.5 - 1.0 / p))


def enumerate_points(lat: Lattice2, radius: float, p: float) -> list[Point2]:
    """All nonzero lattice points with p-norm at most ``radius``, in a fixed order."""
    if not radius > 0:
        raise DomainError(f"radius must be positive, got {radius}")
    red = gauss_reduce(lat)
    d = lattice_det(red)
    r2 = _euclidean_bound(radius, p)
    # Cramer's rule bounds the coefficients of any point within Euclidean radius r2
    n1 = math.ceil(BOX_SAFETY * r2 * math.hypot(*red.a2) / d)
    n2 = math.ceil(BOX_SAFETY * r2 * math.hypot(*red.a1) / d)
    out = []
    for i in range(-n1, n1 + 1):
        for j in range(-n2, n2 + 1):
            if i == 0 and j == 0:
                continue
            pt = red.point(i, j)
            if norm_p(pt, p) <= radius:
                out.append(pt)
    out.sort(key=lambda q: (norm_p(q, p), math.atan2(q.y, q.x)))
    return out


def arithmetic_minimum(lat: Lattice2, p: float) -> float:
    red = gauss_reduce(lat)
    r = min(norm_p(red.a1, p), norm_p(red.a2, p))
    return min(norm_p(q, p) for q in enumerate_points(red, r * (1 + 1e-12), p))


def is_admissible(lat: Lattice2, ball: Ball, tol: float = ADMISSIBLE_TOL) -> bool:
    return arithmetic_minimum(lat, ball.p) >= ball.radius * (1.0 - tol)


def critical_lattice_0(p: float) -> Lattice2:
    """Critical lattice through (1, 0): basis (1, 0), (1/2, sigma_p/2)."""
    _check_p(p)
    return Lattice2(Point2(1.0, 0.0), Point2(0.5, 0.5 * sigma_p(p)))


def critical_lattice_1(p: float) -> Lattice2:
    """Critical lattice through (-2^(-1/p), 2^(-1/p)).

    The second basis vector is the boundary point of slope tau_p; together
    with the first, it and their sum give the three boundary pairs.
    """
    _check_p(p)
    h = 2.0 ** (-1.0 / p)
    t = tau_p(p)
    c = (1.0 + t**p) ** (-1.0 / p)
    return Lattice2(Point2(-h, h), Point2(c, c * t))


def shell_on_curve(lat: Lattice2, p: float, level: float = 1.0,
                   tol: float = BOUNDARY_TOL) -> Shell:
    """Lattice points with |x|^p + |y|^p = level^p, within absolute ``tol``."""
    if not level > 0:
        raise DomainError(f"level must be positive, got {level}")
    target = level**p
    # a point whose power sum is within tol of level^p has norm below this
    reach = (target + tol) ** (1.0 / p) * (1 + 1e-12)
    pts = [q for q in enumerate_points(lat, reach, p)
           if abs(abs(q.x) ** p + abs(q.y) ** p - target) <= tol]
    pts.sort(key=lambda q: math.atan2(q.y, q.x))
    return Shell(pts, level, p)
