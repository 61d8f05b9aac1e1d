"""Theta coefficients of binary forms and integer points on dilated Minkowski curves."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NotPositiveDefinite
from .geometry import Lattice2, lattice_det

INTEGRAL_TOL = 1e-9


@dataclass(frozen=True)
class GramForm:
    """Q(x, y) = a x^2 + b xy + c y^2."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a > 0 and 4 * self.a * self.c - self.b * self.b > 0):
            raise NotPositiveDefinite(f"form ({self.a}, {self.b}, {self.c}) is not positive definite")

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    @property
    def min_eigenvalue(self) -> float:
        half = 0.5 * (self.a + self.c)
        return half - math.hypot(0.5 * (self.a - self.c), 0.5 * self.b)

    def integral(self) -> "GramForm | None":
        """The same form with integer coefficients, if it is integral to INTEGRAL_TOL."""
        r = tuple(round(v) for v in (self.a, self.b, self.c))
        if all(abs(v - w) <= INTEGRAL_TOL * max(1.0, abs(v)) for v, w in zip((self.a, self.b, self.c), r)):
            return GramForm(*r)
        return None


def gram_of_lattice(lat: Lattice2) -> GramForm:
    lattice_det(lat)
    u, v = lat.a1, lat.a2
    return GramForm(u.x * u.x + u.y * u.y, 2.0 * (u.x * v.x + u.y * v.y), v.x * v.x + v.y * v.y)


def theta_coefficients(form: GramForm, m_max: int) -> list[int]:
    """[N_0, ..., N_{m_max}] where N_m counts integer (x, y) with Q(x, y) = m.

    Forms that are integral up to rounding are counted in exact integer
    arithmetic; other forms match values within INTEGRAL_TOL relative.
    """
    if int(m_max) != m_max or m_max < 0:
        raise DomainError(f"m_max must be a non-negative integer, got {m_max}")
    m_max = int(m_max)
    exact = form.integral()
    q = exact or form
    n = math.ceil(math.sqrt(m_max / form.min_eigenvalue)) if m_max else 0
    counts = [0] * (m_max + 1)
    for x in range(-n, n + 1):
        for y in range(-n, n + 1):
            val = q(x, y)
            if exact is None:
                k = round(val)
                if abs(val - k) > INTEGRAL_TOL * max(1.0, abs(val)):
                    continue
                val = k
            if val <= m_max:
                counts[int(val)] += 1
    return counts


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for non-negative integers."""
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def count_points_on_dilate(p: float, N: int, tol: float = 1e-9) -> int:
    """Integer points on N * C_p, i.e. with |x|^p + |y|^p = N^p.

    Integer exponents are counted exactly; for other p a point counts when its
    p-norm is within tol * N of N, and generically only the four axis points
    qualify.
    """
    if not (math.isfinite(p) and p >= 1):
        raise DomainError(f"p must be >= 1, got {p}")
    if int(N) != N or N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")
    N = int(N)
    count = 0
    if float(p).is_integer():
        k = int(p)
        target = N**k
        for x in range(-N, N + 1):
            rest = target - abs(x) ** k
            y = _iroot(rest, k)
            if y**k == rest:
                count += 1 if y == 0 else 2
        return count
    for x in range(-N, N + 1):
        rest = max(N**p - abs(x) ** p, 0.0)
        y0 = rest ** (1.0 / p)
        for y in {math.floor(y0), math.ceil(y0)}:
            if abs((abs(x) ** p + y**p) ** (1.0 / p) - N) <= tol * N:
                count += 1 if y == 0 else 2
    return count


def jarnik_main_term(length: float) -> float:
    """Leading term 3 (4 pi)^(-1/3) length^(2/3) of Jarnik's bound on integer
    points of a strictly convex curve."""
    if not length > 3:
        raise DomainError(f"the bound applies to curves longer than 3, got {length}")
    return 3.0 * (4.0 * math.pi) ** (-1.0 / 3.0) * length ** (2.0 / 3.0)


def genus(d: int) -> int:
    """Genus of the projective Fermat-type curve x^(2d) + y^(2d) = z^(2d)."""
    if int(d) != d or d < 1:
        raise DomainError(f"d must be a positive integer, got {d}")
    d = int(d)
    return (2 * d - 1) * (d - 1)
