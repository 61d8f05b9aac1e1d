"""Scalar root finding and quadrature behind the closed-form extremal functions."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NoConvergence, NoSignChange

MAX_ITER = 200
ROOT_TOL = 1e-12


@dataclass(frozen=True)
class RootProblem:
    objective: Callable[[float], float]
    bracket_lo: float
    bracket_hi: float
    tolerance: float = ROOT_TOL

    def __post_init__(self):
        if not self.tolerance > 0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")


def solve_root(problem: RootProblem, max_iter: int = MAX_ITER) -> float:
    """Bracketed root of ``problem.objective``.

    Each step tries a secant step through the bracket ends and falls back to
    bisection whenever the secant point leaves the bracket or the bracket
    fails to halve.  Terminates when the bracket is narrower than the
    tolerance or the objective vanishes exactly.
    """
    f = problem.objective
    a, b = float(problem.bracket_lo), float(problem.bracket_hi)
    if a > b:
        a, b = b, a
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.isnan(fa) or math.isnan(fb) or (fa > 0) == (fb > 0):
        raise NoSignChange(f"f({a})={fa} and f({b})={fb} have the same sign")

    tol = problem.tolerance
    width = b - a
    for _ in range(max_iter):
        if b - a <= tol:
            break
        x = b - fb * (b - a) / (fb - fa)
        if not a < x < b:
            x = 0.5 * (a + b)
        # keep the secant point away from the ends so the bracket actually shrinks
        margin = 0.25 * tol
        x = min(max(x, a + margin), b - margin)
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0) == (fa > 0):
            a, fa = x, fx
        else:
            b, fb = x, fx
        if b - a > 0.5 * width:
            m = 0.5 * (a + b)
            fm = f(m)
            if fm == 0.0:
                return m
            if (fm > 0) == (fa > 0):
                a, fa = m, fm
            else:
                b, fb = m, fm
        width = b - a
    else:
        raise NoConvergence(f"no convergence in {max_iter} iterations on [{a}, {b}]")
    return a if abs(fa) <= abs(fb) else b


def _check_p(p: float, lower_inclusive: bool = False) -> None:
    ok = p >= 1 if lower_inclusive else p > 1
    if not ok or not math.isfinite(p):
        bound = ">= 1" if lower_inclusive else "> 1"
        raise DomainError(f"exponent p must be finite and {bound}, got {p}")


def sigma_p(p: float) -> float:
    """(2^p - 1)^(1/p). p = 1 is accepted because lattice-point counting uses it."""
    _check_p(p, lower_inclusive=True)
    # expm1 keeps precision when p is close to 1
    return math.expm1(p * math.log(2.0)) ** (1.0 / p)


def tau_p(p: float) -> float:
    """The root in [0, 1) of 2(1 - t)^p = 1 + t^p."""
    _check_p(p)
    return solve_root(RootProblem(lambda t: 2.0 * (1.0 - t) ** p - 1.0 - t**p, 0.0, 1.0))


def boundary_point(p: float, slope: float) -> tuple[float, float]:
    """The point (1, slope) pushed radially onto |x|^p + |y|^p = 1."""
    c = (1.0 + abs(slope) ** p) ** (-1.0 / p)
    return c, c * slope


def tau_of_sigma(p: float, sigma: float) -> float:
    """Second moduli parameter as a function of the first.

    With A on the curve at slope tau and B on the curve at slope -sigma
    (pointing into the second quadrant), tau is chosen so that A + B lands
    on the curve too, making A, B, A + B three boundary pairs of one lattice.
    """
    _check_p(p)
    sp = sigma_p(p)
    if not 1.0 - 1e-12 <= sigma <= sp + 1e-12:
        raise DomainError(f"sigma must lie in [1, {sp}] for p={p}, got {sigma}")
    sigma = min(max(sigma, 1.0), sp)
    bx, by = boundary_point(p, sigma)
    bx = -bx

    def excess(t: float) -> float:
        ax, ay = boundary_point(p, t)
        return abs(ax + bx) ** p + abs(ay + by) ** p - 1.0

    if sigma == sp:
        return 0.0
    return solve_root(RootProblem(excess, 0.0, 1.0))


def moduli_delta(p: float, sigma: float, tau: float) -> float:
    return (tau + sigma) * (1.0 + tau**p) ** (-1.0 / p) * (1.0 + sigma**p) ** (-1.0 / p)


_p0_lock = threading.Lock()
_p0_value: float | None = None


def find_p0() -> float:
    """Exponent where the two branches of the critical determinant cross."""
    global _p0_value
    if _p0_value is None:
        with _p0_lock:
            if _p0_value is None:

                def gap(p: float) -> float:
                    return moduli_delta(p, 1.0, tau_p(p)) - 0.5 * sigma_p(p)

                _p0_value = solve_root(RootProblem(gap, 2.57, 2.58, 1e-14))
    return _p0_value


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     rel_tol: float = 1e-12, max_depth: int = 50) -> float:
    """Recursive adaptive Simpson with Richardson correction."""

    def simpson(fa, fm, fb, h):
        return h * (fa + 4.0 * fm + fb) / 6.0

    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = simpson(fa, fm, fb, b - a)
    tol = rel_tol * max(abs(whole), 1e-300)

    # explicit stack; recursion depth would otherwise hit Python's limit near cusps
    total = 0.0
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, est, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = simpson(flo, flm, fmid, mid - lo)
        right = simpson(fmid, frm, fhi, hi - mid)
        diff = left + right - est
        if depth >= max_depth or abs(diff) <= 15.0 * eps:
            total += left + right + diff / 15.0
        else:
            stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
            stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
    return total


def ball_area(p: float) -> float:
    """Area of |x|^p + |y|^p < 1, i.e. 4 * int_0^1 (1 - y^p)^(1/p) dy.

    Evaluated in polar form, 2 * int_0^{pi/2} (cos^p + sin^p)^(-2/p) dtheta,
    whose integrand has no infinite-slope endpoint.
    """
    _check_p(p, lower_inclusive=True)

    def r2(theta: float) -> float:
        c, s = abs(math.cos(theta)), abs(math.sin(theta))
        return (c**p + s**p) ** (-2.0 / p)

    # symmetric about pi/4
    return 4.0 * adaptive_simpson(r2, 0.0, 0.25 * math.pi)


def perimeter(p: float) -> float:
    """Arc length of |x|^p + |y|^p = 1.

    Eight copies of the arc from (1, 0) to the diagonal point, parametrized by
    y in [0, 2^(-1/p)] where x(y) stays away from 0 and dx/dy stays bounded.
    """
    _check_p(p)
    top = 2.0 ** (-1.0 / p)

    def speed(y: float) -> float:
        if y == 0.0:
            return 1.0
        x = (1.0 - y**p) ** (1.0 / p)
        dxdy = (y / x) ** (p - 1.0)
        return math.sqrt(1.0 + dxdy * dxdy)

    return 8.0 * adaptive_simpson(speed, 0.0, top, rel_tol=1e-11)
