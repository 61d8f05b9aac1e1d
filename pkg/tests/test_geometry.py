import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from minkball.errors import DegenerateLattice, DomainError
from minkball.geometry import (Ball, Lattice2, Point2, arithmetic_minimum, critical_lattice_0,
                               critical_lattice_1, enumerate_points, gauss_reduce,
                               is_admissible, lattice_det, norm_p, shell_on_curve)
from minkball.kernels import sigma_p

Z2 = Lattice2((1, 0), (0, 1))
S2, S6 = math.sqrt(2), math.sqrt(6)
GRID = [1.2, 1.5, 2, 2.3, 2.5725, 3, 5, 10]


def brute_points(lat, radius, p, n=40):
    return sorted(
        (lat.point(i, j) for i, j in itertools.product(range(-n, n + 1), repeat=2)
         if (i, j) != (0, 0) and norm_p(lat.point(i, j), p) <= radius),
        key=lambda q: (round(q.x, 9), round(q.y, 9)))


def key(pts):
    return sorted((round(q[0], 9), round(q[1], 9)) for q in pts)


class TestNorm:
    def test_axis(self):
        for p in (1, 1.5, 2, 7):
            assert norm_p((1, 0), p) == 1.0

    def test_diag(self):
        assert norm_p((1, 1), 2) == pytest.approx(S2)

    def test_shell_point_on_curve(self):
        assert norm_p((0.5, sigma_p(2) / 2), 2) == pytest.approx(1.0, abs=1e-15)

    def test_large_p_no_overflow(self):
        assert norm_p((3.0, 2.0), 2000) == pytest.approx(3.0)

    @settings(max_examples=100)
    @given(st.floats(-50, 50), st.floats(-50, 50), st.floats(0, 10), st.floats(1, 12))
    def test_homogeneous_symmetric(self, x, y, t, p):
        assert norm_p((t * x, t * y), p) == pytest.approx(t * norm_p((x, y), p), rel=1e-12, abs=1e-300)
        assert norm_p((-x, -y), p) == norm_p((x, y), p)


class TestLattice:
    def test_det(self):
        assert lattice_det(Z2) == 1
        assert lattice_det(Lattice2((1, 0), (0.5, math.sqrt(3) / 2))) == pytest.approx(0.8660254037844386)
        lat = Lattice2((-1 / S2, 1 / S2), ((S6 + S2) / 4, (S6 - S2) / 4))
        assert lattice_det(lat) == pytest.approx(math.sqrt(3) / 2, abs=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateLattice):
            lattice_det(Lattice2((1, 2), (2, 4)))

    def test_gauss_reduce_basic(self):
        red = gauss_reduce(Lattice2((1, 0), (5, 1)))
        assert lattice_det(red) == pytest.approx(1)
        assert math.hypot(*red.a1) <= math.hypot(*red.a2)
        assert key([red.a1, red.a2, -red.a1, -red.a2]) == key([(1, 0), (0, 1), (-1, 0), (0, -1)])

    def test_gauss_reduce_idempotent(self):
        lat = critical_lattice_0(2)
        once = gauss_reduce(lat)
        twice = gauss_reduce(once)
        assert key([once.a1, once.a2]) == key([twice.a1, twice.a2])

    def test_gauss_reduce_shortest(self):
        lat = Lattice2((100, 0), (99, 1))
        red = gauss_reduce(lat)
        assert lattice_det(red) == pytest.approx(100)
        # exhaustive small-coefficient search for the shortest vector
        shortest = min(math.hypot(*lat.point(i, j)) for i in range(-120, 121)
                       for j in range(-120, 121) if (i, j) != (0, 0))
        assert math.hypot(*red.a1) == pytest.approx(shortest)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-3, 3),
           st.floats(0.3, 3), st.floats(-2, 2), st.floats(0.3, 3))
    def test_det_invariance_unimodular(self, a, b, k, x1, x2, y2):
        lat = Lattice2((x1, 0.0), (x2, y2))
        # [[1, k], [a, 1 + a k]] has determinant 1
        u = lat.point(1, k)
        v = lat.point(a, 1 + a * k)
        other = Lattice2(u, v)
        d = lattice_det(lat)
        assert lattice_det(other) == pytest.approx(d, rel=1e-9)
        assert lattice_det(gauss_reduce(other)) == pytest.approx(d, rel=1e-9)
        assert arithmetic_minimum(other, 2) == pytest.approx(arithmetic_minimum(lat, 2), rel=1e-9)


class TestEnumerate:
    def test_unit_circle(self):
        assert key(enumerate_points(Z2, 1, 2)) == key([(1, 0), (-1, 0), (0, 1), (0, -1)])

    def test_hexagonal_six(self):
        assert len(enumerate_points(critical_lattice_0(2), 1 + 1e-12, 2)) == 6

    def test_radius_2_5(self):
        assert len(enumerate_points(Z2, 2.5, 2)) == 20

    @pytest.mark.parametrize("lat,r,p", [
        (Lattice2((1, 0), (5, 1)), 3.2, 2),
        (Lattice2((0.7, 0.1), (0.3, 1.9)), 2.5, 1.5),
        (Lattice2((1.0, 0.2), (0.1, 0.9)), 2.0, 6),
        (Lattice2((100, 0), (99, 1)), 3.0, 3),
    ])
    def test_matches_brute_force(self, lat, r, p):
        assert key(enumerate_points(lat, r, p)) == key(brute_points(lat, r, p, n=140))

    def test_bad_radius(self):
        with pytest.raises(DomainError):
            enumerate_points(Z2, 0, 2)


class TestMinimumAdmissible:
    def test_minima(self):
        assert arithmetic_minimum(Z2, 2) == 1
        assert arithmetic_minimum(critical_lattice_0(2), 2) == pytest.approx(1, abs=1e-15)
        assert arithmetic_minimum(critical_lattice_0(2).scaled(3), 2) == pytest.approx(3)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.1, 10), st.sampled_from(GRID))
    def test_homogeneity(self, t, p):
        lat = critical_lattice_1(p)
        assert arithmetic_minimum(lat.scaled(t), p) == pytest.approx(t * arithmetic_minimum(lat, p), rel=1e-12)

    def test_admissible(self):
        assert is_admissible(Z2, Ball(2))
        assert not is_admissible(Z2.scaled(0.5), Ball(2))
        assert is_admissible(Z2.scaled(2), Ball(2, 1))
        assert not is_admissible(Z2, Ball(2, 1))

    def test_ball_validation(self):
        with pytest.raises(DomainError):
            Ball(0.5)
        with pytest.raises(DomainError):
            Ball(2, -1)
        assert Ball(2, 1).contains((1.9, 0)) and not Ball(2).contains((1, 0))


class TestCriticalLattices:
    def test_lattice0_p2(self):
        lat = critical_lattice_0(2)
        assert lat.a1 == (1, 0)
        assert lat.a2 == pytest.approx((0.5, math.sqrt(3) / 2), abs=1e-15)
        assert lat.det == pytest.approx(math.sqrt(3) / 2)

    def test_lattice0_p3_det(self):
        assert critical_lattice_0(3).det == pytest.approx(7 ** (1 / 3) / 2, rel=1e-15)

    def test_lattice1_p2(self):
        lat = critical_lattice_1(2)
        assert lat.a1 == pytest.approx((-1 / S2, 1 / S2), abs=1e-15)
        assert lat.a2 == pytest.approx(((S6 + S2) / 4, (S6 - S2) / 4), abs=1e-12)
        assert lat.det == pytest.approx(math.sqrt(3) / 2, abs=1e-12)

    def test_lattice1_gram_p2(self):
        lat = critical_lattice_1(2)
        dot = lambda u, v: u.x * v.x + u.y * v.y
        assert dot(lat.a1, lat.a1) == pytest.approx(1)
        assert dot(lat.a2, lat.a2) == pytest.approx(1)
        assert 2 * dot(lat.a1, lat.a2) == pytest.approx(-1)

    @pytest.mark.parametrize("p", GRID)
    def test_admissible_with_six_shell(self, p):
        lat0, lat1 = critical_lattice_0(p), critical_lattice_1(p)
        # third boundary pair: a2 - a1 for the first family, a1 + a2 for the second
        assert norm_p(lat0.a2 + -lat0.a1, p) == pytest.approx(1, abs=1e-10)
        assert norm_p(lat1.a1 + lat1.a2, p) == pytest.approx(1, abs=1e-10)
        for lat in (lat0, lat1):
            assert is_admissible(lat, Ball(p))
            assert len(shell_on_curve(lat, p)) == 6

    def test_domain(self):
        with pytest.raises(DomainError):
            critical_lattice_0(1)
        with pytest.raises(DomainError):
            critical_lattice_1(0.5)


class TestShell:
    @pytest.mark.parametrize("p", [1.5, 2, 3, 5])
    def test_lattice0_shell(self, p):
        s = sigma_p(p)
        expected = [(1, 0), (-1, 0), (0.5, s / 2), (-0.5, s / 2), (0.5, -s / 2), (-0.5, -s / 2)]
        got = shell_on_curve(critical_lattice_0(p), p).points
        assert len(got) == 6
        for q in expected:
            assert min(math.dist(q, g) for g in got) <= 1e-10

    def test_lattice1_p2_shell(self):
        a, b, h = (S6 + S2) / 4, (S6 - S2) / 4, 1 / S2
        expected = [(-h, h), (h, -h), (a, b), (-a, -b), (b, a), (-b, -a)]
        got = shell_on_curve(critical_lattice_1(2), 2).points
        assert len(got) == 6
        for q in expected:
            assert min(math.dist(q, g) for g in got) <= 1e-12

    def test_integer_level5(self):
        sh = shell_on_curve(Z2, 2, 5)
        expected = {(3, 4), (4, 3), (5, 0), (0, 5)}
        expected = {(sx * x, sy * y) for x, y in expected for sx in (1, -1) for sy in (1, -1)}
        assert len(sh) == 12
        assert {(round(q.x), round(q.y)) for q in sh.points} == expected

    @pytest.mark.parametrize("p", GRID)
    def test_closed_under_negation(self, p):
        for lat in (critical_lattice_0(p), critical_lattice_1(p)):
            pts = shell_on_curve(lat, p).points
            assert key(pts) == key([-q for q in pts])
            assert all(abs(abs(q.x) ** p + abs(q.y) ** p - 1) <= 1e-9 for q in pts)

    def test_bad_level(self):
        with pytest.raises(DomainError):
            shell_on_curve(Z2, 2, 0)
