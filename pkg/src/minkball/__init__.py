"""Extremal functions of the geometry of numbers for planar Minkowski balls."""

from .enumeration import (GramForm, count_points_on_dilate, genus, gram_of_lattice,
                          jarnik_main_term, theta_coefficients)
from .errors import (DegenerateLattice, DomainError, MinkballError, NoConvergence,
                     NoFeasiblePoint, NoSignChange, NotPositiveDefinite, SingularForm)
from .geometry import (Ball, Lattice2, Point2, Shell, arithmetic_minimum, critical_lattice_0,
                       critical_lattice_1, enumerate_points, gauss_reduce, is_admissible,
                       lattice_det, norm_p, shell_on_curve)
from .kernels import (RootProblem, ball_area, find_p0, perimeter, sigma_p, solve_root,
                      tau_of_sigma, tau_p)
from .moduli import (DomainClass, ModuliPoint, classify_domain, critical_determinant,
                     critical_determinant_scaled, delta_moduli, diophantine_constant,
                     hermite_constant_2d, hexagon_area_moduli, min_circumscribed_hexagon_area,
                     min_inscribed_hexagon_area, packing_density)
from .oracle import SearchCertificate, min_form_value, oracle_min_det, verify_critical

__version__ = "0.1.0"
