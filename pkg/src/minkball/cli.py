"""Command-line interface.

Every subcommand prints JSON (default) or CSV records with the fields
quantity, p, m, sigma, value, branch, provenance.  Exit status: 0 success,
1 domain error, 2 verification failure, 64 usage error.

    minkball critical-det --p 2
    minkball theta --mmax 12
    minkball verify --p-grid 1.5,2,2.3,3,5 --rel-tol 1e-3
    minkball sweep --quantity critical-det,packing-density --p-min 1.1 --p-max 4 --steps 30
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import enumeration as en
from . import geometry as geo
from . import kernels as kn
from . import moduli as mo
from . import oracle as orc
from .errors import MinkballError

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64
FIELDS = ("quantity", "p", "m", "sigma", "value", "branch", "provenance")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _num(v):
    """Round reals to 15 significant digits so output is byte-stable."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        return float(f"{v:.15g}") if math.isfinite(v) else str(v)
    if isinstance(v, dict):
        return {k: _num(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_num(x) for x in v]
    return v


def record(quantity, value, p=None, m=None, sigma=None, branch=None, provenance="closed-form"):
    return {"quantity": quantity, "p": p, "m": m, "sigma": sigma, "value": value,
            "branch": branch, "provenance": provenance}


def _branch_label(p):
    b = mo.critical_branch(p)
    return "Delta(p,sigma_p)" if b == mo.BRANCH_SIGMA_P else "Delta(p,1)"


def _pt(q):
    return [q[0], q[1]]


def _lattice_value(lat, p, with_shell):
    red = geo.gauss_reduce(lat)
    out = {
        "basis": [_pt(lat.a1), _pt(lat.a2)],
        "det": geo.lattice_det(lat),
        "reduced_basis": [_pt(red.a1), _pt(red.a2)],
        "arithmetic_minimum": geo.arithmetic_minimum(lat, p),
        "admissible": geo.is_admissible(lat, geo.Ball(p)),
    }
    if with_shell:
        out["shell"] = [_pt(q) for q in geo.shell_on_curve(lat, p).points]
    return out


def _certificate_value(cert):
    return {
        "best_det": cert.best_det,
        "best_s": cert.best_s,
        "basis": [_pt(cert.best_lattice.a1), _pt(cert.best_lattice.a2)],
        "grid_resolution": cert.grid_resolution,
        "refinement_rounds": cert.refinement_rounds,
        "admissible": cert.admissible,
        "three_boundary_pairs": cert.boundary_pairs,
        "alternates": [list(a) for a in cert.alternates],
    }


# name -> (function of p, branch-aware)
SWEEP_QUANTITIES = {
    "critical-det": (mo.critical_determinant, True),
    "delta0": (mo.delta_zero, False),
    "delta1": (mo.delta_one, False),
    "packing-density": (mo.packing_density, True),
    "hermite": (mo.hermite_constant_2d, True),
    "hermite-squared": (mo.hermite_constant_squared, True),
    "dioph-const": (mo.diophantine_constant, True),
    "hexagon-inscribed": (mo.min_inscribed_hexagon_area, True),
    "hexagon-circumscribed": (mo.min_circumscribed_hexagon_area, True),
    "tau": (kn.tau_p, False),
    "sigma": (kn.sigma_p, False),
    "area": (kn.ball_area, False),
    "perimeter": (kn.perimeter, False),
}


def cmd_critical_det(a):
    if a.m:
        v = mo.critical_determinant_scaled(a.p, a.m)
    else:
        v = mo.critical_determinant(a.p)
    return [record("critical_determinant", v, p=a.p, m=a.m, branch=_branch_label(a.p))]


def cmd_delta_moduli(a):
    pt = mo.delta_moduli(a.p, a.sigma)
    v = 4.0**a.m * pt.delta
    return [record("delta_moduli", v, p=a.p, m=a.m, sigma=a.sigma, branch=f"tau={pt.tau!r}")]


def cmd_tau(a):
    if a.sigma is None:
        return [record("tau_p", kn.tau_p(a.p), p=a.p)]
    return [record("tau_of_sigma", kn.tau_of_sigma(a.p, a.sigma), p=a.p, sigma=a.sigma)]


def cmd_sigma(a):
    return [record("sigma_p", kn.sigma_p(a.p), p=a.p)]


def cmd_p0(a):
    p0 = kn.find_p0()
    return [record("p0", p0, branch=None, provenance="root of Delta(p,1)-Delta(p,sigma_p)")]


def cmd_classify(a):
    return [record("domain_class", mo.classify_domain(a.p, a.m).value, p=a.p, m=a.m)]


def cmd_packing(a):
    return [record("packing_density", mo.packing_density(a.p), p=a.p, branch=_branch_label(a.p),
                   provenance="area / Delta(2 D_p)")]


def cmd_hermite(a):
    br = _branch_label(a.p)
    return [record("hermite_constant", mo.hermite_constant_2d(a.p), p=a.p, branch=br,
                   provenance="m(F,L)/d(L)^(1/2), unsquared distance function"),
            record("hermite_constant_squared", mo.hermite_constant_squared(a.p), p=a.p, branch=br,
                   provenance="m(F,L)^2/d(L), classical squared convention")]


def cmd_dioph(a):
    return [record("diophantine_constant", mo.diophantine_constant(a.p), p=a.p,
                   branch=_branch_label(a.p))]


def cmd_hexagon(a):
    if a.kind == "moduli":
        if a.sigma is None:
            raise UsageError("hexagon moduli requires --sigma")
        return [record("hexagon_area_inscribed_moduli", mo.hexagon_area_moduli(a.p, a.sigma),
                       p=a.p, sigma=a.sigma),
                record("hexagon_area_circumscribed_moduli",
                       mo.circumscribed_hexagon_area_moduli(a.p, a.sigma), p=a.p, sigma=a.sigma)]
    fn = mo.min_inscribed_hexagon_area if a.kind == "inscribed" else mo.min_circumscribed_hexagon_area
    return [record(f"min_{a.kind}_hexagon_area", fn(a.p), p=a.p, branch=_branch_label(a.p))]


def cmd_lattice(a):
    lat = geo.critical_lattice_0(a.p) if a.which == "0" else geo.critical_lattice_1(a.p)
    return [record(f"critical_lattice_{a.which}", _lattice_value(lat, a.p, a.shell), p=a.p,
                   branch="Delta(p,sigma_p)" if a.which == "0" else "Delta(p,1)")]


def cmd_points(a):
    lat = geo.critical_lattice_0(a.p) if a.which == "0" else geo.critical_lattice_1(a.p)
    pts = geo.enumerate_points(lat, a.radius, a.p)
    return [record("lattice_points", {"radius": a.radius, "count": len(pts),
                                      "points": [_pt(q) for q in pts]}, p=a.p)]


def cmd_norm(a):
    return [record("norm_p", geo.norm_p((a.x, a.y), a.p), p=a.p)]


def _parse_floats(s, n=None):
    try:
        vals = [float(t) for t in s.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} comma-separated numbers, got {s!r}")
    return vals


def cmd_theta(a):
    if a.lattice is not None:
        lat = geo.critical_lattice_0(2.0) if a.lattice == "0" else geo.critical_lattice_1(2.0)
        form = en.gram_of_lattice(lat)
    else:
        form = en.GramForm(*_parse_floats(a.form, 3))
    coeffs = en.theta_coefficients(form, a.mmax)
    return [record("theta_coefficients", coeffs,
                   provenance=f"Q=({form.a!r},{form.b!r},{form.c!r})")]


def cmd_count(a):
    n = en.count_points_on_dilate(a.p, a.N, a.tol)
    out = [record("count_points_on_dilate", n, p=a.p, m=None,
                  provenance=f"N={a.N}")]
    # the curve-length formula is ambiguous between arc length and area; report both
    for label, length in (("perimeter", a.N * kn.perimeter(a.p)), ("area_formula", a.N * kn.ball_area(a.p))):
        if length > 3:
            out.append(record(f"jarnik_main_term[{label}]", en.jarnik_main_term(length), p=a.p,
                              provenance=f"N={a.N}, length={length!r}"))
    return out


def cmd_jarnik(a):
    return [record("jarnik_main_term", en.jarnik_main_term(a.length))]


def cmd_genus(a):
    return [record("genus", en.genus(a.d), provenance=f"d={a.d}")]


def cmd_area(a):
    return [record("ball_area", kn.ball_area(a.p), p=a.p, provenance="quadrature")]


def cmd_perimeter(a):
    return [record("perimeter", kn.perimeter(a.p), p=a.p, provenance="quadrature")]


def cmd_min_form(a):
    al, be, ga, de = _parse_floats(a.form, 4)
    v = orc.min_form_value(a.p, al, be, ga, de, a.box)
    return [record("min_form_value", v, p=a.p, provenance=f"box={a.box}")]


def cmd_oracle(a):
    cert = orc.oracle_min_det(a.p, a.resolution, a.rounds)
    return [record("oracle_min_det", _certificate_value(cert), p=a.p, provenance="grid search")]


def cmd_verify(a):
    rows, ok = [], True
    for p in sorted(_parse_floats(a.p_grid)):
        rep = orc.verify_critical(p, a.rel_tol)
        ok &= rep.passed
        rows.append(record("verify_critical", {
            "closed_form": rep.closed_form, "oracle": rep.oracle, "rel_error": rep.rel_error,
            "rel_tol": rep.rel_tol, "passed": rep.passed,
            "admissible": rep.certificate.admissible,
            "three_boundary_pairs": rep.certificate.boundary_pairs,
        }, p=p, branch=_branch_label(p), provenance="closed form vs grid search"))
    return rows, (EXIT_OK if ok else EXIT_VERIFY)


def cmd_sweep(a):
    names = [q.strip() for q in a.quantity.split(",") if q.strip()]
    unknown = [q for q in names if q not in SWEEP_QUANTITIES]
    if unknown:
        raise UsageError(f"unknown quantities {unknown}; choose from {sorted(SWEEP_QUANTITIES)}")
    if a.steps < 1:
        raise UsageError("--steps must be >= 1")
    if a.steps == 1:
        grid = [a.p_min]
    else:
        h = (a.p_max - a.p_min) / (a.steps - 1)
        grid = [a.p_min + k * h for k in range(a.steps)]
    rows = []
    for p in grid:
        for q in names:
            fn, branchy = SWEEP_QUANTITIES[q]
            rows.append(record(q, fn(p), p=p, branch=_branch_label(p) if branchy else None))
    return rows


def build_parser():
    ap = _Parser(prog="minkball", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, *, p=True, help=None):
        sp = sub.add_parser(name, help=help)
        if p:
            sp.add_argument("--p", type=float, required=True)
        sp.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("critical-det", cmd_critical_det, help="critical determinant of 2^m D_p")
    sp.add_argument("--m", type=int, default=0)
    sp = add("delta-moduli", cmd_delta_moduli, help="moduli surface value Delta(p, sigma)")
    sp.add_argument("--sigma", type=float, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp = add("tau", cmd_tau, help="tau_p, or tau(p, sigma) with --sigma")
    sp.add_argument("--sigma", type=float)
    add("sigma", cmd_sigma, help="sigma_p = (2^p - 1)^(1/p)")
    add("p0", cmd_p0, p=False, help="branch crossing exponent p0")
    sp = add("classify", cmd_classify, help="Watson / Davis / Chebyshev-Mordell")
    sp.add_argument("--m", type=int, default=1)
    add("packing-density", cmd_packing)
    add("hermite", cmd_hermite)
    add("dioph-const", cmd_dioph)
    sp = add("hexagon", cmd_hexagon, help="minimal hexagon areas, or moduli values with --sigma")
    sp.add_argument("kind", choices=("inscribed", "circumscribed", "moduli"))
    sp.add_argument("--sigma", type=float)
    sp = add("lattice", cmd_lattice, help="critical lattice basis, minimum, admissibility")
    sp.add_argument("which", choices=("0", "1"))
    sp.add_argument("--shell", action="store_true")
    sp = add("points", cmd_points, help="enumerate points of a critical lattice")
    sp.add_argument("which", choices=("0", "1"))
    sp.add_argument("--radius", type=float, default=1.0)
    sp = add("norm", cmd_norm)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--y", type=float, required=True)
    sp = add("theta", cmd_theta, p=False, help="theta coefficients of a binary form")
    sp.add_argument("--mmax", type=int, default=12)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--form", default="1,-1,1", help="a,b,c of a x^2 + b xy + c y^2")
    g.add_argument("--lattice", choices=("0", "1"), help="Gram form of a critical lattice at p=2")
    sp = add("count-points", cmd_count, help="integer points on N * C_p")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp = add("jarnik", cmd_jarnik, p=False)
    sp.add_argument("--length", type=float, required=True)
    sp = add("genus", cmd_genus, p=False)
    sp.add_argument("--d", type=int, required=True)
    add("area", cmd_area)
    add("perimeter", cmd_perimeter)
    sp = add("min-form", cmd_min_form, help="box minimum of the Diophantine form ratio")
    sp.add_argument("--form", required=True, help="alpha,beta,gamma,delta")
    sp.add_argument("--box", type=int, default=20)
    sp = add("oracle", cmd_oracle, help="brute-force minimum determinant search")
    sp.add_argument("--resolution", type=float)
    sp.add_argument("--rounds", type=int, default=orc.DEFAULT_ROUNDS)
    sp = add("verify", cmd_verify, p=False, help="closed form vs oracle on a p-grid")
    sp.add_argument("--p-grid", default="1.5,2,2.3,2.5725,3,5")
    sp.add_argument("--rel-tol", type=float, default=1e-3)
    sp = add("sweep", cmd_sweep, p=False, help="tabulate quantities over a p-grid")
    sp.add_argument("--quantity", default="critical-det")
    sp.add_argument("--p-min", type=float, required=True)
    sp.add_argument("--p-max", type=float, required=True)
    sp.add_argument("--steps", type=int, default=50)
    return ap


def render(rows, fmt):
    rows = [_num(r) for r in rows]
    if fmt == "json":
        body = rows[0] if len(rows) == 1 else rows
        return json.dumps(body, indent=None, separators=(", ", ": ")) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in rows:
        w.writerow(["" if r[k] is None else
                    json.dumps(r[k]) if isinstance(r[k], (list, dict, bool)) else r[k]
                    for k in FIELDS])
    return buf.getvalue()


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.fn(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except (MinkballError, ValueError, OverflowError) as exc:
        print(f"minkball: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    stdout.write(render(result, args.format))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
