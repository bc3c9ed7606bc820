import math

import numpy as np

from sphere3c import kernel
from sphere3c.embedding import domain_sample, dot4, embed
from sphere3c.errors import Sphere3CError
from utility.logger import get_logger, log, log_error, log_success, log_subsection, log_stats
from utility.reports import VerificationReport, summarize, write_table

CSV_COLUMNS = ["psi", "tau", "spectral", "theta", "abs_diff"]
DISTANCE_TOL = 1e-12
SEMIGROUP_TOL = 1e-14
POLE_TARGETS = [J * (J + 2) / 2.0 for J in range(6)]


def theta_identity(psi_grid, tau_grid, tol):
    """Spectral vs theta heat kernel over the grid; also asserts positivity."""
    rows = []
    worst_abs = worst_rel = 0.0
    notes = []
    positive = True
    for psi in psi_grid:
        for tau in tau_grid:
            cos_psi = math.cos(psi)
            spectral = kernel.heat_kernel_spectral(cos_psi, tau)
            theta, method = kernel.heat_kernel_theta_detail(cos_psi, tau)
            diff = abs(theta - spectral)
            worst_abs = max(worst_abs, diff)
            worst_rel = max(worst_rel, diff / abs(spectral))
            positive = positive and theta > 0
            if method != "theta":
                notes.append(f"psi={psi}: theta form singular, spectral sum used")
            rows.append({"psi": psi, "tau": tau, "spectral": spectral, "theta": theta, "abs_diff": diff})
    notes.append("heat kernel positive on the grid" if positive else "heat kernel not positive on the grid")
    report = VerificationReport(check="theta_identity", params={"psi_grid": list(psi_grid), "tau_grid": list(tau_grid)},
                                n_points=len(rows), max_abs_err=worst_abs, max_rel_err=worst_rel, tol=tol, notes=notes)
    report.passed = report.passed and positive
    return report, rows


def semigroup(psi_grid, tau_grid):
    worst = 0.0
    for psi in psi_grid:
        for tau1 in tau_grid:
            for tau2 in tau_grid:
                worst = max(worst, kernel.semigroup_check(math.cos(psi), tau1, tau2))
    return VerificationReport(check="heat_kernel_semigroup", n_points=len(psi_grid) * len(tau_grid) ** 2,
                              max_abs_err=worst, max_rel_err=worst, tol=SEMIGROUP_TOL,
                              notes=["K(tau1 + tau2) from product weights exp(-tau1 E) exp(-tau2 E)"])


def resolvent_identity(psi_values, energies, tol):
    worst_abs = worst_rel = 0.0
    for psi in psi_values:
        for E in energies:
            closed = kernel.green_sphere(psi, E)
            series = kernel.resolvent_spectral(psi, E)
            diff = abs(closed - series)
            worst_abs = max(worst_abs, diff)
            worst_rel = max(worst_rel, diff / abs(closed))
            log(f"G(psi={psi}, E={E}): closed {closed:.12g}, spectral {series:.12g}", level="debug")
    return VerificationReport(check="resolvent_identity", params={"psi": list(psi_values), "E": list(energies)},
                              n_points=len(psi_values) * len(energies), max_abs_err=worst_abs,
                              max_rel_err=worst_rel, tol=tol)


def pole_recovery(tol):
    poles = kernel.pole_scan((-0.5, POLE_TARGETS[-1] + 1.0), len(POLE_TARGETS))
    errors = [abs(p - t) for p, t in zip(poles, POLE_TARGETS)]
    worst = max(errors)
    return VerificationReport(check="pole_recovery", params={"n_poles": len(POLE_TARGETS)},
                              n_points=len(poles), max_abs_err=worst, max_rel_err=worst, tol=tol,
                              passed=worst <= tol, notes=[f"poles {[round(p, 12) for p in poles]}"])


def distance_checks(seed, points):
    """Three-angle cos(psi) against dot4 of embeddings, and cosh d against the Minkowski pairing."""
    samples = domain_sample(3, 2 * points, seed)
    sphere_err = 0.0
    for first, second in zip(samples[::2], samples[1::2]):
        formula = kernel.cos_psi_spherical(first.u, second.u)
        paired = dot4(embed(first), embed(second))
        sphere_err = max(sphere_err, abs(formula - paired))

    rng = np.random.default_rng(seed)
    hyper_err = 0.0
    for _ in range(points):
        c1 = (rng.uniform(0.0, 2.0), rng.uniform(0.0, math.pi), rng.uniform(0.0, 2 * math.pi))
        c2 = (rng.uniform(0.0, 2.0), rng.uniform(0.0, math.pi), rng.uniform(0.0, 2 * math.pi))
        formula = kernel.cosh_d_hyperboloid(c1, c2)
        paired = kernel.minkowski_pairing(kernel.hyperboloid_point(*c1), kernel.hyperboloid_point(*c2))
        hyper_err = max(hyper_err, abs(formula - paired) / formula)

    worst = max(sphere_err, hyper_err)
    notes = [f"sphere: max |cos psi - dot4| = {sphere_err:.3e}",
             f"hyperboloid: max rel |cosh d - <y', y''>| = {hyper_err:.3e}"]
    return VerificationReport(check="invariant_distance", n_points=points, seed=seed,
                              max_abs_err=worst, max_rel_err=worst, tol=DISTANCE_TOL, notes=notes)


def run_kernel_compare(psi_grid, tau_grid, tol, resolvent_tol, pole_tol, resolvent_psi, resolvent_energies,
                       seed, points, out_csv=None):
    logger = get_logger()
    reports = []
    rows = []
    steps = [
        ("Theta identity", lambda: theta_identity(psi_grid, tau_grid, tol)),
        ("Semigroup", lambda: (semigroup(psi_grid, tau_grid), None)),
        ("Resolvent identity", lambda: (resolvent_identity(resolvent_psi, resolvent_energies, resolvent_tol), None)),
        ("Pole recovery", lambda: (pole_recovery(pole_tol), None)),
        ("Invariant distances", lambda: (distance_checks(seed, points), None)),
    ]
    for title, step in steps:
        log_subsection(title)
        try:
            report, table = step()
            if table:
                rows = table
        except Sphere3CError as e:
            log_error(f"{title}: {type(e).__name__}: {e}")
            report = VerificationReport.failed(title.lower().replace(" ", "_"), None, e)
        message = f"{report.check}: max abs {report.max_abs_err:.3e}, max rel {report.max_rel_err:.3e}"
        if report.passed:
            log_success(message)
        else:
            logger.failure(message)
        reports.append(report)

    if out_csv:
        write_table(rows, out_csv, CSV_COLUMNS)
        log(f"Wrote {len(rows)} kernel rows to {out_csv}")
    log_stats("Kernel comparison", summarize(reports))
    return reports, rows
