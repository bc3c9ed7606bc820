from sphere3c.eigenbasis import (BLOCKS, EIGEN_SYSTEMS, QuantumNumbers, default_grid, default_modes,
                                 energy, liouville_arbitration, mode_residual, norm_check, ode_residual_1d,
                                 valid_modes, validate, variant_arbitration)
from sphere3c.errors import CapabilityError, Sphere3CError
from utility.logger import get_logger, log_error, log_success, log_subsection, log_stats
from utility.reports import VerificationReport, summarize

LIOUVILLE_ALIASES = ("liouville-block", "liouville", "complex_liouville")
NORM_MODES = 10

# metric under which -1/2 Delta is taken for the energy check
ENERGY_CONVENTION = {
    16: ("energy checked with -1/2 Delta of the induced metric, which is -(printed ds^2); "
         "under the printed ds^2 the same mode has eigenvalue -E"),
}
DEFAULT_CONVENTION = "energy checked with -1/2 Delta of the closed-form metric"

# modes used for printed-vs-corrected arbitration
ARBITRATION_MODES = {
    3: QuantumNumbers(3, 2, 1),
    16: QuantumNumbers.parabolic(1, 1, 1.0),
}


def resolve_target(value):
    """Integer system with an eigenbasis, or a 1D block name. CapabilityError otherwise."""
    text = str(value).strip()
    if text.lower() in LIOUVILLE_ALIASES:
        return "liouville-block"
    if text in BLOCKS:
        return text
    try:
        system_id = int(text)
    except ValueError:
        raise CapabilityError(f"unknown eigencheck target '{text}'; expected a system or one of {sorted(BLOCKS)}")
    if system_id not in EIGEN_SYSTEMS:
        # raises with the out-of-scope reason
        validate(system_id, QuantumNumbers(0))
    return system_id


def _mode_label(qn):
    return {"J": qn.J, "sub1": qn.sub1, "sub2": qn.sub2}


def check_modes(system_id, J_max, n_points, seed, tol):
    logger = get_logger()
    modes = default_modes(system_id, J_max)
    reports = []
    logger.start_progress(len(modes), f"System {system_id} residuals")
    for qn in modes:
        try:
            residual = mode_residual(system_id, qn, n_points, seed)
            E = energy(qn.J)
            reports.append(VerificationReport(
                check="hamiltonian_residual", system=system_id, params=_mode_label(qn), n_points=n_points,
                seed=seed, max_abs_err=residual, max_rel_err=residual, tol=tol,
                notes=[f"E = J(J+2)/2 = {E:g}", ENERGY_CONVENTION.get(system_id, DEFAULT_CONVENTION)]))
        except Sphere3CError as e:
            log_error(f"System {system_id} mode {qn}: {e}")
            reports.append(VerificationReport.failed("hamiltonian_residual", system_id, e,
                                                     params=_mode_label(qn), n_points=n_points, seed=seed, tol=tol))
        logger.update_progress(1)
    logger.stop_progress()
    return reports


def check_norms(system_id, norm_tol):
    modes = valid_modes(system_id, 4)[:NORM_MODES]
    deviation = norm_check(system_id, modes)
    return VerificationReport(check="orthonormality", system=system_id, params={"modes": len(modes)},
                              n_points=len(modes), max_abs_err=deviation, max_rel_err=deviation, tol=norm_tol,
                              notes=["max |Gram - I| with exact periodic integrals and Gauss-Legendre angles"])


def check_variants(system_id, n_points, seed, tol):
    qn = ARBITRATION_MODES[system_id]
    ok, corrected, note = variant_arbitration(system_id, qn, n_points, seed, tol)
    notes = [note, "corrected form passes; printed form fails" if ok else "arbitration inconclusive"]
    return VerificationReport(check="printed_form_arbitration", system=system_id, params=_mode_label(qn),
                              n_points=n_points, seed=seed, max_abs_err=corrected, max_rel_err=corrected,
                              tol=tol, passed=ok, notes=notes)


def check_block(block, n_points, ode_tol):
    grid = default_grid(block, n_points)
    residual = ode_residual_1d(block, None, grid)
    return VerificationReport(check="ode_residual", system=block, params=dict(BLOCKS[block][1]),
                              n_points=len(grid), max_abs_err=residual, max_rel_err=residual, tol=ode_tol)


def run_eigencheck(target, J_max, n_points, seed, tol, ode_tol, norm_tol):
    """Residual reports for one system or block, always with the Liouville order arbitration."""
    logger = get_logger()
    target = resolve_target(target)
    reports = []

    if target == "liouville-block":
        log_subsection("Complex Liouville order arbitration")
    elif isinstance(target, str):
        log_subsection(f"ODE block {target}")
        reports.append(check_block(target, n_points, ode_tol))
    else:
        log_subsection(f"System {target}: Hamiltonian residuals for J <= {J_max}")
        reports.extend(check_modes(target, J_max, n_points, seed, tol))
        if target in (1, 3):
            reports.append(check_norms(target, norm_tol))
        if target in ARBITRATION_MODES:
            reports.append(check_variants(target, n_points, seed, tol))

    arbitration = liouville_arbitration(J_max=J_max, tol=ode_tol)
    reports.append(arbitration)

    for report in reports:
        if report.passed:
            continue
        logger.failure(f"{report.system} {report.check} {report.params}: error {report.max_abs_err:.3e}")
    if arbitration.passed:
        log_success(arbitration.notes[-1])
    log_stats(f"Eigencheck {target}", summarize(reports))
    return reports
