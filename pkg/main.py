import argparse
import math
import sys

from sphere3c import __version__
from sphere3c.errors import CapabilityError, DomainError, QuantumNumberError
from utility import utils
from utility.logger import get_logger, log_section, log_success, log_error
from utility.reports import write_reports
from verification_scripts.verify_metric import parse_systems, run_verify_metric
from verification_scripts.eigencheck import run_eigencheck
from verification_scripts.kernel_compare import run_kernel_compare
from verification_scripts.specfun_table import REFERENCE_GRIDS, run_specfun_table
from verification_scripts.list_systems import run_list_systems

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

USAGE_ERRORS = (DomainError, CapabilityError, QuantumNumberError)


def float_list(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sphere3c",
        description="Verify coordinate systems, eigenfunctions and kernels on the complex 3-sphere.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    metric = commands.add_parser("verify-metric", help="embedding-derived vs closed-form metric")
    metric.add_argument("--system", default="all", help="system number 1-21 or 'all'")
    metric.add_argument("--points", type=int, default=utils.POINTS)
    metric.add_argument("--seed", type=int, default=utils.SEED)
    metric.add_argument("--tol", type=float, default=utils.METRIC_TOL)
    metric.add_argument("--gamma-tol", type=float, default=utils.GAMMA_TOL)
    metric.add_argument("--out", default="verify_metric.json")

    eigen = commands.add_parser("eigencheck", help="Hamiltonian and ODE residuals of the eigenfunctions")
    eigen.add_argument("--system", required=True, help="1, 2, 3, 4, 5, 16 or a 1D block name (e.g. liouville-block)")
    eigen.add_argument("--J-max", dest="J_max", type=int, default=5)
    eigen.add_argument("--grid", type=int, default=32, help="interior points (or 1D grid size)")
    eigen.add_argument("--seed", type=int, default=utils.SEED)
    eigen.add_argument("--tol", type=float, default=utils.EIGEN_TOL)
    eigen.add_argument("--ode-tol", type=float, default=utils.ODE_TOL)
    eigen.add_argument("--norm-tol", type=float, default=utils.NORM_TOL)
    eigen.add_argument("--out", default="eigencheck.json")

    kernel = commands.add_parser("kernel-compare", help="heat-kernel and resolvent identities, pole recovery")
    kernel.add_argument("--psi-grid", type=float_list, default=list(utils.PSI_GRID))
    kernel.add_argument("--tau-grid", type=float_list, default=list(utils.TAU_GRID))
    kernel.add_argument("--tol", type=float, default=utils.KERNEL_TOL)
    kernel.add_argument("--resolvent-tol", type=float, default=utils.RESOLVENT_TOL)
    kernel.add_argument("--pole-tol", type=float, default=utils.POLE_TOL)
    kernel.add_argument("--seed", type=int, default=utils.SEED)
    kernel.add_argument("--points", type=int, default=utils.POINTS)
    kernel.add_argument("--out", default="kernel_compare.json")
    kernel.add_argument("--csv", default="kernel_compare.csv")

    table = commands.add_parser("specfun-table", help="CSV of special-function reference values")
    table.add_argument("--family", action="append", choices=sorted(REFERENCE_GRIDS))
    table.add_argument("--out", default="specfun_table.csv")

    systems = commands.add_parser("list-systems", help="print the chart registry")
    systems.add_argument("--out", default=None, help="optional registry JSON path")
    return parser


def validate_args(parser, args):
    """Usage checks argparse cannot express; parser.error exits with status 2."""
    if getattr(args, "points", 1) < 1:
        parser.error("--points must be at least 1")
    if args.command == "eigencheck":
        if args.J_max < 0:
            parser.error("--J-max must be nonnegative")
        if args.grid < 2:
            parser.error("--grid must be at least 2")
    if args.command == "kernel-compare":
        if not args.tau_grid or any(tau <= 0 for tau in args.tau_grid):
            parser.error("tau must be positive")
        if not args.psi_grid or any(not 0.0 < psi < math.pi for psi in args.psi_grid):
            parser.error("psi must lie in (0, pi)")


def finish(reports, out):
    write_reports(reports, out)
    failed = [r for r in reports if not r.passed]
    if failed:
        get_logger().print_summary([f"{r.check} (system {r.system}): abs {r.max_abs_err:.3e}, rel {r.max_rel_err:.3e}"
                                    for r in failed], title="Failed checks")
        log_error(f"{len(failed)} of {len(reports)} checks failed; reports in {out}")
        return EXIT_FAIL
    log_success(f"All {len(reports)} checks passed; reports in {out}")
    return EXIT_PASS


def dispatch(args):
    if args.command == "verify-metric":
        systems = parse_systems(args.system)
        log_section(f"Metric verification ({len(systems)} systems)")
        reports = run_verify_metric(systems, args.points, args.seed, args.tol, args.gamma_tol)
        return finish(reports, args.out)

    if args.command == "eigencheck":
        log_section(f"Eigenfunction check: {args.system}")
        reports = run_eigencheck(args.system, args.J_max, args.grid, args.seed, args.tol, args.ode_tol,
                                 args.norm_tol)
        return finish(reports, args.out)

    if args.command == "kernel-compare":
        log_section("Kernel comparison")
        reports, _ = run_kernel_compare(args.psi_grid, args.tau_grid, args.tol, args.resolvent_tol,
                                        args.pole_tol, utils.RESOLVENT_PSI, utils.RESOLVENT_ENERGIES,
                                        args.seed, args.points, args.csv)
        return finish(reports, args.out)

    if args.command == "specfun-table":
        log_section("Special-function reference table")
        run_specfun_table(args.out, args.family)
        return EXIT_PASS

    log_section("Coordinate systems")
    run_list_systems(args.out)
    return EXIT_PASS


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    validate_args(parser, args)
    logger = get_logger()
    logger.debug(f"sphere3c {__version__}: {vars(args)}")
    try:
        return dispatch(args)
    except USAGE_ERRORS as e:
        log_error(f"Usage error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
