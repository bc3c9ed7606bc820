import json

from sphere3c import specfun
from sphere3c.errors import Sphere3CError
from utility.logger import get_logger, log, log_error, log_success
from utility.reports import write_table

TABLE_COLUMNS = ["family", "params", "arg", "value_re", "value_im"]

# family -> (callable(params, arg), params list, argument grid)
REFERENCE_GRIDS = {
    "gamma": (lambda p, x: specfun.gamma_complex(x), [{}], [0.5, 1.5, 3.7, -2.5, 1 + 1j, 0.25 - 2j]),
    "hyp2f1": (lambda p, x: specfun.hyp2f1(p["a"], p["b"], p["c"], x),
               [{"a": 0.5, "b": 1.5, "c": 2.25}, {"a": 1 + 0.5j, "b": 1 - 0.5j, "c": 1.5}],
               [-0.8, -0.3, 0.2, 0.45, 0.7]),
    "hyp1f1": (lambda p, x: specfun.hyp1f1(p["a"], p["c"], x),
               [{"a": 0.5, "c": 1.5}, {"a": -3, "c": 0.5}], [-10.0, -1.0, 0.5, 4.0]),
    "jacobi": (lambda p, x: specfun.orthopoly_eval("jacobi", p["n"], (p["alpha"], p["beta"]), x),
               [{"n": 4, "alpha": 1, "beta": 2}, {"n": 7, "alpha": 0.5, "beta": -0.5}], [-0.9, -0.2, 0.3, 0.95]),
    "gegenbauer": (lambda p, x: specfun.orthopoly_eval("gegenbauer", p["n"], (p["lam"],), x),
                   [{"n": 5, "lam": 1.0}, {"n": 3, "lam": 2.5}], [-0.9, 0.0, 0.4, 1.0]),
    "laguerre": (lambda p, x: specfun.orthopoly_eval("laguerre", p["n"], (p["alpha"],), x, allow_nonclassical=True),
                 [{"n": 4, "alpha": 0.5}, {"n": 3, "alpha": -4.0}], [0.1, 1.0, 3.5, 8.0]),
    "legendre_P": (lambda p, x: specfun.legendre_P(p["nu"], p["mu"], x),
                   [{"nu": 2.5, "mu": -1.5}, {"nu": -0.5 + 1.2j, "mu": 0.7j}], [-0.6, 0.1, 0.8]),
    "legendre_Q_half": (lambda p, x: specfun.legendre_Q_half(p["nu"], x),
                        [{"nu": -0.5}, {"nu": -0.5 - 2j}], [1.2, 2.0, 5.0]),
    "bessel_J_real_order": (lambda p, x: specfun.bessel_eval("J_real_order", p["order"], x),
                            [{"order": 0}, {"order": 2.5}], [0.5, 5.0, 20.0]),
    "bessel_H1_half_integer": (lambda p, x: specfun.bessel_eval("H1_half_integer", p["order"], x),
                               [{"order": 1.5}], [0.5, 2.0, 1 - 0.5j]),
    "bessel_H1_integer_order": (lambda p, x: specfun.bessel_eval("H1_integer_order", p["order"], x),
                                [{"order": 2}], [0.5, 2.0, 1 - 0.5j]),
    "bessel_K_imag_order": (lambda p, x: specfun.bessel_eval("K_imag_order", p["order"], x),
                            [{"order": 1.5}], [0.2, 1.0, 4.0]),
    "bessel_K_real_order": (lambda p, x: specfun.bessel_eval("K_real_order", p["order"], x),
                            [{"order": 1 / 3}], [0.3, 1.0, 5.0]),
    "bessel_I_real_order": (lambda p, x: specfun.bessel_eval("I_real_order", p["order"], x),
                            [{"order": 1.0}], [0.5, 3.0]),
    "airy_ai": (lambda p, x: specfun.airy_ai(x), [{}], [-15.0, -5.0, 0.0, 1.0, 4.0]),
    "elliptic_K": (lambda p, x: specfun.elliptic_k(x), [{}], [0.1, 0.5 ** 0.5, 0.9]),
    "jacobi_sn": (lambda p, x: specfun.jacobi_elliptic(x, p["k"])[0], [{"k": 0.5 ** 0.5}], [0.3, 1.0, 2.5]),
    "theta3": (lambda p, x: specfun.theta3(x, p["tau"]), [{"tau": 0.5j}, {"tau": 0.1j}], [0.0, 0.5, 1.2]),
}


def _arg_text(arg):
    arg = complex(arg)
    if arg.imag == 0:
        return repr(arg.real)
    return repr(arg).strip("()")


def reference_rows(families=None):
    """Rows (family, params, arg, value_re, value_im) over the documented grids."""
    rows = []
    for family in families or sorted(REFERENCE_GRIDS):
        fn, param_sets, grid = REFERENCE_GRIDS[family]
        for params in param_sets:
            for arg in grid:
                try:
                    value = complex(fn(params, arg))
                except Sphere3CError as e:
                    log_error(f"{family} {params} at {arg}: {e}")
                    continue
                rows.append({
                    "family": family,
                    "params": json.dumps({k: str(v) for k, v in params.items()}, sort_keys=True),
                    "arg": _arg_text(arg),
                    "value_re": value.real,
                    "value_im": value.imag,
                })
    return rows


def run_specfun_table(out_csv, families=None):
    logger = get_logger()
    rows = reference_rows(families)
    write_table(rows, out_csv, TABLE_COLUMNS)
    log(f"{len(rows)} reference values across {len({r['family'] for r in rows})} families")
    log_success(f"Special-function table written to {out_csv}")
    logger.debug(f"families: {sorted({r['family'] for r in rows})}")
    return rows
