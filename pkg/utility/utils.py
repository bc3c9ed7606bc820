import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Sampling
SEED = int(os.getenv("SPHERE3C_SEED", "42"))
POINTS = int(os.getenv("SPHERE3C_POINTS", "64"))

# Tolerances
METRIC_TOL = float(os.getenv("SPHERE3C_METRIC_TOL", "1e-9"))
GAMMA_TOL = float(os.getenv("SPHERE3C_GAMMA_TOL", "1e-8"))
EIGEN_TOL = float(os.getenv("SPHERE3C_EIGEN_TOL", "1e-6"))
ODE_TOL = float(os.getenv("SPHERE3C_ODE_TOL", "1e-8"))
KERNEL_TOL = float(os.getenv("SPHERE3C_KERNEL_TOL", "1e-10"))
RESOLVENT_TOL = float(os.getenv("SPHERE3C_RESOLVENT_TOL", "1e-6"))
NORM_TOL = float(os.getenv("SPHERE3C_NORM_TOL", "1e-8"))
POLE_TOL = float(os.getenv("SPHERE3C_POLE_TOL", "1e-8"))

# Elliptic modulus squared for systems 6 and 13
ELLIPTIC_K2 = float(os.getenv("SPHERE3C_ELLIPTIC_K2", "0.5"))

# Output
LOG_FILE = os.getenv("LOG_FILE", "verification.log")
CONSOLE_LOG_LEVEL = os.getenv("CONSOLE_LOG_LEVEL", "INFO")
SHOW_PROGRESS = os.getenv("SPHERE3C_SHOW_PROGRESS", "True").lower() == "true"
RICH_CONSOLE = os.getenv("SPHERE3C_RICH_CONSOLE", "True").lower() == "true"

# Default kernel-compare grids
PSI_GRID = (0.3, 1.0, 2.0, 3.0)
TAU_GRID = (0.25, 0.5, 1.0, 2.0)
RESOLVENT_PSI = (0.8, 1.6, 2.4)
RESOLVENT_ENERGIES = (-1.0, -0.5, -0.375)


def chart_params(system_id):
    """Environment-level parameter overrides for a chart."""
    if system_id in (6, 13):
        return {"k2": ELLIPTIC_K2}
    return None
