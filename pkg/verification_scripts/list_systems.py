import json

from sphere3c.charts import CHARTS, registry_json
from utility.reports import to_jsonable
from utility.logger import get_logger, log_success

TABLE_COLUMNS = ["#", "Name", "Coordinates", "Real section", "det sign", "Capabilities"]


def run_list_systems(out_json=None):
    """Print the chart registry and optionally write it as JSON."""
    logger = get_logger()
    rows = []
    for system_id in sorted(CHARTS):
        chart = CHARTS[system_id]
        rows.append([
            system_id,
            chart.name,
            ", ".join(chart.coordinates),
            chart.real_section,
            chart.det_sign,
            ", ".join(sorted(chart.capabilities)),
        ])
    logger.print_table("Coordinate systems on the complex 3-sphere", TABLE_COLUMNS, rows)
    registry = registry_json()
    if out_json:
        with open(out_json, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(to_jsonable(registry), sort_keys=True, indent=2) + "\n")
        log_success(f"Registry of {len(registry)} systems written to {out_json}")
    return registry
