import json
import os
from dataclasses import asdict
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, Iterable, List

import mpmath
import pandas as pd
from prettytable import PrettyTable

from config import FLOAT_DIGITS

REPORT_KEYS = ("identity", "parameter", "expected", "computed", "abs_error", "rel_error", "passed", "route")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_real(value) -> str:
    # mpf values keep their own mantissa; re-wrapping would round to the current precision
    if not hasattr(value, "_mpf_"):
        value = mpmath.mpf(value)
    return mpmath.nstr(value, FLOAT_DIGITS)


def format_value(value: Any):
    """Lossless JSON-ready form: rationals as "p/q", reals as 25-digit strings"""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    return format_real(value)


def format_parameter(parameter: Any):
    if isinstance(parameter, (tuple, list)):
        return [format_parameter(p) for p in parameter]
    return parameter


def report_to_dict(report) -> Dict[str, Any]:
    data = asdict(report)
    return {
        "identity": data["identity"],
        "parameter": format_parameter(data["parameter"]),
        "expected": format_value(data["expected"]),
        "computed": format_value(data["computed"]),
        "abs_error": format_value(data["abs_error"]),
        "rel_error": format_value(data["rel_error"]),
        "passed": bool(data["passed"]),
        "route": data["route"],
    }


def utc_timestamp() -> str:
    """Now in UTC ISO-8601; SOURCE_DATE_EPOCH pins it for reproducible output"""
    epoch = os.getenv("SOURCE_DATE_EPOCH")
    moment = datetime.fromtimestamp(int(epoch), tz=timezone.utc) if epoch else datetime.now(timezone.utc)
    return moment.replace(microsecond=0).isoformat()


def manifest_to_json(manifest, rows: List[Dict[str, Any]]) -> str:
    payload = {
        "command": manifest.command,
        "parameters": manifest.parameters,
        "timestamp": manifest.timestamp,
        "precision_mode": manifest.precision_mode,
        "results": rows,
    }
    return json.dumps(payload, indent=2)


def rows_to_csv(rows: Iterable[Dict[str, Any]], columns: List[str]) -> str:
    df = pd.DataFrame(list(rows), columns=columns, dtype=object)
    return df.to_csv(index=False, lineterminator="\n")


def rows_to_table(rows: Iterable[Dict[str, Any]], columns: List[str]) -> str:
    table = PrettyTable()
    table.field_names = columns
    table.align = "r"
    for row in rows:
        table.add_row([row.get(col) for col in columns])
    return table.get_string()
