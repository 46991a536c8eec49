"""
Command-line interface for the Gompertz / Bernoulli toolkit.

Usage:
    python cli.py table bernoulli --max 12 --format csv
    python cli.py table stirling --n 4 --format json
    python cli.py verify gumbel --k-max 20
    python cli.py verify gumbel-quad --k-max 10 --precision extended
    python cli.py derivative --n 3 --q 1 --c 1 --umax 1 --t 0.7
"""

import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import click

from config import DEFAULT_TOL, PRECISION_MODES, precision_context, working_precision
from special import (
    GompertzParams,
    bell_form_eval,
    bernoulli,
    derivative_coeffs,
    derivative_eval,
    exp_sum,
    gompertz_eval,
    grosset_veselov_exact,
    log_poly_eval,
    stirling2_row,
)
from utils import (
    DomainError,
    validate_derivative_order,
    validate_params,
    validate_range,
    validate_table_request,
    validate_tolerance,
)
from utils import console
from utils.serialization import (
    REPORT_KEYS,
    format_real,
    format_value,
    manifest_to_json,
    report_to_dict,
    rows_to_csv,
    rows_to_table,
    utc_timestamp,
)
from verification import (
    RunManifest,
    verify_binomial_bernoulli,
    verify_egf_moment,
    verify_euler_series,
    verify_faulhaber,
    verify_general_derivative_integral,
    verify_grosset_veselov,
    verify_grosset_veselov_quadrature,
    verify_gumbel_bernoulli,
    verify_gumbel_bernoulli_quadrature,
    verify_log_moment_quadrature,
    verify_moment_quadrature,
    verify_stirling_bernoulli,
    verify_zeta_even,
)

USAGE_ERROR = 2
FORMATS = ("json", "csv", "table")


@dataclass(frozen=True)
class IdentitySpec:
    """How `verify` sweeps one identity"""

    runner: Callable
    lower: int
    upper: int
    minimum: int
    maximum: Optional[int]
    exact: bool = True
    # None: the run follows --precision
    mode: Optional[str] = "exact"


def _params(opts) -> GompertzParams:
    return GompertzParams(opts["q"], opts["c"], opts["umax"])


IDENTITIES: Dict[str, IdentitySpec] = {
    "faulhaber": IdentitySpec(
        lambda n, o: [verify_faulhaber(m, n) for m in range(2, o["m_max"] + 1)], 1, 10, 1, None
    ),
    "zeta": IdentitySpec(lambda n, o: verify_zeta_even(n, o["terms"], o["tol"]), 1, 5, 1, None, mode="double"),
    "stirling-bernoulli": IdentitySpec(lambda n, o: verify_stirling_bernoulli(n), 1, 200, 1, None),
    "binomial-bernoulli": IdentitySpec(lambda n, o: verify_binomial_bernoulli(n), 1, 60, 1, None),
    "euler-series": IdentitySpec(lambda n, o: verify_euler_series(n), 0, 40, 0, None),
    "gumbel": IdentitySpec(lambda k, o: verify_gumbel_bernoulli(k), 1, 60, 1, None),
    "soliton": IdentitySpec(lambda k, o: verify_grosset_veselov(k), 1, 10, 1, None),
    "gumbel-quad": IdentitySpec(
        lambda k, o: verify_gumbel_bernoulli_quadrature(k, o["tol"], o["precision"]),
        1, 6, 1, 10, exact=False, mode=None,
    ),
    "soliton-quad": IdentitySpec(
        lambda k, o: verify_grosset_veselov_quadrature(k, o["tol"], o["precision"]),
        1, 6, 1, 8, exact=False, mode=None,
    ),
    "moment": IdentitySpec(
        lambda n, o: verify_moment_quadrature(n, _params(o), o["tol"], o["precision"]),
        0, 6, 0, 10, exact=False, mode=None,
    ),
    "general-derivative": IdentitySpec(
        lambda k, o: verify_general_derivative_integral(k, _params(o), o["tol"], o["precision"]),
        1, 4, 1, 8, exact=False, mode=None,
    ),
    "log-moment": IdentitySpec(
        lambda n, o: verify_log_moment_quadrature(n, Fraction(o["umax"]), o["tol"], o["precision"]),
        0, 8, 0, None, exact=False, mode=None,
    ),
    "egf-moment": IdentitySpec(
        lambda i, o: verify_egf_moment(o["z"][i], _params(o), o["tol"], o["precision"]),
        0, 0, 0, None, exact=False, mode=None,
    ),
}


def _fail(message: str) -> None:
    console.error(message)
    sys.exit(USAGE_ERROR)


def _check(result) -> None:
    ok, message = result
    if not ok:
        _fail(message)


def _emit(manifest: RunManifest, rows: List[dict], columns: List[str], fmt: str) -> None:
    if fmt == "csv":
        click.echo(rows_to_csv(rows, columns), nl=False)
    elif fmt == "table":
        click.echo(rows_to_table(rows, columns))
    else:
        click.echo(manifest_to_json(manifest, rows))


def format_option(f):
    return click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True, help="Output format"
    )(f)


@click.group()
@click.option("--verbose", is_flag=True, help="Progress diagnostics on stderr")
def cli(verbose: bool):
    """Bernoulli numbers, Stirling numbers and the Gompertz / Gumbel integral identities."""
    console.set_verbose(verbose)


@cli.command()
@click.argument("kind", type=click.Choice(["bernoulli", "stirling", "gv"]))
@click.option("--min", "lower", type=int, default=None, help="First index")
@click.option("--max", "upper", type=int, default=None, help="Last index")
@click.option("--n", "row", type=int, default=None, help="Single Stirling row")
@format_option
def table(kind: str, lower: Optional[int], upper: Optional[int], row: Optional[int], fmt: str):
    """Exact tables of B_n, Stirling rows, or soliton integrals.

    \b
    Examples:
        python cli.py table bernoulli --max 12 --format csv
        python cli.py table stirling --n 4
    """
    if kind == "stirling" and row is not None:
        lower = upper = row
    if lower is None:
        lower = 1 if kind == "gv" else 0
    if upper is None:
        upper = 12 if kind != "stirling" else 10
    _check(validate_table_request(kind, lower, upper))

    rows = []
    if kind == "bernoulli":
        columns = ["index", "numerator", "denominator"]
        for n in range(lower, upper + 1):
            b = bernoulli(n)
            rows.append({"index": n, "numerator": str(b.numerator), "denominator": str(b.denominator)})
    elif kind == "stirling":
        # several rows need n to tell them apart
        several = upper > lower
        columns = (["n"] if several else []) + ["index", "numerator", "denominator"]
        for n in range(lower, upper + 1):
            for k, value in enumerate(stirling2_row(n)):
                entry = {"n": n} if several else {}
                entry.update(index=k, numerator=str(value), denominator="1")
                rows.append(entry)
    else:
        columns = ["index", "numerator", "denominator"]
        for k in range(lower, upper + 1):
            value = grosset_veselov_exact(k)
            rows.append({"index": k, "numerator": str(value.numerator), "denominator": str(value.denominator)})

    manifest = RunManifest(
        command="table",
        parameters={"kind": kind, "min": lower, "max": upper, "format": fmt},
        timestamp=utc_timestamp(),
        precision_mode="exact",
        results=rows,
    )
    console.progress(f"table {kind}: {len(rows)} rows")
    _emit(manifest, rows, columns, fmt)


@cli.command()
@click.argument("identity", type=click.Choice(sorted(IDENTITIES)))
@click.option("--min", "--k-min", "--n-min", "lower", type=int, default=None, help="First parameter value")
@click.option("--max", "--k-max", "--n-max", "upper", type=int, default=None, help="Last parameter value")
@click.option("--m-max", type=int, default=10, show_default=True, help="Faulhaber: largest m")
@click.option("--terms", type=int, default=10**6, show_default=True, help="Zeta: partial-sum length")
@click.option("--q", type=float, default=1.0, show_default=True)
@click.option("--c", type=float, default=1.0, show_default=True)
@click.option("--umax", type=float, default=1.0, show_default=True)
@click.option("--z", type=float, multiple=True, help="e.g.f. argument (repeatable)")
@click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True)
@click.option("--precision", type=click.Choice(PRECISION_MODES), default=None, help="Default: extended")
@click.option("--workers", type=int, default=1, show_default=True, help="Threads for exact sweeps")
@format_option
def verify(identity, lower, upper, m_max, terms, q, c, umax, z, tol, precision, workers, fmt):
    """Check one identity over a parameter range; exit 0 iff every report passed.

    \b
    Examples:
        python cli.py verify gumbel --k-max 20
        python cli.py verify soliton-quad --k-max 6 --precision double
        python cli.py verify general-derivative --k-max 4 --q 2 --c 3 --umax 5
    """
    spec = IDENTITIES[identity]
    precision = precision or "extended"
    _check(validate_tolerance(tol))
    _check(validate_params(q, c, umax))
    if identity == "egf-moment":
        z = z or (0.5,)
        lower, upper = 0, len(z) - 1
    lower = spec.lower if lower is None else lower
    upper = spec.upper if upper is None else upper
    _check(validate_range(identity, lower, upper, spec.minimum, spec.maximum))
    if identity == "faulhaber":
        _check(validate_range("m", 2, m_max, 2, None))

    opts = {"m_max": m_max, "terms": terms, "q": q, "c": c, "umax": umax, "z": z, "tol": tol, "precision": precision}

    def run(value):
        console.progress(f"verify {identity} {value}")
        return spec.runner(value, opts)

    values = range(lower, upper + 1)
    try:
        if spec.exact and workers > 1:
            # map keeps parameter order whatever the completion order
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(run, values))
        else:
            outcomes = [run(value) for value in values]
    except DomainError as e:
        _fail(str(e))

    reports = []
    for outcome in outcomes:
        reports.extend(outcome if isinstance(outcome, list) else [outcome])
    for report in reports:
        if not report.passed:
            console.error(f"FAILED {report.identity} {report.parameter}" + (f": {report.reason}" if report.reason else ""))
        elif report.reason:
            console.warning(f"{report.identity} {report.parameter}: {report.reason}")

    manifest = RunManifest(
        command="verify",
        parameters={
            "identity": identity,
            "min": lower,
            "max": upper,
            "tol": tol,
            "q": q,
            "c": c,
            "umax": umax,
            "z": list(z),
            "format": fmt,
        },
        timestamp=utc_timestamp(),
        precision_mode=spec.mode or precision,
        results=reports,
    )
    _emit(manifest, [report_to_dict(r) for r in reports], list(REPORT_KEYS), fmt)
    sys.exit(0 if manifest.all_passed else 1)


@cli.command()
@click.option("--n", type=int, required=True, help="Derivative order")
@click.option("--q", type=float, default=1.0, show_default=True)
@click.option("--c", type=float, default=1.0, show_default=True)
@click.option("--umax", type=float, default=1.0, show_default=True)
@click.option("--t", type=float, default=0.0, show_default=True)
@click.option("--precision", type=click.Choice(PRECISION_MODES), default="extended", show_default=True)
@format_option
def derivative(n, q, c, umax, t, precision, fmt):
    """u^(n)(t) with its exact LogPoly coefficients and ExpSum terms.

    \b
    Examples:
        python cli.py derivative --n 1 --q 1 --c 1 --umax 1 --t 0
    """
    _check(validate_derivative_order(n))
    _check(validate_params(q, c, umax))
    params = GompertzParams(q, c, umax)
    ctx = precision_context(precision)

    with working_precision(ctx):
        value = derivative_eval(n, params, t, ctx)
        u = gompertz_eval(params, t, ctx)
        record = {"n": n, "value": format_real(value), "u": format_real(u)}
        if n == 0:
            record.update(coefficients=[], exp_sum=[], log_poly_value=format_real(u), bell_value=format_real(u))
        else:
            c_ctx = ctx.mpf(c)
            record["coefficients"] = [{"k": k, "a": format_value(a)} for k, a in derivative_coeffs(n).items()]
            record["exp_sum"] = [
                {"j": j, "a": format_value(a), "scaled": format_real(a * c_ctx**j)} for j, a in exp_sum(n).terms
            ]
            # the u-based routes need u strictly inside (0, u_max)
            inside = 0 < u < ctx.mpf(umax)
            record["log_poly_value"] = format_real(log_poly_eval(derivative_coeffs(n), params, u, ctx)) if inside else None
            record["bell_value"] = format_real(bell_form_eval(n, params, u, ctx)) if inside else None

    manifest = RunManifest(
        command="derivative",
        parameters={"n": n, "q": q, "c": c, "umax": umax, "t": t, "format": fmt},
        timestamp=utc_timestamp(),
        precision_mode=precision,
        results=[record],
    )
    if fmt == "json":
        click.echo(manifest_to_json(manifest, [record]))
        return
    rows = [{"field": key, "value": record[key]} for key in ("n", "value", "u", "log_poly_value", "bell_value")]
    rows += [{"field": f"a_{item['k']}", "value": item["a"]} for item in record["coefficients"]]
    rows += [{"field": f"expsum_{item['j']}", "value": item["scaled"]} for item in record["exp_sum"]]
    _emit(manifest, rows, ["field", "value"], fmt)


if __name__ == "__main__":
    cli()
