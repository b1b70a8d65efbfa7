#!/usr/bin/env python3
"""CLI interface for the U(1,1) Borcherds lift toolkit."""

import csv
import io
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

import click
import mpmath
import yaml
from rich.console import Console
from rich.table import Table

from u11_lift import load_config
from u11_lift.borcherds import ProductParams, xi_const, xi_f, xi_grid, xi_jn, zero_order
from u11_lift.borcherds.models import MIN_PREC_BITS
from u11_lift.checks import SUITES, run_suite
from u11_lift.errors import InvalidInputError, LiftError
from u11_lift.heegner import cm_order, enumerate_heegner, heegner_divisor, reduce_point, tau_numeric
from u11_lift.jsonio import complex_pair, digits_for, mp_str, rational_to_dict
from u11_lift.journal import RunJournal
from u11_lift.qexp import faber_jn, form_from_principal
from u11_lift.qfield import make_field, unit_group
from u11_lift.weyl import (
    Wall,
    chamber_from_bounds,
    chamber_of_Y,
    chambers,
    phi_K,
    phi_K_chamber,
    strip_bounds,
    wall_slopes,
    weyl_vector_f,
    weyl_vector_jn,
)

console = Console(stderr=True)
logger = logging.getLogger("u11_lift.cli")


# --- argument parsing -------------------------------------------------------

def parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"{name}: {text!r} is not a decimal or rational number") from exc


def parse_pair(text: str, name: str) -> tuple[Fraction, Fraction]:
    """'re,im' -> exact (re, im)."""
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidInputError(f"{name} must be given as two comma-separated numbers, got {text!r}")
    return parse_rational(parts[0], name), parse_rational(parts[1], name)


def parse_chamber(m: int, text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise InvalidInputError(f"chamber must be given as t_lo,t_hi, got {text!r}")
    try:
        lo = int(parts[0])
        hi = None if parts[1].lower() in ("inf", "infinity", "oo") else int(parts[1])
    except ValueError as exc:
        raise InvalidInputError(f"chamber bounds must be integers or 'inf', got {text!r}") from exc
    return chamber_from_bounds(m, lo, hi)


def load_form(path: str) -> tuple[dict[int, int], int, object]:
    """Coefficient file (YAML or JSON): principal part, constant term and an optional Y."""
    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    except OSError as exc:
        raise InvalidInputError(f"cannot read coefficient file {path}: {exc}") from exc
    try:
        principal = {int(m): int(c) for m, c in (data.get("principal") or {}).items()}
        c0 = int(data.get("c0", 0))
    except (TypeError, ValueError, AttributeError) as exc:
        raise InvalidInputError(f"malformed coefficient file {path}: {exc}") from exc
    Y = data.get("Y")
    if Y is not None:
        if len(Y) != 2:
            raise InvalidInputError("Y in the coefficient file must have two entries")
        Y = tuple(parse_rational(str(y), "Y") for y in Y)
    return principal, c0, Y


def product_params(ctx, max_kl, region) -> ProductParams:
    config = ctx.obj["config"]
    return ProductParams(
        max_kl=max_kl if max_kl is not None else config.product.max_kl,
        prec_bits=ctx.obj["prec"],
        tail_margin=config.product.tail_margin,
        region=region or config.product.region,
        chamber_check=config.product.chamber_check,
    )


def precision_meta(prec: int) -> dict:
    return {"bits": prec, "digits": digits_for(prec)}


# --- output -----------------------------------------------------------------

def _render_table(payload) -> None:
    out = Console()
    if isinstance(payload, list) and payload and isinstance(payload[0], dict):
        table = Table()
        for key in payload[0]:
            table.add_column(key)
        for row in payload:
            table.add_row(*(json.dumps(v, sort_keys=True) if not isinstance(v, str) else v for v in row.values()))
        out.print(table)
    elif isinstance(payload, dict):
        table = Table(show_header=False)
        table.add_column("key", style="cyan")
        table.add_column("value")
        for key, value in payload.items():
            table.add_row(key, value if isinstance(value, str) else json.dumps(value, sort_keys=True))
        out.print(table)
    else:
        out.print(payload)


def emit(ctx, payload) -> None:
    """Write a result: JSON (or CSV text) to --out or stdout."""
    if isinstance(payload, str):
        text = payload
    elif ctx.obj["format"] == "table" and ctx.obj["out"] is None:
        _render_table(payload)
        return
    else:
        text = json.dumps(payload, sort_keys=True)
    if ctx.obj["out"]:
        Path(ctx.obj["out"]).write_text(text + ("" if text.endswith("\n") else "\n"))
    else:
        click.echo(text, nl=not text.endswith("\n"))


def fail(ctx, exc: LiftError) -> None:
    """Print an error object raised before any job ran and exit with its code."""
    click.echo(json.dumps(exc.to_dict(), sort_keys=True))
    ctx.exit(exc.exit_code)


def set_prec(ctx, prec: int) -> None:
    if prec < MIN_PREC_BITS:
        fail(ctx, InvalidInputError(f"--prec must be >= {MIN_PREC_BITS}, got {prec}"))
    ctx.obj["prec"] = prec


def run_job(ctx, command: str, params: dict, compute) -> None:
    """Run one job, emit its output or its error object, journal it and set the exit code."""
    start = time.monotonic()
    error = None
    try:
        with mpmath.workprec(ctx.obj["prec"]):
            payload = compute()
        code = 0
    except LiftError as exc:
        payload, code, error = exc.to_dict(), exc.exit_code, str(exc)
    except Exception as exc:
        logger.exception("internal error in %s", command)
        payload, code, error = {"error": "internal", "message": str(exc)}, 1, str(exc)
    elapsed_ms = int((time.monotonic() - start) * 1000)

    if code and ctx.obj["format"] == "table":
        console.print(f"[red]Error ({payload['error']}):[/] {payload['message']}")
    else:
        emit(ctx, payload)

    journal = ctx.obj["journal"]
    if journal is not None:
        summary = {"items": len(payload)} if isinstance(payload, list) else {}
        journal.log_job(command, params=params, exit_code=code, elapsed_ms=elapsed_ms, error=error, summary=summary)
    if code:
        ctx.exit(code)


# --- commands ---------------------------------------------------------------

@click.group()
@click.option("--config", "-c", default="config.yaml", help="Path to config file")
@click.option("--prec", type=int, default=None, help="Working precision in bits (default: U11_PREC or config)")
@click.option("--out", "out", type=click.Path(dir_okay=False), default=None, help="Write output to FILE")
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", help="Output format")
@click.option("--journal", type=click.Path(file_okay=False), default=None, help="Append a JSONL job journal in DIR")
@click.option("--log-level", default=None, help="Log level (stderr)")
@click.pass_context
def cli(ctx, config, prec, out, fmt, journal, log_level):
    """U(1,1) Borcherds lift toolkit - products, chambers and Heegner points."""
    ctx.ensure_object(dict)
    try:
        cfg = load_config(config)
    except LiftError as exc:
        fail(ctx, exc)
    level = (log_level or cfg.logging.level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    journal_dir = journal or cfg.logging.journal_dir
    ctx.obj.update(
        config=cfg,
        config_path=config,
        out=out,
        format=fmt,
        journal=RunJournal(journal_dir) if journal_dir else None,
    )
    set_prec(ctx, prec if prec is not None else cfg.precision.prec_bits)


@cli.command("field-info")
@click.option("--d", "d", type=int, required=True, help="Square-free negative integer")
@click.pass_context
def field_info(ctx, d):
    """Discriminant, zeta and |delta| of Q(sqrt(d))."""
    def compute():
        spec = make_field(d)
        digits = digits_for(ctx.obj["prec"])
        return {
            "d": d,
            "D_F": spec.disc,
            "zeta": complex_pair(spec.zeta_numeric(ctx.obj["prec"]), digits),
            "abs_delta": mp_str(spec.abs_delta(ctx.obj["prec"]), digits),
            "units": len(unit_group(spec)),
            "precision": precision_meta(ctx.obj["prec"]),
        }

    run_job(ctx, "field-info", {"d": d}, compute)


@cli.command("jn-coeffs")
@click.option("--n", "n", type=int, required=True)
@click.option("--upto", type=int, required=True, help="Last exponent printed")
@click.pass_context
def jn_coeffs(ctx, n, upto):
    """Coefficients c(m), -n <= m <= upto, of j_n = q^-n + O(q)."""
    def compute():
        if upto < -n:
            raise InvalidInputError(f"--upto must be >= {-n}")
        f = faber_jn(n, max(upto + 1, 1))
        return [[m, f.coeff(m)] for m in range(-n, upto + 1)]

    run_job(ctx, "jn-coeffs", {"n": n, "upto": upto}, compute)


@cli.command("chambers")
@click.option("--m", "m", type=int, required=True)
@click.option("--d", "d", type=int, default=None, help="Also print the walls as strips Im(tau) = const")
@click.pass_context
def chambers_cmd(ctx, m, d):
    """Weyl chambers of index m, in clockwise order, with their walls."""
    def compute():
        digits = digits_for(ctx.obj["prec"])
        walls = [{"t": t, "slope": rational_to_dict(s)} for t, s in wall_slopes(m)]
        if d is not None:
            for wall, (_, strip) in zip(walls, strip_bounds(m, make_field(d), ctx.obj["prec"])):
                wall["strip"] = mp_str(strip, digits)
        out = {
            "m": m,
            "chambers": [{"label": W.label(), "t_lo": W.t_lo, "t_hi": W.t_hi} for W in chambers(m)],
            "walls": walls,
        }
        if d is not None:
            out["precision"] = precision_meta(ctx.obj["prec"])
        return out

    run_job(ctx, "chambers", {"m": m, "d": d}, compute)


@cli.command("weyl-vector")
@click.option("--n", "n", type=int, default=None)
@click.option("--chamber", "chamber", default=None, help="t_lo,t_hi (t_hi may be inf)")
@click.option("--f", "form_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Coefficient file with principal part and c0")
@click.option("--Y", "Y", default=None, help="y1,y2 selecting the chamber for --f")
@click.pass_context
def weyl_vector(ctx, n, chamber, form_file, Y):
    """Exact Weyl vector rho(j_n; W), or rho(f; W) for a coefficient file."""
    def compute():
        if form_file:
            principal, c0, file_Y = load_form(form_file)
            point = parse_pair(Y, "--Y") if Y else file_Y
            if point is None:
                raise InvalidInputError("--f needs --Y (or Y in the coefficient file)")
            rho = weyl_vector_f(principal, c0, point, ctx.obj["config"].chambers.wall_tolerance)
        else:
            if n is None or chamber is None:
                raise InvalidInputError("give --n with --chamber, or --f with --Y")
            rho = weyl_vector_jn(n, parse_chamber(-n, chamber))
        return {"rho1": rational_to_dict(rho.rho1), "rho2": rational_to_dict(rho.rho2)}

    run_job(ctx, "weyl-vector", {"n": n, "chamber": chamber, "f": form_file, "Y": Y}, compute)


@cli.command("phi-k")
@click.option("--m", "m", type=int, required=True)
@click.option("--Y", "Y", required=True, help="y1,y2")
@click.pass_context
def phi_k(ctx, m, Y):
    """Wall-crossing function Phi_m^K(Y) against its chamber formula."""
    def compute():
        prec = ctx.obj["prec"]
        point = parse_pair(Y, "--Y")
        digits = digits_for(prec)
        raw = phi_K(m, point, prec)
        found = chamber_of_Y(m, point, ctx.obj["config"].chambers.wall_tolerance)
        W = next(c for c in chambers(m) if c.t_hi == found.t) if isinstance(found, Wall) else found
        formula = phi_K_chamber(m, W, point, prec)
        return {
            "raw": mp_str(raw, digits),
            "chamber": W.label(),
            "on_wall": isinstance(found, Wall),
            "chamber_formula": mp_str(formula, digits),
            "identity_residual": mpmath.nstr(abs(raw - formula), 6),
            "precision": precision_meta(prec),
        }

    run_job(ctx, "phi-k", {"m": m, "Y": Y}, compute)


@cli.command("heegner")
@click.option("--m", "m", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--bound", type=int, default=None, help="Coordinate box (default from config)")
@click.option("--reduced", is_flag=True, help="One entry per SL2(Z)-reduced point")
@click.option("--divisor", is_flag=True, help="Reduced classes with raw and +-identified counts")
@click.pass_context
def heegner(ctx, m, d, bound, reduced, divisor):
    """Heegner points of norm m with coordinates in the box."""
    def describe(h):
        entry = h.to_dict()
        entry["tau"] = complex_pair(tau_numeric(h, ctx.obj["prec"]), digits_for(ctx.obj["prec"]))
        entry["order"] = cm_order(h)[1]
        entry["precision"] = precision_meta(ctx.obj["prec"])
        return entry

    def compute():
        spec = make_field(d)
        box = bound if bound is not None else ctx.obj["config"].heegner.coord_bound
        if divisor:
            return [
                {
                    **describe(c.representative),
                    "raw_count": c.raw_count,
                    "identified_count": c.identified_count,
                    "conductors": sorted(c.conductors),
                }
                for c in heegner_divisor(m, spec, box)
            ]
        points = enumerate_heegner(m, spec, box)
        if reduced:
            seen, unique = set(), []
            for h in points:
                r = reduce_point(h)
                if r.tau not in seen:
                    seen.add(r.tau)
                    unique.append(r)
            points = sorted(unique, key=lambda h: h.sort_key())
        return [describe(h) for h in points]

    run_job(ctx, "heegner", {"m": m, "d": d, "bound": bound, "reduced": reduced, "divisor": divisor}, compute)


def _grid_csv(rows, digits: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im", "log_abs"])
    for x, y, value in rows:
        writer.writerow([mp_str(x, 10), mp_str(y, 10), mp_str(value, digits)])
    return buf.getvalue()


@cli.command("eval-xi")
@click.option("--d", "d", type=int, required=True)
@click.option("--n", "n", type=int, default=None)
@click.option("--tau", default=None, help="re,im")
@click.option("--chamber", default=None, help="t_lo,t_hi (t_hi may be inf)")
@click.option("--max-kl", type=int, default=None)
@click.option("--region", type=click.Choice(["conservative", "theorem"]), default=None)
@click.option("--f", "form_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Coefficient file of a general weakly holomorphic f")
@click.option("--const", "const", is_flag=True, help="The lift of f = 1, eta(tau) * eta(-conj(zeta))")
@click.option("--grid", default=None, help="re0,re1,im0,im1,nx,ny: CSV of log|Xi(j_n)| samples")
@click.option("--prec", type=int, default=None, help="Working precision in bits for this job")
@click.pass_context
def eval_xi(ctx, d, n, tau, chamber, max_kl, region, form_file, const, grid, prec):
    """Evaluate a Borcherds product at tau."""
    if prec is not None:
        set_prec(ctx, prec)

    def compute():
        spec = make_field(d)
        params = product_params(ctx, max_kl, region)
        if grid:
            parts = grid.split(",")
            if len(parts) != 6 or n is None or chamber is None:
                raise InvalidInputError("--grid needs re0,re1,im0,im1,nx,ny together with --n and --chamber")
            re0, re1, im0, im1 = (parse_rational(p, "--grid") for p in parts[:4])
            steps = (int(parts[4]), int(parts[5]))
            rows = xi_grid(n, parse_chamber(-n, chamber), spec, (re0, re1), (im0, im1), steps, params)
            return _grid_csv(rows, digits_for(params.prec_bits))
        if tau is None:
            raise InvalidInputError("--tau is required")
        point = parse_pair(tau, "--tau")
        if const:
            result = xi_const(point, spec, params)
        elif form_file:
            principal, c0, Y = load_form(form_file)
            f = form_from_principal(principal, c0, params.max_kl + 1)
            result = xi_f(point, f, spec, Y=Y, params=params)
        else:
            if n is None or chamber is None:
                raise InvalidInputError("give --n with --chamber, --f FILE or --const")
            result = xi_jn(point, n, parse_chamber(-n, chamber), spec, params)
        return result.to_dict()

    run_job(ctx, "eval-xi", {"d": d, "n": n, "tau": tau, "chamber": chamber, "max_kl": max_kl,
                             "region": region, "f": form_file, "const": const, "grid": grid}, compute)


@cli.command("zero-order")
@click.option("--d", "d", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--tau", required=True, help="Centre re,im")
@click.option("--chamber", required=True, help="t_lo,t_hi (t_hi may be inf)")
@click.option("--radius", type=float, default=None)
@click.option("--samples", type=int, default=None)
@click.option("--max-kl", type=int, default=None)
@click.option("--region", type=click.Choice(["conservative", "theorem"]), default=None)
@click.option("--prec", type=int, default=None, help="Working precision in bits for this job")
@click.pass_context
def zero_order_cmd(ctx, d, n, tau, chamber, radius, samples, max_kl, region, prec):
    """Order of Xi(j_n) inside a circle, by the argument principle."""
    if prec is not None:
        set_prec(ctx, prec)

    def compute():
        config = ctx.obj["config"].zero_order
        r = radius if radius is not None else config.radius
        order = zero_order(
            parse_pair(tau, "--tau"), n, parse_chamber(-n, chamber), make_field(d),
            radius=r,
            samples=samples if samples is not None else config.samples,
            params=product_params(ctx, max_kl, region),
            max_refinements=config.max_refinements,
        )
        return {"order": order, "radius": str(r)}

    run_job(ctx, "zero-order", {"d": d, "n": n, "tau": tau, "chamber": chamber, "radius": radius}, compute)


@cli.command("check")
@click.option("--suite", type=click.Choice([*SUITES, "all"]), default="all")
@click.pass_context
def check(ctx, suite):
    """Run an invariant suite; exit 0 iff every check passes."""
    start = time.monotonic()
    try:
        results = run_suite(suite)
    except LiftError as exc:
        fail(ctx, exc)
    lines = [json.dumps(r.to_dict(), sort_keys=True) for r in results]
    failed = sum(1 for r in results if not r.passed)
    if ctx.obj["out"]:
        Path(ctx.obj["out"]).write_text("\n".join(lines) + "\n")
    else:
        for line in lines:
            click.echo(line)
    if ctx.obj["journal"] is not None:
        ctx.obj["journal"].log_job(
            "check", params={"suite": suite}, exit_code=1 if failed else 0,
            elapsed_ms=int((time.monotonic() - start) * 1000),
            summary={"checks": len(results), "failed": failed},
        )
    if failed:
        ctx.exit(1)


def main(argv=None) -> int:
    """Run the CLI; usage errors are reported as JSON error objects like every other failure."""
    try:
        code = cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        click.echo(json.dumps(InvalidInputError(exc.format_message()).to_dict(), sort_keys=True))
        return InvalidInputError.exit_code
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
