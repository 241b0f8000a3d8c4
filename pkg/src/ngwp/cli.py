"""Command-line interface.

Three subcommands:

  verify   run identity checks (one, several, or the whole catalog) and emit
           a JSON report document; exit 0 only if every check passed
  eval     evaluate a packet family on a grid and emit CSV
  list     print the identity catalog

Exit codes: 0 success / all passed, 1 at least one identity failed,
2 usage or domain error.  ``NGWP_MAX_EVALS`` caps quadrature evaluations
(see :mod:`ngwp.oscquad`); ``NGWP_BACKEND`` picks the kernel backend.
"""

import datetime
import json

import click
import numpy as np

from . import __version__, identities, kernels, oscquad
from .errors import NgwpError, UnknownIdentityError

_FAMILIES = ("glasser-v", "glaisher", "two-particle")


@click.group()
@click.version_option(__version__, prog_name="ngwp")
def main():
    """Non-Gaussian wave packets: certified two-way evaluation."""


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@main.command()
@click.option("--id", "ids", multiple=True, metavar="ID",
              help="Identity id to check (repeatable). See `ngwp list`.")
@click.option("--all", "run_all", is_flag=True,
              help="Check the whole catalog.")
@click.option("--tol", type=float, default=None,
              help="Override the per-identity default tolerance.")
@click.option("--json", "as_json", is_flag=True,
              help="Write the JSON report document to stdout instead of the "
                   "human-readable table.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True),
              default=None, help="Also write the JSON report document here.")
@click.pass_context
def verify(ctx, ids, run_all, tol, as_json, out):
    """Check identities: integral side vs series side, certified."""
    if not ids and not run_all:
        raise click.UsageError("pass --id ID (repeatable) or --all")
    if tol is not None and not tol > 0.0:
        raise click.UsageError("--tol must be positive")
    try:
        reports = identities.run_suite(None if run_all else list(ids), tol=tol)
    except UnknownIdentityError as exc:
        raise click.UsageError("unknown identity id %s; known ids: %s"
                               % (exc, ", ".join(identities.IDENTITY_IDS)))
    except NgwpError as exc:
        click.echo("error: %s" % exc, err=True)
        ctx.exit(2)

    doc = _report_document(reports)
    text = json.dumps(doc, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    if as_json:
        click.echo(text)
    else:
        for rep in reports:
            click.echo("[%s] %-10s %s  abs_err=%.3e  tol=%.1e  (%.0f ms)"
                       % ("PASS" if rep.passed else "FAIL", rep.identity_id,
                          _params_brief(rep.params), rep.abs_err, rep.tol,
                          rep.runtime_ms))
        n_pass = sum(1 for rep in reports if rep.passed)
        click.echo("%d/%d passed" % (n_pass, len(reports)))
    ctx.exit(0 if all(rep.passed for rep in reports) else 1)


def _report_document(reports):
    resolved = {}
    for rep in reports:
        note = rep.annotations.get("resolved_constant")
        if note is not None and rep.identity_id not in resolved:
            resolved[rep.identity_id] = note
    return {
        "tool": "ngwp",
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "reports": [rep.to_json_dict() for rep in reports],
        "resolved_constants": resolved,
    }


def _params_brief(params):
    parts = []
    for key in sorted(params):
        val = params[key]
        if isinstance(val, complex):
            parts.append("%s=%g%+gj" % (key, val.real, val.imag))
        elif isinstance(val, float):
            parts.append("%s=%g" % (key, val))
        else:
            parts.append("%s=%s" % (key, val))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

@main.command("eval")
@click.option("--family", type=click.Choice(_FAMILIES), required=True,
              help="Packet family to evaluate.")
@click.option("--v", type=float, default=None,
              help="Momentum-power order (glasser-v).")
@click.option("--a", type=float, default=None,
              help="Single evaluation position for the glaisher family "
                   "(alternative to --x).")
@click.option("--b", type=float, default=0.0, show_default=True,
              help="Kernel width parameter (glaisher).")
@click.option("--tau", type=float, default=None,
              help="Reduced time tau = hbar t / (2 m).")
@click.option("--x", "grid", metavar="MIN:MAX:COUNT|VALUE", default=None,
              help="Evaluation grid for the position-like variable "
                   "(x, a, or w1 depending on the family).")
@click.option("--w1", type=float, default=None,
              help="Single w1 value for two-particle (alternative to --x).")
@click.option("--w2", type=float, default=0.0, show_default=True,
              help="Second position (two-particle).")
@click.option("--m1", type=float, default=1.0, show_default=True)
@click.option("--m2", type=float, default=1.0, show_default=True)
@click.option("--hbar-t", type=float, default=None,
              help="Product hbar * t (two-particle).")
@click.option("--beta-prime", type=float, default=1.0, show_default=True,
              help="Momentum-space sech width (two-particle).")
@click.option("--hbar", type=float, default=None,
              help="With --mass and --time: compute tau = hbar t/(2 m); "
                   "with --time alone it forms hbar*t for two-particle.")
@click.option("--mass", type=float, default=None)
@click.option("--time", "time_", type=float, default=None)
@click.option("--via-integral", is_flag=True,
              help="Evaluate by oscillatory quadrature instead of the series.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True),
              default=None, help="Write CSV here instead of stdout.")
@click.pass_context
def eval_cmd(ctx, family, v, a, b, tau, grid, w1, w2, m1, m2, hbar_t,
             beta_prime, hbar, mass, time_, via_integral, out):
    """Evaluate a packet family on a grid; emit CSV (17 significant digits)."""
    try:
        if family == "two-particle":
            rows = _eval_two_particle(grid, w1, w2, m1, m2,
                                      _resolve_hbar_t(hbar_t, hbar, time_),
                                      beta_prime, via_integral)
            header = "w1,w2,re,im,abs"
        else:
            tau_val = _resolve_tau(tau, hbar, mass, time_)
            points = _parse_grid(grid, a, "--x (or --a)")
            if family == "glasser-v":
                if v is None:
                    raise click.UsageError("glasser-v needs --v")
                rows = _eval_glasser(v, points, tau_val, via_integral)
            else:
                rows = _eval_glaisher(points, b, tau_val, via_integral)
            header = ("x" if family == "glasser-v" else "a") + ",re,im,abs"
    except click.UsageError:
        raise
    except NgwpError as exc:
        click.echo("error: %s" % exc, err=True)
        ctx.exit(2)

    lines = [header]
    for row in rows:
        lines.append(",".join("%.17g" % val for val in row))
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    ctx.exit(0)


def _resolve_tau(tau, hbar, mass, time_):
    if tau is not None:
        return tau
    if hbar is not None and mass is not None and time_ is not None:
        return identities.ReducedTime.from_physical(hbar, mass, time_).tau
    raise click.UsageError("pass --tau, or all of --hbar --mass --time")


def _resolve_hbar_t(hbar_t, hbar, time_):
    if hbar_t is not None:
        return hbar_t
    if hbar is not None and time_ is not None:
        return hbar * time_
    raise click.UsageError("pass --hbar-t, or both --hbar and --time")


def _parse_grid(grid, single, flag_name):
    if grid is not None and single is not None:
        raise click.UsageError("pass either a grid or a single value, not both")
    if single is not None:
        return [float(single)]
    if grid is None:
        raise click.UsageError("missing %s" % flag_name)
    if ":" in grid:
        parts = grid.split(":")
        if len(parts) != 3:
            raise click.UsageError("grid must be MIN:MAX:COUNT, got %r" % grid)
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise click.UsageError("grid must be MIN:MAX:COUNT, got %r" % grid)
        if count < 2:
            raise click.UsageError("grid needs at least 2 points")
        if not lo < hi:
            raise click.UsageError("grid needs MIN < MAX")
        return [float(val) for val in np.linspace(lo, hi, count)]
    try:
        return [float(grid)]
    except ValueError:
        raise click.UsageError("grid must be MIN:MAX:COUNT or a number, got %r"
                               % grid)


# The packet families are even in their position argument (the integrands
# carry cos(position * z)), so negative grid points evaluate at |position|.
# At exactly zero the series sides lose their decay factor, so that single
# point falls back to the quadrature path regardless of --via-integral.

def _eval_glasser(v, points, tau, via_integral):
    rows = []
    for x in points:
        if x == 0.0 or via_integral:
            val = oscquad.integrate_fresnel(
                lambda z: kernels.thm31_factor(z, complex(v), abs(x)),
                tau, identities.DEFAULT_QUAD_TOL, growth=abs(x)).value
        else:
            val = identities.thm31_rhs(
                identities.Thm31Params(v, abs(x), tau)).value
        val = complex(val)
        rows.append((x, val.real, val.imag, abs(val)))
    return rows


def _eval_glaisher(points, b, tau, via_integral):
    rows = []
    for a in points:
        if a == 0.0 or via_integral:
            val = oscquad.integrate_fresnel(
                lambda z: kernels.thm21_factor(z, abs(a), b),
                tau, identities.DEFAULT_QUAD_TOL, growth=abs(a)).value
        else:
            val = identities.thm21_rhs(
                identities.Thm21Params(abs(a), b, tau)).value
        val = complex(val)
        rows.append((a, val.real, val.imag, abs(val)))
    return rows


def _eval_two_particle(grid, w1, w2, m1, m2, hbar_t, beta_prime, via_integral):
    points = _parse_grid(grid, w1, "--x (or --w1)")
    rows = []
    for w in points:
        p = identities.TwoParticleParams(w, w2, m1, m2, hbar_t, beta_prime)
        if via_integral:
            val = identities.thm41_lhs(p).value
        else:
            val, _ = identities.thm41_rhs(p)
        val = complex(val)
        rows.append((w, w2, val.real, val.imag, abs(val)))
    return rows


# ---------------------------------------------------------------------------
# list
# ---------------------------------------------------------------------------

@main.command("list")
@click.option("--json", "as_json", is_flag=True,
              help="Emit a JSON array of {id, description}.")
def list_cmd(as_json):
    """Print the identity catalog."""
    if as_json:
        entries = [{"id": key, "description": identities.CATALOG_DESCRIPTIONS[key]}
                   for key in identities.IDENTITY_IDS]
        click.echo(json.dumps(entries, indent=2))
    else:
        width = max(len(key) for key in identities.IDENTITY_IDS)
        for key in identities.IDENTITY_IDS:
            click.echo("%-*s  %s" % (width, key,
                                     identities.CATALOG_DESCRIPTIONS[key]))


if __name__ == "__main__":
    main()
