"""Command-line front end: one subcommand per experiment.

Every run writes ``<out>/<command>.csv`` and an echo of the fully resolved
parameters to ``<out>/config.json``.  ``--config config.json`` replays a run.
Exit codes: 0 success, 2 usage error, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from . import experiments as ex
from . import io
from .graph import IsolatedVertexError, parse_scheme
from .manifold import CATALOGUE, TABLE_FUNCTIONS, GaussianMixture, Interval, Uniform, sample
from .numerics import EigenSolverError, linear_fit

log = logging.getLogger("lapbound")

# options that control output, not the computation; never echoed as params
_PLUMBING = {"command", "out", "svg", "json", "config", "verbose"}

NUMERICAL_ERRORS = (
    EigenSolverError,
    IsolatedVertexError,
    ZeroDivisionError,
    FloatingPointError,
    np.linalg.LinAlgError,
)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- parsing


def float_list(text):
    """``a,b,c`` or ``log:<start>:<end>:<count>`` (geometric, inclusive)."""
    text = str(text).strip()
    if text.startswith("log:"):
        parts = text.split(":")
        if len(parts) != 4:
            raise argparse.ArgumentTypeError("expected log:<start>:<end>:<count>")
        try:
            start, stop, count = float(parts[1]), float(parts[2]), int(parts[3])
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
        if start <= 0 or stop <= 0 or count < 2:
            raise argparse.ArgumentTypeError("log grid needs positive ends and count >= 2")
        return [float(v) for v in ex.log_grid(start, stop, count)]
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def int_list(text):
    try:
        vals = [int(v) for v in str(text).split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def func_list(text):
    text = str(text)
    names = list(TABLE_FUNCTIONS) if text == "all" else [s for s in text.split(",") if s]
    bad = [s for s in names if s not in CATALOGUE]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown function(s) {bad}; choose from {sorted(CATALOGUE)}")
    return names


def func_name(text):
    if text not in CATALOGUE:
        raise argparse.ArgumentTypeError(f"unknown function {text!r}; choose from {sorted(CATALOGUE)}")
    return text


def graph_spec(text):
    try:
        parse_scheme(text, t=1.0)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def seed_value(text):
    s = int(text)
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return s


def _common(p):
    p.add_argument("--seed", type=seed_value, default=0)
    p.add_argument("--out", default=".", help="output directory (created if missing)")
    p.add_argument("--svg", action="store_true", help="also write <command>.svg")
    p.add_argument("--json", action="store_true", help="also write <command>.json")
    p.add_argument("--config", help="replay a config.json echo")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lapbound", description="Boundary behaviour of graph Laplacians."
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("constants", help="kernel moment constants and Monte-Carlo check")
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--mc-samples", type=int, default=1_000_000)
    _common(p)

    p = sub.add_parser("scaling", help="(1/t) L f(x) along a bandwidth ladder")
    p.add_argument("--domain", choices=["interval"], default="interval")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=2.0)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--func", type=func_name, default="x3")
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--kind", choices=["u", "r"], default="r")
    p.add_argument("--t-list", type=float_list, default="log:1e-3:1e-6:7")
    p.add_argument("--point", type=float_list, default="2.0")
    _common(p)

    p = sub.add_parser("boundary-halfsphere", help="normal-derivative limit on the hemisphere")
    p.add_argument("--n", type=int, default=2000)
    p.add_argument("--t", type=float, default=0.25)
    p.add_argument("--band", type=float, default=0.05)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--n-list", type=int_list, default=None, help="table mode")
    p.add_argument("--t-list", type=float_list, default=None, help="table mode")
    _common(p)

    p = sub.add_parser("quadform", help="quadratic-form coefficient over a t grid")
    p.add_argument("--n", type=int, default=1001)
    p.add_argument("--alpha", type=float_list, default="0")
    p.add_argument("--funcs", type=func_list, default="all")
    p.add_argument("--t-grid", type=float_list, default="log:1:1e-7:29")
    _common(p)

    p = sub.add_parser("eigen", help="low eigenvectors and their boundary slopes")
    p.add_argument("--density", choices=["uniform", "gauss2"], default="uniform")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--t", type=float, default=1e-4)
    p.add_argument("--kind", choices=["r", "s"], default="r")
    p.add_argument("--graph", type=graph_spec, default="full")
    p.add_argument("--k-eigs", type=int, default=5)
    _common(p)

    p = sub.add_parser("kernel", help="pseudoinverse row versus the Neumann kernel")
    p.add_argument("--n", type=int, default=1001)
    p.add_argument("--t", type=float, default=1e-4)
    p.add_argument("--x0", type=float, default=0.25)
    p.add_argument("--kmax", type=int, default=10_000)
    _common(p)

    p = sub.add_parser("fdgrid", help="grid graph versus finite-difference Neumann matrix")
    p.add_argument("--nx", type=int, default=3)
    p.add_argument("--ny", type=int, default=1)
    _common(p)

    p = sub.add_parser("concentration", help="spread of the scaled Laplacian across draws")
    p.add_argument("--n-list", type=int_list, default="250,500,1000,2000")
    p.add_argument("--reps", type=int, default=50)
    p.add_argument("--t", default="0.01", help="fixed bandwidth, or 'rule' for n^(-1/4)")
    p.add_argument("--func", type=func_name, default="x2")
    p.add_argument("--point", type=float, default=0.5)
    p.add_argument("--alpha", type=float, default=0.0)
    _common(p)
    return parser


def _to_argv(command, params):
    """Render a params dict back into flags for the same subcommand."""
    argv = [command]
    for key, val in params.items():
        if val is None:
            continue
        flag = "--" + key.replace("_", "-")
        if isinstance(val, (list, tuple)):
            val = ",".join(repr(v) if isinstance(v, float) else str(v) for v in val)
        elif isinstance(val, float):
            val = repr(val)
        argv += [flag, str(val)]
    return argv


def _load_config(path, parser):
    try:
        cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    unknown = set(cfg) - {"command", "params"}
    if unknown or "command" not in cfg:
        raise UsageError(f"config must hold 'command' and 'params' only (got {sorted(cfg)})")
    params = dict(cfg.get("params") or {})
    command = cfg["command"]
    # unknown parameter names are a usage error rather than silently dropped
    probe = parser.parse_args([command]) if command in _commands(parser) else None
    if probe is None:
        raise UsageError(f"unknown command {command!r} in config")
    known = set(vars(probe)) - _PLUMBING
    bad = set(params) - known
    if bad:
        raise UsageError(f"unknown parameter(s) in config: {sorted(bad)}")
    return command, params


def _commands(parser):
    for action in parser._subparsers._group_actions:
        return set(action.choices)
    return set()


# ---------------------------------------------------------------- commands


def cmd_constants(p):
    if p["dim"] < 1:
        raise UsageError("--dim must be at least 1")
    if p["mc_samples"] < 10_000:
        raise UsageError("--mc-samples must be at least 10000")
    c = ex.constants(p["dim"], mc_samples=p["mc_samples"], seed=p["seed"])
    header = ["name", "closed_form", "mc_estimate", "mc_std_error"]
    rows = [[k, v, *c.mc[k]] for k, v in c.as_dict().items()]
    plot = dict(
        series=[("closed form", list(range(4)), [r[1] for r in rows]),
                ("Monte Carlo", list(range(4)), [r[2] for r in rows])],
        title=f"kernel constants, d={p['dim']}", xlabel="C1..C4", scatter=True,
    )
    return header, rows, plot


def cmd_scaling(p):
    if p["n"] < 2:
        raise UsageError("--n must be at least 2")
    cloud = sample(Interval(p["a"], p["b"]), Uniform(), p["n"], mode="equispaced")
    fn = CATALOGUE[p["func"]]
    header = ["row", "point", "t", "value", "safe", "underflow", "used",
              "slope", "intercept", "r_squared"]
    rows, series = [], []
    for x in p["point"]:
        rep = ex.scaling_experiment(cloud, fn, x, p["t_list"], p["alpha"], p["kind"])
        for i, t in enumerate(rep.t):
            rows.append(["rung", x, t, rep.values[i], rep.safe[i], rep.underflow[i],
                         rep.used[i], None, None, None])
        if rep.fit is not None:
            rows.append(["fit", x, None, None, None, None, None, *rep.fit])
        # unfiltered fit over every finite non-zero rung, for transparency
        ok = np.isfinite(rep.values) & (rep.values != 0)
        if ok.sum() >= 2:
            allfit = linear_fit(np.log(rep.t[ok]), np.log(np.abs(rep.values[ok])))
            rows.append(["fit_all_rungs", x, None, None, None, None, None, *allfit])
        series.append((f"x={x:g}", rep.t.tolist(), np.abs(rep.values).tolist()))
    plot = dict(series=series, title=f"|(1/t) L f| for f={fn.name}", xlabel="t",
                ylabel="|value|", logx=True, logy=True)
    return header, rows, plot


def cmd_boundary_halfsphere(p):
    header = ["row", "n", "t", "seed", "x1", "x2", "x3", "value", "target",
              "slope", "r_squared", "mse_raw", "mse_scaled", "mse_best"]
    table = p["n_list"] is not None or p["t_list"] is not None
    n_list = p["n_list"] or [p["n"]]
    t_list = p["t_list"] or [p["t"]]
    rows = []
    plot = None
    for n in n_list:
        for t in t_list:
            rep = ex.halfsphere_boundary_experiment(n, t, p["band"], p["seed"], alpha=p["alpha"])
            if not table:
                for pt, v, tg in zip(rep.points, rep.values, rep.target):
                    rows.append(["point", n, t, p["seed"], *pt, v, tg, None, None, None, None, None])
                plot = dict(series=[("(1/sqrt t) L f", rep.points[:, 0], rep.values),
                                    ("-d_n f", rep.points[:, 0], rep.target)],
                            title="hemisphere boundary band", xlabel="x", scatter=True)
            rows.append(["summary", n, t, p["seed"], None, None, None, None, None,
                         rep.fit.slope, rep.fit.r_squared, rep.mse_raw, rep.mse_scaled, rep.mse_best])
    return header, rows, plot


def cmd_quadform(p):
    reps = ex.quadform_table(p["n"], p["alpha"], p["funcs"], p["t_grid"])
    header = ["row", "function", "alpha", "t", "coefficient", "theory"]
    rows = []
    for r in reps:
        rows += [["value", r.function, r.alpha, t, c, r.theory] for t, c in zip(r.t, r.coefficient)]
    rows += [["max", r.function, r.alpha, r.argmax_t, r.max_coefficient, r.theory] for r in reps]
    series = [(f"{r.function}, a={r.alpha:g}", r.t, r.coefficient) for r in reps]
    plot = dict(series=series, title="quadratic-form coefficient", xlabel="t", logx=True)
    return header, rows, plot


def cmd_eigen(p):
    density = Uniform() if p["density"] == "uniform" else GaussianMixture()
    scheme = parse_scheme(p["graph"], t=p["t"])
    rep = ex.eigenfunction_experiment(
        density, p["n"], p["alpha"], p["t"], scheme, p["kind"], p["k_eigs"], p["seed"]
    )
    header = ["row", "k", "x", "phi", "psi", "eigenvalue", "correlation", "left_slope",
              "right_slope", "max_interior_slope", "neumann_ratio", "identity_error"]
    order = np.argsort(rep.x, kind="stable")
    rows = []
    for k in range(len(rep.eigenvalues)):
        for i in order:
            rows.append(["vector", k, rep.x[i], rep.phi[i, k], rep.psi[i, k],
                         None, None, None, None, None, None, None])
    for k, lam in enumerate(rep.eigenvalues):
        corr = rep.correlation[k]
        ident = rep.identity_error[k] if k < len(rep.identity_error) else None
        rows.append(["summary", k, None, None, None, lam, None if math.isnan(corr) else corr,
                     *rep.boundary_slope[k], rep.max_interior_slope[k], rep.neumann_ratio[k], ident])
    xs = rep.x[order]
    plot = dict(series=[(f"k={k}", xs, rep.vectors[order, k]) for k in range(1, min(4, len(rep.eigenvalues)))],
                title=f"eigenvectors of L^{p['kind']}", xlabel="x")
    return header, rows, plot


def cmd_kernel(p):
    rep = ex.kernel_experiment(p["n"], p["t"], x0=p["x0"], k_max=p["kmax"])
    header = ["row", "y", "k_series", "k_closed", "k_pinv", "k_pinv_aligned", "k_prime",
              "scale", "series_vs_closed", "pinv_discrepancy", "prime_gap"]
    rows = [["sample", y, a, b, c, d, e, None, None, None, None]
            for y, a, b, c, d, e in zip(rep.y, rep.k_series, rep.k_closed, rep.k_pinv,
                                        rep.k_pinv_aligned, rep.k_prime)]
    rows.append(["summary", rep.x0, None, None, None, None, None, rep.scale,
                 rep.series_vs_closed, rep.pinv_discrepancy, rep.prime_gap])
    plot = dict(series=[("K series", rep.y, rep.k_series), ("pinv row / c", rep.y, rep.k_pinv_aligned),
                        ("K'", rep.y, rep.k_prime)], title=f"kernels at x0={rep.x0:g}", xlabel="y")
    return header, rows, plot


def cmd_fdgrid(p):
    _, _, diff = ex.fd_equivalence(p["nx"], p["ny"])
    return ["nx", "ny", "nodes", "max_abs_difference"], [[p["nx"], p["ny"], p["nx"] * p["ny"], diff]], None


def cmd_concentration(p):
    t = p["t"]
    if t == "rule":
        rule = ex.concentration.default_t_rule
    else:
        try:
            rule = float(t)
        except ValueError:
            raise UsageError("--t must be a number or 'rule'") from None
    rep = ex.concentration_experiment(
        p["n_list"], p["reps"], rule, CATALOGUE[p["func"]], p["point"], p["seed"], p["alpha"]
    )
    header = ["row", "n", "t", "mean", "std", "slope", "intercept", "r_squared", "strictly_decreasing"]
    rows = [["n", n, tt, m, s, None, None, None, None]
            for n, tt, m, s in zip(rep.n, rep.t, rep.mean, rep.std)]
    rows.append(["fit", None, None, None, None, *rep.fit, rep.strictly_decreasing])
    plot = dict(series=[("std", rep.n, rep.std)], title="spread of (1/sqrt t) L^r f",
                xlabel="n", logx=True, logy=True)
    return header, rows, plot


COMMANDS = {
    "constants": cmd_constants,
    "scaling": cmd_scaling,
    "boundary-halfsphere": cmd_boundary_halfsphere,
    "quadform": cmd_quadform,
    "eigen": cmd_eigen,
    "kernel": cmd_kernel,
    "fdgrid": cmd_fdgrid,
    "concentration": cmd_concentration,
}


# ---------------------------------------------------------------- driver


def _parse(argv, parser):
    """Return ``(namespace, params)``; a ``--config`` file overrides the flags."""
    ns = parser.parse_args(argv)
    if ns.config:
        command, params = _load_config(ns.config, parser)
        if command != ns.command:
            raise UsageError(f"config is for {command!r}, not {ns.command!r}")
        replay = parser.parse_args(_to_argv(command, params))
        for key in _PLUMBING - {"command", "config"}:
            setattr(replay, key, getattr(ns, key))
        ns = replay
    params = {k: v for k, v in vars(ns).items() if k not in _PLUMBING}
    return ns, params


def run(argv=None):
    """Run one subcommand; returns the process exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        ns, params = _parse(argv, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"lapbound: error: {exc}", file=sys.stderr)
        return 2
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        header, rows, plot = COMMANDS[ns.command](params)
    except UsageError as exc:
        print(f"lapbound: error: {exc}", file=sys.stderr)
        return 2
    except NUMERICAL_ERRORS as exc:
        print(f"lapbound: numerical failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"lapbound: error: {exc}", file=sys.stderr)
        return 2

    out = Path(ns.out)
    out.mkdir(parents=True, exist_ok=True)
    io.write_csv(out / f"{ns.command}.csv", header, rows)
    io.write_json(out / "config.json", {"command": ns.command, "params": params})
    if ns.json:
        io.write_json(out / f"{ns.command}.json",
                      [dict(zip(header, [io._jsonable(v) for v in r])) for r in rows])
    if ns.svg and plot is not None:
        io.write_svg(out / f"{ns.command}.svg", **plot)
    log.info("wrote %s", out / f"{ns.command}.csv")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
