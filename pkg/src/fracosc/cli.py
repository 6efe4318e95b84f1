"""Scenario-driven command-line front end.

A scenario is a single TOML file (nested key-value sections) naming the
equation, the coefficient, the mesh, and the optional averaging /
diagnostics blocks.  Commands run pipelines over one scenario and leave
artifacts in an output directory:

* ``solve``      -> solution.csv + report.json
* ``residual``   -> residual.csv + report.json
* ``kamenev``    -> report.json with the averaging verdict
* ``conditions`` -> report.json with the tail-integral report
* ``zeros``      -> zeros.csv + report.json
* ``diagnose``   -> solution.csv + diagnostics.csv + full report.json
* ``converge``   -> convergence.csv + report.json

Exit codes: 0 success, 2 config/validation error, 3 numerical failure
(partial artifacts are flagged in report.json).  CSV files carry 17
significant digits and no time-dependent content, so identical configs
produce byte-identical CSV output; the run timestamp lives only in the
report.json metadata block.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from . import __version__, averaging, diagnostics, solver, specialfn
from .coefficients import (
    Coefficient,
    Constant,
    PowerLaw,
    Sinusoid,
    Tabulated,
    power_solution_coefficient,
)
from .errors import (
    AccuracyLossError,
    ConfigError,
    DivergenceError,
    DomainError,
    GradientBlowupError,
    MeshSizeError,
)
from .grids import GridFunction, Mesh

__all__ = ["Scenario", "load_scenario", "run_scenario", "run_convergence", "main"]

_MISSING = object()


def _get(table: dict, key: str, path: str, default=_MISSING):
    if key in table:
        return table[key]
    if default is _MISSING:
        raise ConfigError(f"[{path}] missing required key '{key}'")
    return default


def _num(table: dict, key: str, path: str, default=_MISSING) -> float:
    v = _get(table, key, path, default)
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ConfigError(f"[{path}].{key}: expected a number, got {v!r}")
    return float(v)


def _int(table: dict, key: str, path: str, default=_MISSING) -> int:
    v = _get(table, key, path, default)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ConfigError(f"[{path}].{key}: expected an integer, got {v!r}")
    return v


@dataclass
class Scenario:
    """Validated scenario ready to run."""

    name: str
    equation: str  # "fractional" | "curvature"
    alpha: float | None
    x0: float
    y0: float  # x^(a)(0+) for fractional, u0 for curvature
    q: Coefficient
    mesh: Mesh
    kamenev: averaging.KamenevParams | None
    reference: dict | None  # kind, beta, window_start
    bound_window: tuple[float, float] | None
    conditions_horizon: float
    x_threshold_rel: float
    limit_window_fraction: float
    convergence_ns: list[int]
    output_dir: str


def _build_coefficient(table: dict, alpha: float | None) -> Coefficient:
    family = _get(table, "family", "coefficient")
    if family == "constant":
        return Constant(_num(table, "value", "coefficient"))
    if family == "power_law":
        return PowerLaw(
            coeff=_num(table, "coeff", "coefficient"),
            exponent=_num(table, "exponent", "coefficient"),
            domain_start=_num(table, "domain_start", "coefficient", 0.0),
        )
    if family == "power_solution":
        if alpha is None:
            raise ConfigError("[coefficient] power_solution requires a fractional scenario")
        beta = _num(table, "beta", "coefficient")
        return PowerLaw(
            coeff=power_solution_coefficient(alpha, beta),
            exponent=-1.0 - alpha,
            domain_start=_num(table, "domain_start", "coefficient", 0.01),
        )
    if family == "sinusoid":
        return Sinusoid(
            amplitude=_num(table, "amplitude", "coefficient"),
            offset=_num(table, "offset", "coefficient", 0.0),
            omega=_num(table, "omega", "coefficient", 1.0),
        )
    if family == "tabulated":
        nodes = _get(table, "nodes", "coefficient")
        values = _get(table, "values", "coefficient")
        if not nodes or not values:
            raise ConfigError("[coefficient] tabulated table must be non-empty")
        if len(nodes) != len(values):
            raise ConfigError("[coefficient] nodes and values differ in length")
        if len(nodes) < 2:
            raise ConfigError("[coefficient] tabulated table needs >= 2 samples")
        try:
            grid = GridFunction(Mesh(np.asarray(nodes, float)), np.asarray(values, float))
        except (DomainError, MeshSizeError) as exc:
            raise ConfigError(f"[coefficient] bad table: {exc}") from exc
        return Tabulated(grid)
    raise ConfigError(f"[coefficient] unknown family {family!r}")


def load_scenario(path: str | Path, n_override: int | None = None) -> Scenario:
    """Parse and validate a scenario file; every module precondition is
    re-checked here so bad configs die with a key-addressed message."""
    path = Path(path)
    try:
        raw = tomllib.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: TOML syntax error: {exc}") from exc

    name = _get(raw, "name", "top level")
    equation = _get(raw, "equation", "top level")
    if equation not in ("fractional", "curvature"):
        raise ConfigError(f"equation must be 'fractional' or 'curvature', got {equation!r}")

    prob = _get(raw, "problem", "top level")
    alpha = None
    if equation == "fractional":
        alpha = _num(prob, "alpha", "problem")
        if not 0.0 < alpha < 1.0:
            raise ConfigError(f"[problem].alpha must lie in (0, 1), got {alpha:g}")
    x0 = _num(prob, "x0", "problem")
    y0 = _num(prob, "y0" if equation == "fractional" else "u0", "problem", 0.0)
    if equation == "curvature" and abs(y0) >= 1.0:
        raise ConfigError(f"[problem].u0 must satisfy |u0| < 1, got {y0:g}")

    try:
        q = _build_coefficient(_get(raw, "coefficient", "top level"), alpha)
    except DomainError as exc:
        raise ConfigError(f"[coefficient]: {exc}") from exc

    mesh_tab = _get(raw, "mesh", "top level")
    t_end = _num(mesh_tab, "t_end", "mesh")
    n = n_override if n_override is not None else _int(mesh_tab, "n", "mesh")
    grading = _num(mesh_tab, "grading", "mesh", 1.0)
    t_start = _num(mesh_tab, "t_start", "mesh", 0.0)
    if n < 2:
        raise ConfigError(f"[mesh].n must be >= 2, got {n}")
    if t_end <= t_start:
        raise ConfigError("[mesh].t_end must exceed t_start")
    try:
        if grading == 1.0:
            mesh = Mesh.uniform(t_end, n, t_start)
        else:
            if t_start != 0.0:
                raise ConfigError("[mesh] graded meshes must start at t = 0")
            mesh = Mesh.graded(t_end, n, grading)
    except (DomainError, MeshSizeError) as exc:
        raise ConfigError(f"[mesh]: {exc}") from exc

    kamenev = None
    if "kamenev" in raw:
        ktab = raw["kamenev"]
        sched = np.linspace(
            _num(ktab, "schedule_start", "kamenev"),
            _num(ktab, "schedule_stop", "kamenev"),
            _int(ktab, "schedule_count", "kamenev", 20),
        )
        try:
            kamenev = averaging.KamenevParams(
                eps=_num(ktab, "epsilon", "kamenev"),
                t0=_num(ktab, "t0", "kamenev"),
                schedule=sched,
            )
        except DomainError as exc:
            raise ConfigError(f"[kamenev]: {exc}") from exc

    reference = None
    if "reference" in raw:
        rtab = raw["reference"]
        kind = _get(rtab, "kind", "reference")
        if kind not in ("mittag_leffler", "power", "t_alpha", "constant"):
            raise ConfigError(f"[reference].kind unknown: {kind!r}")
        if kind == "mittag_leffler" and not isinstance(q, Constant):
            raise ConfigError("[reference] mittag_leffler requires a constant coefficient")
        if kind in ("t_alpha", "constant") and not (isinstance(q, Constant) and q.value == 0.0):
            raise ConfigError(f"[reference] {kind} requires q identically zero")
        reference = {
            "kind": kind,
            "beta": _num(rtab, "beta", "reference", math.nan),
            "window_start": _num(rtab, "window_start", "reference", 0.0),
        }
        if kind == "power" and not 0.0 < reference["beta"] < (alpha or 1.0):
            raise ConfigError("[reference].beta must lie in (0, alpha)")

    bound_window = None
    diag = raw.get("diagnostics", {})
    if "bound_check_T" in diag or "bound_check_t" in diag:
        bw = (_num(diag, "bound_check_T", "diagnostics"), _num(diag, "bound_check_t", "diagnostics"))
        if not bw[1] > bw[0] > 0.0:
            raise ConfigError("[diagnostics] bound window needs t > T > 0")
        bound_window = bw

    conv = raw.get("convergence", {})
    ns = conv.get("n_values", [])
    if ns and (not isinstance(ns, list) or any(not isinstance(v, int) or v < 2 for v in ns)):
        raise ConfigError("[convergence].n_values must be a list of integers >= 2")

    out_tab = raw.get("output", {})
    scenario = Scenario(
        name=name,
        equation=equation,
        alpha=alpha,
        x0=x0,
        y0=y0,
        q=q,
        mesh=mesh,
        kamenev=kamenev,
        reference=reference,
        bound_window=bound_window,
        conditions_horizon=_num(raw.get("conditions", {}), "tail_horizon", "conditions", 100.0),
        x_threshold_rel=_num(diag, "x_threshold_rel", "diagnostics", diagnostics.X_THRESHOLD_REL),
        limit_window_fraction=_num(diag, "limit_window_fraction", "diagnostics", 0.25),
        convergence_ns=list(ns),
        output_dir=out_tab.get("dir", f"out/{name}"),
    )
    _validate_evaluability(scenario)
    return scenario


def _validate_evaluability(sc: Scenario) -> None:
    """q must be evaluable wherever this scenario will ask for it."""
    t = sc.mesh.nodes
    live = t[t > sc.q.domain_start] if sc.q.domain_start > 0.0 else t
    try:
        sc.q(live)
    except DomainError as exc:
        raise ConfigError(f"[coefficient] not evaluable on the mesh: {exc}") from exc
    if sc.q.domain_start > 0.0 and sc.reference is None and sc.equation == "fractional":
        raise ConfigError(
            "[coefficient] q is undefined at t = 0, so the equation cannot be "
            "solved forward; supply a [reference] block and use the residual/"
            "diagnose commands instead"
        )


# --------------------------------------------------------------------------
# reference trajectories


def _reference_values(sc: Scenario, mesh: Mesh) -> np.ndarray:
    kind = sc.reference["kind"]
    t = mesh.nodes
    if kind == "mittag_leffler":
        a = sc.q.value  # validated Constant
        order = 1.0 + sc.alpha
        return np.array(
            [specialfn.mittag_leffler(order, -a * tt**order).value for tt in t]
        )
    if kind == "power":
        return t ** sc.reference["beta"]
    if kind == "t_alpha":
        return sc.x0 + sc.y0 * t**sc.alpha / specialfn.gamma(1.0 + sc.alpha)
    if kind == "constant":
        return np.full_like(t, sc.x0)
    raise ConfigError(f"unknown reference kind {kind!r}")


def _compute_solution(sc: Scenario) -> tuple[solver.Solution, str]:
    """Solve forward when possible, otherwise sample the closed form."""
    if sc.equation == "curvature":
        sol = solver.solve_curvature(sc.x0, sc.y0, sc.q, sc.mesh)
        return sol, "solver.solve_curvature"
    if sc.q.domain_start > 0.0:
        x = GridFunction(sc.mesh, _reference_values(sc, sc.mesh))
        sol = solver.solution_from_samples(x, sc.alpha, sc.q)
        return sol, "solver.solution_from_samples"
    problem = solver.FdeProblem(alpha=sc.alpha, x0=sc.x0, y0=sc.y0, q=sc.q, mesh=sc.mesh)
    return solver.solve_fde(problem), "solver.solve_fde"


# --------------------------------------------------------------------------
# artifact writers


def _fmt(v: float) -> str:
    return "nan" if (isinstance(v, float) and math.isnan(v)) else format(float(v), ".17g")


def _write_csv(path: Path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def _write_report(path: Path, report: dict) -> None:
    path.write_text(json.dumps(report, indent=2, allow_nan=True) + "\n")


def _metadata(sc: Scenario) -> dict:
    return {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "package_version": __version__,
        "scenario": sc.name,
        "equation": sc.equation,
        "alpha": sc.alpha,
        "mesh": {
            "t_start": float(sc.mesh.nodes[0]),
            "t_end": sc.mesh.t_end,
            "n": len(sc.mesh) - 1,
            "grading": sc.mesh.grading,
        },
        "tolerances": {
            "crossing_time_tol": diagnostics.CROSSING_TIME_TOL,
            "x_threshold_rel": sc.x_threshold_rel,
        },
    }


def _solution_rows(sol: solver.Solution):
    for i, t in enumerate(sol.mesh.nodes):
        yield (
            t,
            sol.x.values[i],
            sol.y.values[i],
            sol.xprime.values[i],
            sol.yprime.values[i],
        )


def _kamenev_block(sc: Scenario) -> dict:
    verdict = averaging.classify_kamenev(sc.q, sc.kamenev)
    block = verdict.to_json_dict()
    block["epsilon"] = sc.kamenev.eps
    block["t0"] = sc.kamenev.t0
    block["source"] = "averaging.classify_kamenev"
    return block


def _conditions_block(sc: Scenario) -> dict:
    rep = averaging.check_integrability_conditions(sc.q, sc.alpha, sc.conditions_horizon)
    block = rep.to_json_dict()
    block["gamma_1_plus_alpha"] = specialfn.gamma(1.0 + sc.alpha)
    block["tail_horizon"] = sc.conditions_horizon
    block["source"] = "averaging.check_integrability_conditions"
    return block


def _residual_block(sc: Scenario, sol: solver.Solution) -> tuple[dict, GridFunction]:
    r = solver.residual_fde(sol.x, sc.q, sc.alpha)
    lo = max(sc.q.domain_start, (sc.reference or {}).get("window_start", 0.0))
    sel = (r.times >= lo) & np.isfinite(r.values)
    max_abs = float(np.max(np.abs(r.values[sel]))) if sel.any() else None
    return (
        {
            "max_abs": max_abs,
            "window": [lo, sc.mesh.t_end],
            "source": "solver.residual_fde",
        },
        r,
    )


def _bound_block(sc: Scenario, sol: solver.Solution) -> dict:
    T, t_hi = sc.bound_window
    idx = int(np.searchsorted(sol.mesh.nodes, T))
    w_T = float(sol.y.values[idx] / sol.x.values[idx])
    chk = diagnostics.kamenev_bound_check(w_T, sc.q, sc.kamenev.eps if sc.kamenev else 3.0, T, t_hi)
    block = chk.to_json_dict()
    block.update({"T": T, "t": t_hi, "w_T": w_T, "source": "diagnostics.kamenev_bound_check"})
    return block


# --------------------------------------------------------------------------
# commands


def run_scenario(sc: Scenario, out_dir: Path, quiet: bool = False) -> int:
    """Full pipeline: solve, diagnose, average, and write all artifacts."""
    report = {"metadata": _metadata(sc)}
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        sol, source = _compute_solution(sc)
        _write_csv(
            out_dir / "solution.csv", ["t", "x", "y", "xprime", "yprime"], _solution_rows(sol)
        )
        report["solution"] = {
            "nodes": len(sol.mesh),
            "x_end": float(sol.x.values[-1]),
            "source": source,
        }

        thr = sc.x_threshold_rel * float(np.nanmax(np.abs(sol.x.values)))
        diag = diagnostics.build_report(sol, sc.q, x_threshold=thr)
        _write_csv(out_dir / "diagnostics.csv", ["t", "w", "residual", "S"], diag.csv_rows())
        block = diag.to_json_dict()
        block["source"] = "diagnostics.build_report"
        report["diagnostics"] = block
        report["crossings"] = {
            "x": diag.x_zero_crossings,
            "s_negative": diag.S_negative_times,
            "count_x": len(diag.x_zero_crossings),
            "source": "diagnostics.detect_sign_changes",
        }

        lim = diagnostics.limit_estimate_xalpha(sol, sc.limit_window_fraction)
        report["limit_estimate"] = {
            "value": lim.value,
            "trend_slope": lim.trend_slope,
            "window_fraction": lim.window_fraction,
            "source": "diagnostics.limit_estimate_xalpha",
        }

        if sc.equation == "fractional":
            rep, _ = _residual_block(sc, sol)
            report["residual"] = rep
            report["conditions"] = _conditions_block(sc)
        if sc.kamenev is not None:
            report["kamenev"] = _kamenev_block(sc)
        if sc.bound_window is not None:
            report["bound_check"] = _bound_block(sc, sol)
    except (DivergenceError, GradientBlowupError, AccuracyLossError) as exc:
        report["partial"] = True
        report["error"] = str(exc)
        _write_report(out_dir / "report.json", report)
        if not quiet:
            print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    _write_report(out_dir / "report.json", report)
    if not quiet:
        print(f"{sc.name}: wrote {out_dir}/report.json")
    return 0


def _cmd_solve(sc: Scenario, out_dir: Path, quiet: bool) -> int:
    report = {"metadata": _metadata(sc)}
    out_dir.mkdir(parents=True, exist_ok=True)
    if sc.equation == "fractional" and sc.q.domain_start > 0.0:
        raise ConfigError(
            "q is undefined at t = 0 (power law with negative exponent); "
            "use the residual or diagnose command on [t0, T] instead"
        )
    try:
        sol, source = _compute_solution(sc)
    except (DivergenceError, GradientBlowupError, AccuracyLossError) as exc:
        report["partial"] = True
        report["error"] = str(exc)
        _write_report(out_dir / "report.json", report)
        if not quiet:
            print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    _write_csv(out_dir / "solution.csv", ["t", "x", "y", "xprime", "yprime"], _solution_rows(sol))
    report["solution"] = {
        "nodes": len(sol.mesh),
        "x_end": float(sol.x.values[-1]),
        "source": source,
    }
    _write_report(out_dir / "report.json", report)
    if not quiet:
        print(f"{sc.name}: wrote {out_dir}/solution.csv")
    return 0


def _cmd_residual(sc: Scenario, out_dir: Path, quiet: bool) -> int:
    if sc.equation != "fractional":
        raise ConfigError("residual is defined for fractional scenarios only")
    out_dir.mkdir(parents=True, exist_ok=True)
    sol, source = _compute_solution(sc)
    block, r = _residual_block(sc, sol)
    _write_csv(out_dir / "residual.csv", ["t", "r"], zip(r.times, r.values))
    report = {"metadata": _metadata(sc), "trajectory": {"source": source}, "residual": block}
    _write_report(out_dir / "report.json", report)
    if not quiet and block["max_abs"] is not None:
        print(f"{sc.name}: max |r| on [{block['window'][0]:g}, {block['window'][1]:g}] = "
              f"{block['max_abs']:.3e}")
    return 0


def _cmd_kamenev(sc: Scenario, out_dir: Path, quiet: bool) -> int:
    if sc.kamenev is None:
        raise ConfigError("scenario has no [kamenev] section")
    out_dir.mkdir(parents=True, exist_ok=True)
    report = {"metadata": _metadata(sc), "kamenev": _kamenev_block(sc)}
    _write_report(out_dir / "report.json", report)
    if not quiet:
        print(f"{sc.name}: kamenev verdict = {report['kamenev']['verdict']}")
    return 0


def _cmd_conditions(sc: Scenario, out_dir: Path, quiet: bool) -> int:
    if sc.equation != "fractional":
        raise ConfigError("conditions require a fractional scenario")
    out_dir.mkdir(parents=True, exist_ok=True)
    report = {"metadata": _metadata(sc), "conditions": _conditions_block(sc)}
    _write_report(out_dir / "report.json", report)
    if not quiet:
        print(f"{sc.name}: conditions passes = {report['conditions']['passes']}")
    return 0


def _cmd_zeros(sc: Scenario, out_dir: Path, quiet: bool) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        sol, source = _compute_solution(sc)
    except (DivergenceError, GradientBlowupError, AccuracyLossError) as exc:
        report = {"metadata": _metadata(sc), "partial": True, "error": str(exc)}
        _write_report(out_dir / "report.json", report)
        return 3
    crossings = diagnostics.detect_sign_changes(sol.x)
    _write_csv(out_dir / "zeros.csv", ["index", "t"], ((i, t) for i, t in enumerate(crossings)))
    report = {
        "metadata": _metadata(sc),
        "trajectory": {"source": source},
        "crossings": {
            "x": crossings,
            "count_x": len(crossings),
            "source": "diagnostics.detect_sign_changes",
        },
    }
    _write_report(out_dir / "report.json", report)
    if not quiet:
        print(f"{sc.name}: {len(crossings)} sign change(s)")
    return 0


def run_convergence(sc: Scenario, n_values: list[int], out_dir: Path, quiet: bool = False) -> int:
    """Refinement study against the scenario's closed-form reference."""
    if sc.reference is None:
        raise ConfigError("converge requires a [reference] block (closed form)")
    if not n_values:
        raise ConfigError("no n values: set [convergence].n_values or pass --n")
    out_dir.mkdir(parents=True, exist_ok=True)
    kind = sc.reference["kind"]
    errors: list[float] = []
    for n in n_values:
        if sc.mesh.grading == 1.0:
            mesh = Mesh.uniform(sc.mesh.t_end, n)
        else:
            mesh = Mesh.graded(sc.mesh.t_end, n, sc.mesh.grading)
        ref = _reference_values(sc, mesh)
        if kind == "power":
            # not solvable from t = 0: measure the fractional-derivative
            # operator against its closed form instead
            from .fracops import caputo_derivative

            beta = sc.reference["beta"]
            cap = caputo_derivative(GridFunction(mesh, ref), sc.alpha)
            g = specialfn.gamma(1.0 + beta) / specialfn.gamma(1.0 + beta - sc.alpha)
            lo = max(sc.reference["window_start"], sc.q.domain_start)
            sel = mesh.nodes >= lo
            exact = g * mesh.nodes[sel] ** (beta - sc.alpha)
            err = float(np.max(np.abs(cap.values[sel] - exact) / np.abs(exact)))
        else:
            problem = solver.FdeProblem(sc.alpha, sc.x0, sc.y0, sc.q, mesh)
            sol = solver.solve_fde(problem)
            err = float(np.max(np.abs(sol.x.values - ref)))
        errors.append(err)
        if not quiet:
            print(f"  N = {n}: error = {err:.6e}")

    rows = []
    orders: list[str] = [""]
    for prev, cur in zip(errors[:-1], errors[1:]):
        if prev <= 1e-12 or cur <= 1e-12:
            orders.append("n/a")  # rounding floor, ratio is noise
        else:
            orders.append(format(math.log2(prev / cur), ".17g"))
    for n, err, order in zip(n_values, errors, orders):
        rows.append((n, err, order))
    lines = ["n,error,order"]
    for n, err, order in rows:
        lines.append(f"{n},{_fmt(err)},{order}")
    (out_dir / "convergence.csv").write_text("\n".join(lines) + "\n")
    report = {
        "metadata": _metadata(sc),
        "convergence": {
            "reference": kind,
            "rows": [
                {"n": n, "error": err, "order": order if order else None}
                for n, err, order in rows
            ],
            "source": "cli.run_convergence",
        },
    }
    _write_report(out_dir / "report.json", report)
    return 0


# --------------------------------------------------------------------------
# entry point


def _bundled_config(name: str) -> Path | None:
    from importlib.resources import files

    base = files("fracosc.scenarios")
    for candidate in (name, f"{name}.toml"):
        p = base / candidate
        if p.is_file():
            return Path(str(p))
    return None


def _resolve_config(value: str) -> Path:
    p = Path(value)
    if p.is_file():
        return p
    bundled = _bundled_config(value)
    if bundled is not None:
        return bundled
    raise ConfigError(f"config not found: {value} (not a file, not a bundled scenario)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="fracosc",
        description="Numerical laboratory for the fractional equation "
        "(x^(a))' + q(t) x = 0 and its curvature analogue.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd, desc in [
        ("solve", "solve the scenario and write solution.csv"),
        ("residual", "pointwise equation defect of the trajectory"),
        ("kamenev", "classify the averaging functional"),
        ("conditions", "check the tail-integrability conditions on q"),
        ("diagnose", "full pipeline: solve + diagnostics + report"),
        ("converge", "mesh-refinement study vs the closed-form reference"),
        ("zeros", "sign-change sequence of the trajectory"),
    ]:
        sp = sub.add_parser(cmd, help=desc)
        sp.add_argument("--config", required=True, help="scenario TOML path or bundled name")
        sp.add_argument("--out", default=None, help="output directory")
        sp.add_argument("--n", type=int, default=None, help="override mesh node count")
        sp.add_argument("--quiet", action="store_true")

    args = parser.parse_args(argv)
    try:
        config = _resolve_config(args.config)
        sc = load_scenario(config, n_override=args.n)
        out_dir = Path(args.out) if args.out else Path(sc.output_dir)
        if args.command == "solve":
            return _cmd_solve(sc, out_dir, args.quiet)
        if args.command == "residual":
            return _cmd_residual(sc, out_dir, args.quiet)
        if args.command == "kamenev":
            return _cmd_kamenev(sc, out_dir, args.quiet)
        if args.command == "conditions":
            return _cmd_conditions(sc, out_dir, args.quiet)
        if args.command == "diagnose":
            return run_scenario(sc, out_dir, args.quiet)
        if args.command == "zeros":
            return _cmd_zeros(sc, out_dir, args.quiet)
        if args.command == "converge":
            ns = [args.n] if args.n else sc.convergence_ns
            return run_convergence(sc, ns, out_dir, args.quiet)
        raise ConfigError(f"unknown command {args.command}")
    except (ConfigError, DomainError, MeshSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DivergenceError, GradientBlowupError, AccuracyLossError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
