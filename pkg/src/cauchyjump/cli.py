"""Command-line front end.

Each subcommand parses a contour spec and a density (or map, or
function), runs the corresponding library routine, and prints a JSON
report: the echoed inputs, the results, error estimates where the
computation provides them, the wall time, and the toolkit version.
Reports are deterministic for a fixed command line except for the
wall_time_s field.  `--format table` renders the same results as
key/value text at 8 significant digits instead; the convergence
subcommand emits CSV, optionally duplicated to a file and accompanied
by a log-log error plot.

Exit codes: 0 success, 2 input or domain error, 3 numerical failure
(precision, convergence, or singular data).

Contour specs are JSON, inline or in a file:

    {"kind": "circle",  "center": [0,0], "radius": 1, "closed": true}
    {"kind": "ellipse", "center": [0,0], "semi_axes": [2,1], "closed": true}
    {"kind": "segment", "a": [-1,0], "b": [1,0], "closed": false}
    {"kind": "fourier", "coefficients": [[1,1,0],[-1,0.25,0]], "closed": true}
    {"kind": "piecewise", "pieces": [ ...contour specs... ], "closed": true}

Densities are named presets (one, sqrt_pullback, invlog), tabulated
samples (csv:PATH with header t,re,im), or expressions over the
boundary point such as "re(t)" and "1/t".
"""

from __future__ import annotations

import argparse
import csv as csvmod
import json
import math
import os
import sys
import time
from fractions import Fraction

import numpy as np

from ._version import __version__
from .cauchy import CauchyIntegral, verify_cif
from .contour import Contour
from .density import Density, check_holder, estimate_holder
from .errors import (
    CauchyJumpError,
    ConvergenceError,
    DomainError,
    InputError,
    PrecisionError,
    SingularityError,
)
from .exprlang import compile_expression
from .faber import (
    disk_map,
    ellipse_map,
    faber_polynomials,
    faber_polynomials_quadrature,
    faber_series,
    segment_map,
)
from .jump import decompose, solve_holomorphic_bvp
from .quadrature import DEFAULT_NODES, QuadratureRule, pv_cauchy
from .series import ExactComplex

_JSON_DIGITS = ".15g"
_TABLE_DIGITS = ".8g"


# -- input parsing --------------------------------------------------------


def _load_json(text_or_path: str):
    if text_or_path.lstrip().startswith("{"):
        src, where = text_or_path, "inline spec"
    else:
        try:
            with open(text_or_path, "r", encoding="utf-8") as fh:
                src = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {text_or_path}: {exc}") from exc
        where = text_or_path
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in {where} at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}") from exc


def _point(data, what: str) -> complex:
    if isinstance(data, (int, float)):
        return complex(data)
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return complex(float(data[0]), float(data[1]))
    raise InputError(f"{what} must be a number or an [re, im] pair")


def load_contour(spec: str) -> Contour:
    data = _load_json(spec)
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("contour spec must be an object with a 'kind' field")
    kind = data["kind"]
    closed = data.get("closed")
    if kind == "circle":
        c = Contour.circle(_point(data.get("center", [0, 0]), "center"),
                           float(data.get("radius", 1.0)))
    elif kind == "ellipse":
        axes = data.get("semi_axes")
        if not isinstance(axes, (list, tuple)) or len(axes) != 2:
            raise InputError("ellipse spec needs semi_axes: [a, b]")
        c = Contour.ellipse(_point(data.get("center", [0, 0]), "center"),
                            (float(axes[0]), float(axes[1])))
    elif kind == "segment":
        if "a" not in data or "b" not in data:
            raise InputError("segment spec needs endpoints a and b")
        c = Contour.segment(_point(data["a"], "a"), _point(data["b"], "b"))
    elif kind == "fourier":
        rows = data.get("coefficients")
        if not isinstance(rows, list) or not rows:
            raise InputError("fourier spec needs coefficients: [[k, re, im], ...]")
        coeffs = {}
        for row in rows:
            if not isinstance(row, (list, tuple)) or len(row) != 3:
                raise InputError("each fourier coefficient row is [k, re, im]")
            coeffs[int(row[0])] = complex(float(row[1]), float(row[2]))
        c = Contour.fourier(coeffs)
    elif kind == "piecewise":
        pieces = data.get("pieces")
        if not isinstance(pieces, list) or not pieces:
            raise InputError("piecewise spec needs a nonempty pieces list")
        subs = [load_contour(json.dumps(p)) for p in pieces]
        c = Contour.piecewise(subs, closed=closed)
    else:
        raise InputError(f"unknown contour kind {kind!r}")
    if closed is not None and bool(closed) != c.closed:
        raise InputError(
            f"spec says closed={bool(closed)} but a {kind} contour is "
            f"{'closed' if c.closed else 'open'}")
    return c


def _invlog(z):
    z = np.asarray(z, dtype=complex)
    out = np.zeros(z.shape, dtype=complex)
    small = np.abs(z) < 1e-300
    with np.errstate(all="ignore"):
        out[~small] = 1.0 / np.log(z[~small])
    return out


def load_density(spec: str, contour: Contour) -> Density:
    s = spec.strip()
    if s == "one":
        return Density.constant(1.0, closed=contour.closed, name="one")
    if s == "sqrt_pullback":
        return Density.from_pullback(
            lambda t: np.sqrt(np.asarray(t) * (1.0 - np.asarray(t)) + 0j),
            closed=contour.closed, name="sqrt_pullback", holder_index=0.5)
    if s == "invlog":
        return Density.from_function(_invlog, contour, name="invlog",
                                     declared_non_holder=True)
    if s.startswith("csv:"):
        path = s[4:]
        try:
            with open(path, newline="", encoding="utf-8") as fh:
                reader = csvmod.reader(fh)
                header = next(reader, None)
                if header is None or [h.strip().lower() for h in header] != ["t", "re", "im"]:
                    raise InputError(f"{path}: expected header t,re,im")
                rows = [(float(r[0]), float(r[1]), float(r[2])) for r in reader if r]
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        except (ValueError, IndexError) as exc:
            raise InputError(f"{path}: bad CSV row: {exc}") from exc
        if len(rows) < 2:
            raise InputError(f"{path}: need at least two sample rows")
        ts = [r[0] for r in rows]
        vals = [complex(r[1], r[2]) for r in rows]
        return Density.from_samples(ts, vals, closed=contour.closed,
                                    name=f"csv:{path}")
    f = compile_expression(s)
    return Density.from_function(f, contour, name=s)


def build_rule(args, contour: Contour) -> QuadratureRule:
    nodes = getattr(args, "nodes", None)
    if nodes is None:
        env = os.environ.get("CAUCHY_JUMP_NODES")
        if env is not None:
            try:
                nodes = int(env)
            except ValueError as exc:
                raise InputError(f"CAUCHY_JUMP_NODES must be an integer, got {env!r}") from exc
    kind = getattr(args, "rule", None)
    panels = getattr(args, "panels", None)
    if kind == "trapezoid":
        return QuadratureRule.trapezoid(nodes or DEFAULT_NODES)
    if kind == "gauss":
        return QuadratureRule.gauss(
            panels=panels or max(4, (nodes or DEFAULT_NODES) // 16))
    if panels:
        return QuadratureRule.gauss(panels=panels)
    return QuadratureRule.default_for(contour, nodes)


def _parse_probe(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise InputError(f"bad point {text!r}; expected re,im")


def parse_map(spec: str):
    name, _, rest = spec.partition(":")
    try:
        if name == "disk" and rest:
            return disk_map(Fraction(rest))
        if name == "segment" and rest:
            return segment_map(Fraction(rest))
        if name == "ellipse" and rest:
            a, _, b = rest.partition(",")
            if b:
                return ellipse_map(Fraction(a), Fraction(b))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad map parameter in {spec!r}: {exc}") from exc
    raise InputError(
        f"unknown map {spec!r}; expected disk:R, ellipse:A,B, or segment:H")


# -- output rendering ------------------------------------------------------


def _f15(x: float) -> float:
    return float(format(float(x), _JSON_DIGITS))


def _c15(z) -> list:
    z = complex(z)
    return [_f15(z.real), _f15(z.imag)]


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return _f15(obj)
    if isinstance(obj, complex):
        return _c15(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render_table(data, indent=0) -> list[str]:
    lines = []
    pad = "  " * indent
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_table_scalar(v)}")
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}- {_table_scalar(v)}")
    else:
        lines.append(f"{pad}{_table_scalar(data)}")
    return lines


def _table_scalar(v) -> str:
    if isinstance(v, bool) or v is None:
        return str(v)
    if isinstance(v, float):
        return format(v, _TABLE_DIGITS)
    return str(v)


def _emit(report: dict, fmt: str) -> None:
    report = _jsonable(report)
    if fmt == "table":
        print("\n".join(_render_table(report)))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))


def _coeff_json(c):
    if isinstance(c, ExactComplex):
        if c.im == 0:
            if c.re.denominator == 1:
                return int(c.re.numerator)
            return f"{c.re.numerator}/{c.re.denominator}"
        return [[c.re.numerator, c.re.denominator], [c.im.numerator, c.im.denominator]]
    return _c15(c)


# -- subcommands -----------------------------------------------------------


def _cmd_eval(args):
    contour = load_contour(args.contour)
    density = load_density(args.density, contour)
    rule = build_rule(args, contour)
    ci = CauchyIntegral(contour, density, rule=rule)
    rows = []
    for text in args.z:
        z = _parse_probe(text)
        rows.append({"z": z, "value": ci.eval(z)})
    inputs = {"contour": contour.spec, "density": density.name,
              "rule": {"kind": rule.kind, "nodes": rule.nodes}}
    return inputs, {"rows": rows}


def _cmd_pv(args):
    contour = load_contour(args.contour)
    density = load_density(args.density, contour)
    rule = build_rule(args, contour)
    res = pv_cauchy(contour, density, args.tau0, rule=rule)
    point = contour.evaluate(args.tau0).z
    inputs = {"contour": contour.spec, "density": density.name,
              "tau0": args.tau0,
              "rule": {"kind": rule.kind, "nodes": rule.nodes}}
    results = {"point": point, "value": res.value,
               "error_estimate": res.error_estimate,
               "nodes_used": res.nodes_used}
    if res.warning:
        results["warning"] = res.warning
    return inputs, results


def _cmd_jump(args):
    contour = load_contour(args.contour)
    density = load_density(args.density, contour)
    rule = build_rule(args, contour)
    pair = decompose(contour, density, rule=rule)
    params = args.t0 or [0.25]
    rows = []
    worst = 0.0
    for t0 in params:
        if not 0.0 <= t0 <= 1.0:
            raise InputError(f"parameter {t0} outside [0, 1]")
        t_eff = t0 * 0.5 if pair.closed_by_arc else t0
        triple = pair.integral.boundary_values(t_eff)
        phi = density.value_at(t0)
        dev = abs((triple.plus - triple.minus) - phi)
        worst = max(worst, dev)
        rows.append({
            "t0": t0,
            "plus": triple.plus,
            "minus": triple.minus,
            "principal": triple.principal,
            "density": phi,
            "jump_deviation": dev,
            "error_estimate": triple.error_estimate,
        })
    inputs = {"contour": contour.spec, "density": density.name,
              "rule": {"kind": rule.kind, "nodes": rule.nodes}}
    return inputs, {"rows": rows, "max_jump_deviation": worst,
                    "closed_by_arc": pair.closed_by_arc}


def _cmd_bvp(args):
    contour = load_contour(args.contour)
    u = load_density(args.u, contour)
    rule = build_rule(args, contour)
    probes = [_parse_probe(p) for p in args.probe] if args.probe else None
    verdict = solve_holomorphic_bvp(contour, u, probes=probes, rule=rule)
    results = {
        "solvable": verdict.solvable,
        "tol": verdict.tol,
        "max_exterior_modulus": verdict.max_exterior_modulus,
        "witness": None if verdict.witness is None else
            {"probe": verdict.witness[0], "modulus": verdict.witness[1]},
        "series_moduli": list(verdict.series_moduli),
        "boundary_residual": verdict.boundary_residual,
        "closed_by_arc": verdict.closed_by_arc,
    }
    if verdict.note:
        results["note"] = verdict.note
    inputs = {"contour": contour.spec, "u": u.name,
              "rule": {"kind": rule.kind, "nodes": rule.nodes}}
    return inputs, results


def _cmd_faber(args):
    mapping = parse_map(args.map)
    if args.route == "quadrature":
        basis = faber_polynomials_quadrature(mapping, args.n, radius=args.radius)
    else:
        basis = faber_polynomials(mapping, args.n)
    vectors = [[_coeff_json(c) for c in vec] for vec in basis.polynomials]
    inputs = {"map": args.map, "n": args.n, "route": basis.source}
    return inputs, {"map": mapping.name, "source": basis.source,
                    "basis": vectors}


def _cmd_faber_series(args):
    mapping = parse_map(args.map)
    f = compile_expression(args.f, analytic=True)
    probes = [_parse_probe(p) for p in args.probe] if args.probe else None
    res = faber_series(f, mapping, args.n, probes=probes,
                       nodes=getattr(args, "nodes", None))
    inputs = {"map": args.map, "f": args.f, "n": args.n}
    return inputs, {"coefficients": list(res.coefficients),
                    "max_error": res.max_error,
                    "nodes": res.nodes}


def _cmd_holder(args):
    contour = load_contour(args.contour)
    density = load_density(args.density, contour)
    if args.index is not None:
        report = check_holder(density, contour, args.index,
                              1.0 if args.constant is None else args.constant,
                              grid_size=args.grid)
        mode = "check"
    else:
        if args.constant is not None:
            raise InputError("--constant needs --index")
        report = estimate_holder(density, contour, grid_size=args.grid)
        mode = "estimate"
    inputs = {"contour": contour.spec, "density": density.name,
              "mode": mode, "grid": args.grid}
    if args.index is not None:
        inputs["index"] = args.index
        inputs["constant"] = 1.0 if args.constant is None else args.constant
    return inputs, report.to_dict()


def _cmd_series_inf(args):
    contour = load_contour(args.contour)
    density = load_density(args.density, contour)
    rule = build_rule(args, contour)
    ci = CauchyIntegral(contour, density, rule=rule)
    coeffs = ci.series_at_infinity(args.n)
    rows = [{"n": k + 1, "a": c} for k, c in enumerate(coeffs)]
    inputs = {"contour": contour.spec, "density": density.name, "n": args.n,
              "rule": {"kind": rule.kind, "nodes": rule.nodes}}
    return inputs, {"coefficients": rows}


def _cmd_verify_cif(args):
    contour = load_contour(args.contour)
    f = compile_expression(args.f, analytic=True)
    probes = [_parse_probe(p) for p in args.probe or []]
    if args.probes_csv:
        try:
            with open(args.probes_csv, newline="", encoding="utf-8") as fh:
                reader = csvmod.reader(fh)
                header = next(reader, None)
                if header is None or [h.strip().lower() for h in header] != ["re", "im"]:
                    raise InputError(f"{args.probes_csv}: expected header re,im")
                probes.extend(complex(float(r[0]), float(r[1])) for r in reader if r)
        except OSError as exc:
            raise InputError(f"cannot read {args.probes_csv}: {exc}") from exc
        except ValueError as exc:
            raise InputError(f"{args.probes_csv}: bad CSV row: {exc}") from exc
    if not probes:
        raise InputError("need at least one probe (--probe re,im or --probes-csv)")
    f_inf = None if args.f_inf is None else _parse_probe(args.f_inf)
    rule = build_rule(args, contour)
    report = verify_cif(contour, f, args.kind, probes, f_inf=f_inf, rule=rule)
    rows = []
    for row in report.rows:
        rows.append({
            "probe": row.z,
            "region": row.region,
            "value": row.computed,
            "expected": row.expected,
            "deviation": row.deviation,
            "note": row.note,
        })
    inputs = {"contour": contour.spec, "f": args.f, "kind": args.kind,
              "f_inf": f_inf,
              "rule": {"kind": rule.kind, "nodes": rule.nodes}}
    return inputs, {"rows": rows, "max_deviation": report.max_deviation}


# -- convergence ------------------------------------------------------------


def _schedule(text: str) -> list[int]:
    try:
        ns = [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise InputError(f"bad schedule {text!r}: {exc}") from exc
    if len(ns) < 2 or any(b <= a for a, b in zip(ns, ns[1:])):
        raise InputError("schedule must be a strictly increasing list like 32,64,128")
    return ns


def _rule_at(contour: Contour, n: int) -> QuadratureRule:
    if contour.closed and not contour.corners:
        return QuadratureRule.trapezoid(n)
    return QuadratureRule.gauss(panels=max(1, n // 16))


def _convergence_rows(args) -> list[tuple[int, complex, float]]:
    contour = load_contour(args.contour)
    rows = []
    if args.target == "pv":
        if args.density is None or args.tau0 is None:
            raise InputError("convergence --target pv needs --density and --tau0")
        density = load_density(args.density, contour)
        for n in _schedule(args.schedule):
            res = pv_cauchy(contour, density, args.tau0, rule=_rule_at(contour, n))
            rows.append((n, res.value, res.error_estimate))
    elif args.target == "eval":
        if args.density is None or args.z is None:
            raise InputError("convergence --target eval needs --density and --z")
        density = load_density(args.density, contour)
        z = _parse_probe(args.z)
        if contour.classify(z).on_contour:
            raise InputError("probe sits on the contour; use --target pv instead")
        from .quadrature import integrate

        def kernel(nodes):
            h = density(nodes.t % 1.0 if contour.closed else nodes.t)
            return h / (nodes.z - z)

        for n in _schedule(args.schedule):
            part = integrate(contour, kernel, _rule_at(contour, n))
            rows.append((n, part.value / (2j * math.pi),
                         part.error_estimate / (2.0 * math.pi)))
    elif args.target == "length":
        for n in _schedule(args.schedule):
            rule = _rule_at(contour, n)
            coarse = rule.build_nodes(contour)
            fine = rule.scaled(2).build_nodes(contour)
            est = float(np.sum(np.abs(coarse.dz) * coarse.w))
            est2 = float(np.sum(np.abs(fine.dz) * fine.w))
            rows.append((n, complex(est), abs(est2 - est)))
    else:
        raise InputError(f"unknown convergence target {args.target!r}")
    return rows


def _cmd_convergence(args) -> int:
    rows = _convergence_rows(args)
    lines = ["N,value_re,value_im,error_estimate"]
    for n, value, err in rows:
        lines.append(",".join([
            str(n),
            format(value.real, _JSON_DIGITS),
            format(value.imag, _JSON_DIGITS),
            format(err, _JSON_DIGITS),
        ]))
    text = "\n".join(lines)
    print(text)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.plot:
        import matplotlib
        matplotlib.use("Agg", force=True)
        import matplotlib.pyplot as plt

        ns = [r[0] for r in rows]
        errs = [max(r[2], 1e-300) for r in rows]
        fig, ax = plt.subplots(figsize=(5.0, 3.5))
        ax.loglog(ns, errs, "o-")
        ax.set_xlabel("nodes N")
        ax.set_ylabel("error estimate")
        ax.set_title(f"convergence: {args.target}")
        ax.grid(True, which="both", alpha=0.3)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        plt.close(fig)
    return 0


# -- argument plumbing -------------------------------------------------------


def _add_rule_flags(p):
    p.add_argument("--rule", choices=["trapezoid", "gauss"],
                   help="quadrature layout (default: by contour shape)")
    p.add_argument("--nodes", type=int,
                   help="node count (default 256, or CAUCHY_JUMP_NODES)")
    p.add_argument("--panels", type=int, help="Gauss panel count per piece")


def _add_format_flag(p):
    p.add_argument("--format", choices=["json", "table"], default="json",
                   help="report rendering (default json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cauchyjump",
        description="Cauchy integrals, jump decompositions, and Faber bases "
                    "on plane contours.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="Cauchy integral at points off the contour")
    p.add_argument("--contour", required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--z", action="append", required=True, metavar="RE,IM")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("pv", help="principal value at a contour parameter")
    p.add_argument("--contour", required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--tau0", type=float, required=True,
                   help="contour parameter in [0, 1]")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_pv)

    p = sub.add_parser("jump", help="boundary values and the jump identity")
    p.add_argument("--contour", required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--t0", type=float, action="append", metavar="T",
                   help="contour parameter (repeatable; default 0.25)")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_jump)

    p = sub.add_parser("bvp", help="holomorphic boundary-value verdict")
    p.add_argument("--contour", required=True)
    p.add_argument("--u", required=True, help="boundary data density")
    p.add_argument("--probe", action="append", metavar="RE,IM",
                   help="exterior probe (repeatable; default two rings)")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_bvp)

    p = sub.add_parser("faber", help="Faber polynomial basis of a preset map")
    p.add_argument("--map", required=True, help="disk:R | ellipse:A,B | segment:H")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=["formal", "quadrature"], default="formal")
    p.add_argument("--radius", type=float,
                   help="extraction circle radius (quadrature route)")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_faber)

    p = sub.add_parser("faber-series", help="Faber expansion of a function")
    p.add_argument("--map", required=True)
    p.add_argument("--f", required=True, help="holomorphic expression, e.g. 1/(z-3)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--probe", action="append", metavar="RE,IM",
                   help="reconstruction probe (repeatable; default boundary grid)")
    p.add_argument("--nodes", type=int, help="unit-circle trapezoid nodes")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_faber_series)

    p = sub.add_parser("holder", help="Hölder certification or estimation")
    p.add_argument("--contour", required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--index", type=float, help="certify at this index")
    p.add_argument("--constant", type=float, help="certify with this constant")
    p.add_argument("--grid", type=int, default=256)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_holder)

    p = sub.add_parser("series-inf", help="expansion coefficients at infinity")
    p.add_argument("--contour", required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--n", type=int, required=True, help="number of coefficients")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_series_inf)

    p = sub.add_parser("verify-cif", help="integral-formula case table at probes")
    p.add_argument("--contour", required=True)
    p.add_argument("--f", required=True, help="holomorphic expression")
    p.add_argument("--kind", type=int, choices=[1, 2], required=True)
    p.add_argument("--f-inf", dest="f_inf", metavar="RE,IM",
                   help="value at infinity (kind 2)")
    p.add_argument("--probe", action="append", metavar="RE,IM")
    p.add_argument("--probes-csv", help="CSV of probes with header re,im")
    _add_rule_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_verify_cif)

    p = sub.add_parser("convergence", help="node-schedule error table as CSV")
    p.add_argument("--target", choices=["pv", "eval", "length"], required=True)
    p.add_argument("--contour", required=True)
    p.add_argument("--density")
    p.add_argument("--tau0", type=float)
    p.add_argument("--z", metavar="RE,IM")
    p.add_argument("--schedule", required=True, metavar="N1,N2,...",
                   help="strictly increasing node counts")
    p.add_argument("--csv", metavar="FILE", help="also write the table here")
    p.add_argument("--plot", metavar="FILE",
                   help="render a log-log error figure to this file")
    p.set_defaults(handler=_cmd_convergence)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        if args.command == "convergence":
            return args.handler(args)
        inputs, results = args.handler(args)
    except (PrecisionError, ConvergenceError, SingularityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CauchyJumpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": args.command,
        "version": __version__,
        "inputs": inputs,
        "results": results,
        "wall_time_s": time.perf_counter() - start,
    }
    _emit(report, getattr(args, "format", "json"))
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
