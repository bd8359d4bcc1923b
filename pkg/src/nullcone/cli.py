"""Command-line interface: ``nullcone {eval,frame,smarandache,verify}``.

Settings come from an optional JSON file (``--config``) and from flags;
a flag that is given overrides the file field by field. The resolved
settings are echoed into every JSON document and audit report.

Exit codes: 0 success, 1 audit failures, 2 configuration error, 3 some
rows flagged singular or domain-error (rows are still written), 4 output
not writable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

from . import __version__
from .curve import FIXTURE_KINDS, GeneratorPair, canonical_curve, fixture, grid as make_grid
from .errors import ConfigError, DomainError, ExprSyntaxError, InvalidInputError, NullConeError, SingularError
from .frame import build_frame, curvatures, frenet_residuals, gram_residuals
from .kinds import KIND_NAMES, FormulaMode, parse_kind, parse_mode
from .metric import SIGNATURE_TAG
from .smarandache import (
    AngleSet,
    SmarandacheSpec,
    derived_curve,
    oracle_curvatures,
    closed_form_curvatures,
    closed_form_radicand,
    smarandache_curve,
)
from .verify import ALL, SUITES, VerifyConfig, run_suite

EXIT_OK = 0
EXIT_AUDIT = 1
EXIT_CONFIG = 2
EXIT_FLAGGED = 3
EXIT_OUTPUT = 4

ANGLE_KEYS = ("psi", "phi1", "phi2", "phi3", "omega1", "omega2")

DEFAULTS: dict[str, Any] = {
    "metric": SIGNATURE_TAG,
    "fixture": "hyperbolic",
    "a": 1.0,
    "m": 0.0,
    "f": None,
    "g": None,
    "t0": -1.0,
    "t1": 1.0,
    "samples": 11,
    "t": None,
    "format": None,
    "output": None,
    "kind": None,
    "formula_mode": None,
    "with_frame": False,
    "with_curvatures": False,
    "suite": ALL,
    "strict": False,
    "seed": None,
    **{k: None for k in ANGLE_KEYS},
}


class OutputError(NullConeError):
    pass


# --- settings ----------------------------------------------------------------------


def load_config_file(path: str) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path!r} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    data = dict(data)
    angles = data.pop("angles", None)
    if angles is not None:
        if not isinstance(angles, dict):
            raise ConfigError("config 'angles' must be an object")
        data.update(angles)
    tolerances = data.get("tolerances")
    if tolerances is not None and not isinstance(tolerances, dict):
        raise ConfigError("config 'tolerances' must be an object")
    unknown = sorted(set(data) - set(DEFAULTS) - {"tolerances"})
    if unknown:
        raise ConfigError(f"unknown config field(s): {', '.join(unknown)}")
    return data


def resolve(args: argparse.Namespace) -> dict[str, Any]:
    """Defaults, then the config file, then explicitly given flags."""
    settings = dict(DEFAULTS)
    settings["tolerances"] = {}
    if args.config:
        settings.update(load_config_file(args.config))
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _number(settings: dict[str, Any], key: str) -> float:
    value = settings[key]
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be a number, got {value!r}") from None
    if not math.isfinite(x):
        raise ConfigError(f"{key} must be finite, got {value!r}")
    return x


def _check_metric(settings: dict[str, Any]) -> None:
    if settings["metric"] != SIGNATURE_TAG:
        raise ConfigError(f"unsupported metric {settings['metric']!r}; only {SIGNATURE_TAG} is implemented")


def _grid(settings: dict[str, Any]) -> list[float]:
    if settings.get("t") is not None:
        return [_number(settings, "t")]
    samples = settings["samples"]
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 2:
        raise ConfigError("samples must be ≥ 2")
    t0, t1 = _number(settings, "t0"), _number(settings, "t1")
    if not t0 < t1:
        raise ConfigError("t0 must be < t1")
    return make_grid(t0, t1, samples)


def _generator(settings: dict[str, Any]) -> GeneratorPair:
    m = _number(settings, "m")
    f, g = settings["f"], settings["g"]
    if f is not None or g is not None:
        if f is None or g is None:
            raise ConfigError("explicit curves need both f and g")
        return GeneratorPair(f, g, m)
    kind = settings["fixture"]
    if kind not in FIXTURE_KINDS:
        raise ConfigError(f"unknown fixture {kind!r} (expected one of {', '.join(FIXTURE_KINDS)})")
    return fixture(kind, _number(settings, "a"), m)


def _spec(settings: dict[str, Any], base) -> SmarandacheSpec | None:
    if settings["kind"] is None:
        return None
    kind = parse_kind(settings["kind"])
    exprs = []
    for name in kind.angle_names:
        if settings.get(name) is None:
            raise ConfigError(f"{kind.value} needs --{name}")
        exprs.append(settings[name])
    return SmarandacheSpec(base, kind, AngleSet(kind, tuple(exprs)))


_CURVE_KEYS = ("metric", "fixture", "a", "m", "f", "g", "t0", "t1", "samples", "output")
ECHO_KEYS = {
    "eval": _CURVE_KEYS + ("format", "kind", *ANGLE_KEYS, "formula_mode", "with_frame", "with_curvatures"),
    "frame": _CURVE_KEYS + ("t", "format"),
    "verify": ("metric", "suite", "strict", "seed", "format", "output", "kind", *ANGLE_KEYS, "formula_mode", "tolerances"),
}


def _echo(settings: dict[str, Any], command: str) -> dict[str, Any]:
    """The effective settings relevant to ``command``, for embedding in output."""
    keys = ECHO_KEYS[command]
    return {k: settings[k] for k in sorted(keys) if settings.get(k) not in (None, {})}


# --- output ------------------------------------------------------------------------


def _num(x: float | None) -> str:
    if x is None or not math.isfinite(x):
        return ""
    return repr(float(x))


def _json_safe(x):
    if isinstance(x, float):
        return x if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: _json_safe(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_safe(v) for v in x]
    return x


def to_json(doc: Any) -> str:
    return json.dumps(_json_safe(doc), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path!r}: {exc.strerror}") from None


# --- eval --------------------------------------------------------------------------


def _vec_cols(prefix: str) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, 5)]


def _eval_columns(settings: dict[str, Any], spec) -> list[str]:
    cols = ["t", *_vec_cols("gamma")]
    if settings["with_frame"]:
        cols += _vec_cols("xi") + _vec_cols("N") + _vec_cols("W")
    if settings["with_curvatures"]:
        cols += ["h", "k1", "k2"]
        if spec is not None:
            cols += ["closed_h", "closed_k1", "closed_k2", "radicand"]
    return cols + ["flag", "detail"]


def _eval_row(settings, curve, spec, mode, t: float) -> dict[str, Any]:
    row: dict[str, Any] = {"t": t, "flag": "", "detail": ""}
    try:
        pos = curve.at(t) if spec is None else smarandache_curve(spec, t)
        row.update(zip(_vec_cols("gamma"), pos))
        if settings["with_frame"] or settings["with_curvatures"]:
            if spec is None:
                frame = build_frame(curve, t)
                triple = curvatures(curve, t, axiom_tol=None)
            else:
                frame = build_frame(derived_curve(spec), t)
                triple = oracle_curvatures(spec, t).curvatures
            if settings["with_frame"]:
                for name in ("xi", "N", "W"):
                    row.update(zip(_vec_cols(name), getattr(frame, name)))
            if settings["with_curvatures"]:
                row.update(zip(("h", "k1", "k2"), triple.as_tuple()))
                if spec is not None:
                    row["radicand"] = closed_form_radicand(spec, t, mode)
                    row.update(zip(("closed_h", "closed_k1", "closed_k2"), closed_form_curvatures(spec, t, mode).as_tuple()))
    except SingularError as exc:
        row.update(flag="singular", detail=str(exc))
    except (DomainError, InvalidInputError) as exc:
        row.update(flag="domain-error", detail=str(exc))
    return row


def cmd_eval(args: argparse.Namespace, require_kind: bool = False) -> int:
    settings = resolve(args)
    _check_metric(settings)
    fmt = settings["format"] or "csv"
    if fmt not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {fmt!r}")
    if require_kind and settings["kind"] is None:
        raise ConfigError("smarandache needs --kind")
    mode = parse_mode(settings["formula_mode"] or FormulaMode.LITERAL.value)
    grid = _grid(settings)
    curve = canonical_curve(_generator(settings))
    spec = _spec(settings, curve)
    cols = _eval_columns(settings, spec)
    rows = [_eval_row(settings, curve, spec, mode, t) for t in grid]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([_num(row.get(c)) if c not in ("flag", "detail") else row[c] for c in cols])
        text = buf.getvalue()
    else:
        doc = {
            "tool": "nullcone",
            "version": __version__,
            "config": _echo(settings, "eval"),
            "columns": cols,
            "rows": [{c: (row.get(c) if c not in ("flag", "detail") else row[c] or None) for c in cols} for row in rows],
        }
        text = to_json(doc)
    write_output(text, settings["output"])
    return EXIT_FLAGGED if any(r["flag"] for r in rows) else EXIT_OK


# --- frame -------------------------------------------------------------------------


def cmd_frame(args: argparse.Namespace) -> int:
    settings = resolve(args)
    _check_metric(settings)
    if settings["format"] not in (None, "json"):
        raise ConfigError("frame output is JSON only")
    grid = _grid(settings)
    curve = canonical_curve(_generator(settings))
    points = []
    flagged = False
    for t in grid:
        point: dict[str, Any] = {"t": t, "flag": None, "detail": None}
        try:
            fr = build_frame(curve, t)
            point.update({k: list(v) for k, v in fr.vectors().items()})
            point["pairing"] = fr.pairing
            triple = curvatures(curve, t, axiom_tol=None)
            point["curvatures"] = dict(zip(("h", "k1", "k2"), triple.as_tuple()))
            point["gram_residuals"] = gram_residuals(fr)
            point["frenet_residuals"] = frenet_residuals(curve, t)
        except SingularError as exc:
            point.update(flag="singular", detail=str(exc))
            flagged = True
        except (DomainError, InvalidInputError) as exc:
            point.update(flag="domain-error", detail=str(exc))
            flagged = True
        points.append(point)
    doc = {"tool": "nullcone", "version": __version__, "config": _echo(settings, "frame"), "points": points}
    write_output(to_json(doc), settings["output"])
    return EXIT_FLAGGED if flagged else EXIT_OK


# --- verify ------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    settings = resolve(args)
    _check_metric(settings)
    suite = settings["suite"]
    if suite != ALL and suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r} (expected one of {', '.join(SUITES + (ALL,))})")
    fmt = settings["format"] or "json"
    if fmt not in ("json", "text"):
        raise ConfigError(f"verify format must be json or text, got {fmt!r}")
    cfg = VerifyConfig()
    if settings["seed"] is not None:
        if isinstance(settings["seed"], bool) or not isinstance(settings["seed"], int):
            raise ConfigError(f"seed must be an integer, got {settings['seed']!r}")
        cfg.seed = settings["seed"]
    if settings["formula_mode"] is not None:
        cfg.modes = (parse_mode(settings["formula_mode"]),)
    for name, tol in settings["tolerances"].items():
        if name not in cfg.tolerances:
            raise ConfigError(f"unknown tolerance {name!r}")
        cfg.tolerances[name] = tol
    if settings["kind"] is not None:
        kind = parse_kind(settings["kind"])
        given = [settings.get(n) for n in kind.angle_names]
        if all(v is not None for v in given):
            cfg.angles[kind.value] = tuple(given)
        elif any(v is not None for v in given):
            raise ConfigError(f"{kind.value} needs all of: {', '.join(kind.angle_names)}")
    report = run_suite(suite, cfg, {"cli": _echo(settings, "verify")})
    text = to_json(report.to_dict()) if fmt == "json" else report.to_text()
    write_output(text, settings["output"])
    return EXIT_AUDIT if report.failed(strict=settings["strict"]) else EXIT_OK


# --- parser ------------------------------------------------------------------------


def _curve_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config file; flags override its fields")
    p.add_argument("--metric", help=f"metric convention tag (only {SIGNATURE_TAG})")
    p.add_argument("--fixture", help="named curve: hyperbolic or trigonometric")
    p.add_argument("--a", type=float, help="fixture rate a")
    p.add_argument("--m", type=float, help="curve constant m")
    p.add_argument("--f", help="generator function f(t)")
    p.add_argument("--g", help="generator function g(t)")
    p.add_argument("--t0", type=float)
    p.add_argument("--t1", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--output", help="output path (default stdout)")


def _kind_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", help=f"Smarandache family: {', '.join(KIND_NAMES)}")
    for name in ANGLE_KEYS:
        p.add_argument(f"--{name}", help=f"angle function {name}(t)")
    p.add_argument("--formula-mode", dest="formula_mode", help="literal or corrected")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullcone", description="Sample null curves on the (2,2) lightlike cone, their frames and Smarandache curves."
    )
    parser.add_argument("--version", action="version", version=f"nullcone {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("eval", "sample a curve on a grid"), ("smarandache", "sample a Smarandache curve (needs --kind)")):
        p = sub.add_parser(name, help=help_)
        _curve_flags(p)
        _kind_flags(p)
        p.add_argument("--format", help="csv (default) or json")
        p.add_argument("--with-frame", dest="with_frame", action="store_const", const=True)
        p.add_argument("--with-curvatures", dest="with_curvatures", action="store_const", const=True)

    p = sub.add_parser("frame", help="frame vectors, curvatures and residuals as JSON")
    _curve_flags(p)
    p.add_argument("--t", type=float, help="single parameter value instead of a grid")
    p.add_argument("--format", help="json")

    p = sub.add_parser("verify", help="run audit suites")
    p.add_argument("--config", help="JSON config file; flags override its fields")
    p.add_argument("--metric", help=f"metric convention tag (only {SIGNATURE_TAG})")
    p.add_argument("--suite", help=f"one of {', '.join(SUITES + (ALL,))}")
    p.add_argument("--strict", action="store_const", const=True, help="closed-form mismatches fail the run")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", help="json (default) or text")
    p.add_argument("--output", help="output path (default stdout)")
    _kind_flags(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "smarandache":
            return cmd_eval(args, require_kind=True)
        if args.command == "frame":
            return cmd_frame(args)
        return cmd_verify(args)
    except OutputError as exc:
        print(f"nullcone: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    except (ConfigError, ExprSyntaxError, InvalidInputError) as exc:
        print(f"nullcone: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
