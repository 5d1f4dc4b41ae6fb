"""Command line driver: run experiment configs, list the catalog, describe
a map.

Exit codes
    0  every non-report-only check passed (all checks, under --strict)
    2  unreadable, malformed or schema-invalid config
    3  a parameter violated its constraint
    4  unknown map or retraction name
    5  at least one check failed

Configs are JSON objects; unknown fields anywhere are errors, not warnings,
because a silent typo would invalidate a verification run.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .catalog import CATALOG, RETRACTION_CATALOG, build_map
from .domains import (
    ball,
    c_interval,
    coefficient_box,
    positive_ball,
    sigma_band,
    simplex,
    sub_simplex,
)
from .errors import (
    ConfigError,
    DomainViolationError,
    HolderLabError,
    InsufficientSamplesError,
    InvalidBudgetError,
    InvalidCheckError,
    InvalidCompositionError,
    InvalidParameterError,
    InvalidStrategyError,
    NotInSpaceError,
    UnknownNameError,
)
from .report import VerificationReport, write_report
from .seqvec import NormKind, parse_vec
from .verify import CHECK_KINDS, CheckRequest, run_check

__all__ = ["main"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PARAMETER = 3
EXIT_UNKNOWN_NAME = 4
EXIT_CHECK_FAILED = 5

_TOP_KEYS = {"schema_version", "name", "map", "domain", "seed", "checks",
             "strict", "out", "breadth", "tolerance"}
_MAP_KEYS = {"name", "params"}
_DOMAIN_KEYS = {"kind", "params", "tol", "breadth"}
_COMMON_CHECK_KEYS = {"kind", "seed", "tolerance"}
_CHECK_KEYS = {
    "holder_ratio": {"pairs", "iterate", "exponent"},
    "invariance": {"samples"},
    "orbit": {"x0", "depth"},
    "displacement": {"strategy", "budget", "lambdas", "target"},
    "uniform_profile": {"n_list", "pairs"},
    "asymptotic_profile": {"n_max", "pairs"},
    "approx_fixed_set": {"delta", "samples"},
    "oracle_compare": {"x0", "n_max"},
}

_DOMAIN_FACTORIES = {
    "ball": ball,
    "positive_ball": positive_ball,
    "simplex": simplex,
    "sub_simplex": sub_simplex,
    "coefficient_box": coefficient_box,
    "sigma_band": sigma_band,
    "c_interval": c_interval,
}


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConfigError(message)


def _norm_from_obj(obj: object) -> NormKind:
    _require(isinstance(obj, dict), "norm must be an object")
    extra = set(obj) - {"variant", "p"}
    _require(not extra, f"unknown norm fields: {sorted(extra)}")
    variant = obj.get("variant")
    _require(variant in ("sup", "lp", "max_pos_neg_l1"),
             f"unknown norm variant {variant!r}")
    if variant == "lp":
        _require("p" in obj, "lp norm needs a p field")
        return NormKind.lp(float(obj["p"]))
    _require("p" not in obj, f"{variant} norm takes no p field")
    return NormKind.sup() if variant == "sup" else NormKind.max_pos_neg_l1()


def _domain_from_obj(obj: object):
    _require(isinstance(obj, dict), "domain must be an object")
    extra = set(obj) - _DOMAIN_KEYS
    _require(not extra, f"unknown domain fields: {sorted(extra)}")
    kind = obj.get("kind")
    _require(kind in _DOMAIN_FACTORIES, f"unknown domain kind {kind!r}")
    params = obj.get("params", {})
    _require(isinstance(params, dict), "domain params must be an object")
    kwargs = dict(params)
    if kind in ("ball", "positive_ball"):
        _require("norm" in kwargs, f"{kind} domain params need a norm object")
        # The factory calls its norm parameter `kind`; in configs that name
        # is taken by the domain kind, so the params field is `norm`.
        kwargs["kind"] = _norm_from_obj(kwargs.pop("norm"))
    if "tol" in obj:
        kwargs["tol"] = float(obj["tol"])
    if "breadth" in obj:
        kwargs["breadth"] = int(obj["breadth"])
    try:
        return _DOMAIN_FACTORIES[kind](**kwargs)
    except TypeError as exc:
        raise ConfigError(f"bad domain params for {kind!r}: {exc}") from exc


def _check_from_obj(obj: object, index: int) -> CheckRequest:
    _require(isinstance(obj, dict), f"checks[{index}] must be an object")
    kind = obj.get("kind")
    _require(isinstance(kind, str) and kind in CHECK_KINDS,
             f"checks[{index}]: unknown check kind {kind!r}; expected one of "
             f"{', '.join(CHECK_KINDS)}")
    allowed = _CHECK_KEYS[kind] | _COMMON_CHECK_KEYS
    extra = set(obj) - allowed
    _require(not extra,
             f"checks[{index}] ({kind}): unknown fields {sorted(extra)}; "
             f"allowed: {sorted(allowed)}")
    kwargs: dict[str, object] = {"kind": kind}
    for key, value in obj.items():
        if key == "kind":
            continue
        if key == "x0":
            _require(isinstance(value, str),
                     f"checks[{index}]: x0 must be a vector literal string")
            try:
                kwargs["x0"] = parse_vec(value)
            except ValueError as exc:
                raise ConfigError(
                    f"checks[{index}]: bad x0 literal: {exc}") from exc
        elif key in ("n_list", "lambdas"):
            _require(isinstance(value, list) and value,
                     f"checks[{index}]: {key} must be a nonempty list")
            kwargs[key] = tuple(
                int(v) if key == "n_list" else float(v) for v in value
            )
        elif key in ("pairs", "samples", "iterate", "n_max", "depth",
                     "budget", "seed"):
            _require(isinstance(value, int) and not isinstance(value, bool),
                     f"checks[{index}]: {key} must be an integer")
            kwargs[key] = value
        elif key in ("exponent", "delta", "tolerance", "target"):
            _require(isinstance(value, (int, float))
                     and not isinstance(value, bool),
                     f"checks[{index}]: {key} must be a number")
            kwargs[key] = float(value)
        elif key == "strategy":
            _require(isinstance(value, str),
                     f"checks[{index}]: strategy must be a string")
            kwargs[key] = value
        else:  # pragma: no cover - guarded by the allowed-keys filter
            raise ConfigError(f"checks[{index}]: unhandled field {key!r}")
    return CheckRequest(**kwargs)


def _parse_config(obj: object) -> dict:
    _require(isinstance(obj, dict), "config must be a JSON object")
    extra = set(obj) - _TOP_KEYS
    _require(not extra, f"unknown config fields: {sorted(extra)}")
    for key in ("schema_version", "name", "map", "seed", "checks"):
        _require(key in obj, f"config is missing required field {key!r}")
    _require(obj["schema_version"] == 1,
             f"unsupported schema_version {obj['schema_version']!r} "
             f"(this build reads version 1)")
    name = obj["name"]
    _require(isinstance(name, str) and name and "/" not in name
             and "\\" not in name,
             "name must be a nonempty string without path separators")
    map_obj = obj["map"]
    _require(isinstance(map_obj, dict), "map must be an object")
    extra = set(map_obj) - _MAP_KEYS
    _require(not extra, f"unknown map fields: {sorted(extra)}")
    _require(isinstance(map_obj.get("name"), str), "map.name must be a string")
    params = map_obj.get("params", {})
    _require(isinstance(params, dict), "map.params must be an object")
    seed = obj["seed"]
    _require(isinstance(seed, int) and not isinstance(seed, bool),
             "seed must be an integer")
    checks_obj = obj["checks"]
    _require(isinstance(checks_obj, list) and checks_obj,
             "checks must be a nonempty list")
    checks = [_check_from_obj(c, i) for i, c in enumerate(checks_obj)]
    strict = obj.get("strict", False)
    _require(isinstance(strict, bool), "strict must be a boolean")
    out = obj.get("out", ".")
    _require(isinstance(out, str) and out, "out must be a nonempty string")
    breadth = obj.get("breadth")
    if breadth is not None:
        _require(isinstance(breadth, int) and not isinstance(breadth, bool),
                 "breadth must be an integer")
    tolerance = obj.get("tolerance")
    if tolerance is not None:
        _require(isinstance(tolerance, (int, float))
                 and not isinstance(tolerance, bool),
                 "tolerance must be a number")
        tolerance = float(tolerance)
    return {
        "name": name,
        "map_name": map_obj["name"],
        "map_params": params,
        "domain": obj.get("domain"),
        "seed": seed,
        "checks": checks,
        "strict": strict,
        "out": out,
        "breadth": breadth,
        "tolerance": tolerance,
    }


def _derive_seed(master: int, index: int) -> int:
    return int(np.random.SeedSequence([master, index]).generate_state(1)[0])


def _cmd_run(args: argparse.Namespace) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as handle:
            raw = handle.read()
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = _parse_config(json.loads(raw))
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    seed = args.seed if args.seed is not None else cfg["seed"]
    breadth = args.breadth if args.breadth is not None else cfg["breadth"]
    strict = args.strict or cfg["strict"]
    out_dir = args.out if args.out is not None else cfg["out"]

    try:
        T = build_map(cfg["map_name"], cfg["map_params"], breadth=breadth)
        if cfg["domain"] is not None:
            from dataclasses import replace

            T = replace(T, domain=_domain_from_obj(cfg["domain"]))
    except UnknownNameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    except (InvalidParameterError, InvalidCompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    records = []
    try:
        for index, req in enumerate(cfg["checks"]):
            if req.tolerance is None and cfg["tolerance"] is not None:
                from dataclasses import replace as _replace

                req = _replace(req, tolerance=cfg["tolerance"])
            records.append(run_check(T, req, _derive_seed(seed, index)))
    except (InvalidParameterError, InvalidBudgetError, InvalidStrategyError,
            DomainViolationError, NotInSpaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except InvalidCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InsufficientSamplesError as exc:
        print(f"error: check produced no evidence: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    report = VerificationReport(
        name=cfg["name"],
        map_name=cfg["map_name"],
        map_params=cfg["map_params"],
        seed=seed,
        strict=strict,
        checks=records,
    )
    json_path, summary_path = write_report(report, out_dir)
    sys.stdout.write(report.to_summary())
    print(f"report: {json_path}")
    print(f"summary: {summary_path}")
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


def _cmd_list(_args: argparse.Namespace) -> int:
    print("catalog maps:")
    for name in sorted(CATALOG):
        entry = CATALOG[name]
        schema = ", ".join(f"{p.name}={p.default!r}" for p in entry.params)
        oracle = "  [closed-form iterates]" if entry.has_oracle else ""
        print(f"  {name}  ({schema})" if schema else f"  {name}  (no parameters)",
              end="")
        print(oracle)
        print(f"      {entry.summary}")
        inst = entry.factory()
        print(f"      {inst.formula}")
    print()
    print("retractions (addressable as map names in configs):")
    for name in sorted(RETRACTION_CATALOG):
        entry = RETRACTION_CATALOG[name]
        print(f"  {name}  (r=1.0)")
        print(f"      {entry.summary}")
    return EXIT_OK


def _cmd_describe(args: argparse.Namespace) -> int:
    try:
        T = build_map(args.name)
    except UnknownNameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    entry = CATALOG.get(args.name) or RETRACTION_CATALOG[args.name]
    claims = T.claims
    print(f"name: {T.name}")
    print(f"summary: {entry.summary}")
    print(f"formula: {T.formula}")
    print(f"domain: {T.domain.describe()}")
    print(f"norm: {T.norm.label()}")
    if entry.params:
        print("parameters:")
        for p in entry.params:
            print(f"  {p.name} = {p.default!r}  ({p.constraint})")
    else:
        print("parameters: none")
    print("claims:")
    print(f"  exponent alpha = {claims.alpha!r}")
    uniform = "uniform over iterates" if claims.uniform else "single application"
    print(f"  holder constant = {claims.holder_constant!r}  ({uniform})")
    if claims.classical_lipschitz is not None:
        print(f"  classical lipschitz = {claims.classical_lipschitz!r}")
    if claims.asymptotic_profile is not None:
        profile = ", ".join(
            f"n={n}: {claims.asymptotic_profile(n):.6g}" for n in (1, 2, 5, 10)
        )
        print(f"  asymptotic profile: {profile}")
    if claims.displacement_bound is not None:
        print(f"  displacement bound = {claims.displacement_bound!r}")
    if claims.lower_bound is not None:
        print(f"  expansion floor (report-only) = {claims.lower_bound!r}")
    if not claims.hard:
        print("  (claims are report-only: measured, never hard-failed)")
    fps = claims.fixed_points
    if fps.kind == "singleton":
        residual = (f" (truncation residual {fps.residual!r})"
                    if fps.residual else "")
        print(f"  fixed points: singleton {fps.point}{residual}")
    elif fps.kind == "empty":
        print("  fixed points: none")
    else:
        print("  fixed points: not pinned down")
    if T.iterate_oracle is not None:
        print("oracle: closed-form iterates available (oracle_compare)")
    if T.notes:
        print(f"notes: {T.notes}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="holderlab",
        description=("Measure Holder constants, invariance and minimal "
                     "displacement for the bundled catalog of sequence-space "
                     "self-maps."),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a JSON experiment config")
    p_run.add_argument("config", help="path to the config file")
    p_run.add_argument("--strict", action="store_true",
                       help="report-only findings also fail the run")
    p_run.add_argument("--out", default=None,
                       help="directory for report files (default: config "
                            "'out' field, then current directory)")
    p_run.add_argument("--seed", type=int, default=None,
                       help="override the config master seed")
    p_run.add_argument("--breadth", type=int, default=None,
                       help="override the domain truncation breadth")
    p_run.set_defaults(func=_cmd_run)

    p_list = sub.add_parser("list", help="list catalog maps and retractions")
    p_list.set_defaults(func=_cmd_list)

    p_desc = sub.add_parser("describe",
                            help="print one map's construction sheet")
    p_desc.add_argument("name")
    p_desc.set_defaults(func=_cmd_describe)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HolderLabError as exc:  # last-resort mapping, keeps exits total
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, UnknownNameError):
            return EXIT_UNKNOWN_NAME
        if isinstance(exc, (InvalidParameterError, InvalidCompositionError)):
            return EXIT_PARAMETER
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
