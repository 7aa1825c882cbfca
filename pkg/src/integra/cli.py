"""Command-line entry point: list, verify, suite, plot-data.

Exit codes follow the verification contract: 0 for pass, 1 for fail,
2 for errors, skips, and unknown ids.  Output files are byte-identical
across repeated runs with the same configuration and seed.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field

from .catalog import (
    builtin_catalog,
    evaluate_expr,
    load_catalog,
    parse_expr,
    realize_integrand,
    realized_interval,
)
from .errors import IntegraError, UnknownId
from .policy import AccuracyPolicy, TolerancePolicy
from .verifier import (
    run_suite,
    suite_to_csv,
    suite_to_json,
    suite_to_table,
    verify_identity,
    verify_identity_sampled,
)


@dataclass
class CliConfig:
    command: str
    id: str | None = None
    param_overrides: dict = field(default_factory=dict)
    atol: float | None = None
    rtol: float | None = None
    jobs: int = 1
    seed: int = 42
    samples: int = 0
    filter: str | None = None
    errata_only: bool = False
    format: str = "table"
    output_path: str | None = None
    figure_path: str | None = None
    manifest: str | None = None
    points: int = 500
    range: str | None = None


def _accuracy_policy() -> AccuracyPolicy:
    max_terms = os.environ.get("INTEGRA_MAX_TERMS")
    if max_terms:
        return AccuracyPolicy(max_terms=int(max_terms))
    return AccuracyPolicy()


def _tolerance_policy(cfg: CliConfig) -> TolerancePolicy:
    kw = {}
    if cfg.atol is not None:
        kw["atol"] = cfg.atol
    if cfg.rtol is not None:
        kw["rtol"] = cfg.rtol
    return TolerancePolicy(**kw)


def _load_records(cfg: CliConfig):
    records = builtin_catalog()
    if cfg.manifest:
        with open(cfg.manifest, "r", encoding="utf-8") as fh:
            records.extend(load_catalog(fh.read()))
    records.sort(key=lambda r: r.id)
    return records


def _parse_params(text: str) -> dict:
    out = {}
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"parameter override must be name=value: {part!r}")
        name, value = part.split("=", 1)
        out[name.strip()] = evaluate_expr(parse_expr(value.strip()), {})
    return out


def _match_filter(record, cfg: CliConfig) -> bool:
    if cfg.errata_only and record.erratum is None:
        return False
    if not cfg.filter:
        return True
    key, _, value = cfg.filter.partition("=")
    key = key.strip()
    value = value.strip()
    if key == "source":
        return record.id.split("-", 1)[0] == value
    if key == "id":
        return value in record.id
    if key == "erratum":
        want = value.lower() in ("1", "true", "yes")
        return (record.erratum is not None) == want
    raise ValueError(f"unknown filter key {key!r}")


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_list(cfg: CliConfig) -> int:
    records = [r for r in _load_records(cfg) if _match_filter(r, cfg)]
    width = max([len(r.id) for r in records], default=4)
    lines = []
    for r in records:
        flag = "erratum" if r.erratum is not None else ""
        source = r.source.split(";")[0].strip()
        if len(source) > 44:
            source = source[:41] + "..."
        cons = "; ".join(c.text for c in r.constraints) or "-"
        lines.append(f"{r.id:<{width}}  {flag:<8} {source:<46} {cons}")
    _emit("\n".join(lines) + "\n", cfg.output_path)
    return 0


def _find(records, rid: str):
    for r in records:
        if r.id == rid:
            return r
    raise UnknownId(f"no catalog record with id {rid!r}")


def cmd_verify(cfg: CliConfig) -> int:
    records = _load_records(cfg)
    try:
        record = _find(records, cfg.id)
        policy = _tolerance_policy(cfg)
        accuracy = _accuracy_policy()
        if cfg.samples > 0:
            reports = verify_identity_sampled(record, cfg.samples, cfg.seed,
                                              policy, accuracy)
        else:
            reports = [verify_identity(record, cfg.param_overrides or None,
                                       policy, accuracy)]
    except IntegraError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    worst = 0
    for rep in reports:
        line = f"{rep.id}: {rep.status}"
        if rep.lhs_value is not None:
            line += f"  lhs={rep.lhs_value.real:.10g}"
            if rep.lhs_value.imag:
                line += f"{rep.lhs_value.imag:+.10g}j"
        if not math.isnan(rep.rel_err):
            line += f"  rel_err={rep.rel_err:.3e}"
        print(line)
        kind = rep.status_kind
        worst = max(worst, {"pass": 0, "fail": 1, "skipped": 2, "error": 2}[kind])
    return worst


def cmd_suite(cfg: CliConfig) -> int:
    records = _load_records(cfg)
    policy = _tolerance_policy(cfg)
    accuracy = _accuracy_policy()
    suite = run_suite(records, lambda r: _match_filter(r, cfg),
                      jobs=cfg.jobs, policy=policy, accuracy=accuracy)
    if cfg.format == "json":
        text = suite_to_json(suite)
    elif cfg.format == "csv":
        text = suite_to_csv(suite)
    else:
        text = suite_to_table(suite)
    _emit(text, cfg.output_path)
    figure = cfg.figure_path
    if figure is None and cfg.output_path:
        figure = cfg.output_path + ".png"
    if figure:
        from .plots import render_suite_chart

        render_suite_chart(suite.reports, figure)
    return 0 if suite.success else 1


def _plot_grid(record, cfg: CliConfig, params):
    lo, hi = realized_interval(record.lhs, params)
    if cfg.range:
        lo_s, hi_s = cfg.range.split(":")
        lo_r, hi_r = float(lo_s), float(hi_s)
        if math.isfinite(hi) and not (lo <= lo_r < hi_r <= hi):
            raise IntegraError("requested range outside the record interval")
        lo, hi = lo_r, hi_r
    elif not math.isfinite(hi):
        raise IntegraError("record has an infinite interval; pass --range lo:hi")
    else:
        margin = 1e-3 * (hi - lo)
        lo, hi = lo + margin, hi - margin
    n = max(2, cfg.points)
    step = (hi - lo) / (n - 1)
    xs = [lo + i * step for i in range(n)]
    sing = realize_integrand(record.lhs, params).singular_points
    keep = [x for x in xs
            if all(abs(x - s) > 1e-9 * (hi - lo) for s in sing)]
    return keep


def cmd_plot_data(cfg: CliConfig) -> int:
    records = _load_records(cfg)
    try:
        record = _find(records, cfg.id)
        params = record.defaults()
        params.update(cfg.param_overrides)
        handle = realize_integrand(record.lhs, params)
        xs = _plot_grid(record, cfg, params)
        values = [complex(handle.evaluate(x)) for x in xs]
    except IntegraError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    lines = ["x,re,im"]
    for x, v in zip(xs, values):
        lines.append(f"{x:.17g},{v.real:.17g},{v.imag:.17g}")
    _emit("\n".join(lines) + "\n", cfg.output_path)
    figure = cfg.figure_path
    if figure is None and cfg.output_path:
        figure = cfg.output_path + ".png"
    if figure:
        from .plots import render_plot_data

        render_plot_data(xs, values, record.id, figure)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="integra",
        description="verify definite-integral identities by quadrature, "
                    "series, and closed forms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--manifest", help="extra manifest file to load")
        p.add_argument("--out", dest="output_path", help="write output to PATH")

    p_list = sub.add_parser("list", help="list catalog records")
    common(p_list)
    p_list.add_argument("--errata", action="store_true", help="erratum records only")
    p_list.add_argument("--filter", help="key=value filter (source=, id=, erratum=)")

    p_verify = sub.add_parser("verify", help="verify one identity")
    common(p_verify)
    p_verify.add_argument("--id", required=True)
    p_verify.add_argument("--params", default="", help="overrides: name=value,...")
    p_verify.add_argument("--atol", type=float)
    p_verify.add_argument("--rtol", type=float)
    p_verify.add_argument("--samples", type=int, default=0)
    p_verify.add_argument("--seed", type=int, default=42)

    p_suite = sub.add_parser("suite", help="verify every record")
    common(p_suite)
    p_suite.add_argument("--filter", help="key=value filter")
    p_suite.add_argument("--errata", action="store_true")
    p_suite.add_argument("--jobs", type=int, default=1)
    p_suite.add_argument("--atol", type=float)
    p_suite.add_argument("--rtol", type=float)
    p_suite.add_argument("--format", choices=("table", "json", "csv"),
                         default="table")
    p_suite.add_argument("--figure", dest="figure_path",
                         help="render a discrepancy chart to PATH")

    p_plot = sub.add_parser("plot-data", help="emit (x, Re f, Im f) samples")
    common(p_plot)
    p_plot.add_argument("--id", required=True)
    p_plot.add_argument("--params", default="")
    p_plot.add_argument("--points", type=int, default=500)
    p_plot.add_argument("--range", help="lo:hi sample range")
    p_plot.add_argument("--figure", dest="figure_path",
                        help="render the curves to PATH")
    return parser


def config_from_args(args) -> CliConfig:
    cfg = CliConfig(command=args.command)
    for name in ("id", "atol", "rtol", "jobs", "seed", "samples", "filter",
                 "format", "output_path", "figure_path", "manifest",
                 "points", "range"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "errata", False):
        cfg.errata_only = True
    if getattr(args, "params", ""):
        cfg.param_overrides = _parse_params(args.params)
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (ValueError, IntegraError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    handler = {
        "list": cmd_list,
        "verify": cmd_verify,
        "suite": cmd_suite,
        "plot-data": cmd_plot_data,
    }[cfg.command]
    try:
        return handler(cfg)
    except IntegraError as exc:
        # manifest parse errors carry their line position in the message
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
