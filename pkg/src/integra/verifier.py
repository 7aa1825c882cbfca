"""Identity verification: quadrature vs series vs closed form.

Every record is checked by computing all of its available sides
independently and comparing them pairwise; nothing is privileged as
"truth".  Evaluation errors become status="error" reports, never
exceptions, and a whole-suite run is a deterministic ordered fold no
matter how many workers participate.
"""

from __future__ import annotations

import json
import math
import random
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .catalog import (
    IdentityRecord,
    evaluate_closed_form,
    evaluate_series,
    realize_integrand,
    realized_interval,
)
from .errors import ConstraintViolation, IntegraError
from .policy import DEFAULT_POLICY, DEFAULT_TOLERANCE, AccuracyPolicy, TolerancePolicy
from .quadrature import (
    integrate_semi_infinite_oscillatory,
    integrate_with_branch_tracking,
)


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: tuple
    lhs_value: complex | None
    rhs_series_value: complex | None
    rhs_closed_value: complex | None
    abs_err: float
    rel_err: float
    terms_used: int
    quad_evals: int
    status: str            # pass | fail | skipped(reason) | error(message)

    @property
    def status_kind(self) -> str:
        return self.status.split("(", 1)[0]


@dataclass(frozen=True)
class ErratumReport:
    id: str
    corrected_matches: bool
    published_matches: bool
    corrected_err: float
    published_err: float

    @property
    def claim_confirmed(self) -> bool:
        return self.corrected_matches and not self.published_matches


@dataclass(frozen=True)
class SuiteReport:
    reports: tuple

    @property
    def summary(self) -> dict:
        counts = {"total": len(self.reports), "pass": 0, "fail": 0,
                  "skipped": 0, "error": 0}
        for r in self.reports:
            counts[r.status_kind] += 1
        return counts

    @property
    def success(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0


def _fmt_complex(z):
    if z is None:
        return ""
    return f"{z.real:.17g}" + (f"{z.imag:+.17g}j" if z.imag else "")


def _effective_rtol(record: IdentityRecord, policy: TolerancePolicy) -> float:
    if record.tolerance is not None:
        return record.tolerance
    if record.uses_derivative_closed_form:
        return policy.derivative_rtol
    return policy.rtol


def verify_identity(
    record: IdentityRecord,
    params: dict | None = None,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
    accuracy: AccuracyPolicy = DEFAULT_POLICY,
) -> VerificationReport:
    """Compute every available side of one identity and compare."""
    p = record.defaults()
    if params:
        p.update(params)
    if not record.check_constraints(p):
        raise ConstraintViolation(f"{record.id}: parameters violate constraints")
    params_t = tuple(sorted((k, complex(v)) for k, v in p.items()))

    def report(status, lhs=None, series=None, closed=None,
               abs_err=math.nan, rel_err=math.nan, terms=0, evals=0):
        return VerificationReport(record.id, params_t, lhs, series, closed,
                                  abs_err, rel_err, terms, evals, status)

    lhs_value = None
    quad_err = 0.0
    quad_evals = 0
    series_value = None
    terms_used = 0
    closed_value = None
    try:
        handle = realize_integrand(record.lhs, p)
        lo, hi = realized_interval(record.lhs, p)
        if math.isinf(hi):
            freq = None
            for term in record.lhs.terms:
                for name, args in term.factors:
                    if name == "osc_log_sin":
                        from .catalog import evaluate_expr

                        freq = evaluate_expr(args[2], p).real
            if freq is None:
                return report("error(infinite interval without oscillation factor)")
            q = integrate_semi_infinite_oscillatory(handle, freq, accuracy)
        else:
            q = integrate_with_branch_tracking(handle, lo, hi, accuracy)
        lhs_value = q.value
        quad_err = q.error_estimate
        quad_evals = q.evaluations
        if record.rhs_series is not None:
            s = evaluate_series(record.rhs_series, p, accuracy)
            series_value = s.value
            terms_used = s.terms_used
        if record.rhs_closed is not None:
            closed_value = evaluate_closed_form(record.rhs_closed, p)
    except IntegraError as exc:
        return report(f"error({type(exc).__name__}: {exc})", lhs_value,
                      series_value, closed_value, evals=quad_evals)
    except (OverflowError, ZeroDivisionError, ValueError) as exc:
        return report(f"error({type(exc).__name__}: {exc})", lhs_value,
                      series_value, closed_value, evals=quad_evals)

    sides = [v for v in (lhs_value, series_value, closed_value) if v is not None]
    if len(sides) < 2:
        return report("error(fewer than two computable sides)", lhs_value,
                      series_value, closed_value, evals=quad_evals)
    abs_err = max(
        abs(a - b) for i, a in enumerate(sides) for b in sides[i + 1:]
    )
    scale = max(abs(v) for v in sides)
    rel_err = abs_err / scale if scale > 0 else abs_err
    rtol = _effective_rtol(record, policy)
    tol = max(policy.atol, rtol * scale)
    if quad_err > tol and lhs_value is not None:
        return report("skipped(quadrature precision insufficient)", lhs_value,
                      series_value, closed_value, abs_err, rel_err,
                      terms_used, quad_evals)
    status = "pass" if abs_err <= tol else "fail"
    return report(status, lhs_value, series_value, closed_value,
                  abs_err, rel_err, terms_used, quad_evals)


def verify_identity_sampled(
    record: IdentityRecord,
    n_samples: int,
    seed: int,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
    accuracy: AccuracyPolicy = DEFAULT_POLICY,
):
    """Verify at n_samples pseudo-random points inside the record's boxes.

    A record with no sampling boxes falls back to a single run at its
    defaults.  The draw sequence is a pure function of (record id, seed).
    """
    if n_samples == 0:
        return []
    boxes = record.sampling_boxes()
    if not boxes:
        return [verify_identity(record, None, policy, accuracy)]
    rng = random.Random(seed ^ zlib.crc32(record.id.encode()))
    out = []
    for _ in range(n_samples):
        params = record.defaults()
        accepted = False
        for _try in range(200):
            candidate = dict(params)
            for part, name, lo, hi in boxes:
                base = complex(candidate.get(name, 0.0))
                x = rng.uniform(lo, hi)
                if part == "re":
                    candidate[name] = complex(x, base.imag)
                else:
                    candidate[name] = complex(base.real, x)
            if record.check_constraints(candidate):
                params = candidate
                accepted = True
                break
        if not accepted:
            raise ConstraintViolation(
                f"{record.id}: could not sample inside constraints"
            )
        out.append(verify_identity(record, params, policy, accuracy))
    return out


def check_erratum(
    record: IdentityRecord,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
    accuracy: AccuracyPolicy = DEFAULT_POLICY,
) -> ErratumReport:
    """Quantify the source's inequality claim at the record defaults.

    The corrected form must agree with the quadrature value within
    policy; the published form must disagree by more than 10x that
    tolerance.
    """
    if record.erratum is None:
        raise ConstraintViolation(f"{record.id} carries no erratum info")
    p = record.defaults()
    handle = realize_integrand(record.lhs, p)
    lo, hi = realized_interval(record.lhs, p)
    q = integrate_with_branch_tracking(handle, lo, hi, accuracy)
    corrected = evaluate_closed_form(record.erratum.corrected_form, p)
    published = evaluate_closed_form(record.erratum.published_form, p)
    scale = max(abs(q.value), abs(corrected), 1e-300)
    corrected_err = abs(q.value - corrected) / scale
    published_err = abs(q.value - published) / scale
    rtol = _effective_rtol(record, policy)
    return ErratumReport(
        id=record.id,
        corrected_matches=corrected_err <= max(policy.atol / scale, rtol),
        published_matches=published_err <= 10.0 * max(policy.atol / scale, rtol),
        corrected_err=corrected_err,
        published_err=published_err,
    )


def run_suite(
    records,
    filter_fn=None,
    jobs: int = 1,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
    accuracy: AccuracyPolicy = DEFAULT_POLICY,
) -> SuiteReport:
    """Verify records (optionally filtered), in parallel, deterministically.

    Reports are sorted by id; per-record failures are captured in the
    reports, never raised.
    """
    chosen = [r for r in records if filter_fn is None or filter_fn(r)]
    chosen.sort(key=lambda r: r.id)

    def one(rec):
        try:
            return verify_identity(rec, None, policy, accuracy)
        except IntegraError as exc:
            return VerificationReport(rec.id, tuple(sorted(rec.default_params)),
                                      None, None, None, math.nan, math.nan,
                                      0, 0, f"error({type(exc).__name__}: {exc})")

    if jobs <= 1 or len(chosen) <= 1:
        reports = [one(r) for r in chosen]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(one, chosen))
    return SuiteReport(tuple(reports))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def report_to_dict(r: VerificationReport) -> dict:
    return {
        "id": r.id,
        "params": {k: _fmt_complex(v) for k, v in r.params},
        "lhs_value": _fmt_complex(r.lhs_value),
        "rhs_series_value": _fmt_complex(r.rhs_series_value),
        "rhs_closed_value": _fmt_complex(r.rhs_closed_value),
        "abs_err": None if math.isnan(r.abs_err) else r.abs_err,
        "rel_err": None if math.isnan(r.rel_err) else r.rel_err,
        "terms_used": r.terms_used,
        "quad_evals": r.quad_evals,
        "status": r.status,
    }


def suite_to_json(suite: SuiteReport) -> str:
    doc = {
        "summary": suite.summary,
        "reports": [report_to_dict(r) for r in suite.reports],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def suite_to_csv(suite: SuiteReport) -> str:
    lines = ["id,status,abs_err,rel_err,terms_used,quad_evals"]
    for r in suite.reports:
        abs_s = "" if math.isnan(r.abs_err) else f"{r.abs_err:.17g}"
        rel_s = "" if math.isnan(r.rel_err) else f"{r.rel_err:.17g}"
        status = r.status.replace(",", ";")
        lines.append(f"{r.id},{status},{abs_s},{rel_s},{r.terms_used},{r.quad_evals}")
    return "\n".join(lines) + "\n"


def suite_to_table(suite: SuiteReport) -> str:
    width = max([len(r.id) for r in suite.reports], default=4)
    lines = [f"{'id':<{width}}  {'status':<10} {'rel_err':>12} {'terms':>8} {'evals':>8}"]
    for r in suite.reports:
        rel_s = "" if math.isnan(r.rel_err) else f"{r.rel_err:.2e}"
        lines.append(
            f"{r.id:<{width}}  {r.status_kind:<10} {rel_s:>12} "
            f"{r.terms_used:>8} {r.quad_evals:>8}"
        )
    s = suite.summary
    lines.append(
        f"total {s['total']}  pass {s['pass']}  fail {s['fail']}  "
        f"skipped {s['skipped']}  error {s['error']}"
    )
    return "\n".join(lines) + "\n"
