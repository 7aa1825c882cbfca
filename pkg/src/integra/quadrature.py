"""Independent numerical evaluation of the catalog's left-hand sides.

Finite intervals use tanh-sinh (double-exponential) quadrature, which
absorbs the endpoint log-power and algebraic singularities every
integrand here exhibits.  Interior branch/singular points are interval
split points declared by the catalog record, never auto-detected.
Complex integrands are integrated in one pass (real and imaginary parts
share abscissae).  A semi-infinite oscillatory tier integrates between
consecutive zeros of the oscillation and accelerates the lobe sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainViolation, NonConvergence, NonIntegrableSingularity
from .policy import DEFAULT_POLICY, AccuracyPolicy
from .series_engine import accelerate_alternating

_HALF_PI = math.pi / 2.0


@dataclass
class IntegrandHandle:
    """A complex-valued integrand on an open interval.

    evaluate maps a real abscissa to complex; singular_points lists
    interior branch/singular abscissae the quadrature must split at;
    endpoint_behavior is a free-form descriptor (informational).

    evaluate_from_upper, when provided, computes the integrand at
    x = upper_ref - delta from the exact offset delta.  Near the upper
    endpoint the abscissa itself rounds onto the endpoint in double
    precision, which destroys log-power factors there; the offset form
    keeps full accuracy for them.
    """

    evaluate: callable
    singular_points: list = field(default_factory=list)
    endpoint_behavior: dict = field(default_factory=dict)
    evaluate_from_upper: callable | None = None
    upper_ref: float | None = None
    # True when a log factor vanishes at the upper endpoint through
    # cancellation (log a + log H = 0 with a != 1): the last-ulp zone is
    # then ill-defined in doubles and must be skipped, not evaluated
    skip_upper_ulp: bool = False


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    evaluations: int


# ---------------------------------------------------------------------------
# tanh-sinh nodes, cached per refinement level
# ---------------------------------------------------------------------------

_MAX_LEVEL = 12
_BASE_H = 1.0
_node_cache: dict = {}


def _make_node(t: float):
    # returns (weight, sigma) where sigma is the distance fraction from
    # the nearer endpoint: x(+t) = b - (b-a) sigma, x(-t) = a + (b-a) sigma
    w = _HALF_PI * math.sinh(t)
    if w > 350.0:
        return None
    e2w = math.exp(-2.0 * w)
    sech2 = 4.0 * e2w / (1.0 + e2w) ** 2
    weight = _HALF_PI * math.cosh(t) * sech2
    sigma = e2w / (1.0 + e2w)
    if sigma < 5e-300 or weight < 5e-300:
        return None
    return weight, sigma


def _level_nodes(level: int):
    """New (t > 0) nodes introduced at this refinement level."""
    if level in _node_cache:
        return _node_cache[level]
    nodes = []
    h = _BASE_H / (2 ** level)
    if level == 0:
        k = 1
        while True:
            node = _make_node(k * h)
            if node is None:
                break
            nodes.append(node)
            k += 1
    else:
        k = 1
        while True:
            node = _make_node(k * h)
            if node is None:
                break
            nodes.append(node)
            k += 2
    _node_cache[level] = nodes
    return nodes


def _eval_point(f, x, weight):
    try:
        y = complex(f(x))
    except (ValueError, OverflowError, ZeroDivisionError):
        y = complex("nan")
    if not (math.isfinite(y.real) and math.isfinite(y.imag)):
        if weight < 1e-120:
            return 0.0 + 0.0j
        raise NonIntegrableSingularity(f"integrand not finite at x={x!r}")
    return y * weight


def _pair_contrib(f, a, b, span, weight, sigma, f_upper=None,
                  skip_upper_ulp=False):
    # nodes within a few ulps of an endpoint are skipped: the abscissa can
    # round onto (or across) an endpoint singularity, and the true
    # contribution there is below the weight-decay floor.  The guard is
    # relative to each endpoint's magnitude, so offsets near 0 keep their
    # full denormal resolution.  When an offset-aware upper evaluator is
    # available the upper side needs no guard at all.
    tiny_a = 4.0 * 2.3e-16 * abs(a) + 5e-300
    tiny_b = 4.0 * 2.3e-16 * abs(b) + 5e-300
    acc = 0.0 + 0.0j
    count = 0
    lo = a + span * sigma
    if lo - a > tiny_a and b - lo > tiny_b:
        acc += _eval_point(f, lo, weight)
        count += 1
    if f_upper is not None:
        delta = span * sigma
        ambiguous = delta <= 4.0 * 2.3e-16 * abs(b)
        if delta > 0 and not (skip_upper_ulp and ambiguous):
            acc += _eval_offset_point(f_upper, delta, weight, ambiguous)
            count += 1
        return acc, count
    hi = b - span * sigma
    if hi - a > tiny_a and b - hi > tiny_b:
        acc += _eval_point(f, hi, weight)
        count += 1
    return acc, count


def _eval_offset_point(f_upper, delta, weight, ambiguous):
    # `ambiguous` marks offsets within a few ulps of the endpoint, where
    # abscissa-based factors can no longer be represented; a failure
    # there is the old skip-guard case, not a genuine singularity
    from .errors import IntegraError

    try:
        y = complex(f_upper(delta))
    except (ValueError, OverflowError, ZeroDivisionError, IntegraError):
        y = complex("nan")
    if not (math.isfinite(y.real) and math.isfinite(y.imag)):
        if ambiguous or weight < 1e-120:
            return 0.0 + 0.0j
        raise NonIntegrableSingularity(f"integrand not finite at offset {delta!r}")
    return y * weight


def _tanh_sinh_piece(f, a, b, policy: AccuracyPolicy, f_upper=None,
                     skip_upper_ulp=False):
    span = b - a
    if span <= 0:
        return 0.0 + 0.0j, 0.0, 0
    evals = 0
    node0 = _make_node(0.0)
    acc = _eval_point(f, a + span * node0[1], node0[0])
    evals += 1
    for weight, sigma in _level_nodes(0):
        d, n = _pair_contrib(f, a, b, span, weight, sigma, f_upper,
                             skip_upper_ulp)
        acc += d
        evals += n
    prev = acc * span * 0.5 * _BASE_H
    prev_prev = None
    for level in range(1, _MAX_LEVEL + 1):
        h = _BASE_H / (2 ** level)
        for weight, sigma in _level_nodes(level):
            d, n = _pair_contrib(f, a, b, span, weight, sigma, f_upper,
                                 skip_upper_ulp)
            acc += d
            evals += n
        cur = acc * span * 0.5 * h
        diff = abs(cur - prev)
        tol = policy.rel_tol * abs(cur) + policy.abs_tol
        if level >= 2 and diff <= tol:
            return cur, max(diff, 1e-16 * abs(cur)), evals
        if prev_prev is not None and abs(cur) > 10.0 * abs(prev) and abs(cur) > 1e6:
            raise NonIntegrableSingularity("level sums diverge; singularity too strong")
        prev_prev, prev = prev, cur
    # level cap: report with the honest last difference
    diff = abs(prev - prev_prev) if prev_prev is not None else abs(prev)
    if diff > max(1e-6 * abs(prev), 1e-8):
        raise NonConvergence(f"tanh-sinh level cap reached, diff={diff:.3g}")
    return prev, diff, evals


def integrate_finite(
    f: IntegrandHandle,
    lower: float,
    upper: float,
    policy: AccuracyPolicy = DEFAULT_POLICY,
) -> QuadratureResult:
    """Integrate f over (lower, upper), splitting at declared singular points."""
    if not lower < upper:
        raise DomainViolation("requires lower < upper")
    cuts = sorted(p for p in f.singular_points if lower < p < upper)
    edges = [lower] + cuts + [upper]
    total = 0.0 + 0.0j
    err = 0.0
    evals = 0
    for a, b in zip(edges, edges[1:]):
        if b - a <= 0:
            continue
        f_upper = None
        if (f.evaluate_from_upper is not None and f.upper_ref is not None
                and b == f.upper_ref):
            f_upper = f.evaluate_from_upper
        v, e, n = _tanh_sinh_piece(f.evaluate, a, b, policy, f_upper,
                                   f.skip_upper_ulp)
        total += v
        err += e
        evals += n
    return QuadratureResult(total, err, evals)


def integrate_with_branch_tracking(
    f: IntegrandHandle,
    lower: float,
    upper: float,
    policy: AccuracyPolicy = DEFAULT_POLICY,
) -> QuadratureResult:
    """Like integrate_finite, for integrands that turn complex at interior
    branch points.

    Each side of a branch point is integrated with the integrand's own
    principal-branch values; the pieces sum to the principal-branch
    complex result.  A branch point at an endpoint leaves a zero-length
    piece, which contributes nothing.
    """
    return integrate_finite(f, lower, upper, policy)


def integrate_semi_infinite_oscillatory(
    f: IntegrandHandle,
    frequency: float,
    policy: AccuracyPolicy = DEFAULT_POLICY,
    max_lobes: int = 64,
) -> QuadratureResult:
    """Integrate f over (0, inf) for an integrand oscillating like
    sin(frequency * x).

    Splits at the oscillation zeros x_n = n pi / frequency and applies
    alternating-series acceleration to the partial-lobe sums.
    """
    if not frequency > 0:
        raise DomainViolation("frequency must be > 0")
    period = math.pi / frequency
    lobe_policy = AccuracyPolicy(
        rel_tol=max(policy.rel_tol, 1e-13),
        abs_tol=max(policy.abs_tol, 1e-16),
        max_terms=policy.max_terms,
        fd_step=policy.fd_step,
    )
    lobes = []
    evals = 0
    for n in range(max_lobes):
        a = n * period
        b = (n + 1) * period
        v, e, cnt = _tanh_sinh_piece(f.evaluate, a, b, lobe_policy)
        lobes.append(v)
        evals += cnt
        if n >= 12 and abs(v) < 1e3 * (abs(sum(lobes)) * 1e-16 + 1e-300):
            break
    if all(abs(v) == 0 for v in lobes):
        return QuadratureResult(0.0 + 0.0j, 0.0, evals)
    value, err = accelerate_alternating(lobes)
    if not math.isfinite(err) or err > 1e-4 * max(1.0, abs(value)):
        raise NonConvergence("oscillatory lobe acceleration stalled")
    return QuadratureResult(value, max(err, 1e-15 * abs(value)), evals)
