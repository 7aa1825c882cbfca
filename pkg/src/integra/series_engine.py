"""Right-hand-side series evaluators for the identity catalog.

Every theorem series here is a termwise application of one kernel,

    integral_0^b x^(mu-1) (-log(a x))^k dx
        = Gamma(1+k, -mu Log(a b)) / (a^mu mu^(k+1)),

to power-series expansions of the remaining integrand factors
(binomials, log(1+c x^e), exp(f x^g), Bessel J, 2F1, Lerch Phi).
Multi-factor series are enumerated by total-degree diagonals so that
alternating cross-cancellation is seen before the tail test.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainViolation, InsufficientTerms, NonConvergence
from .policy import DEFAULT_POLICY, AccuracyPolicy
from .special_functions import (
    EULER_GAMMA,
    binomial_general,
    clog,
    cpow,
    exp_integral_e1,
    gamma,
    pochhammer,
    rgamma,
    upper_incomplete_gamma,
    _aitken_limit,
)

# ---------------------------------------------------------------------------
# parameter records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremMainParams:
    """Parameters of the main theorem integral x^(m-1)(-log(ax))^k/(1+c x^b)."""

    m: complex
    k: complex
    a: complex
    b_exp: complex
    c: complex

    def __post_init__(self):
        if not complex(self.b_exp).real > 0:
            raise DomainViolation("requires Re(b_exp) > 0")
        if not complex(self.m).real > 0:
            raise DomainViolation("requires Re(m) > 0")
        # |Re(c)| = 1 admitted when the series alternates; see module notes
        if abs(complex(self.c).real) > 1.0 + 1e-12:
            raise DomainViolation("requires |Re(c)| <= 1")


@dataclass(frozen=True)
class BinomialFactor:
    """One factor (1 + coeff * x^exponent)^outer_power of an integrand."""

    coeff: complex
    exponent: complex
    outer_power: complex

    def __post_init__(self):
        if complex(self.exponent).real < 0:
            raise DomainViolation("factor exponent needs Re >= 0")


@dataclass(frozen=True)
class GeneralSeriesParams:
    """Product-of-binomials integral over (0, b)."""

    m: complex
    k: complex
    a: complex
    b: complex
    factors: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not complex(self.b).real > 0:
            raise DomainViolation("requires Re(b) > 0")
        if len(self.factors) < 1:
            raise DomainViolation("needs at least one binomial factor")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    tail_estimate: float
    accelerated: bool = False


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------


def log_power_kernel(
    mu: complex,
    k: complex,
    a: complex,
    b_upper: complex,
    policy: AccuracyPolicy = DEFAULT_POLICY,
) -> complex:
    """integral_0^b x^(mu-1) (-log(a x))^k dx on the principal branch."""
    mu = complex(mu)
    if abs(mu) < 1e-12:
        raise DomainViolation("kernel pole: mu crossed 0")
    lab = clog(complex(a) * complex(b_upper))
    if lab == 0:
        return gamma(1.0 + complex(k)) * cpow(a, -mu) * cpow(mu, -(complex(k) + 1.0))
    w = -mu * lab
    return (
        upper_incomplete_gamma(1.0 + complex(k), w, policy)
        * cpow(a, -mu)
        * cpow(mu, -(complex(k) + 1.0))
    )


def nested_log_kernel(
    mu: complex,
    a: complex,
    b_upper: complex,
    policy: AccuracyPolicy = DEFAULT_POLICY,
) -> complex:
    """integral_0^b x^(mu-1) log(-log(a x)) dx.

    The d/dk at k = 0 of the plain kernel; equals
    a^(-mu)/mu * (E1(y) + e^(-y)(Log y - Log mu)) with y = -mu Log(ab),
    and -(euler_gamma + Log mu) * a^(-mu)/mu in the a*b = 1 limit.
    """
    mu = complex(mu)
    if abs(mu) < 1e-12:
        raise DomainViolation("kernel pole: mu crossed 0")
    lab = clog(complex(a) * complex(b_upper))
    pref = cpow(a, -mu) / mu
    if lab == 0:
        return pref * (-(EULER_GAMMA + clog(mu)))
    y = -mu * lab
    return pref * (
        exp_integral_e1(y, policy) + cmath.exp(-y) * (clog(y) - clog(mu))
    )


# ---------------------------------------------------------------------------
# generic summation drivers
# ---------------------------------------------------------------------------


def _finish(acc, terms, last, ratio, accelerated=False):
    r = min(abs(ratio), 0.99) if ratio is not None else 0.5
    tail = abs(last) / (1.0 - r)
    return SeriesResult(acc, terms, tail, accelerated)


def _levin_u(terms, beta=1.0):
    """Levin u-transform of sum(terms); returns (estimate, error_estimate).

    Numerical Recipes triangle with remainder estimates
    omega_n = (beta + n) a_n; handles both alternating and smooth
    power-law tails that stall the plain stop rule.
    """
    numer = []
    denom = []
    s = 0.0 + 0.0j
    estimates = []
    for n, a in enumerate(terms):
        s += a
        omega = (beta + n) * a
        if omega == 0:
            break
        term = 1.0 / (beta + n)
        denom.append(term / omega)
        numer.append(s * denom[n])
        if n > 0:
            ratio = (beta + n - 1.0) * term
            for j in range(1, n + 1):
                fact = (n - j + beta) * term
                numer[n - j] = numer[n - j + 1] - fact * numer[n - j]
                denom[n - j] = denom[n - j + 1] - fact * denom[n - j]
                term *= ratio
        if denom[0] != 0:
            estimates.append(numer[0] / denom[0])
    if len(estimates) < 3:
        return None, float("inf")
    diffs = [abs(estimates[i + 1] - estimates[i]) for i in range(len(estimates) - 1)]
    best_i = min(range(len(diffs)), key=lambda i: diffs[i])
    val = estimates[best_i + 1]
    err = max(diffs[best_i], 20.0 * 1e-16 * abs(val))
    return val, err


def _try_accelerate(terms, head, policy):
    """Levin-accelerate the tail of a stalled series.

    `head` is the partial sum before `terms[0]`.  Tries a window from the
    start and one past the magnitude peak; keeps the lower claimed error.
    """
    # exact-zero terms (gaps in a diagonal pattern) contribute nothing and
    # would break the remainder estimates, so work on the nonzero subsequence
    terms = [t for t in terms if t != 0]
    if len(terms) < 12:
        return None
    peak = max(range(len(terms)), key=lambda i: abs(terms[i]))
    starts = {0, min(peak + 2, max(0, len(terms) - 24))}
    best = None
    for w0 in sorted(starts):
        window = terms[w0:w0 + 64]
        if len(window) < 8:
            continue
        val, err = _levin_u(window)
        if val is None:
            continue
        base = head
        for t in terms[:w0]:
            base += t
        if best is None or err < best[1]:
            best = (base + val, err)
    return best


def _is_alternating(terms):
    if len(terms) < 8:
        return False
    checked = 0
    for t0, t1 in zip(terms[-9:], terms[-8:]):
        if abs(t0) == 0 or abs(t1) == 0:
            return False
        ratio = t1 / t0
        if ratio.real > -1e-12 or abs(ratio) > 1.25:
            return False
        checked += 1
    return checked >= 6


def _power_law_tail(terms):
    """Tail bound |t_J| J / (p - 1) from a fitted local decay exponent."""
    if len(terms) < 16 or abs(terms[-1]) == 0 or abs(terms[-9]) == 0:
        return 0.0
    j1 = float(len(terms))
    j0 = j1 - 8.0
    try:
        p = -math.log(abs(terms[-1]) / abs(terms[-9])) / math.log(j1 / j0)
    except ValueError:
        return 0.0
    if p <= 1.05:
        return float("inf")
    return abs(terms[-1]) * j1 / (p - 1.0)


def _slow_decay_result(acc, terms, ratio, policy):
    # stop rule met but in the near-unit-ratio regime, where the clamped
    # geometric tail formula underestimates; prefer Levin if it improves
    naive = _finish(acc, len(terms), terms[-1], ratio)
    tail = max(naive.tail_estimate, _power_law_tail(terms))
    hit = _try_accelerate(terms, 0.0 + 0.0j, policy)
    if hit is not None:
        val, err = hit
        if err < 0.5 * tail:
            return SeriesResult(val, len(terms), max(err, 5e-16 * abs(val)), True)
    if math.isinf(tail):
        raise NonConvergence("series decays too slowly to bound the tail")
    return SeriesResult(naive.value, naive.terms_used, tail, False)


def sum_series(term_gen, policy: AccuracyPolicy = DEFAULT_POLICY,
               min_terms: int = 4) -> SeriesResult:
    """Sum a term stream with the 3-consecutive-small stop rule.

    When plain summation stalls (slow alternating boundary cases or
    power-law tails), the partial sums are handed to a Levin u-transform
    and its stabilization error becomes the tail estimate.
    """
    acc = 0.0 + 0.0j
    terms = []
    small = 0
    prev = None
    ratio = None
    probes = (140, 620, 2600, 12000)
    probe_i = 0
    exhausted = True
    for j, t in enumerate(term_gen):
        if j >= policy.max_terms:
            exhausted = False
            break
        acc += t
        terms.append(t)
        if prev is not None and abs(prev) > 0:
            ratio = t / prev
        prev = t
        if abs(t) <= policy.rel_tol * abs(acc) + policy.abs_tol:
            small += 1
            if small >= 3 and j + 1 >= min_terms:
                if ratio is not None and abs(ratio) >= 0.97:
                    return _slow_decay_result(acc, terms, ratio, policy)
                return _finish(acc, j + 1, t, ratio)
        else:
            small = 0
        if probe_i < len(probes) and j + 1 == probes[probe_i]:
            probe_i += 1
            hit = _try_accelerate(terms, 0.0 + 0.0j, policy)
            if hit is not None:
                val, err = hit
                if err <= max(1e-10 * abs(val), 1e-13):
                    return SeriesResult(val, len(terms), max(err, 5e-16 * abs(val)), True)
    if not terms:
        return SeriesResult(0.0 + 0.0j, 0, 0.0)
    if exhausted:
        if ratio is not None and abs(ratio) >= 0.97 and len(terms) >= 16:
            return _slow_decay_result(acc, terms, ratio, policy)
        return _finish(acc, len(terms), terms[-1], ratio)
    # max_terms exhausted without the stop rule: acceleration or bust
    hit = _try_accelerate(terms, 0.0 + 0.0j, policy)
    if hit is not None:
        val, err = hit
        if err <= 1e-6 * max(abs(val), 1.0):
            return SeriesResult(val, len(terms), max(err, 5e-16 * abs(val)), True)
    raise NonConvergence("series did not converge within max_terms")


def accelerate_alternating(partial_terms) -> tuple:
    """Iterated-Aitken limit of an alternating series given its terms.

    Returns (limit_estimate, error_estimate); agrees with raw summation
    when the raw sum converges.
    """
    seq = [complex(t) for t in partial_terms]
    if len(seq) < 4:
        raise InsufficientTerms("need at least 4 terms")
    if all(t == 0 for t in seq):
        return 0.0 + 0.0j, 0.0
    partials = []
    acc = 0.0 + 0.0j
    for t in seq:
        acc += t
        partials.append(acc)
    best, err = _aitken_limit(partials)
    return best, err


# ---------------------------------------------------------------------------
# factor expansion streams
# ---------------------------------------------------------------------------


class _Stream:
    """Lazy coefficient list c_j with power step e (factor = sum c_j x^(e j))."""

    def __init__(self, step, start=0, finite=None):
        self.step = complex(step)
        self.start = start
        self.finite = finite  # max index, inclusive, or None
        self._coeffs = []

    def coefficient(self, j):
        if self.finite is not None and j > self.finite:
            return 0.0 + 0.0j
        while len(self._coeffs) <= j - self.start:
            self._coeffs.append(self._compute(len(self._coeffs) + self.start))
        if j < self.start:
            return 0.0 + 0.0j
        return self._coeffs[j - self.start]

    def _compute(self, j):  # pragma: no cover - abstract
        raise NotImplementedError


class BinomStream(_Stream):
    def __init__(self, coeff, exponent, outer):
        outer_c = complex(outer)
        finite = None
        if outer_c.imag == 0 and outer_c.real >= 0 and outer_c.real == int(outer_c.real):
            finite = int(outer_c.real)
        super().__init__(exponent, 0, finite)
        self.coeff = complex(coeff)
        self.outer = outer_c

    def _compute(self, j):
        if j == 0:
            return 1.0 + 0.0j
        return self._coeffs[j - 1] * (self.outer - j + 1.0) / j * self.coeff


class Log1pStream(_Stream):
    def __init__(self, coeff, exponent):
        super().__init__(exponent, 1)
        self.coeff = complex(coeff)

    def _compute(self, j):
        if j == 1:
            return self.coeff
        return self._coeffs[j - 2] * (-self.coeff) * (j - 1.0) / j


class ExpStream(_Stream):
    def __init__(self, coeff, exponent):
        super().__init__(exponent, 0)
        self.coeff = complex(coeff)

    def _compute(self, j):
        if j == 0:
            return 1.0 + 0.0j
        return self._coeffs[j - 1] * self.coeff / j


class BesselStream(_Stream):
    """J_v(scale * x) = sum_j c_j x^(2j + v); the x^v offset is reported
    separately through power_offset."""

    def __init__(self, v, scale):
        super().__init__(2.0, 0)
        self.v = complex(v)
        self.scale = complex(scale)
        self.power_offset = self.v

    def _compute(self, j):
        half = self.scale / 2.0
        if j == 0:
            return cpow(half, self.v) * rgamma(self.v + 1.0)
        prev = self._coeffs[j - 1]
        if prev == 0:
            return (
                ((-1.0) ** j)
                * cpow(half, 2.0 * j + self.v)
                * rgamma(self.v + j + 1.0)
                / math.factorial(j)
            )
        return prev * (-half * half) / (j * (self.v + j))


class BesselProductStream(_Stream):
    """J_v(s x) J_mu(s x) expanded as a single power series in x."""

    def __init__(self, v, mu, scale):
        super().__init__(2.0, 0)
        self.v = complex(v)
        self.mu = complex(mu)
        self.scale = complex(scale)
        self.power_offset = self.v + self.mu

    def _compute(self, j):
        half = self.scale / 2.0
        if j == 0:
            return (
                cpow(half, self.v + self.mu)
                * rgamma(1.0 + self.v)
                * rgamma(1.0 + self.mu)
            )
        prev = self._coeffs[j - 1]
        if prev == 0:
            return (
                ((-1.0) ** j)
                * cpow(half, 2.0 * j + self.v + self.mu)
                * pochhammer(1.0 + j + self.v + self.mu, j)
                * rgamma(1.0 + j + self.v)
                * rgamma(1.0 + j + self.mu)
                / math.factorial(j)
            )
        vm = self.v + self.mu
        return (
            prev
            * (-half * half)
            * (2.0 * j + vm)
            * (2.0 * j - 1.0 + vm)
            / ((j + vm) * (j + self.v) * (j + self.mu) * j)
        )


class Hyp2F1Stream(_Stream):
    def __init__(self, alpha, beta, gamma_p, scale):
        super().__init__(1.0, 0)
        self.alpha = complex(alpha)
        self.beta = complex(beta)
        self.gamma_p = complex(gamma_p)
        self.scale = complex(scale)
        self._running = 1.0 + 0.0j

    def _compute(self, j):
        if j == 0:
            return 1.0 + 0.0j
        prev = self.coefficient(j - 1)
        n = j - 1.0
        return (
            prev
            * (self.alpha + n)
            * (self.beta + n)
            / ((self.gamma_p + n) * (n + 1.0))
            * self.scale
        )


class LerchStream(_Stream):
    """Phi(x, s, v) = sum_l x^l / (l+v)^s."""

    def __init__(self, s, v):
        super().__init__(1.0, 0)
        self.s = complex(s)
        self.v = complex(v)

    def _compute(self, j):
        return cpow(j + self.v, -self.s)


def _power_offset(stream):
    return getattr(stream, "power_offset", 0.0 + 0.0j)


# ---------------------------------------------------------------------------
# product-series evaluation (single and multi index)
# ---------------------------------------------------------------------------


def _eval_single_stream(mu0, k, a, b, stream, policy, kernel):
    def gen():
        j = stream.start
        while True:
            c = stream.coefficient(j)
            if stream.finite is not None and j > stream.finite:
                return
            yield c * kernel(mu0 + stream.step * j, k, a, b, policy) if c != 0 else 0.0 + 0.0j
            j += 1

    if stream.finite is not None:
        acc = 0.0 + 0.0j
        count = 0
        for j in range(stream.start, stream.finite + 1):
            c = stream.coefficient(j)
            if c != 0:
                acc += c * kernel(mu0 + stream.step * j, k, a, b, policy)
            count += 1
        return SeriesResult(acc, count, 0.0)
    return sum_series(gen(), policy)


def _eval_diagonals(mu0, k, a, b, streams, policy, kernel):
    nfac = len(streams)
    starts = [s.start for s in streams]

    def compositions(total):
        # all index tuples with sum(j_i - start_i) == total
        def rec(i, remaining):
            if i == nfac - 1:
                yield (remaining + starts[i],)
                return
            for v in range(remaining + 1):
                for rest in rec(i + 1, remaining - v):
                    yield (v + starts[i],) + rest

        return rec(0, total)

    def diag_sum(total):
        acc = 0.0 + 0.0j
        for idx in compositions(total):
            coeff = 1.0 + 0.0j
            mu = mu0
            dead = False
            for s, j in zip(streams, idx):
                if s.finite is not None and j > s.finite:
                    dead = True
                    break
                c = s.coefficient(j)
                if c == 0:
                    dead = True
                    break
                coeff *= c
                mu = mu + s.step * j
            if dead:
                continue
            acc += coeff * kernel(mu, k, a, b, policy)
        return acc

    all_finite = all(s.finite is not None for s in streams)
    if all_finite:
        cap = sum(s.finite - s.start for s in streams)
        acc = 0.0 + 0.0j
        for total in range(cap + 1):
            acc += diag_sum(total)
        return SeriesResult(acc, cap + 1, 0.0)

    def gen():
        # budget counts kernel evaluations, which grow ~ total^(n-1)
        budget = 600_000
        spent = 0
        total = 0
        while True:
            if spent > budget:
                raise NonConvergence("diagonal enumeration budget exhausted")
            yield diag_sum(total)
            spent += total + 1
            total += 1

    res = sum_series(gen(), policy, min_terms=6)
    return res


def eval_product_series(mu0, k, a, b, streams, policy=DEFAULT_POLICY,
                        kernel=log_power_kernel) -> SeriesResult:
    """Sum kernel(mu0 + sum_i e_i j_i) over the product of factor streams."""
    offset = sum((_power_offset(s) for s in streams), 0.0 + 0.0j)
    mu0 = complex(mu0) + offset
    min_mu = mu0 + sum((s.step * s.start for s in streams), 0.0 + 0.0j)
    if complex(min_mu).real <= 0:
        raise DomainViolation("non-integrable endpoint: Re(mu) <= 0")
    if len(streams) == 1:
        return _eval_single_stream(mu0, k, a, b, streams[0], policy, kernel)
    return _eval_diagonals(mu0, k, a, b, streams, policy, kernel)


# ---------------------------------------------------------------------------
# theorem evaluators
# ---------------------------------------------------------------------------


def eval_theorem_main(p: TheoremMainParams,
                      policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^1 t^(m-1)(-log(a t))^k / (1 + c t^b) dt."""
    if complex(p.a) == 0:
        raise DomainViolation("a must be nonzero")
    stream = BinomStream(p.c, p.b_exp, -1.0)
    return eval_product_series(p.m, p.k, p.a, 1.0, [stream], policy)


def eval_polynomial_theorem(m, b_coeff, n: int, k, a,
                            policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Finite series of integral_0^1 x^m (1+b x)^n (-log(a x))^k dx."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainViolation("n must be a positive integer")
    stream = BinomStream(b_coeff, 1.0, float(n))
    return eval_product_series(complex(m) + 1.0, k, a, 1.0, [stream], policy)


def eval_finite_interval(m, k, a, b_upper, c_exp, z, d,
                         policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b x^m (1 + z x^c)^(-d) (-log(a x))^k dx.

    The derivation assumes |Re(m)| < 1, but the termwise identity holds
    whenever both sides converge (Re(m) > -1); the wider range is what
    the catalog's Beta-family entries use.
    """
    if complex(m).real <= -1.0:
        raise DomainViolation("requires Re(m) > -1")
    _guard_factor_convergence(z, c_exp, b_upper)
    stream = BinomStream(z, c_exp, -complex(d))
    return eval_product_series(complex(m) + 1.0, k, a, b_upper, [stream], policy)


def eval_general_binomial(p: GeneralSeriesParams,
                          policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Multi-binomial series over (0, b); n factors, diagonal enumeration."""
    streams = []
    for f in p.factors:
        _guard_factor_convergence(f.coeff, f.exponent, p.b)
        streams.append(BinomStream(f.coeff, f.exponent, f.outer_power))
    return eval_product_series(complex(p.m) + 1.0, p.k, p.a, p.b, streams, policy)


def eval_log_binomial_family(m, k, a, b_exp, c,
                             policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^1 x^(m-1) (-log(a x))^k log(1 + c x^b) dx."""
    if abs(complex(c).real) > 1.0 + 1e-12:
        raise DomainViolation("requires |Re(c)| <= 1")
    if not complex(b_exp).real > 0:
        raise DomainViolation("requires Re(b_exp) > 0")
    stream = Log1pStream(c, b_exp)
    return eval_product_series(m, k, a, 1.0, [stream], policy)


def eval_bessel_theorem(m, b_coeff, n: int, v, z_arg, k, a,
                        policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^1 x^m (1+b x)^n J_v(z x) (-log(a x))^k dx."""
    if not (isinstance(n, int) and n >= 0):
        raise DomainViolation("n must be a non-negative integer")
    if (complex(m) + complex(v)).real <= -1.0:
        raise DomainViolation("requires Re(m + v) > -1")
    streams = [BesselStream(v, z_arg)]
    if n > 0:
        streams.append(BinomStream(b_coeff, 1.0, float(n)))
    return eval_product_series(complex(m) + 1.0, k, a, 1.0, streams, policy)


def eval_bessel_product_theorem(m, b_coeff, n: int, v, mu, z_arg, k, a,
                                policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^1 x^m (1+b x)^n J_v(z x) J_mu(z x) (-log(a x))^k dx."""
    if not (isinstance(n, int) and n >= 0):
        raise DomainViolation("n must be a non-negative integer")
    streams = [BesselProductStream(v, mu, z_arg)]
    if n > 0:
        streams.append(BinomStream(b_coeff, 1.0, float(n)))
    return eval_product_series(complex(m) + 1.0, k, a, 1.0, streams, policy)


def eval_exp_binomial_2f1_theorem(m, b_coeff, n: int, s_exp, alpha, beta, gamma_p,
                                  z, k, a,
                                  policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^1 e^(s x) x^m (1+b x)^n 2F1(alpha,beta;gamma;z x)
    (-log(a x))^k dx."""
    if not complex(gamma_p).real > 1.0:
        raise DomainViolation("requires Re(gamma) > 1")
    if not (isinstance(n, int) and n >= 0):
        raise DomainViolation("n must be a non-negative integer")
    streams = [ExpStream(s_exp, 1.0), Hyp2F1Stream(alpha, beta, gamma_p, z)]
    if n > 0:
        streams.append(BinomStream(b_coeff, 1.0, float(n)))
    return eval_product_series(complex(m) + 1.0, k, a, 1.0, streams, policy)


def eval_lerch_integral_theorem(m, s, v, k, a, b_upper,
                                policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b x^m Phi(x, s, v) (-log(a x))^k dx."""
    if not complex(v).real > 0:
        raise DomainViolation("requires Re(v) > 0")
    if complex(m).real <= -1.0:
        raise DomainViolation("requires Re(m) > -1")
    if abs(complex(a) * complex(b_upper) - 1.0) < 1e-12:
        if (complex(k) + complex(s)).real <= 1e-9:
            raise DomainViolation("divergent series: Re(k + s) <= 0 at a b = 1")
    stream = LerchStream(s, v)
    return eval_product_series(complex(m) + 1.0, k, a, b_upper, [stream], policy)


def eval_hypergeometric_integral_theorem(m, alpha, beta, gamma_p, k, a, b_upper,
                                         policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b x^m 2F1(alpha,beta;gamma;x) (-log(a x))^k dx."""
    mm = complex(m)
    if not (0 < mm.real < 1):
        raise DomainViolation("requires 0 < Re(m) < 1")
    for name, val in (("alpha", alpha), ("beta", beta), ("gamma", gamma_p)):
        if not complex(val).real > 0:
            raise DomainViolation(f"requires Re({name}) > 0")
    stream = Hyp2F1Stream(alpha, beta, gamma_p, 1.0)
    return eval_product_series(mm + 1.0, k, a, b_upper, [stream], policy)


def _bessel_log_kernel_factory(a, b_upper):
    # kernel for the (-log(a x^2))^k weight: substitute u = x^2
    def kern(mu, k, a_, b_, policy):
        lab = clog(complex(a) * complex(b_upper) ** 2)
        if abs(mu) < 1e-12:
            raise DomainViolation("kernel pole: mu crossed 0")
        if lab == 0:
            return 0.5 * gamma(1.0 + complex(k)) * cpow(a, -mu) * cpow(mu, -(complex(k) + 1.0))
        w = -mu * lab
        return 0.5 * upper_incomplete_gamma(1.0 + complex(k), w, policy) * cpow(a, -mu) * cpow(mu, -(complex(k) + 1.0))

    return kern


def eval_bessel_log_theorem(m, v, k, a, b_upper,
                            policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b x^(2m+v) J_v(x) (-log(a x^2))^k dx.

    Expanding J_v termwise gives half-integer kernel arguments
    mu_j = 1/2 + j + m + v under the u = x^2 substitution.
    """
    mm = complex(m)
    vv = complex(v)
    mu0 = 0.5 + mm + vv
    if not mu0.real > 0:
        raise DomainViolation("requires Re(2m + v + 1) > 0")

    kern = _bessel_log_kernel_factory(a, b_upper)

    def gen():
        j = 0
        while True:
            c = ((-1.0) ** j) * cpow(2.0, -2.0 * j - vv) * rgamma(1.0 + j + vv) / math.factorial(j)
            yield c * kern(mu0 + j, k, None, None, policy)
            j += 1

    return sum_series(gen(), policy)


def eval_bessel_power_theorem(m, v, alpha, k, a, b_upper,
                              policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b x^(m-1) J_v(alpha x) (-log(a x))^k dx."""
    if not (complex(alpha) + complex(v) + 1.0).real > 0:
        raise DomainViolation("requires Re(alpha + v + 1) > 0")
    if not (complex(m) + complex(v)).real > 0:
        raise DomainViolation("non-integrable endpoint: Re(m + v) <= 0")
    stream = BesselStream(v, alpha)
    return eval_product_series(m, k, a, b_upper, [stream], policy)


def eval_bessel_exp_theorem(m, v, alpha, f, g, c, p_exp, d, k, a, b_upper,
                            policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b e^(f x^g) x^m (1+c x^p)^d J_v(alpha x)
    (-log(a x))^k dx."""
    if not complex(g).real > 0:
        raise DomainViolation("requires Re(g) > 0")
    streams = [BesselStream(v, alpha)]
    if f != 0:
        streams.append(ExpStream(f, g))
    if c != 0 and d != 0:
        _guard_factor_convergence(c, p_exp, b_upper)
        streams.append(BinomStream(c, p_exp, d))
    return eval_product_series(complex(m) + 1.0, k, a, b_upper, streams, policy)


def _nested_log_streams(factors):
    streams = []
    for fct in factors:
        if isinstance(fct, BinomialFactor):
            streams.append(BinomStream(fct.coeff, fct.exponent, fct.outer_power))
        else:
            kind, coeff, expo = fct
            if kind != "log1p":
                raise DomainViolation(f"unknown nested-log factor {kind!r}")
            streams.append(Log1pStream(coeff, expo))
    if not streams:
        streams = [BinomStream(0.0, 1.0, 0.0)]
    return streams


def eval_nested_log_binomial(m, a, b_upper, factors,
                             policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^b x^m log(-log(a x)) * prod factors dx.

    The post-limit (d/dk at k=0) tier used by the log(log(1/(ax)))
    catalog entries.  `factors` mixes BinomialFactor records and
    ('log1p', coeff, exponent) tuples.

    Tries the exact termwise kernel first; if that sum carries log-weighted
    tails the acceleration cannot bound, it recomputes as the Richardson
    k-derivative of the plain-kernel sum at k = 0, whose terms are pure
    power laws.
    """
    streams = _nested_log_streams(factors)
    mu0 = complex(m) + 1.0

    def kern(mu, k, a_, b_, pol):
        return nested_log_kernel(mu, a, b_upper, pol)

    # the exact termwise kernel is trustworthy only where the factor
    # series decay geometrically; |coeff b^e| near 1 goes straight to
    # the k-derivative route, whose terms are pure power laws
    boundary = any(
        s.finite is None
        and abs(getattr(s, "coeff", 0.0)) * abs(cpow(complex(b_upper), s.step)) > 0.999
        for s in streams
    )
    if not boundary:
        capped = AccuracyPolicy(rel_tol=policy.rel_tol, abs_tol=policy.abs_tol,
                                max_terms=min(policy.max_terms, 1200),
                                fd_step=policy.fd_step)
        try:
            res = eval_product_series(mu0, None, a, b_upper, streams, capped,
                                      kernel=kern)
            if not res.accelerated or res.tail_estimate <= 1e-12 * abs(res.value):
                return res
        except NonConvergence:
            pass

    # fallback: d/dk at 0 of the plain series, two Richardson levels
    def plain(kk):
        fresh = _nested_log_streams(factors)
        return eval_product_series(mu0, kk, a, b_upper, fresh, policy).value

    h = 5e-3
    terms_used = 0

    def d(hh):
        return (plain(hh) - plain(-hh)) / (2.0 * hh)

    d1, d2, d3 = d(h), d(h / 2.0), d(h / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    val = (16.0 * r2 - r1) / 15.0
    err = max(3.0 * abs(r2 - r1) / 15.0, 1e-10 * abs(val))
    return SeriesResult(val, terms_used, err, True)


def _guard_factor_convergence(coeff, exponent, b_upper):
    scale = abs(complex(coeff)) * abs(cpow(complex(b_upper), complex(exponent)))
    if scale > 1.0 + 1e-9:
        raise DomainViolation(
            f"factor series diverges on (0, b): |coeff * b^exp| = {scale:.3g} > 1"
        )


# ---------------------------------------------------------------------------
# small custom series printed by the source identities
# ---------------------------------------------------------------------------


def sum_binom_log_ratio(coeff, outer, p, q,
                        policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """sum_j binom(outer, j) coeff^j log((j+p)/(j+q))."""

    def gen():
        j = 0
        while True:
            yield (
                binomial_general(outer, j)
                * cpow(coeff, j)
                * cmath.log((j + complex(p)) / (j + complex(q)))
            )
            j += 1

    return sum_series(gen(), policy)


def sum_finite_alt_log(n: int, p) -> SeriesResult:
    """sum_{j=0..n} (-1)^(j-n) binom(n, j) log(1 + j p)."""
    acc = 0.0 + 0.0j
    for j in range(n + 1):
        acc += ((-1.0) ** (j - n)) * math.comb(n, j) * cmath.log(1.0 + j * complex(p))
    return SeriesResult(acc, n + 1, 0.0)


def sum_alternating_log_shift(u, policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """sum_{n>=0} (-1)^(n+1) log(1 + 1/(n+u)), Aitken accelerated."""
    terms = [((-1.0) ** (n + 1)) * cmath.log(1.0 + 1.0 / (n + complex(u)))
             for n in range(400)]
    value, err = accelerate_alternating(terms)
    return SeriesResult(value, len(terms), err, True)


def sum_sin_ratio(t, policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """2 csc(t) sum_{k>=1} sin(k t)/(2k - 1) via accelerated partial sums."""
    tt = complex(t)
    partials = []
    acc = 0.0 + 0.0j
    w = cmath.exp(1j * tt)
    wp = 1.0 + 0.0j
    for kk in range(1, 700):
        wp *= w
        acc += wp / (2.0 * kk - 1.0)
        partials.append(acc)
    best, err = _aitken_limit(partials[-256:])
    value = 2.0 / cmath.sin(tt) * complex(best.imag if tt.imag == 0 else (best - best.conjugate()).real / 2.0, 0.0)
    if tt.imag == 0:
        value = 2.0 / cmath.sin(tt) * best.imag
    return SeriesResult(complex(value), len(partials), abs(err), True)


def _poly_log_over_linear(M, a, n, policy):
    """integral_0^1 x^(M-1) log^n(x) / (a + log x) dx, exact decomposition.

    log^n = ((a+log) - a)^n splits into polynomial-in-log pieces plus a
    (-a)^n residue on 1/(a+log x) = -e^(-aM) E1(-aM) / ... term.
    """
    total = 0.0 + 0.0j
    for i in range(n):
        pexp = n - i - 1
        inner = 0.0 + 0.0j
        for r in range(pexp + 1):
            inner += (
                math.comb(pexp, r)
                * cpow(a, pexp - r)
                * ((-1.0) ** r)
                * math.factorial(r)
                * cpow(M, -(r + 1.0))
            )
        total += math.comb(n, i) * cpow(-a, i) * inner
    total += cpow(-a, n) * (-cmath.exp(-a * M) * exp_integral_e1(-a * M, policy))
    return total


def sum_bdh_table129(n: int, c, b, m, q,
                     policy: AccuracyPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Series of integral_0^1 x^m log^n(x) / ((1+c x^b)(q^2+log^2 x)) dx.

    Partial fractions over (log x - iq)(log x + iq) reduce each j-term to
    exponential-integral evaluations at +-iq(1 + b j + m).
    """
    qq = complex(q)

    def gen():
        j = 0
        while True:
            M = 1.0 + complex(b) * j + complex(m)
            tj = (
                _poly_log_over_linear(M, -1j * qq, n, policy)
                - _poly_log_over_linear(M, 1j * qq, n, policy)
            ) / (2j * qq)
            yield ((-1.0) ** j) * cpow(c, j) * tj
            j += 1

    return sum_series(gen(), policy)
