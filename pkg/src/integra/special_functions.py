"""Complex-valued special functions in IEEE double precision.

Every function takes and returns Python ``complex`` scalars (the engine's
universal ComplexValue) and uses the principal branch, Arg in (-pi, pi],
for all logarithms and powers.  Accuracy is controlled by an
:class:`~integra.policy.AccuracyPolicy`; all routines are pure.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .errors import (
    DomainOutsideUnitDisk,
    DomainViolation,
    LowerParameterPole,
    NonConvergence,
    PoleAtNonpositiveInteger,
    PoleAtOrigin,
    PoleAtSOne,
    UnsupportedDomain,
)
from .policy import DEFAULT_POLICY, AccuracyPolicy

EULER_GAMMA = 0.5772156649015328606065121
PI = math.pi

# Bernoulli numbers B_2 .. B_30 (even index only).
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
)

# Lanczos approximation, g = 607/128, 15 coefficients (~15 digits).
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def clog(z: complex) -> complex:
    """Principal log with Arg in (-pi, pi].

    Arithmetic like -(x + 0j) leaves a negative-zero imaginary part,
    which cmath.log would send to the Arg = -pi side; canonicalize
    exact-zero imaginary parts to +0.0 first.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.log(z)


def cpow(base: complex, expo: complex) -> complex:
    """Principal-branch power base**expo with a 0**e convention.

    0**0 = 1; 0**e = 0 for Re(e) > 0; otherwise a DomainViolation.
    """
    base = complex(base)
    expo = complex(expo)
    if base == 0:
        if expo == 0:
            return 1.0 + 0.0j
        if expo.real > 0:
            return 0.0 + 0.0j
        raise DomainViolation("0 raised to a power with non-positive real part")
    if expo == 0:
        return 1.0 + 0.0j
    if expo.imag == 0 and expo.real == int(expo.real) and abs(expo.real) <= 64:
        # exact small integer powers avoid log round-off
        n = int(expo.real)
        result = 1.0 + 0.0j
        b = base if n > 0 else 1.0 / base
        for _ in range(abs(n)):
            result *= b
        return result
    return cmath.exp(expo * clog(base))


def _near_nonpositive_int(z: complex, tol: float = 1e-12) -> bool:
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _int_or_none(z: complex, tol: float = 1e-12):
    if abs(z.imag) > tol:
        return None
    r = round(z.real)
    if abs(z.real - r) <= tol:
        return int(r)
    return None


@lru_cache(maxsize=8192)
def gamma(z: complex) -> complex:
    """Gamma function via Lanczos, reflection for Re(z) < 0.5."""
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleAtNonpositiveInteger(f"gamma pole at z={z}")
    if z.real < 0.5:
        return PI / (cmath.sin(PI * z) * gamma(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * PI) * cpow(t, zz + 0.5) * cmath.exp(-t) * acc


def rgamma(z: complex) -> complex:
    """Reciprocal gamma; returns 0 at the poles instead of raising."""
    if _near_nonpositive_int(z):
        return 0.0 + 0.0j
    return 1.0 / gamma(z)


@lru_cache(maxsize=8192)
def log_gamma(z: complex) -> complex:
    """Canonical log-gamma: analytic off (-inf, 0], exp(log_gamma) = Gamma.

    Satisfies log_gamma(z) = log_gamma(z+1) - Log z exactly, which keeps
    the branch continuous along rays that avoid the poles.
    """
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleAtNonpositiveInteger(f"log_gamma pole at z={z}")
    shift = 0.0 + 0.0j
    while z.real < 0.5:
        shift -= clog(z)
        z = z + 1.0
    zz = z - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return (
        0.5 * math.log(2.0 * PI)
        + (zz + 0.5) * cmath.log(t)
        - t
        + cmath.log(acc)
        + shift
    )


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial (a)_n as an explicit product; exact at poles."""
    if n < 0:
        raise DomainViolation("pochhammer needs n >= 0")
    result = 1.0 + 0.0j
    a = complex(a)
    for i in range(n):
        result *= a + i
    return result


def binomial_general(alpha: complex, j: int) -> complex:
    """Generalized binomial coefficient prod_{i<j} (alpha-i)/(i+1)."""
    if j < 0:
        raise DomainViolation("binomial_general needs j >= 0")
    result = 1.0 + 0.0j
    alpha = complex(alpha)
    for i in range(j):
        result *= (alpha - i) / (i + 1.0)
    return result


# ---------------------------------------------------------------------------
# exponential integrals and incomplete gamma
# ---------------------------------------------------------------------------


def _e1_log_series(z: complex, policy: AccuracyPolicy) -> complex:
    # E1(z) = -gamma - Log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
    acc = -EULER_GAMMA - clog(z)
    term = 1.0 + 0.0j
    for k in range(1, policy.max_terms + 1):
        term *= -z / k
        piece = -term / k
        acc += piece
        if abs(piece) <= 1e-3 * (policy.rel_tol * abs(acc) + policy.abs_tol) and k > 4:
            return acc
    raise NonConvergence("E1 log series did not converge")


def _uigamma_cf(s: complex, z: complex, policy: AccuracyPolicy) -> complex:
    # Lentz continued fraction for Gamma(s, z); good away from the cut.
    tiny = 1e-300
    b = z + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / (b if b != 0 else tiny)
    h = d
    for i in range(1, policy.max_terms):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if d == 0:
            d = tiny
        c = b + an / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return cmath.exp(-z) * cpow(z, s) * h
    raise NonConvergence("incomplete gamma continued fraction stalled")


def _ligamma_kummer(s: complex, z: complex, policy: AccuracyPolicy,
                    extra_phase: float = 0.0) -> complex:
    # gamma(s, z) = z^s e^{-z} sum_k z^k / (s (s+1) ... (s+k));
    # extra_phase adds 2 pi m to arg(z) inside the z^s prefactor only,
    # which is how the function continues across the branch cut.
    term = 1.0 / s
    acc = term
    # the extra 1e-3 guards against cancellation when the caller forms
    # Gamma(s) - gamma(s, z) with gamma close to Gamma
    tol_scale = 1e-3
    for k in range(1, policy.max_terms):
        term *= z / (s + k)
        acc += term
        if abs(term) <= tol_scale * (policy.rel_tol * abs(acc) + policy.abs_tol) and k > 4:
            break
    else:
        raise NonConvergence("lower incomplete gamma series did not converge")
    prefactor = cpow(z, s) * cmath.exp(-z)
    if extra_phase:
        prefactor *= cmath.exp(1j * extra_phase * s)
    return prefactor * acc


def upper_incomplete_gamma(
    s: complex, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Upper incomplete gamma Gamma(s, z) on the principal branch.

    Algorithm regions: exact finite sum for small positive integer s,
    E_n route for non-positive integer s, Kummer series + subtraction
    for small |z|, Lentz continued fraction for large |z| away from the
    negative real axis, and the stable all-one-sign log series for E1
    on and near the cut.
    """
    s = complex(s)
    z = complex(z)
    if z == 0:
        if s.real > 0:
            return gamma(s)
        raise PoleAtOrigin("Gamma(s, 0) diverges for Re(s) <= 0")
    n = _int_or_none(s)
    if n is not None and 1 <= n <= 64:
        # Gamma(n, z) = (n-1)! e^{-z} sum_{k<n} z^k / k!
        acc = 0.0 + 0.0j
        term = 1.0 + 0.0j
        for k in range(n):
            if k > 0:
                term *= z / k
            acc += term
        return math.factorial(n - 1) * cmath.exp(-z) * acc
    if n is not None and n <= 0:
        # walk down from Gamma(0, z) = E1(z)
        val = exp_integral_e1(z, policy)
        si = 0.0 + 0.0j
        for _ in range(-n):
            val = (val - cpow(z, si - 1.0) * cmath.exp(-z)) / (si - 1.0)
            si -= 1.0
        return val
    if abs(z) >= max(4.0, abs(s) + 2.0) and abs(cmath.phase(z)) <= 2.5:
        return _uigamma_cf(s, z, policy)
    if s.real <= 0.25:
        m = int(math.ceil(0.5 - s.real)) + 1
        val = upper_incomplete_gamma(s + m, z, policy)
        si = s + m
        for _ in range(m):
            val = (val - cpow(z, si - 1.0) * cmath.exp(-z)) / (si - 1.0)
            si -= 1.0
        return val
    return gamma(s) - _ligamma_kummer(s, z, policy)


def lower_incomplete_gamma(
    s: complex, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Lower incomplete gamma gamma(s, z); complement of the upper one."""
    s = complex(s)
    z = complex(z)
    if _near_nonpositive_int(s):
        raise PoleAtNonpositiveInteger(f"gamma(s, z) pole at s={s}")
    if z == 0:
        return 0.0 + 0.0j
    if abs(z) < max(4.0, abs(s) + 2.0) and s.real > 0.25:
        return _ligamma_kummer(s, z, policy)
    return gamma(s) - upper_incomplete_gamma(s, z, policy)


def upper_incomplete_gamma_winding(
    s: complex, z: complex, m: int, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Branch-tracked Gamma(s, z e^{2 pi i m}).

    The winding is carried in the z^s prefactor of the Kummer series,
    i.e. the series is evaluated with arg(z) + 2 pi m.
    """
    s = complex(s)
    z = complex(z)
    if z == 0:
        raise PoleAtOrigin("winding undefined at z = 0")
    return gamma(s) - _ligamma_kummer(s, z, policy, extra_phase=2.0 * PI * m)


def exp_integral_e1(z: complex, policy: AccuracyPolicy = DEFAULT_POLICY) -> complex:
    """E_1(z) = Gamma(0, z), principal branch (cut along (-inf, 0))."""
    z = complex(z)
    if z == 0:
        raise PoleAtOrigin("E1 pole at z = 0")
    if abs(z) <= 4.0 or abs(cmath.phase(z)) > 2.5:
        return _e1_log_series(z, policy)
    return _uigamma_cf(0.0 + 0.0j, z, policy)


def exp_integral_en(
    n: complex, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Generalized exponential integral E_n(z) = z^{n-1} Gamma(1-n, z)."""
    n = complex(n)
    z = complex(z)
    if z == 0:
        raise PoleAtOrigin("E_n pole at z = 0")
    ni = _int_or_none(n)
    if ni is not None and ni >= 0:
        if ni == 0:
            return cmath.exp(-z) / z
        val = exp_integral_e1(z, policy)
        for k in range(1, ni):
            val = (cmath.exp(-z) - z * val) / k
        return val
    return cpow(z, n - 1.0) * upper_incomplete_gamma(1.0 - n, z, policy)


def exp_integral_ei(x: float, policy: AccuracyPolicy = DEFAULT_POLICY) -> complex:
    """Ei(x) for real x > 0, via the all-positive-terms power series.

    Related to the principal branch by E1(-x) = -Ei(x) - i pi.
    """
    if not (x > 0):
        raise UnsupportedDomain("Ei implemented for real x > 0 only")
    acc = EULER_GAMMA + math.log(x)
    term = 1.0
    for k in range(1, policy.max_terms):
        term *= x / k
        piece = term / k
        acc += piece
        if piece <= policy.rel_tol * abs(acc) and k > 4:
            return complex(acc)
    raise NonConvergence("Ei series did not converge")


# ---------------------------------------------------------------------------
# Hurwitz zeta, Lerch Phi, polylogarithm
# ---------------------------------------------------------------------------


def _hurwitz_core(s: complex, a: complex, policy: AccuracyPolicy,
                  subtract_pole: bool) -> complex:
    """Euler-Maclaurin evaluation of zeta(s, a), optionally minus 1/(s-1)."""
    nshift = max(0, int(math.ceil(12.0 - a.real)), int(math.ceil(1.5 * abs(s.imag))))
    for _attempt in range(3):
        aN = a + nshift
        acc = 0.0 + 0.0j
        for k in range(nshift):
            acc += cpow(a + k, -s)
        log_aN = cmath.log(aN)
        if subtract_pole:
            # ((a+N)^{1-s} - 1) / (s - 1), stable near s = 1
            w = (1.0 - s) * log_aN
            if abs(w) < 1e-4:
                phi = 1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0
            else:
                phi = (cmath.exp(w) - 1.0) / w
            acc += -log_aN * phi
        else:
            acc += cpow(aN, 1.0 - s) / (s - 1.0)
        acc += 0.5 * cpow(aN, -s)
        powfac = cpow(aN, -s - 1.0)
        poch = s
        ok = False
        for r, b2r in enumerate(_BERNOULLI, start=1):
            term = b2r / math.factorial(2 * r) * poch * powfac
            acc += term
            if abs(term) <= policy.rel_tol * abs(acc) + policy.abs_tol:
                ok = True
                break
            poch *= (s + 2 * r - 1) * (s + 2 * r)
            powfac /= aN * aN
        if ok:
            return acc
        nshift = max(2 * nshift, nshift + 8)
    raise NonConvergence("Euler-Maclaurin tail did not converge")


def hurwitz_zeta(
    s: complex, a: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Hurwitz zeta zeta(s, a) for Re(a) > 0, any complex s != 1."""
    s = complex(s)
    a = complex(a)
    if abs(s - 1.0) < 1e-14:
        raise PoleAtSOne("zeta(s, a) pole at s = 1")
    if not a.real > 0:
        raise UnsupportedDomain("hurwitz_zeta needs Re(a) > 0")
    return _hurwitz_core(s, a, policy, subtract_pole=False)


def hurwitz_zeta_minus_pole(
    s: complex, a: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """zeta(s, a) - 1/(s-1), finite at s = 1 (equals -psi(a) there)."""
    s = complex(s)
    a = complex(a)
    if not a.real > 0:
        raise UnsupportedDomain("needs Re(a) > 0")
    return _hurwitz_core(s, a, policy, subtract_pole=True)


def _root_of_unity_order(z: complex, max_q: int = 24, tol: float = 1e-12):
    if abs(abs(z) - 1.0) > tol:
        return None
    w = z
    for q in range(1, max_q + 1):
        if abs(w - 1.0) <= tol * q:
            return q
        w *= z
    return None


def _lerch_em_tail(z, s, a, policy, nhead=48):
    # direct head + Euler-Maclaurin tail through f^(5), with the integral
    # term reduced to an upper incomplete gamma.
    lam = -clog(z)
    acc = 0.0 + 0.0j
    for k in range(nhead):
        acc += cpow(z, k) * cpow(k + a, -s)
    L = float(nhead)
    integral = cmath.exp(lam * a) * cpow(lam, s - 1.0) * upper_incomplete_gamma(
        1.0 - s, lam * (L + a), policy
    )
    acc += integral

    def fderiv(order):
        total = 0.0 + 0.0j
        for i in range(order + 1):
            total += (
                binomial_general(order, i)
                * cpow(-lam, order - i)
                * ((-1) ** i)
                * pochhammer(s, i)
                * cpow(L + a, -s - i)
            )
        return cmath.exp(-lam * L) * total

    acc += 0.5 * fderiv(0)
    acc += -fderiv(1) / 12.0
    acc += fderiv(3) / 720.0
    acc += -fderiv(5) / 30240.0
    return acc


def _aitken_limit(partials):
    """Iterated Aitken delta-squared on a list of partial sums."""
    rows = [list(partials)]
    best = partials[-1]
    err = abs(partials[-1] - partials[-2]) if len(partials) > 1 else float("inf")
    cur = list(partials)
    while len(cur) >= 3:
        nxt = []
        for i in range(len(cur) - 2):
            d1 = cur[i + 1] - cur[i]
            d2 = cur[i + 2] - cur[i + 1]
            den = d2 - d1
            if den == 0:
                nxt.append(cur[i + 2])
            else:
                nxt.append(cur[i + 2] - d2 * d2 / den)
        if not nxt:
            break
        newerr = abs(nxt[-1] - best)
        best = nxt[-1]
        err = newerr
        cur = nxt
        rows.append(nxt)
        if len(rows) > 40:
            break
    return best, err


def lerch_phi(
    z: complex, s: complex, a: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Hurwitz-Lerch zeta Phi(z, s, a) = sum_n z^n / (n+a)^s, |z| <= 1.

    Regions: direct summation for |z| <= 0.9, a head sum plus
    Euler-Maclaurin integral tail for 0.9 < |z| < 1, an exact reduction
    to Hurwitz zetas when z is a root of unity (which also provides the
    s-continuation used by parameter derivatives), and iterated Aitken
    acceleration elsewhere on the unit circle.
    """
    z = complex(z)
    s = complex(s)
    a = complex(a)
    if not a.real > 0:
        raise UnsupportedDomain("lerch_phi needs Re(a) > 0")
    if abs(z) > 1.0 + 1e-12:
        raise DomainOutsideUnitDisk(f"|z| = {abs(z)} > 1")
    if z == 0:
        return cpow(a, -s)
    if abs(z - 1.0) < 1e-14:
        if s.real > 1.0:
            return hurwitz_zeta(s, a, policy)
        raise DomainViolation("Phi(1, s, a) needs Re(s) > 1")
    if abs(z) <= 0.9:
        acc = 0.0 + 0.0j
        zp = 1.0 + 0.0j
        small = 0
        for k in range(policy.max_terms):
            term = zp * cpow(k + a, -s)
            acc += term
            if abs(term) <= policy.rel_tol * abs(acc) + policy.abs_tol:
                small += 1
                if small >= 3 and k > 8:
                    return acc
            else:
                small = 0
            zp *= z
        raise NonConvergence("lerch_phi direct series did not converge")
    q = _root_of_unity_order(z)
    if q is not None:
        if abs(s - 1.0) < 1e-10:
            acc = 0.0 + 0.0j
            zp = 1.0 + 0.0j
            for r in range(q):
                acc += zp * polygamma(0, (a + r) / q, policy)
                zp *= z
            return -acc / q
        acc = 0.0 + 0.0j
        zp = 1.0 + 0.0j
        for r in range(q):
            acc += zp * hurwitz_zeta(s, (a + r) / q, policy)
            zp *= z
        return cpow(q, -s) * acc
    if abs(z) < 1.0 - 1e-13:
        return _lerch_em_tail(z, s, a, policy)
    # non-root point on the unit circle: conditional convergence
    if not s.real > 0:
        raise DomainViolation("Phi on |z| = 1 needs Re(s) > 0")
    partials = []
    acc = 0.0 + 0.0j
    zp = 1.0 + 0.0j
    nterms = min(policy.max_terms, 400)
    for k in range(nterms):
        acc += zp * cpow(k + a, -s)
        partials.append(acc)
        zp *= z
    best, err = _aitken_limit(partials[-160:])
    if not (err <= 1e-7 * max(1.0, abs(best))):
        raise NonConvergence("unit-circle Lerch acceleration stalled")
    return best


def polylog(
    s: complex, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Polylogarithm Li_s(z) = sum_{n>=1} z^n / n^s for |z| <= 1."""
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise DomainOutsideUnitDisk(f"|z| = {abs(z)} > 1")
    if z == 0:
        return 0.0 + 0.0j
    if abs(z - 1.0) < 1e-14:
        if complex(s).real > 1.0:
            return hurwitz_zeta(s, 1.0, policy)
        raise DomainViolation("Li_s(1) needs Re(s) > 1")
    return z * lerch_phi(z, s, 1.0, policy)


def lerch_hurwitz_functional_check(
    s: complex, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> float:
    """Residual of the unit-circle functional relation linking Li_s and
    the Hurwitz zeta: (2 i pi)^{-s} Gamma(s) ((-1)^s Li_s(1/z) + Li_s(z))
    against zeta(1-s, (pi - i Log(-z)) / (2 pi)).

    Returns |LHS - RHS|; a self-consistency probe for the whole stack.
    """
    s = complex(s)
    z = complex(z)
    if not s.real > 0:
        raise DomainViolation("functional check needs Re(s) > 0")
    if abs(abs(z) - 1.0) > 1e-9 or abs(z - 1.0) < 1e-9 or abs(z + 1.0) < 1e-9:
        raise DomainViolation("z must lie on the unit circle, z != +-1")
    lhs = (
        cpow(2j * PI, -s)
        * gamma(s)
        * (cmath.exp(1j * PI * s) * polylog(s, 1.0 / z, policy) + polylog(s, z, policy))
    )
    rhs = hurwitz_zeta(1.0 - s, (PI - 1j * clog(-z)) / (2.0 * PI), policy)
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# polygamma, Stieltjes, zeta s-derivatives
# ---------------------------------------------------------------------------


def polygamma(
    n: int, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """psi^(n)(z) by recurrence shift into the asymptotic region."""
    if n < 0:
        raise DomainViolation("polygamma order must be >= 0")
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleAtNonpositiveInteger(f"polygamma pole at z={z}")
    shift = 0.0 + 0.0j
    nf = math.factorial(n)
    while z.real < 16.0 + n:
        shift -= ((-1.0) ** n) * nf * cpow(z, -(n + 1.0))
        z = z + 1.0
    if n == 0:
        acc = cmath.log(z) - 1.0 / (2.0 * z)
    else:
        acc = ((-1.0) ** (n - 1)) * math.factorial(n - 1) * cpow(z, -float(n))
        acc += ((-1.0) ** (n - 1)) * (nf / 2.0) * cpow(z, -(n + 1.0))
    z2 = z * z
    # powfac tracks z^{-2r} for n = 0 and z^{-2r-n} otherwise
    powfac = cpow(z, -2.0) if n == 0 else cpow(z, -(2.0 + n))
    for r, b2r in enumerate(_BERNOULLI, start=1):
        if n == 0:
            term = -b2r / (2.0 * r) * powfac
        else:
            term = -b2r / (2.0 * r) * ((-1.0) ** n) * pochhammer(2.0 * r, n) * powfac
        acc += term
        powfac /= z2
        if abs(term) <= policy.rel_tol * abs(acc) + policy.abs_tol:
            return acc + shift
    return acc + shift


def zeta_s_derivative(
    order: int, s0: complex, a: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """d^order/ds^order zeta(s, a) at s0, order in {1, 2}.

    Central differences at fd_step with two Richardson levels;
    documented accuracy ~1e-8.
    """
    if order not in (1, 2):
        raise DomainViolation("order must be 1 or 2")
    s0 = complex(s0)
    a = complex(a)
    h = policy.fd_step

    def f(s):
        return hurwitz_zeta(s, a, policy)

    if order == 1:
        def d(hh):
            return (f(s0 + hh) - f(s0 - hh)) / (2.0 * hh)
    else:
        def d(hh):
            return (f(s0 + hh) - 2.0 * f(s0) + f(s0 - hh)) / (hh * hh)

    d1, d2, d3 = d(h), d(h / 2.0), d(h / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    return (16.0 * r2 - r1) / 15.0


def stieltjes_gamma1(
    a: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """First generalized Stieltjes constant gamma_1(a), Re(a) > 0.

    gamma_1(a) = -d/ds [zeta(s, a) - 1/(s-1)] at s = 1, evaluated by
    Richardson-extrapolated central differences of the pole-subtracted
    Hurwitz zeta.
    """
    a = complex(a)
    if not a.real > 0:
        raise UnsupportedDomain("stieltjes_gamma1 needs Re(a) > 0")
    h = policy.fd_step

    def g(s):
        return hurwitz_zeta_minus_pole(s, a, policy)

    def d(hh):
        return (g(1.0 + hh) - g(1.0 - hh)) / (2.0 * hh)

    d1, d2, d3 = d(h), d(h / 2.0), d(h / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    return -(16.0 * r2 - r1) / 15.0


# ---------------------------------------------------------------------------
# Bessel and hypergeometric
# ---------------------------------------------------------------------------


def bessel_j(
    v: complex, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Bessel function of the first kind J_v(z), desk scale |z| <= 50.

    Power series for |z| <= 12, Hankel asymptotic expansion beyond
    (where the series would lose digits to cancellation).
    """
    v = complex(v)
    z = complex(z)
    if z == 0:
        if v == 0:
            return 1.0 + 0.0j
        if v.real > 0:
            return 0.0 + 0.0j
        raise DomainViolation("J_v(0) undefined for Re(v) <= 0, v != 0")
    if abs(z) > 12.0:
        return _bessel_j_asymptotic(v, z)
    half = z / 2.0
    term = cpow(half, v) * rgamma(v + 1.0)
    if term == 0:
        # leading 1/Gamma pole: start the series at the first live index
        l0 = 1
        while rgamma(v + l0 + 1.0) == 0 and l0 < 64:
            l0 += 1
        term = ((-1.0) ** l0) * cpow(half, 2.0 * l0 + v) * rgamma(v + l0 + 1.0) / math.factorial(l0)
        start = l0 + 1
    else:
        start = 1
    acc = term
    zz = -half * half
    for l in range(start, policy.max_terms):
        term *= zz / (l * (v + l))
        acc += term
        if abs(term) <= policy.rel_tol * abs(acc) + policy.abs_tol and l > start + 3:
            break
    else:
        raise NonConvergence("Bessel series did not converge")
    return acc


def _bessel_j_asymptotic(v: complex, z: complex) -> complex:
    mu = 4.0 * v * v
    p = 1.0 + 0.0j
    q = 0.0 + 0.0j
    term = 1.0 + 0.0j
    eight_z = 8.0 * z
    best_p, best_q = p, q
    prev = abs(term)
    for k in range(1, 30):
        term *= (mu - (2.0 * k - 1.0) ** 2) / (k * eight_z)
        if k % 2 == 1:
            q += term * ((-1.0) ** ((k - 1) // 2))
        else:
            p += term * ((-1.0) ** (k // 2))
        cur = abs(term)
        if cur > prev:
            break
        prev = cur
        best_p, best_q = p, q
    p, q = best_p, best_q
    omega = z - v * PI / 2.0 - PI / 4.0
    return cmath.sqrt(2.0 / (PI * z)) * (p * cmath.cos(omega) - q * cmath.sin(omega))


def hypergeometric_pfq(
    upper, lower, z: complex, policy: AccuracyPolicy = DEFAULT_POLICY
) -> complex:
    """Generalized hypergeometric pFq via its defining power series.

    Covers the 1F1/1F2/2F1/2F2/2F3/3F2/3F4 instances used by the
    series engine; z = 1 for 2F1 uses the Gauss summation when it
    converges there.
    """
    upper = [complex(u) for u in upper]
    lower = [complex(b) for b in lower]
    z = complex(z)
    for b in lower:
        if _near_nonpositive_int(b):
            raise LowerParameterPole(f"lower parameter {b} is a non-positive integer")
    # terminating series short-circuits the convergence classification
    terminates = any(
        _int_or_none(u) is not None and _int_or_none(u) <= 0 for u in upper
    )
    p, qn = len(upper), len(lower)
    if not terminates:
        if p > qn + 1 and z != 0:
            raise NonConvergence("series diverges for p > q + 1")
        if p == qn + 1 and abs(z) > 1.0 + 1e-14:
            raise NonConvergence("|z| > 1 outside the 2F1-type disk")
        if p == qn + 1 and abs(z - 1.0) < 1e-14 and p == 2:
            a, b = upper
            c = lower[0]
            if (c - a - b).real > 0:
                return cmath.exp(
                    log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b)
                )
            raise NonConvergence("2F1 at z = 1 needs Re(c - a - b) > 0")
    term = 1.0 + 0.0j
    acc = term
    small = 0
    for n in range(policy.max_terms):
        num = 1.0 + 0.0j
        for u in upper:
            num *= u + n
        den = 1.0 + 0.0j
        for b in lower:
            den *= b + n
        term *= num / den * z / (n + 1.0)
        if term == 0:
            return acc
        acc += term
        if abs(term) <= policy.rel_tol * abs(acc) + policy.abs_tol:
            small += 1
            if small >= 3:
                return acc
        else:
            small = 0
    raise NonConvergence("pFq series did not converge within max_terms")


# ---------------------------------------------------------------------------
# module-level constants computed by the engine itself
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def catalan_constant() -> float:
    """Catalan's constant via C = (zeta(2,1/4) - zeta(2,3/4)) / 16."""
    return (hurwitz_zeta(2.0, 0.25) - hurwitz_zeta(2.0, 0.75)).real / 16.0


@lru_cache(maxsize=1)
def zeta3_constant() -> float:
    """Apery's constant zeta(3)."""
    return hurwitz_zeta(3.0, 1.0).real
