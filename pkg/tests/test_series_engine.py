"""Series-engine evaluators against quadrature and frozen oracles."""

import math

import pytest

from integra import series_engine as se
from integra import special_functions as sf
from integra.errors import DomainViolation, InsufficientTerms
from integra.policy import AccuracyPolicy
from integra.quadrature import IntegrandHandle, integrate_finite

from oracles import catalan_series, zeta3_series


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def quad(fn, lo, hi):
    return integrate_finite(IntegrandHandle(fn), lo, hi).value


# ---------------------------------------------------------------------------
# main theorem
# ---------------------------------------------------------------------------


def test_main_catalan_boundary():
    # c = 1 boundary: the series equals Catalan's constant (alternating
    # acceleration tier); oracle value from the alternating series
    p = se.TheoremMainParams(m=1.0, k=1.0, a=1.0, b_exp=2.0, c=1.0)
    res = se.eval_theorem_main(p)
    assert rel(res.value, catalan_series()) < 1e-10
    assert res.accelerated


def test_main_c_zero_single_term():
    p = se.TheoremMainParams(m=1.5, k=2.0, a=0.8, b_exp=1.0, c=0.0)
    res = se.eval_theorem_main(p)
    closed = (sf.upper_incomplete_gamma(3.0, -1.5 * math.log(0.8))
              * sf.cpow(0.8, -1.5) / 1.5 ** 3)
    assert rel(res.value, closed) < 1e-13
    assert res.tail_estimate == 0.0 or res.tail_estimate < 1e-14


def test_main_log2():
    p = se.TheoremMainParams(m=1.0, k=0.0, a=1.0, b_exp=1.0, c=1.0)
    res = se.eval_theorem_main(p)
    assert rel(res.value, math.log(2)) < 1e-11


def test_main_invariants_rejected():
    with pytest.raises(DomainViolation):
        se.TheoremMainParams(m=-0.5, k=0.0, a=1.0, b_exp=1.0, c=0.5)
    with pytest.raises(DomainViolation):
        se.TheoremMainParams(m=0.5, k=0.0, a=1.0, b_exp=-1.0, c=0.5)


# ---------------------------------------------------------------------------
# polynomial theorem
# ---------------------------------------------------------------------------


def test_polynomial_exact_cases():
    # n=1, b=0 reduces to a single j=1 term
    res = se.eval_polynomial_theorem(0.5, 0.0, 1, 0.0, 1.0)
    assert rel(res.value, 1.0 / 1.5) < 1e-14
    assert res.tail_estimate == 0.0
    # x (1+x)^2 integrates to 17/12
    res = se.eval_polynomial_theorem(1.0, 1.0, 2, 0.0, 1.0)
    assert rel(res.value, 17.0 / 12.0) < 1e-14


def test_polynomial_vs_quadrature():
    res = se.eval_polynomial_theorem(0.5, -0.3, 3, 2.0, 1.0)
    q = quad(lambda x: x ** 0.5 * (1 - 0.3 * x) ** 3 * (-math.log(x)) ** 2, 0, 1)
    assert rel(res.value, q) < 1e-9


# ---------------------------------------------------------------------------
# finite interval / general binomial
# ---------------------------------------------------------------------------


def test_finite_interval_single_term():
    res = se.eval_finite_interval(m=0.3, k=0.7, a=0.9, b_upper=0.8,
                                  c_exp=1.0, z=0.5, d=0.0)
    kern = se.log_power_kernel(1.3, 0.7, 0.9, 0.8)
    assert rel(res.value, kern) < 1e-14


def test_finite_interval_beta_case():
    # B(2, 3) = 1/12 via d = 1-q with p=2, q=3
    res = se.eval_finite_interval(m=1.0, k=0.0, a=1.0, b_upper=1.0,
                                  c_exp=1.0, z=-1.0, d=-2.0)
    assert rel(res.value, 1.0 / 12.0) < 1e-13


def test_finite_interval_4241_value():
    # (-log x) weight form of the 4.241.11 entry: +sqrt(2 pi) Gamma(1/4)^2/8
    res = se.eval_finite_interval(m=-0.5, k=1.0, a=1.0, b_upper=1.0,
                                  c_exp=2.0, z=-1.0, d=0.5)
    target = math.sqrt(2 * math.pi) / 8 * math.gamma(0.25) ** 2
    assert rel(res.value, target) < 1e-10


def test_general_binomial_reduction_lattice():
    # n = 1 equals eval_finite_interval with the same parameters
    p1 = se.GeneralSeriesParams(m=0.3, k=0.7, a=0.9, b=0.8,
                                factors=(se.BinomialFactor(0.5, 1.3, -0.8),))
    r1 = se.eval_general_binomial(p1)
    r2 = se.eval_finite_interval(m=0.3, k=0.7, a=0.9, b_upper=0.8,
                                 c_exp=1.3, z=0.5, d=0.8)
    assert abs(r1.value - r2.value) < 1e-14 * max(1.0, abs(r1.value))
    # a factor with outer power 0 collapses to the (n-1)-factor value
    p2 = se.GeneralSeriesParams(m=0.3, k=0.7, a=0.9, b=0.8,
                                factors=(se.BinomialFactor(0.5, 1.3, -0.8),
                                         se.BinomialFactor(0.4, 2.0, 0.0)))
    r3 = se.eval_general_binomial(p2)
    assert abs(r3.value - r1.value) < 1e-14 * max(1.0, abs(r1.value))


def test_general_binomial_elliptic_f():
    # incomplete elliptic integral of the first kind at phi=pi/6, k^2=1/4,
    # cross-checked against quadrature of the defining integrand
    phi, k2 = math.pi / 6, 0.25
    p = se.GeneralSeriesParams(m=0.0, k=0.0, a=1.0, b=math.sin(phi),
                               factors=(se.BinomialFactor(-1.0, 2.0, -0.5),
                                        se.BinomialFactor(-k2, 2.0, -0.5)))
    res = se.eval_general_binomial(p)
    q = quad(lambda x: 1 / math.sqrt((1 - x * x) * (1 - k2 * x * x)),
             0, math.sin(phi))
    assert rel(res.value, q) < 1e-10


def test_general_binomial_three_factors_smoke():
    p = se.GeneralSeriesParams(m=0.2, k=0.5, a=0.9, b=0.9,
                               factors=(se.BinomialFactor(0.1, 1.0, -0.7),
                                        se.BinomialFactor(-0.1, 2.0, 0.6),
                                        se.BinomialFactor(0.1, 1.5, -1.2)))
    res = se.eval_general_binomial(p)
    q = quad(lambda x: (x ** 0.2 * (1 + 0.1 * x) ** -0.7 * (1 - 0.1 * x * x) ** 0.6
                        * (1 + 0.1 * x ** 1.5) ** -1.2 * (-math.log(0.9 * x)) ** 0.5),
             0, 0.9)
    assert rel(res.value, q) < 1e-8


def test_divergence_guard():
    with pytest.raises(DomainViolation):
        se.eval_finite_interval(m=0.3, k=0.0, a=1.0, b_upper=1.0,
                                c_exp=1.0, z=1.5, d=0.5)


# ---------------------------------------------------------------------------
# remaining theorem families vs quadrature
# ---------------------------------------------------------------------------


def test_log_binomial_elementary():
    # m=1, k=0, c=1: integral of log(1+x) = 2 log 2 - 1
    res = se.eval_log_binomial_family(m=1.0, k=0.0, a=1.0, b_exp=1.0, c=1.0)
    assert rel(res.value, 2 * math.log(2) - 1) < 1e-10
    # c = 0 gives zero
    res = se.eval_log_binomial_family(m=0.7, k=1.0, a=1.0, b_exp=1.0, c=0.0)
    assert res.value == 0


def test_log_binomial_prud_26195():
    res = se.eval_log_binomial_family(m=0.0, k=2.0, a=1.0, b_exp=1.0, c=0.8)
    target = -sf.gamma(3.0).real * sf.polylog(4.0, -0.8).real
    assert rel(res.value, target) < 1e-11


def test_bessel_theorem_reductions():
    # z = 0, v = 0: J_0(0) = 1, reduces to the polynomial theorem
    r1 = se.eval_bessel_theorem(m=0.4, b_coeff=0.5, n=2, v=0.0, z_arg=0.0,
                                k=1.0, a=0.9)
    r2 = se.eval_polynomial_theorem(0.4, 0.5, 2, 1.0, 0.9)
    assert rel(r1.value, r2.value) < 1e-12
    # 6.561.1 shape: 1F2 closed form
    v, aa = 0.5, 0.9
    res = se.eval_bessel_theorem(m=v, b_coeff=0.0, n=0, v=v, z_arg=aa, k=0.0, a=1.0)
    closed = (sf.cpow(2.0, -v) * sf.cpow(aa, v)
              * sf.hypergeometric_pfq([0.5 + v], [1 + v, 1.5 + v], -aa * aa / 4)
              / ((1 + 2 * v) * sf.gamma(1 + v)))
    assert rel(res.value, closed) < 1e-12


def test_bessel_product_vs_quadrature():
    res = se.eval_bessel_product_theorem(m=0.3, b_coeff=0.4, n=1, v=0.5,
                                         mu=0.75, z_arg=1.2, k=0.6, a=0.9)
    q = quad(lambda x: (x ** 0.3 * (1 + 0.4 * x)
                        * (sf.bessel_j(0.5, 1.2 * x) * sf.bessel_j(0.75, 1.2 * x)).real
                        * (-math.log(0.9 * x)) ** 0.6), 0, 1)
    assert rel(res.value, q) < 1e-9


def test_exp_binomial_2f1_vs_quadrature():
    res = se.eval_exp_binomial_2f1_theorem(0.4, 0.3, 1, -0.4, 0.7, 0.5, 1.6,
                                           0.35, 1.2, 0.9)
    q = quad(lambda x: (math.exp(-0.4 * x) * x ** 0.4 * (1 + 0.3 * x)
                        * sf.hypergeometric_pfq([0.7, 0.5], [1.6], 0.35 * x).real
                        * (-math.log(0.9 * x)) ** 1.2), 0, 1)
    assert rel(res.value, q) < 1e-9


def test_lerch_integral_hur1_invariant():
    # a=b=1, m=v-1 reproduces Gamma(1+k) zeta(1+k+s, v)
    for k, s, v in [(1.0, 1.0, 1.0), (2.0, 1.5, 1.3), (0.8, 2.0, 0.7)]:
        res = se.eval_lerch_integral_theorem(m=v - 1.0, s=s, v=v, k=k,
                                             a=1.0, b_upper=1.0)
        target = sf.gamma(1 + k) * sf.hurwitz_zeta(1 + k + s, v)
        assert rel(res.value, target) < 1e-8


def test_lerch_integral_zeta3():
    res = se.eval_lerch_integral_theorem(m=0.0, s=1.0, v=1.0, k=1.0,
                                         a=1.0, b_upper=1.0)
    assert rel(res.value, zeta3_series()) < 1e-9


def test_lerch_integral_divergence_guard():
    with pytest.raises(DomainViolation):
        se.eval_lerch_integral_theorem(m=0.0, s=0.0, v=1.0, k=0.0,
                                       a=1.0, b_upper=1.0)


def test_hyp_integral_vs_quadrature():
    res = se.eval_hypergeometric_integral_theorem(m=0.5, alpha=0.7, beta=0.9,
                                                  gamma_p=1.4, k=0.8, a=0.95,
                                                  b_upper=0.85)
    q = quad(lambda x: (x ** 0.5 * sf.hypergeometric_pfq([0.7, 0.9], [1.4], x).real
                        * (-math.log(0.95 * x)) ** 0.8), 0, 0.85)
    assert rel(res.value, q) < 1e-9


def test_hyp_integral_trivial_alpha_zero():
    # alpha = 0 makes 2F1 constant 1: reduces to the d=0 finite interval
    res = se.eval_hypergeometric_integral_theorem(m=0.5, alpha=1e-300, beta=0.9,
                                                  gamma_p=1.4, k=0.8, a=0.95,
                                                  b_upper=0.85)
    single = se.eval_finite_interval(m=0.5, k=0.8, a=0.95, b_upper=0.85,
                                     c_exp=1.0, z=0.0, d=0.0)
    assert rel(res.value, single.value) < 1e-10


def test_bessel_log_j1_case():
    # v=0, 2m+v=1, b=1, k=0: integral of t J0(t) over (0,1) = J1(1)
    res = se.eval_bessel_log_theorem(m=0.5, v=0.0, k=0.0, a=1.0, b_upper=1.0)
    assert rel(res.value, sf.bessel_j(1.0, 1.0)) < 1e-12


def test_bessel_log_vs_quadrature():
    m, v, k, a, b = 0.3, 0.7, 1.1, 0.8, 0.9
    res = se.eval_bessel_log_theorem(m, v, k, a, b)
    q = quad(lambda x: (x ** (2 * m + v) * sf.bessel_j(v, x).real
                        * (-math.log(a * x * x)) ** k), 0, b)
    assert rel(res.value, q) < 1e-9


def test_bessel_power_vs_quadrature():
    res = se.eval_bessel_power_theorem(m=0.6, v=0.8, alpha=1.5, k=0.7,
                                       a=0.9, b_upper=0.9)
    q = quad(lambda x: (x ** -0.4 * sf.bessel_j(0.8, 1.5 * x).real
                        * (-math.log(0.9 * x)) ** 0.7), 0, 0.9)
    assert rel(res.value, q) < 1e-9


def test_bessel_exp_reduction_and_quadrature():
    # f=0, c=0 reduces to the plain Bessel power integral
    r1 = se.eval_bessel_exp_theorem(m=0.4, v=0.6, alpha=1.1, f=0.0, g=1.0,
                                    c=0.0, p_exp=2.0, d=1.3, k=0.9, a=0.85,
                                    b_upper=0.95)
    r2 = se.eval_bessel_power_theorem(m=1.4, v=0.6, alpha=1.1, k=0.9,
                                      a=0.85, b_upper=0.95)
    assert rel(r1.value, r2.value) < 1e-11
    res = se.eval_bessel_exp_theorem(m=0.4, v=0.6, alpha=1.1, f=-0.5, g=1.0,
                                     c=0.4, p_exp=2.0, d=1.3, k=0.9, a=0.85,
                                     b_upper=0.95)
    q = quad(lambda x: (math.exp(-0.5 * x) * x ** 0.4 * (1 + 0.4 * x * x) ** 1.3
                        * sf.bessel_j(0.6, 1.1 * x).real
                        * (-math.log(0.85 * x)) ** 0.9), 0, 0.95)
    assert rel(res.value, q) < 1e-9


def test_nested_log_families():
    # log(-log t)/(1+t) entry
    res = se.eval_nested_log_binomial(0.0, 1.0, 1.0,
                                      [se.BinomialFactor(1.0, 1.0, -1.0)])
    assert abs(res.value - (-math.log(2) ** 2 / 2)) < 1e-10
    # bare kernel at v = 1/2
    res = se.eval_nested_log_binomial(-0.5, 1.0, 1.0, [])
    target = -(sf.EULER_GAMMA + math.log(0.5)) / 0.5
    assert abs(res.value - target) < 1e-12


# ---------------------------------------------------------------------------
# truncation honesty and acceleration
# ---------------------------------------------------------------------------


def test_truncation_honesty():
    cases = [
        lambda pol: se.eval_theorem_main(
            se.TheoremMainParams(0.75, 1.25, 0.8, 1.5, 0.6), pol),
        lambda pol: se.eval_finite_interval(m=0.3, k=0.7, a=0.9, b_upper=0.8,
                                            c_exp=1.3, z=0.5, d=0.8, policy=pol),
        lambda pol: se.eval_lerch_integral_theorem(m=0.25, s=1.5, v=1.2, k=1.0,
                                                   a=1.0, b_upper=0.9, policy=pol),
        lambda pol: se.eval_bessel_power_theorem(m=0.6, v=0.8, alpha=1.5, k=0.7,
                                                 a=0.9, b_upper=0.9, policy=pol),
    ]
    base = AccuracyPolicy(max_terms=40_000)
    double = AccuracyPolicy(max_terms=80_000)
    for case in cases:
        r1 = case(base)
        r2 = case(double)
        assert abs(r1.value - r2.value) <= 3 * max(r1.tail_estimate, 1e-16)


def test_accelerate_alternating_examples():
    terms = [(-1.0) ** k / (k + 1) for k in range(20)]
    val, err = se.accelerate_alternating(terms)
    assert abs(val - math.log(2)) < 1e-9
    terms = [(-1.0) ** k / (2 * k + 1) for k in range(20)]
    val, err = se.accelerate_alternating(terms)
    assert abs(val - math.pi / 4) < 1e-8
    val, err = se.accelerate_alternating([0.0] * 8)
    assert val == 0 and err == 0
    with pytest.raises(InsufficientTerms):
        se.accelerate_alternating([1.0, -0.5, 0.25])


def test_accelerate_agrees_with_raw_convergent():
    terms = [(-0.5) ** k for k in range(30)]
    val, err = se.accelerate_alternating(terms)
    assert abs(val - 2.0 / 3.0) < 1e-12          # true limit
    assert abs(val - sum(terms)) < 1e-8          # within raw truncation


# ---------------------------------------------------------------------------
# custom catalog series
# ---------------------------------------------------------------------------


def test_binom_log_ratio():
    # Frullani pieces: sum binom(-n, j)(-a)^j log((j+p)/(j+q)) equals the
    # integral of (x^(p-1)-x^(q-1))/((1-a x)^n log x)
    res = se.sum_binom_log_ratio(-0.5, -1.5, 2.0, 3.0)
    q = quad(lambda x: ((x ** 1.0 - x ** 2.0) * (1 - 0.5 * x) ** -1.5
                        / math.log(x)), 0, 1)
    assert rel(res.value, q) < 1e-9


def test_finite_alt_log():
    res = se.sum_finite_alt_log(2, 1.5)
    expected = math.log(4.0) - 2 * math.log(2.5)
    assert abs(res.value - expected) < 1e-14
    assert res.tail_estimate == 0.0


def test_alt_log_shift():
    res = se.sum_alternating_log_shift(1.5)
    target = -math.log(1.5 * math.gamma(0.75) ** 2 / (2 * math.gamma(1.25) ** 2))
    assert abs(res.value - target) < 1e-10


def test_sum_bdh129_vs_quadrature():
    res = se.sum_bdh_table129(1, 0.5, 1.0, 0.25, 2.0)
    q = quad(lambda x: (x ** 0.25 * math.log(x)
                        / ((1 + 0.5 * x) * (4.0 + math.log(x) ** 2))), 0, 1)
    assert rel(res.value, q) < 1e-10


def test_sin_ratio_series():
    t = math.pi / 3
    res = se.sum_sin_ratio(t)
    q = quad(lambda x: 1 / (math.sqrt(x) * (1 + x * x - 2 * x * math.cos(t))), 0, 1)
    assert rel(res.value, q) < 1e-8
