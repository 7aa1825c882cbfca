"""Identity catalog: record model, manifest grammar, and evaluators.

A record binds one left-hand-side integrand (a product of grammar
factors, optionally a sum of such terms), at most one series
representation, at most one closed form, parameter constraints with
sampling boxes, defaults, and optional erratum data.

The manifest is line-oriented UTF-8 text; numbers are decimal doubles,
round-to-nearest.  Expressions use infix arithmetic (+ - * / ^), decimal
literals with a trailing ``j`` for imaginary parts, and calls into a
fixed function vocabulary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from . import series_engine as se
from . import special_functions as sf
from .errors import (
    EvaluationError,
    ParseError,
    UnboundParameter,
    ValidationError,
)
from .policy import DEFAULT_POLICY
from .quadrature import IntegrandHandle

# ---------------------------------------------------------------------------
# expression AST: ('num', complex) | ('name', s) | ('call', f, (args...))
#                 | (op, left, right) | ('neg', e)
# ---------------------------------------------------------------------------

_OPS = {"add", "sub", "mul", "div", "pow"}


class _Tok:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.take(ch):
            raise ParseError(f"expected {ch!r} at position {self.pos} in {self.text!r}")

    def name(self):
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos]

    def number(self):
        self.peek()
        start = self.pos
        seen_digit = False
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c.isdigit() or c == ".":
                seen_digit = seen_digit or c.isdigit()
                self.pos += 1
            elif c in "eE" and seen_digit and self.pos + 1 < len(self.text) and (
                self.text[self.pos + 1].isdigit() or self.text[self.pos + 1] in "+-"
            ):
                self.pos += 2
            else:
                break
        lit = self.text[start:self.pos]
        if self.pos < len(self.text) and self.text[self.pos] == "j":
            self.pos += 1
            return complex(0.0, float(lit))
        return complex(float(lit), 0.0)


def _parse_expr(tok: _Tok):
    node = _parse_term(tok)
    while True:
        c = tok.peek()
        if c == "+":
            tok.take("+")
            node = ("add", node, _parse_term(tok))
        elif c == "-":
            tok.take("-")
            node = ("sub", node, _parse_term(tok))
        else:
            return node


def _parse_term(tok: _Tok):
    node = _parse_unary(tok)
    while True:
        c = tok.peek()
        if c == "*":
            tok.take("*")
            node = ("mul", node, _parse_unary(tok))
        elif c == "/":
            tok.take("/")
            node = ("div", node, _parse_unary(tok))
        else:
            return node


def _parse_unary(tok: _Tok):
    if tok.peek() == "-":
        tok.take("-")
        return ("neg", _parse_unary(tok))
    if tok.peek() == "+":
        tok.take("+")
        return _parse_unary(tok)
    return _parse_power(tok)


def _parse_power(tok: _Tok):
    base = _parse_atom(tok)
    if tok.peek() == "^":
        tok.take("^")
        return ("pow", base, _parse_unary(tok))
    return base


def _parse_atom(tok: _Tok):
    c = tok.peek()
    if c is None:
        raise ParseError(f"unexpected end of expression in {tok.text!r}")
    if c == "(":
        tok.take("(")
        node = _parse_expr(tok)
        tok.expect(")")
        return node
    if c.isdigit() or c == ".":
        return ("num", tok.number())
    if c.isalpha() or c == "_":
        name = tok.name()
        if tok.peek() == "(":
            tok.take("(")
            args = []
            if tok.peek() != ")":
                args.append(_parse_expr(tok))
                while tok.take(","):
                    args.append(_parse_expr(tok))
            tok.expect(")")
            return ("call", name, tuple(args))
        return ("name", name)
    raise ParseError(f"unexpected character {c!r} at {tok.pos} in {tok.text!r}")


def parse_expr(text: str):
    tok = _Tok(text)
    node = _parse_expr(tok)
    if tok.peek() is not None:
        raise ParseError(f"trailing input at {tok.pos} in {text!r}")
    return node


def expr_to_text(node) -> str:
    kind = node[0]
    if kind == "num":
        z = node[1]
        if z.imag == 0:
            return repr(z.real)
        if z.real == 0:
            return repr(z.imag) + "j"
        return f"({z.real!r}+{z.imag!r}j)" if z.imag >= 0 else f"({z.real!r}{z.imag!r}j)"
    if kind == "name":
        return node[1]
    if kind == "call":
        return node[1] + "(" + ", ".join(expr_to_text(a) for a in node[2]) + ")"
    if kind == "neg":
        return "-(" + expr_to_text(node[1]) + ")"
    if kind == "pow":
        # unary minus binds looser than ^, so both operands get parens
        return "((" + expr_to_text(node[1]) + ") ^ (" + expr_to_text(node[2]) + "))"
    sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[kind]
    return "(" + expr_to_text(node[1]) + " " + sym + " " + expr_to_text(node[2]) + ")"


# closed-form vocabulary: constants and functions evaluable by the kernel
_CONSTANTS = {
    "pi": lambda: complex(math.pi),
    "euler_gamma": lambda: complex(sf.EULER_GAMMA),
    "catalan": lambda: complex(sf.catalan_constant()),
    "zeta3": lambda: complex(sf.zeta3_constant()),
    "log2": lambda: complex(math.log(2.0)),
    "inf": lambda: complex(math.inf),
}


def _fn_psi(n, z):
    return sf.polygamma(int(round(n.real)), z)


def _fn_zetad(order, s0, a):
    return sf.zeta_s_derivative(int(round(order.real)), s0, a)


def _fn_f21(a, b, c, z):
    return sf.hypergeometric_pfq([a, b], [c], z)


def _fn_f12(a, b1, b2, z):
    return sf.hypergeometric_pfq([a], [b1, b2], z)


def _fn_ei(x):
    if abs(x.imag) > 1e-12 or x.real <= 0:
        raise EvaluationError("ei(x) implemented for real x > 0")
    return sf.exp_integral_ei(x.real)


def _fn_erf(z):
    # power series; adequate at desk scale |z| <= 6
    acc = 0.0 + 0.0j
    term = z
    zz = z * z
    for n in range(0, 200):
        if n > 0:
            term *= -zz / n
        acc += term / (2 * n + 1)
        if abs(term) <= 1e-17 * (abs(acc) + 1.0) and n > 4:
            break
    return 2.0 / math.sqrt(math.pi) * acc


_FUNCTIONS = {
    "gamma": (1, sf.gamma),
    "loggamma": (1, sf.log_gamma),
    "psi": (2, _fn_psi),
    "zeta": (1, lambda s: sf.hurwitz_zeta(s, 1.0)),
    "hurwitz": (2, sf.hurwitz_zeta),
    "zetad": (3, _fn_zetad),
    "polylog": (2, sf.polylog),
    "lerchphi": (3, sf.lerch_phi),
    "stieltjes1": (1, sf.stieltjes_gamma1),
    "en": (2, sf.exp_integral_en),
    "ei": (1, _fn_ei),
    "uppergamma": (2, sf.upper_incomplete_gamma),
    "lowergamma": (2, sf.lower_incomplete_gamma),
    "pochhammer": (2, lambda a, n: sf.pochhammer(a, int(round(n.real)))),
    "binomial": (2, lambda a, j: sf.binomial_general(a, int(round(j.real)))),
    "f21": (4, _fn_f21),
    "f12": (4, _fn_f12),
    "erf": (1, _fn_erf),
    "erfc": (1, lambda z: 1.0 - _fn_erf(z)),
    "erfi": (1, lambda z: (-1j) * _fn_erf(1j * z)),
    "log": (1, cmath.log),
    "exp": (1, cmath.exp),
    "sqrt": (1, cmath.sqrt),
    "sin": (1, cmath.sin),
    "cos": (1, cmath.cos),
    "tan": (1, cmath.tan),
    "cot": (1, lambda z: cmath.cos(z) / cmath.sin(z)),
    "sec": (1, lambda z: 1.0 / cmath.cos(z)),
    "csc": (1, lambda z: 1.0 / cmath.sin(z)),
    "asin": (1, cmath.asin),
    "atan": (1, cmath.atan),
    "atanh": (1, cmath.atanh),
    "acoth": (1, lambda z: cmath.atanh(1.0 / z)),
    "re": (1, lambda z: complex(z.real)),
    "im": (1, lambda z: complex(z.imag)),
    "abs": (1, lambda z: complex(abs(z))),
    "conj": (1, lambda z: z.conjugate()),
}

# functions whose results rest on finite differences; records using them
# compare at the relaxed derivative tolerance
_DERIVATIVE_FUNCTIONS = {"zetad", "stieltjes1"}


def evaluate_expr(node, params: dict) -> complex:
    """Evaluate an expression AST with `params` bound; deterministic."""
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "name":
        name = node[1]
        if name in params:
            return complex(params[name])
        if name in _CONSTANTS:
            return _CONSTANTS[name]()
        raise UnboundParameter(f"unbound parameter {name!r}")
    if kind == "neg":
        return -evaluate_expr(node[1], params)
    if kind == "call":
        fname = node[1]
        if fname not in _FUNCTIONS:
            raise EvaluationError(f"unknown function {fname!r}")
        arity, fn = _FUNCTIONS[fname]
        args = [evaluate_expr(a, params) for a in node[2]]
        if len(args) != arity:
            raise EvaluationError(f"{fname} expects {arity} args, got {len(args)}")
        try:
            return complex(fn(*args))
        except (EvaluationError, UnboundParameter):
            raise
        except Exception as exc:
            raise EvaluationError(f"evaluating {fname}: {exc}") from exc
    a = evaluate_expr(node[1], params)
    b = evaluate_expr(node[2], params)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "pow":
        return sf.cpow(a, b)
    raise EvaluationError(f"unknown node {kind!r}")


def expr_names(node, out=None):
    out = set() if out is None else out
    kind = node[0]
    if kind == "name":
        out.add(node[1])
    elif kind == "call":
        for a in node[2]:
            expr_names(a, out)
    elif kind in _OPS or kind == "neg":
        for child in node[1:]:
            expr_names(child, out)
    return out


def expr_functions(node, out=None):
    out = set() if out is None else out
    kind = node[0]
    if kind == "call":
        out.add(node[1])
        for a in node[2]:
            expr_functions(a, out)
    elif kind in _OPS or kind == "neg":
        for child in node[1:]:
            expr_functions(child, out)
    return out


def check_closed_vocabulary(node, record_id: str):
    bad = expr_functions(node) - set(_FUNCTIONS)
    if bad:
        raise ValidationError(record_id, "rhs_closed", f"unknown functions {sorted(bad)}")
    free = expr_names(node) - set(_CONSTANTS)
    return free


# ---------------------------------------------------------------------------
# integrand grammar
# ---------------------------------------------------------------------------

# factor name -> number of expression arguments
_FACTOR_ARITY = {
    "pow": 2,          # pow(x, e): x^e  (first arg is the literal name x)
    "logpow": 2,       # (-log(a x))^k
    "loglogrecip": 1,  # log(-log(a x))
    "binom": 3,        # (1 + c x^e)^p
    "besselj": 2,      # J_v(s x)
    "besselprod": 3,   # J_v(s x) J_mu(s x)
    "f21": 4,          # 2F1(a, b; c; s x)
    "lerch": 2,        # Phi(x, s, v)
    "expf": 2,         # exp(f x^g)
    "atanh": 1,        # atanh(b x)
    "log1p": 2,        # log(1 + c x^s)
    "coef": 1,         # scalar multiplier (grammar extension)
    "logsq": 1,        # log(a^2 + log^2 x)         (extension)
    "ratlogsq": 1,     # 1 / (a^2 + log^2 x)        (extension)
    "ratlogquart": 1,  # 1 / (a^4 - log^4 x)        (extension)
    "logshift": 2,     # log(a + s log x)           (extension)
    "osc_log_sin": 3,  # log(((x+b)^2+g^2)/((x-b)^2+g^2)) sin(m x)   (extension)
}


@dataclass(frozen=True)
class IntegrandTerm:
    factors: tuple  # of (name, (arg ASTs...))


@dataclass(frozen=True)
class IntegrandSpec:
    terms: tuple            # of IntegrandTerm
    interval: tuple         # (lo AST, hi AST)
    interior_singularities: tuple = ()

    @property
    def oscillatory(self) -> bool:
        return any(
            f[0] == "osc_log_sin" for t in self.terms for f in t.factors
        )


def _factor_value(name, argvals, x, lx):
    if name == "pow":
        return sf.cpow(complex(x), argvals[1])
    if name == "logpow":
        return sf.cpow(-(sf.clog(argvals[0]) + lx), argvals[1])
    if name == "loglogrecip":
        inner = -(sf.clog(argvals[0]) + lx)
        return sf.clog(inner)
    if name == "binom":
        c, e, p = argvals
        return sf.cpow(1.0 + c * sf.cpow(complex(x), e), p)
    if name == "besselj":
        return sf.bessel_j(argvals[0], argvals[1] * x)
    if name == "besselprod":
        v, mu, s = argvals
        return sf.bessel_j(v, s * x) * sf.bessel_j(mu, s * x)
    if name == "f21":
        a, b, c, s = argvals
        return sf.hypergeometric_pfq([a, b], [c], s * x)
    if name == "lerch":
        s, v = argvals
        return sf.lerch_phi(complex(x), s, v)
    if name == "expf":
        f, g = argvals
        return cmath.exp(f * sf.cpow(complex(x), g))
    if name == "atanh":
        return cmath.atanh(argvals[0] * x)
    if name == "log1p":
        c, s = argvals
        return cmath.log(1.0 + c * sf.cpow(complex(x), s))
    if name == "coef":
        return argvals[0]
    if name == "logsq":
        return cmath.log(argvals[0] ** 2 + lx * lx)
    if name == "ratlogsq":
        return 1.0 / (argvals[0] ** 2 + lx * lx)
    if name == "ratlogquart":
        a4 = argvals[0] ** 4
        return 1.0 / (a4 - lx ** 4)
    if name == "logshift":
        a, s = argvals
        return sf.clog(a + s * lx)
    if name == "osc_log_sin":
        b, g, m = argvals
        num = (x + b) ** 2 + g * g
        den = (x - b) ** 2 + g * g
        return cmath.log(num / den) * cmath.sin(m * x)
    raise EvaluationError(f"unknown factor {name!r}")


def realize_integrand(spec: IntegrandSpec, params: dict) -> IntegrandHandle:
    """Bind parameters and return a principal-branch integrand handle.

    The handle also exposes an offset-accurate evaluator for the upper
    interval endpoint: log-power factors need log(x) to stay accurate
    where the abscissa itself rounds onto the endpoint, and
    log(H - delta) = log(H) + log1p(-delta/H) provides it.
    """
    bound_terms = []
    for term in spec.terms:
        bound = []
        for name, args in term.factors:
            if name == "pow":
                vals = (None, evaluate_expr(args[1], params))
            else:
                vals = tuple(evaluate_expr(a, params) for a in args)
            bound.append((name, vals))
        bound_terms.append(bound)

    def evaluate_with_log(x, lx):
        total = 0.0 + 0.0j
        for bound in bound_terms:
            prod = 1.0 + 0.0j
            for name, vals in bound:
                prod *= _factor_value(name, vals, x, lx)
                if prod == 0:
                    break
            total += prod
        return total

    def evaluate(x):
        return evaluate_with_log(x, math.log(x))

    hi_val = evaluate_expr(spec.interval[1], params).real
    evaluate_from_upper = None
    skip_upper_ulp = False
    if math.isfinite(hi_val) and hi_val > 0:
        log_hi = math.log(hi_val)

        def evaluate_from_upper(delta, _h=hi_val, _lh=log_hi):
            return evaluate_with_log(_h - delta, _lh + math.log1p(-delta / _h))

        # a log factor whose argument vanishes at the endpoint through the
        # cancellation log(a) + log(H) = 0 (a != 1) cannot be resolved
        # inside the endpoint's last ulps; flag the zone for skipping
        for term in spec.terms:
            for name, args in term.factors:
                if name in ("logpow", "loglogrecip"):
                    a_val = evaluate_expr(args[0], params)
                    if abs(a_val - 1.0) > 1e-9 and abs(a_val * hi_val - 1.0) < 1e-9:
                        skip_upper_ulp = True

    sing = []
    for s_ast in spec.interior_singularities:
        v = evaluate_expr(s_ast, params)
        sing.append(v.real)

    # endpoint descriptor: net algebraic exponent at 0 and log-power order
    alg = 0.0
    logpow_order = 0.0
    nested_log = False
    for term in spec.terms:
        for name, args in term.factors:
            if name == "pow":
                alg = evaluate_expr(args[1], params).real
            elif name == "logpow":
                logpow_order = evaluate_expr(args[1], params).real
            elif name == "loglogrecip":
                nested_log = True
        break
    behavior = {"algebraic_exponent_at_0": alg,
                "log_power_order": logpow_order,
                "nested_log": nested_log}
    return IntegrandHandle(evaluate=evaluate, singular_points=sing,
                           endpoint_behavior=behavior,
                           evaluate_from_upper=evaluate_from_upper,
                           upper_ref=hi_val if math.isfinite(hi_val) else None,
                           skip_upper_ulp=skip_upper_ulp)


def realized_interval(spec: IntegrandSpec, params: dict):
    lo = evaluate_expr(spec.interval[0], params)
    hi = evaluate_expr(spec.interval[1], params)
    lo_f = lo.real
    hi_f = math.inf if hi.real == math.inf else hi.real
    return lo_f, hi_f


# ---------------------------------------------------------------------------
# series bindings
# ---------------------------------------------------------------------------

_SERIES_KINDS = {
    "main", "polynomial", "finite_interval", "general_binomial",
    "log_binomial", "bessel", "bessel_product", "exp_2f1",
    "lerch_integral", "hyp_integral", "bessel_log", "bessel_power",
    "bessel_exp", "nested_log", "binom_log_ratio", "finite_alt_log",
    "alt_log_shift", "sin_ratio", "bdh129",
}


@dataclass(frozen=True)
class SeriesSpec:
    kind: str
    bindings: tuple      # sorted tuple of (name, AST)
    prefactor: object = ("num", 1.0 + 0.0j)

    def binding_map(self):
        return dict(self.bindings)


def _collect_factors(vals, params):
    factors = []
    i = 1
    while f"f{i}_coeff" in vals or f"f{i}_kind" in vals:
        kind_ast = vals.get(f"f{i}_kind")
        kind = kind_ast[1] if kind_ast is not None else "binom"
        coeff = evaluate_expr(vals[f"f{i}_coeff"], params)
        expo = evaluate_expr(vals[f"f{i}_exp"], params)
        if kind == "log1p":
            factors.append(("log1p", coeff, expo))
        else:
            power = evaluate_expr(vals[f"f{i}_pow"], params)
            factors.append(se.BinomialFactor(coeff, expo, power))
        i += 1
    return factors


def evaluate_series(spec: SeriesSpec, params: dict, policy=DEFAULT_POLICY):
    """Dispatch a series binding to its engine evaluator."""
    vals = spec.binding_map()

    def get(name):
        return evaluate_expr(vals[name], params)

    def get_int(name):
        v = get(name)
        n = int(round(v.real))
        if abs(v - n) > 1e-9:
            raise EvaluationError(f"binding {name} must be an integer, got {v}")
        return n

    kind = spec.kind
    if kind == "main":
        p = se.TheoremMainParams(get("m"), get("k"), get("a"), get("b"), get("c"))
        res = se.eval_theorem_main(p, policy)
    elif kind == "polynomial":
        res = se.eval_polynomial_theorem(get("m"), get("b"), get_int("n"),
                                         get("k"), get("a"), policy)
    elif kind == "finite_interval":
        res = se.eval_finite_interval(get("m"), get("k"), get("a"), get("b"),
                                      get("c"), get("z"), get("d"), policy)
    elif kind == "general_binomial":
        factors = tuple(_collect_factors(vals, params))
        p = se.GeneralSeriesParams(get("m"), get("k"), get("a"), get("b"), factors)
        res = se.eval_general_binomial(p, policy)
    elif kind == "log_binomial":
        res = se.eval_log_binomial_family(get("m"), get("k"), get("a"),
                                          get("b"), get("c"), policy)
    elif kind == "bessel":
        res = se.eval_bessel_theorem(get("m"), get("b"), get_int("n"), get("v"),
                                     get("z"), get("k"), get("a"), policy)
    elif kind == "bessel_product":
        res = se.eval_bessel_product_theorem(get("m"), get("b"), get_int("n"),
                                             get("v"), get("mu"), get("z"),
                                             get("k"), get("a"), policy)
    elif kind == "exp_2f1":
        res = se.eval_exp_binomial_2f1_theorem(get("m"), get("b"), get_int("n"),
                                               get("s"), get("alpha"), get("beta"),
                                               get("gamma"), get("z"), get("k"),
                                               get("a"), policy)
    elif kind == "lerch_integral":
        res = se.eval_lerch_integral_theorem(get("m"), get("s"), get("v"),
                                             get("k"), get("a"), get("b"), policy)
    elif kind == "hyp_integral":
        res = se.eval_hypergeometric_integral_theorem(get("m"), get("alpha"),
                                                      get("beta"), get("gamma"),
                                                      get("k"), get("a"),
                                                      get("b"), policy)
    elif kind == "bessel_log":
        res = se.eval_bessel_log_theorem(get("m"), get("v"), get("k"),
                                         get("a"), get("b"), policy)
    elif kind == "bessel_power":
        res = se.eval_bessel_power_theorem(get("m"), get("v"), get("alpha"),
                                           get("k"), get("a"), get("b"), policy)
    elif kind == "bessel_exp":
        res = se.eval_bessel_exp_theorem(get("m"), get("v"), get("alpha"),
                                         get("f"), get("g"), get("c"), get("p"),
                                         get("d"), get("k"), get("a"),
                                         get("b"), policy)
    elif kind == "nested_log":
        factors = _collect_factors(vals, params)
        res = se.eval_nested_log_binomial(get("m"), get("a"), get("b"),
                                          factors, policy)
    elif kind == "binom_log_ratio":
        res = se.sum_binom_log_ratio(get("coeff"), get("outer"), get("p"),
                                     get("q"), policy)
    elif kind == "finite_alt_log":
        res = se.sum_finite_alt_log(get_int("n"), get("p"))
    elif kind == "alt_log_shift":
        res = se.sum_alternating_log_shift(get("u"), policy)
    elif kind == "sin_ratio":
        res = se.sum_sin_ratio(get("t"), policy)
    elif kind == "bdh129":
        res = se.sum_bdh_table129(get_int("n"), get("c"), get("b"), get("m"),
                                  get("q"), policy)
    else:
        raise EvaluationError(f"unknown series kind {kind!r}")
    pref = evaluate_expr(spec.prefactor, params)
    return se.SeriesResult(pref * res.value, res.terms_used,
                           abs(pref) * res.tail_estimate, res.accelerated)


# ---------------------------------------------------------------------------
# constraints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParameterConstraint:
    """One predicate; `box` predicates double as sampling intervals."""

    kind: str            # 'box' | 'cmp' | 'integer'
    text: str            # canonical source text
    payload: tuple       # box: (part, AST, lo, hi); cmp: (op, AST, AST); integer: (name,)

    def is_satisfied(self, params: dict) -> bool:
        if self.kind == "box":
            part, ast, lo, hi = self.payload
            v = evaluate_expr(ast, params)
            x = v.real if part == "re" else v.imag
            return lo - 1e-12 <= x <= hi + 1e-12
        if self.kind == "integer":
            v = complex(params.get(self.payload[0], 0.0))
            return abs(v.imag) < 1e-12 and abs(v.real - round(v.real)) < 1e-9
        op, left, right = self.payload
        a = evaluate_expr(left, params)
        b = evaluate_expr(right, params)
        if op == "=":
            return abs(a - b) <= 1e-12
        if op == "!=":
            return abs(a - b) > 1e-12
        x, y = a.real, b.real
        return {"<": x < y, "<=": x <= y + 1e-12, ">": x > y, ">=": x + 1e-12 >= y}[op]


def parse_constraint(text: str) -> ParameterConstraint:
    text = text.strip()
    if text.startswith("integer(") and text.endswith(")"):
        return ParameterConstraint("integer", text, (text[8:-1].strip(),))
    if " in [" in text:
        head, boxpart = text.split(" in [", 1)
        if not boxpart.endswith("]"):
            raise ParseError(f"malformed box constraint {text!r}")
        lo_s, hi_s = boxpart[:-1].split(",")
        head = head.strip()
        if head.startswith("re(") and head.endswith(")"):
            part, inner = "re", head[3:-1]
        elif head.startswith("im(") and head.endswith(")"):
            part, inner = "im", head[3:-1]
        else:
            raise ParseError(f"box constraint must wrap re()/im(): {text!r}")
        ast = parse_expr(inner)
        return ParameterConstraint("box", text, (part, ast, float(lo_s), float(hi_s)))
    for op in ("<=", ">=", "!=", "<", ">", "="):
        if op in text:
            left, right = text.split(op, 1)
            return ParameterConstraint(
                "cmp", text, (op, parse_expr(left), parse_expr(right))
            )
    raise ParseError(f"cannot parse constraint {text!r}")


# ---------------------------------------------------------------------------
# records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ErratumInfo:
    published_form: object       # AST of the table's (claimed wrong) form
    corrected_form: object       # AST; same as the record's closed form
    claim: str = "paper_says_unequal"


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    source: str
    lhs: IntegrandSpec
    rhs_series: SeriesSpec | None
    rhs_closed: object | None    # expression AST
    constraints: tuple
    default_params: tuple        # sorted tuple of (name, complex)
    erratum: ErratumInfo | None = None
    tolerance: float | None = None

    def defaults(self) -> dict:
        return dict(self.default_params)

    @property
    def uses_derivative_closed_form(self) -> bool:
        if self.rhs_closed is None:
            return False
        return bool(expr_functions(self.rhs_closed) & _DERIVATIVE_FUNCTIONS)

    def sampling_boxes(self):
        boxes = []
        for c in self.constraints:
            if c.kind == "box":
                part, ast, lo, hi = c.payload
                if ast[0] == "name":
                    boxes.append((part, ast[1], lo, hi))
        return boxes

    def check_constraints(self, params: dict) -> bool:
        return all(c.is_satisfied(params) for c in self.constraints)


# ---------------------------------------------------------------------------
# manifest parsing
# ---------------------------------------------------------------------------


def _parse_factor_list(text: str, line_no: int):
    """Parse `coef(..) * pow(x, ..) * ... + ...` into terms/interval/singular."""
    terms = []
    interval = (("num", 0.0 + 0.0j), ("num", 1.0 + 0.0j))
    singular = []
    # split top-level '+' (no leading sign support; use coef(-1) for signs)
    depth = 0
    chunks = []
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            chunks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    chunks.append("".join(cur))
    for chunk in chunks:
        factors = []
        depth = 0
        parts = []
        cur = []
        for ch in chunk:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "*" and depth == 0:
                parts.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        parts.append("".join(cur))
        for part in parts:
            part = part.strip()
            if not part:
                continue
            node = parse_expr(part)
            if node[0] != "call":
                raise ParseError(f"factor must be a grammar token: {part!r}", line_no)
            name, args = node[1], node[2]
            if name == "interval":
                if len(args) == 1:
                    interval = (("num", 0.0 + 0.0j), args[0])
                elif len(args) == 2:
                    interval = (args[0], args[1])
                else:
                    raise ParseError("interval takes 1 or 2 arguments", line_no)
                continue
            if name == "singular":
                singular.extend(args)
                continue
            if name not in _FACTOR_ARITY:
                raise ParseError(f"unknown integrand factor {name!r}", line_no)
            if len(args) != _FACTOR_ARITY[name]:
                raise ParseError(
                    f"{name} takes {_FACTOR_ARITY[name]} args, got {len(args)}",
                    line_no,
                )
            if name == "pow" and args[0] != ("name", "x"):
                raise ParseError("pow's first argument must be x", line_no)
            factors.append((name, tuple(args)))
        if factors:
            terms.append(IntegrandTerm(tuple(factors)))
    if not terms:
        raise ParseError("empty integrand", line_no)
    return IntegrandSpec(tuple(terms), interval, tuple(singular))


def _parse_series(text: str, line_no: int) -> SeriesSpec:
    text = text.strip()
    prefactor = ("num", 1.0 + 0.0j)
    if text.startswith("prefactor["):
        close = text.index("]")
        prefactor = parse_expr(text[10:close])
        text = text[close + 1:].strip().lstrip("*").strip()
    if "(" not in text or not text.endswith(")"):
        raise ParseError(f"series must be kind(bindings): {text!r}", line_no)
    kind = text[:text.index("(")].strip()
    if kind not in _SERIES_KINDS:
        raise ParseError(f"unknown series kind {kind!r}", line_no)
    inner = text[text.index("(") + 1:text.rindex(")")]
    bindings = []
    depth = 0
    cur = []
    parts = []
    for ch in inner:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur))
    for part in parts:
        if "=" not in part:
            raise ParseError(f"series binding must be name=expr: {part!r}", line_no)
        name, expr_s = part.split("=", 1)
        bindings.append((name.strip(), parse_expr(expr_s)))
    return SeriesSpec(kind, tuple(sorted(bindings)), prefactor)


def _parse_bindings(text: str, line_no: int):
    out = []
    text = text.strip()
    if not text:
        return tuple(out)
    depth = 0
    cur = []
    parts = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    for part in parts:
        if "=" not in part:
            raise ParseError(f"binding must be name=value: {part!r}", line_no)
        name, val_s = part.split("=", 1)
        val = evaluate_expr(parse_expr(val_s), {})
        out.append((name.strip(), val))
    return tuple(sorted(out))


_FIELDS = ("id", "source", "lhs", "rhs_series", "rhs_closed",
           "constraints", "defaults", "erratum_published", "tolerance")


def load_catalog(manifest_text: str):
    """Parse manifest text into validated IdentityRecords."""
    records = []
    block = {}
    block_line = 0

    def flush(line_no):
        if not block:
            return
        rec = _build_record(dict(block), block_line)
        records.append(rec)
        block.clear()

    for line_no, raw in enumerate(manifest_text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip():
            flush(line_no)
            continue
        if line.lstrip().startswith("#"):
            continue
        if ":" not in line:
            raise ParseError(f"expected 'field: value', got {line!r}", line_no)
        fieldname, value = line.split(":", 1)
        fieldname = fieldname.strip()
        if fieldname not in _FIELDS:
            raise ParseError(f"unknown field {fieldname!r}", line_no)
        if not block:
            block_line = line_no
        if fieldname in block:
            raise ParseError(f"duplicate field {fieldname!r}", line_no)
        block[fieldname] = (value.strip(), line_no)
    flush(len(manifest_text.splitlines()) + 1)

    seen = set()
    for rec in records:
        if rec.id in seen:
            raise ValidationError(rec.id, "id", "duplicate record id")
        seen.add(rec.id)
    return records


def _build_record(block: dict, line_no: int) -> IdentityRecord:
    for required in ("id", "source", "lhs", "constraints", "defaults"):
        if required not in block:
            raise ParseError(f"record missing field {required!r}", line_no)
    rid = block["id"][0]
    lhs = _parse_factor_list(*block["lhs"])
    series = _parse_series(*block["rhs_series"]) if "rhs_series" in block else None
    closed = parse_expr(block["rhs_closed"][0]) if "rhs_closed" in block else None
    constraints = tuple(
        parse_constraint(c)
        for c in block["constraints"][0].split(";")
        if c.strip()
    )
    defaults = _parse_bindings(*block["defaults"])
    tolerance = float(block["tolerance"][0]) if "tolerance" in block else None
    erratum = None
    if "erratum_published" in block:
        if closed is None:
            raise ValidationError(rid, "erratum_published",
                                  "erratum records need rhs_closed as corrected form")
        erratum = ErratumInfo(parse_expr(block["erratum_published"][0]), closed)
    rec = IdentityRecord(
        id=rid,
        source=block["source"][0],
        lhs=lhs,
        rhs_series=series,
        rhs_closed=closed,
        constraints=constraints,
        default_params=defaults,
        erratum=erratum,
        tolerance=tolerance,
    )
    _validate_record(rec)
    return rec


def _validate_record(rec: IdentityRecord):
    if rec.rhs_series is None and rec.rhs_closed is None:
        raise ValidationError(rec.id, "rhs", "need at least one of rhs_series/rhs_closed")
    params = rec.defaults()
    if rec.rhs_closed is not None:
        free = check_closed_vocabulary(rec.rhs_closed, rec.id)
        unbound = free - set(params)
        if unbound:
            raise ValidationError(rec.id, "rhs_closed", f"unbound names {sorted(unbound)}")
    if rec.erratum is not None:
        check_closed_vocabulary(rec.erratum.published_form, rec.id)
    if not rec.check_constraints(params):
        raise ValidationError(rec.id, "defaults", "defaults violate constraints")
    lo, hi = realized_interval(rec.lhs, params)
    if not (hi > lo):
        raise ValidationError(rec.id, "lhs", "empty interval")


# ---------------------------------------------------------------------------
# serialization (canonical, round-trips through load_catalog)
# ---------------------------------------------------------------------------


def _serialize_lhs(spec: IntegrandSpec) -> str:
    chunks = []
    for term in spec.terms:
        parts = []
        for name, args in term.factors:
            parts.append(name + "(" + ", ".join(expr_to_text(a) for a in args) + ")")
        chunks.append(" * ".join(parts))
    text = " + ".join(chunks)
    text += " * interval(" + expr_to_text(spec.interval[0]) + ", " + expr_to_text(spec.interval[1]) + ")"
    if spec.interior_singularities:
        text += " * singular(" + ", ".join(expr_to_text(s) for s in spec.interior_singularities) + ")"
    return text


def _serialize_series(spec: SeriesSpec) -> str:
    head = ""
    if spec.prefactor != ("num", 1.0 + 0.0j):
        head = "prefactor[" + expr_to_text(spec.prefactor) + "] "
    body = spec.kind + "(" + ", ".join(
        f"{name}={expr_to_text(ast)}" for name, ast in spec.bindings
    ) + ")"
    return head + body


def _serialize_complex(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    if z.real == 0:
        return repr(z.imag) + "j"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}j"


def serialize(records) -> str:
    out = []
    for rec in records:
        lines = [f"id: {rec.id}", f"source: {rec.source}",
                 f"lhs: {_serialize_lhs(rec.lhs)}"]
        if rec.rhs_series is not None:
            lines.append(f"rhs_series: {_serialize_series(rec.rhs_series)}")
        if rec.rhs_closed is not None:
            lines.append(f"rhs_closed: {expr_to_text(rec.rhs_closed)}")
        lines.append("constraints: " + "; ".join(c.text for c in rec.constraints))
        lines.append("defaults: " + ", ".join(
            f"{n}={_serialize_complex(v)}" for n, v in rec.default_params
        ))
        if rec.erratum is not None:
            lines.append("erratum_published: " + expr_to_text(rec.erratum.published_form))
        if rec.tolerance is not None:
            lines.append(f"tolerance: {rec.tolerance!r}")
        out.append("\n".join(lines))
    return "\n\n".join(out) + "\n"


def evaluate_closed_form(expr, params: dict) -> complex:
    """Evaluate a closed-form AST; errors carry the failing node."""
    return evaluate_expr(expr, params)


def builtin_catalog():
    """The embedded seed catalog (parsed once per process)."""
    from .builtin_catalog import BUILTIN_MANIFEST

    global _BUILTIN_CACHE
    if _BUILTIN_CACHE is None:
        _BUILTIN_CACHE = load_catalog(BUILTIN_MANIFEST)
    return list(_BUILTIN_CACHE)


_BUILTIN_CACHE = None
