"""Embedded seed manifest for the identity catalog.

Each record encodes one entry as printed in its source table (Gradshteyn
& Ryzhik, Prudnikov vol. I, Bierens de Haan, Brychkov, Nahin, or the
generalized theorem families), with mid-domain default parameters and
sampling boxes inside the stated validity strips.  Signs are carried by
coef() factors so that every lhs matches the printed integrand exactly;
series bindings are normalized to the (-log(a x))^k weight convention.
"""

BUILTIN_MANIFEST = """\
id: PAPER-2.11
source: main theorem family; incomplete-gamma series for x^(m-1)(-log(ax))^k/(1+c x^b)
lhs: pow(x, m-1) * logpow(a, k) * binom(c, b, -1) * interval(1)
rhs_series: main(m=m, k=k, a=a, b=b, c=c)
constraints: re(m) in [0.3, 1.5]; re(k) in [0.0, 2.0]; re(a) in [0.55, 1.0]; re(b) in [0.5, 2.5]; re(c) in [-0.8, 0.8]
defaults: m=0.75, k=1.25, a=0.8, b=1.5, c=0.6

id: GR-4.327.1
source: G&R 4.327.1; log(a^2+log^2 x)/(1+x^2)
lhs: logsq(a) * binom(1, 2, -1) * interval(1)
rhs_closed: pi*log(2*gamma((2*a+3*pi)/(4*pi))/gamma((2*a+pi)/(4*pi))) + (pi/2)*log(pi/2)
constraints: re(a) in [0.5, 3.0]; im(a) = 0
defaults: a=1.0

id: GR-4.327.3
source: G&R 4.327.3 (erratum noted in source); x^(m-1) log(a^2+log^2 x)
lhs: pow(x, m-1) * logsq(a) * interval(1)
rhs_closed: (exp(-1j*a*m)*en(1, -1j*a*m) + exp(1j*a*m)*en(1, 1j*a*m) + 2*log(a))/m
constraints: re(a) in [0.8, 3.0]; re(m) in [0.25, 0.95]; im(a) = 0; im(m) = 0
defaults: m=0.75, a=2.0

id: GR-4.325.1
source: G&R 4.325.1; log(-log t)/(1+t) = -log^2(2)/2
lhs: loglogrecip(1) * binom(1, 1, -1) * interval(1)
rhs_series: nested_log(m=0, a=1, b=1, f1_coeff=1, f1_exp=1, f1_pow=-1)
rhs_closed: -(log(2)^2)/2
constraints:
defaults:

id: GR-4.325.4
source: G&R 4.325.4; log(-log x)/(1+x^2)
lhs: loglogrecip(1) * binom(1, 2, -1) * interval(1)
rhs_series: nested_log(m=0, a=1, b=1, f1_coeff=1, f1_exp=2, f1_pow=-1)
rhs_closed: (pi/2)*log(sqrt(2*pi)*gamma(3/4)/gamma(1/4))
constraints:
defaults:

id: GR-4.325.5
source: G&R 4.325.5; log(-log x)/(1+x+x^2) via (1-x)/(1-x^3)
lhs: loglogrecip(1) * binom(-1, 1, 1) * binom(-1, 3, -1) * interval(1)
rhs_closed: pi*log((2*pi)^(1/3)*gamma(2/3)/gamma(1/3))/sqrt(3)
constraints:
defaults:

id: GR-4.325.7
source: G&R 4.325.7; log(-log x)/(1+x^2+2x cos t)
lhs: loglogrecip(1) * binom(exp(1j*t), 1, -1) * binom(exp(-1j*t), 1, -1) * interval(1)
rhs_closed: pi*log((2*pi)^(t/pi)*gamma(1/2+t/(2*pi))/gamma(1/2-t/(2*pi)))/(2*sin(t))
constraints: re(t) in [0.3, 1.4]; im(t) = 0
defaults: t=1.0471975511965976

id: GR-4.325.8
source: G&R 4.325.8; x^(v-1) log(-log x)
lhs: pow(x, v-1) * loglogrecip(1) * interval(1)
rhs_series: nested_log(m=v-1, a=1, b=1)
rhs_closed: -(euler_gamma + log(v))/v
constraints: re(v) in [0.05, 0.95]; im(v) = 0
defaults: v=0.5

id: GR-4.325.12
source: G&R 4.325.12; x^(v-1)(-log x)^(u-1) log(-log x)
lhs: pow(x, v-1) * logpow(1, u-1) * loglogrecip(1) * interval(1)
rhs_closed: -(v^(-u))*gamma(u)*(log(v) - psi(0, u))
constraints: re(v) in [0.05, 0.95]; re(u) in [0.3, 2.0]
defaults: v=0.5, u=1.5

id: GR-4.229.1
source: G&R 4.229.1; log(log(1/t)) = -euler_gamma
lhs: loglogrecip(1) * interval(1)
rhs_series: nested_log(m=0, a=1, b=1)
rhs_closed: -euler_gamma
constraints:
defaults:

id: GR-4.229.3
source: G&R 4.229.3; log(log(1/x))/sqrt(log(1/x))
lhs: loglogrecip(1) * logpow(1, -1/2) * interval(1)
rhs_closed: sqrt(pi)*(-euler_gamma - log(4))
constraints:
defaults:

id: GR-4.229.11
source: G&R 4.229.11; log^(u-1)(1/x) log(log(1/x))
lhs: logpow(1, u-1) * loglogrecip(1) * interval(1)
rhs_closed: gamma(u)*psi(0, u)
constraints: re(u) in [0.1, 0.9]
defaults: u=0.5

id: GR-4.229.5
source: G&R 4.229.5(7), erratum per source; log(a + log x), principal branch, branch point at x = exp(-a)
lhs: logshift(a, 1) * interval(1) * singular(exp(-a))
rhs_closed: log(a) - exp(-a)*ei(a) + 1j*pi*exp(-a)
constraints: re(a) in [0.5, 3.0]; im(a) = 0
defaults: a=1.5

id: GR-4.229.6
source: G&R 4.229.6, erratum per source; log(a - log x), real branch for a > 0
lhs: logshift(a, -1) * interval(1)
rhs_closed: log(a) + exp(a)*en(1, a)
constraints: re(a) in [0.5, 3.0]; im(a) = 0
defaults: a=1.5

id: GR-TBL-4.213
source: G&R Table 4.213 master form; x^m/(a^2+log^2 x)
lhs: pow(x, m) * ratlogsq(a) * interval(1)
rhs_closed: 1j*exp(-1j*a*(1+m))*(-en(1, -1j*a*(1+m)) + exp(2j*a*(1+m))*en(1, 1j*a*(1+m)))/(2*a)
constraints: re(a) in [0.5, 2.0]; re(m) in [-0.5, 0.5]; im(a) = 0; im(m) = 0
defaults: m=0.25, a=1.0

id: GR-TBL-4.214
source: G&R Table 4.214 master form; x^(m-1)/(a^4-log^4 x); complex pole off the path at the default a
lhs: pow(x, m-1) * ratlogquart(a) * interval(1)
rhs_closed: -(exp(-a*m)*en(1, -a*m) + 1j*exp(-1j*a*m)*(en(1, -1j*a*m) - exp(2j*a*m)*en(1, 1j*a*m)) - exp(a*m)*en(1, a*m))/(4*a^3)
constraints: re(m) in [0.3, 0.8]; re(a) > 0
defaults: m=0.5, a=1+0.5j

id: BDH-147.1
source: Bierens de Haan Table 147(1); x^(q-1) log(log(1/x))
lhs: pow(x, q-1) * loglogrecip(1) * interval(1)
rhs_series: nested_log(m=q-1, a=1, b=1)
rhs_closed: -(euler_gamma + log(q))/q
constraints: re(q) in [0.05, 0.95]; im(q) = 0
defaults: q=0.3

id: BDH-147.7
source: Bierens de Haan Table 147(7); log(log(1/x))/(1+x)^2
lhs: loglogrecip(1) * binom(1, 1, -2) * interval(1)
rhs_closed: (-euler_gamma + log(pi/2))/2
constraints:
defaults:

id: BDH-147.9
source: Bierens de Haan Table 147(9); log(log(1/x))/(1+2x cos(lam)+x^2)
lhs: loglogrecip(1) * binom(exp(1j*lam), 1, -1) * binom(exp(-1j*lam), 1, -1) * interval(1)
rhs_closed: pi*csc(lam)*log((2*pi)^(lam/pi)*gamma((pi+lam)/(2*pi))/gamma((pi-lam)/(2*pi)))/2
constraints: re(lam) in [0.3, 1.4]; im(lam) = 0
defaults: lam=1.0

id: BDH-129-THM
source: Bierens de Haan Table 129 master form; x^m log^n(x)/((1+c x^b)(q^2+log^2 x))
lhs: coef((-1)^n) * pow(x, m) * logpow(1, n) * binom(c, b, -1) * ratlogsq(q) * interval(1)
rhs_series: bdh129(n=n, c=c, b=b, m=m, q=q)
constraints: integer(n); re(c) in [0.1, 0.8]; re(b) in [0.5, 2.0]; re(m) in [-0.4, 0.6]; re(q) in [1.0, 3.0]
defaults: n=1, c=0.5, b=1.0, m=0.25, q=2.0

id: PAPER-3.47
source: Catalan family; t^(s-1) log(1/t)/(1+t^(2s)) = C/s^2
lhs: pow(x, s-1) * logpow(1, 1) * binom(1, 2*s, -1) * interval(1)
rhs_series: main(m=s, k=1, a=1, b=2*s, c=1)
rhs_closed: catalan/s^2
constraints: re(s) in [0.5, 3.5]; im(s) = 0
defaults: s=2.0

id: PAPER-PRIMEPI
source: prime-counting integral; dx/log x on [2, 10] vs incomplete gamma difference
lhs: coef(-1) * logpow(1, -1) * interval(2, 10)
rhs_closed: en(1, -log(2)) - en(1, -log(10))
constraints:
defaults:

id: GR-4.241.11
source: G&R 4.241.11; log x/(sqrt(x) sqrt(1-x^2))
lhs: coef(-1) * logpow(1, 1) * pow(x, -1/2) * binom(-1, 2, -1/2) * interval(1)
rhs_series: prefactor[-1] finite_interval(m=-1/2, k=1, a=1, b=1, c=2, z=-1, d=1/2)
rhs_closed: -(sqrt(2*pi)/8)*gamma(1/4)^2
constraints:
defaults:

id: GR-4.247.2
source: G&R 4.247.2(6); log x/(x^(n-1)(1-x^2))^(1/n)
lhs: coef(-1) * logpow(1, 1) * pow(x, (1-n)/n) * binom(-1, 2, -1/n) * interval(1)
rhs_series: prefactor[-1] finite_interval(m=(1-n)/n, k=1, a=1, b=1, c=2, z=-1, d=1/n)
rhs_closed: -pi*gamma(1/(2*n))^2/(8*sin(pi/(2*n))*gamma(1/n))
constraints: re(n) in [1.6, 4.0]
defaults: n=3.0

id: GR-4.274
source: G&R 4.274; x^(1/q-1)/sqrt(-log(e x)) on (0, 1/e); upper-endpoint algebraic singularity limits double-precision quadrature here
lhs: pow(x, 1/q-1) * logpow(exp(1), -1/2) * interval(exp(-1))
rhs_closed: exp(-1/q)*sqrt(q*pi)
constraints: re(q) in [1.0, 4.0]
defaults: q=2.0
tolerance: 2e-7

id: GR-4.275.1
source: G&R 4.275.1; (-(1-x)^(q-1) x^(p-1) + (-log x)^(q-1))
lhs: coef(-1) * binom(-1, 1, q-1) * pow(x, p-1) * interval(1) + logpow(1, q-1)
rhs_closed: gamma(q)*(1 - gamma(p)/gamma(p+q))
constraints: re(p) in [1.5, 3.5]; re(q) in [1.2, 2.4]
defaults: p=2.5, q=1.5

id: GR-4.261.21
source: G&R 4.261.21; (1-x)^(q-1) x^(p-1) log^2 x
lhs: binom(-1, 1, q-1) * pow(x, p-1) * logpow(1, 2) * interval(1)
rhs_series: finite_interval(m=p-1, k=2, a=1, b=1, c=1, z=-1, d=1-q)
rhs_closed: gamma(p)*gamma(q)*(psi(0,p)^2 - 2*psi(0,p)*psi(0,p+q) + psi(0,p+q)^2 + psi(1,p) - psi(1,p+q))/gamma(p+q)
constraints: re(p) in [1.5, 3.5]; re(q) in [1.2, 2.4]
defaults: p=2.5, q=1.5

id: GR-4.253.1
source: G&R 4.253.1(8); x^(u-1)(1-x^r)^(v-1) log x
lhs: coef(-1) * pow(x, u-1) * binom(-1, r, v-1) * logpow(1, 1) * interval(1)
rhs_series: prefactor[-1] finite_interval(m=u-1, k=1, a=1, b=1, c=r, z=-1, d=1-v)
rhs_closed: gamma(u/r)*gamma(v)*(psi(0, u/r) - psi(0, u/r+v))/(r^2*gamma(u/r+v))
constraints: re(u) in [1.0, 2.5]; re(r) in [1.5, 3.0]; re(v) in [1.5, 3.5]
defaults: u=1.5, r=2.0, v=2.5

id: GR-4.246
source: G&R 4.246; (1-x^2)^(n-1/2) log x
lhs: coef(-1) * binom(-1, 2, n-1/2) * logpow(1, 1) * interval(1)
rhs_series: prefactor[-1] finite_interval(m=0, k=1, a=1, b=1, c=2, z=-1, d=1/2-n)
rhs_closed: sqrt(pi)*gamma(n+1/2)*(psi(0, 1/2) - psi(0, 1+n))/(4*gamma(1+n))
constraints: re(n) in [0.75, 2.5]
defaults: n=1.2

id: GR-4.256
source: G&R 4.256; (1-x^w)^(u/w-1) log x
lhs: coef(-1) * binom(-1, w, u/w-1) * logpow(1, 1) * interval(1)
rhs_series: prefactor[-1] finite_interval(m=0, k=1, a=1, b=1, c=w, z=-1, d=1-u/w)
rhs_closed: gamma(1/w)*gamma(u/w)*(psi(0, 1/w) - psi(0, (1+u)/w))/(w^2*gamma((1+u)/w))
constraints: re(u) in [2.0, 4.0]; re(w) in [1.5, 3.0]
defaults: u=3.0, w=2.0

id: GR-4.267.12
source: G&R 4.267.12; (x^(p-1)-x^(q-1))/((1-a x)^n log x)
lhs: coef(-1) * pow(x, p-1) * binom(-a, 1, -n) * logpow(1, -1) * interval(1) + pow(x, q-1) * binom(-a, 1, -n) * logpow(1, -1)
rhs_series: binom_log_ratio(coeff=-a, outer=-n, p=p, q=q)
constraints: re(a) in [0.1, 0.8]; re(n) in [0.5, 2.5]; re(p) in [1.0, 3.0]; re(q) in [1.5, 4.0]
defaults: a=0.5, n=1.5, p=2.0, q=3.0

id: GR-4.267.14
source: G&R 4.267.14; (1+x^(1+2n))(x^p-x^q)/(x(1+x) log x)
lhs: coef(-1) * pow(x, p-1) * binom(1, 1+2*n, 1) * binom(1, 1, -1) * logpow(1, -1) * interval(1) + pow(x, q-1) * binom(1, 1+2*n, 1) * binom(1, 1, -1) * logpow(1, -1)
rhs_closed: log(gamma(1+n+p/2)*gamma((1+p)/2)*gamma(1/2+n+q/2)*gamma(q/2)/(gamma(p/2)*gamma((1+2*n+p)/2)*gamma(1+n+q/2)*gamma((1+q)/2)))
constraints: integer(n); re(p) in [0.5, 3.0]; re(q) in [0.5, 3.0]
defaults: n=1, p=1.5, q=2.5

id: GR-4.267.30
source: G&R 4.267.30, confirmed erratum; x^(s-1)(1-x^p)(1-x^q)/((1-x^(p+q+2s)) log x)
lhs: coef(-1) * pow(x, s-1) * binom(-1, p, 1) * binom(-1, q, 1) * binom(-1, p+q+2*s, -1) * logpow(1, -1) * interval(1)
rhs_closed: log(-1*gamma(-(q+s)/(p+q+2*s))*gamma((p+2*q+3*s)/(p+q+2*s))*sin(pi*s/(p+q+2*s))/pi)
constraints: re(p) in [0.5, 2.0]; re(q) in [1.0, 3.0]; re(s) in [0.5, 1.5]
defaults: s=1.0, p=1.0, q=2.0
erratum_published: 2*log(sin(pi*s/(p+q+2*s))/sin(pi*(p+s)/(p+q+2*s)))

id: GR-4.267.38
source: G&R 4.267.38, confirmed erratum; (2x-x^2-x^p-x^q+x^(p+q))/((1-x) log x), regrouped as x(1-x^(p-1))(1-x^(q-1))/((1-x)log x) + (x-x^(p+q-1))/log x for stable evaluation near x=1
lhs: coef(-1) * pow(x, 1) * binom(-1, p-1, 1) * binom(-1, q-1, 1) * binom(-1, 1, -1) * logpow(1, -1) * interval(1) + coef(-1) * pow(x, 1) * binom(-1, p+q-2, 1) * logpow(1, -1)
rhs_closed: log(2*p*q*gamma(p)*gamma(q)/gamma(1+p+q))
constraints: re(p) in [1.5, 3.5]; re(q) in [1.2, 2.5]
defaults: p=2.5, q=1.5
erratum_published: log(gamma(p)*gamma(q)/gamma(p+q))

id: GR-4.267.39
source: G&R 4.267.39; (-1+x^p)^n/log x
lhs: coef((-1)^(n+1)) * binom(-1, p, n) * logpow(1, -1) * interval(1)
rhs_series: finite_alt_log(n=n, p=p)
constraints: integer(n); re(p) in [0.5, 3.0]
defaults: n=2, p=1.5

id: GR-3.237
source: G&R 3.237, erratum per source; (t^(u-1)-t^u)/((1+t) log t) and its alternating log series
lhs: coef(-1) * pow(x, u-1) * binom(-1, 1, 1) * binom(1, 1, -1) * logpow(1, -1) * interval(1)
rhs_series: alt_log_shift(u=u)
rhs_closed: -log(u*gamma(u/2)^2/(2*gamma((u+1)/2)^2))
constraints: re(u) in [0.5, 3.0]
defaults: u=1.5

id: PRUD-2.6.3.1
source: Prudnikov 2.6.3.1; x^(alpha-1) log^sigma(a/x) on (0, a)
lhs: pow(x, alpha-1) * logpow(1/a, sigma) * interval(a)
rhs_series: finite_interval(m=alpha-1, k=sigma, a=1/a, b=a, c=1, z=0, d=0)
rhs_closed: a^alpha*alpha^(-1-sigma)*gamma(1+sigma)
constraints: re(alpha) in [0.5, 2.5]; re(sigma) in [0.2, 1.8]; re(a) in [1.0, 3.0]
defaults: a=2.0, alpha=1.5, sigma=0.75

id: PRUD-2.6.4.1
source: Prudnikov 2.6.4.1; x^(alpha-1) log^sigma(a/x)/(alpha^mu+x^mu)^rho on (0, a)
lhs: coef(alpha^(-mu*rho)) * pow(x, alpha-1) * logpow(1/a, sigma) * binom(alpha^(-mu), mu, -rho) * interval(a)
rhs_series: prefactor[alpha^(-mu*rho)] finite_interval(m=alpha-1, k=sigma, a=1/a, b=a, c=mu, z=alpha^(-mu), d=rho)
constraints: re(alpha) in [1.3, 2.0]; re(a) in [0.7, 1.1]; re(mu) in [0.8, 1.6]; re(rho) in [0.3, 1.2]; re(sigma) in [0.4, 1.8]; re(alpha - a) > 0
defaults: a=1.0, alpha=1.6, mu=1.2, rho=0.7, sigma=1.3

id: PRUD-2.6.5.2
source: Prudnikov 2.6.5.2, confirmed erratum; x^(alpha-1)(alpha^mu-x^mu)^m log^n(x/a) on (0, a)
lhs: coef((-1)^n * alpha^(mu*m)) * pow(x, alpha-1) * binom(-alpha^(-mu), mu, m) * logpow(1/a, n) * interval(a)
rhs_series: prefactor[(-1)^n * alpha^(mu*m)] finite_interval(m=alpha-1, k=n, a=1/a, b=a, c=mu, z=-alpha^(-mu), d=-m)
rhs_closed: (-1)^n*gamma(1+n)*a^alpha*alpha^(2*mu)*(alpha^(-1-n) - 2*((a/alpha)^mu)*(alpha+mu)^(-1-n) + ((a/alpha)^(2*mu))*(alpha+2*mu)^(-1-n))
constraints: integer(m); integer(n); re(alpha) in [1.2, 2.0]; re(mu) in [0.6, 1.5]; re(a) in [0.7, 1.1]; re(alpha - a) > 0
defaults: alpha=1.5, mu=1.0, m=2, n=1, a=1.0
erratum_published: (-1)^n*gamma(1+n)*a^(alpha+2*mu)*(alpha^(-1-n) - 2*(alpha+mu)^(-1-n) + (alpha+2*mu)^(-1-n))

id: PRUD-2.6.19.5
source: Prudnikov 2.6.19.5 generalized; log^(2n)(x) log(1+x z)/x
lhs: pow(x, -1) * logpow(1, 2*n) * log1p(z, 1) * interval(1)
rhs_series: log_binomial(m=0, k=2*n, a=1, b=1, c=z)
rhs_closed: -gamma(1+2*n)*polylog(2+2*n, -z)
constraints: integer(n); re(z) in [0.3, 0.95]
defaults: n=1, z=0.8

id: PAPER-BETA
source: Beta function via the finite-interval theorem; (1-x)^(q-1) x^(p-1)
lhs: pow(x, p-1) * binom(-1, 1, q-1) * interval(1)
rhs_series: finite_interval(m=p-1, k=0, a=1, b=1, c=1, z=-1, d=1-q)
rhs_closed: gamma(p)*gamma(q)/gamma(p+q)
constraints: re(p) in [1.0, 4.0]; re(q) in [1.0, 4.5]
defaults: p=2.5, q=1.5

id: PAPER-EULER-FIRST
source: Euler's first integral, generalized; x^(p-1)(1-x^w)^(q/w-1)
lhs: pow(x, p-1) * binom(-1, w, q/w-1) * interval(1)
rhs_series: finite_interval(m=p-1, k=0, a=1, b=1, c=w, z=-1, d=1-q/w)
rhs_closed: gamma(1+p/w)*gamma(q/w)/(p*gamma(p/w+q/w))
constraints: re(p) in [1.0, 2.5]; re(w) in [1.5, 3.0]; re(q) in [2.0, 3.5]
defaults: p=1.5, w=2.0, q=2.5

id: NAHIN-4.2.6
source: Nahin eq. 4.2.6; (1-x)^n x^n
lhs: pow(x, n) * binom(-1, 1, n) * interval(1)
rhs_series: finite_interval(m=n, k=0, a=1, b=1, c=1, z=-1, d=-n)
rhs_closed: 2^(-1-2*n)*sqrt(pi)*gamma(2+n)/((1+n)*gamma((3+2*n)/2))
constraints: re(n) in [0.5, 3.0]
defaults: n=1.5

id: NAHIN-C4.1
source: Nahin challenge C4.1; (1-sqrt(x))^n
lhs: binom(-1, 1/2, n) * interval(1)
rhs_series: finite_interval(m=0, k=0, a=1, b=1, c=1/2, z=-1, d=-n)
rhs_closed: 2/((1+n)*(2+n))
constraints: re(n) in [0.5, 4.0]
defaults: n=2.5

id: NAHIN-5.1.2
source: Nahin eq. 5.1.2; log x/(1+x^2) = -C
lhs: coef(-1) * logpow(1, 1) * binom(1, 2, -1) * interval(1)
rhs_series: prefactor[-1] main(m=1, k=1, a=1, b=2, c=1)
rhs_closed: -catalan
constraints:
defaults:

id: NAHIN-5.5
source: Nahin eq. 5.5 extended; (1+x^p z)/(1+x^w al)
lhs: binom(z, p, 1) * binom(al, w, -1) * interval(1)
rhs_closed: (lerchphi(-al, 1, 1/w) + z*lerchphi(-al, 1, (1+p)/w))/w
constraints: re(p) in [1.0, 2.5]; re(w) in [1.5, 3.0]; re(z) in [0.3, 0.9]; re(al) in [0.3, 0.9]
defaults: p=1.5, w=2.0, z=0.7, al=0.6

id: BRY-4.1.5.126
source: Brychkov 4.1.5.126; log x log((a+x)/(a-x))/x
lhs: coef(-2) * pow(x, -1) * logpow(1, 1) * atanh(1/a) * interval(1)
rhs_closed: polylog(3, -1/a) - polylog(3, 1/a)
constraints: re(a) in [1.5, 4.0]
defaults: a=2.0

id: BRY-4.1.5.7a
source: Brychkov 4.1.5.7; log(1+x^(2+sqrt(3)))/(1+x)
lhs: log1p(1, 2+sqrt(3)) * binom(1, 1, -1) * interval(1)
rhs_closed: pi^2*(1-sqrt(3))/12 + log(2)*log(1+sqrt(3))
constraints:
defaults:

id: BRY-4.1.5.7b
source: Brychkov 4.1.5.7; log(1+x^(3+2 sqrt(2)))/(1+x)
lhs: log1p(1, 3+2*sqrt(2)) * binom(1, 1, -1) * interval(1)
rhs_closed: pi^2*(3-sqrt(32))/24 + (1/2)*log(2)*(log(2) + (3/2)*log(3+sqrt(8)))
constraints:
defaults:

id: PAPER-ELLIPTIC-F
source: incomplete elliptic integral of the first kind as a double binomial series on (0, sin(phi))
lhs: binom(-1, 2, -1/2) * binom(-k2, 2, -1/2) * interval(sin(phi))
rhs_series: general_binomial(m=0, k=0, a=1, b=sin(phi), f1_coeff=-1, f1_exp=2, f1_pow=-1/2, f2_coeff=-k2, f2_exp=2, f2_pow=-1/2)
constraints: re(phi) in [0.3, 1.2]; re(k2) in [0.1, 0.7]
defaults: phi=pi/6, k2=0.25

id: GR-3.138.1
source: G&R 3.138.1; 1/sqrt(x(1-x)(1-k2 x)) on (0, u)
lhs: pow(x, -1/2) * binom(-1, 1, -1/2) * binom(-k2, 1, -1/2) * interval(u)
rhs_series: general_binomial(m=-1/2, k=0, a=1, b=u, f1_coeff=-1, f1_exp=1, f1_pow=-1/2, f2_coeff=-k2, f2_exp=1, f2_pow=-1/2)
constraints: re(u) in [0.3, 0.85]; re(k2) in [0.1, 0.6]
defaults: u=0.7, k2=0.36

id: GR-3.138.4
source: G&R 3.138.4; 1/(sqrt(x) sqrt(1+x) sqrt(1+k2 x)) on (0, u)
lhs: pow(x, -1/2) * binom(1, 1, -1/2) * binom(k2, 1, -1/2) * interval(u)
rhs_series: general_binomial(m=-1/2, k=0, a=1, b=u, f1_coeff=1, f1_exp=1, f1_pow=-1/2, f2_coeff=k2, f2_exp=1, f2_pow=-1/2)
constraints: re(u) in [0.3, 0.9]; re(k2) in [0.1, 0.6]
defaults: u=0.8, k2=0.25

id: GR-3.121.1
source: G&R 3.121.1; 1/(sqrt(x)(1+x^2-2x cos t))
lhs: pow(x, -1/2) * binom(-exp(1j*t), 1, -1) * binom(-exp(-1j*t), 1, -1) * interval(1)
rhs_series: sin_ratio(t=t)
rhs_closed: -1j*exp(1j*t/2)*(-atanh(exp(-1j*t/2)) + exp(1j*t)*atanh(exp(1j*t/2)))*(-1j + cos(t)/sin(t))
constraints: re(t) in [0.6, 1.5]; im(t) = 0
defaults: t=1.0471975511965976

id: PAPER-12.1
source: Lerch reduction of the double-binomial theorem; x^m (1+x^c z)^d log^k(1/x)/(1+x^s al)
lhs: pow(x, m) * binom(z, c, d) * binom(al, s, -1) * logpow(1, k) * interval(1)
rhs_series: general_binomial(m=m, k=k, a=1, b=1, f1_coeff=z, f1_exp=c, f1_pow=d, f2_coeff=al, f2_exp=s, f2_pow=-1)
rhs_closed: gamma(1+k)*s^(-1-k)*(lerchphi(-al, 1+k, (1+m)/s) + 2*z*lerchphi(-al, 1+k, (1+c+m)/s) + z^2*lerchphi(-al, 1+k, (1+2*c+m)/s))
constraints: integer(d); re(m) in [0.05, 0.8]; re(z) in [0.2, 0.7]; re(al) in [0.3, 0.9]; re(k) in [0.5, 2.5]; re(c) in [1.0, 2.0]; re(s) in [1.5, 2.5]
defaults: m=0.25, c=1.5, z=0.5, d=2, s=2.0, al=0.75, k=1.5

id: PAPER-15.1
source: triple-binomial Lerch family; x^(m-1)(1+x^s al)(1+x^g be)^2 log^k(1/x)/(1+x^c z)
lhs: pow(x, m-1) * binom(al, s, 1) * binom(be, g, 2) * binom(z, c, -1) * logpow(1, k) * interval(1)
rhs_series: general_binomial(m=m-1, k=k, a=1, b=1, f1_coeff=al, f1_exp=s, f1_pow=1, f2_coeff=be, f2_exp=g, f2_pow=2, f3_coeff=z, f3_exp=c, f3_pow=-1)
rhs_closed: gamma(1+k)*c^(-1-k)*(lerchphi(-z, 1+k, m/c) + 2*be*lerchphi(-z, 1+k, (m+g)/c) + be^2*lerchphi(-z, 1+k, (m+2*g)/c) + al*(lerchphi(-z, 1+k, (m+s)/c) + 2*be*lerchphi(-z, 1+k, (m+s+g)/c) + be^2*lerchphi(-z, 1+k, (m+s+2*g)/c)))
constraints: re(m) in [0.3, 0.9]; re(s) in [1.0, 2.0]; re(al) in [0.2, 0.6]; re(g) in [1.5, 2.5]; re(be) in [0.1, 0.5]; re(c) in [0.8, 1.5]; re(z) in [0.3, 0.8]; re(k) in [0.5, 2.0]
defaults: m=0.5, s=1.5, al=0.4, g=2.0, be=0.3, c=1.0, z=0.6, k=1.25

id: GR-4.382.5
source: G&R 4.382.5, oscillatory tier; log(((x+beta)^2+gam^2)/((x-beta)^2+gam^2)) sin(m x) on (0, inf)
lhs: osc_log_sin(beta, gam, m) * interval(0, inf)
rhs_closed: 2*pi*exp(-m*gam)*sin(m*beta)/m
constraints: re(m) in [0.6, 1.6]; re(beta) in [0.5, 1.5]; re(gam) in [1.5, 2.5]
defaults: m=1.0, beta=1.0, gam=2.0

id: PAPER-SING-1
source: singular-integrand example; x log(log(1/(2x)))/((2+x)(4+x^4)), branch point at x = 1/2
lhs: coef(1/8) * pow(x, 1) * loglogrecip(2) * binom(1/2, 1, -1) * binom(1/4, 4, -1) * interval(1) * singular(1/2)
rhs_series: prefactor[1/8] nested_log(m=1, a=2, b=1, f1_coeff=1/4, f1_exp=4, f1_pow=-1, f2_coeff=1/2, f2_exp=1, f2_pow=-1)
constraints:
defaults:

id: PAPER-SING-2
source: singular-integrand example; x log(log(1/(2x)))/(sqrt(2+x^2) sqrt(4+x^4)), branch point at x = 1/2
lhs: coef(2^(-3/2)) * pow(x, 1) * loglogrecip(2) * binom(1/2, 2, -1/2) * binom(1/4, 4, -1/2) * interval(1) * singular(1/2)
rhs_series: prefactor[2^(-3/2)] nested_log(m=1, a=2, b=1, f1_coeff=1/2, f1_exp=2, f1_pow=-1/2, f2_coeff=1/4, f2_exp=4, f2_pow=-1/2)
constraints:
defaults:

id: PAPER-SING-3
source: singular-integrand example; x sqrt(1-x^4/5) log(log(2/(3x)))/(x^2-2)^3, branch point at x = 2/3
lhs: coef(-1/8) * pow(x, 1) * binom(-1/5, 4, 1/2) * binom(-1/2, 2, -3) * loglogrecip(3/2) * interval(1) * singular(2/3)
rhs_series: prefactor[-1/8] nested_log(m=1, a=3/2, b=1, f1_coeff=-1/5, f1_exp=4, f1_pow=1/2, f2_coeff=-1/2, f2_exp=2, f2_pow=-3)
constraints:
defaults:

id: PAPER-FIG1
source: miscellaneous figure integrand; log(1-x) log(log(1/x))/x, real on (0, 1)
lhs: pow(x, -1) * log1p(-1, 1) * loglogrecip(1) * interval(1)
rhs_series: nested_log(m=-1, a=1, b=1, f1_kind=log1p, f1_coeff=-1, f1_exp=1)
rhs_closed: euler_gamma*pi^2/6 - zetad(1, 2, 1)
constraints:
defaults:
tolerance: 1e-6
"""
