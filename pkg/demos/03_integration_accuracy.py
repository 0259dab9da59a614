"""Integrating sampled functions: exactness, convergence, other intervals.

A rule with degree cap M reproduces the integral of any polynomial up to
degree M at rounding level. Smooth non-polynomial integrands converge as
the point count (and with it the cap) grows; integration over an arbitrary
interval [a, b] is an affine change of variables away.
"""
import numpy as np

from gramquad import compute_rule, integrate, integrate_on_interval

# Polynomials inside the degree cap are integrated exactly. The quartic
# below needs cap >= 4, available from P = 17 onward.
quartic = lambda x: 9 * x**2 + 585 * x**3 + 16 * x**4
rule = compute_rule(101)
estimate = integrate(rule, quartic(rule.nodes))
print(f"quartic over [-1, 1]: estimate {estimate!r}, exact 12.4")
print()

# Smooth integrands: error falls with the point count. Note the cap only
# grows like sqrt(P), so convergence is steady rather than spectral; that
# is the price of keeping equidistant samples and positive weights.
targets = {
    "exp(x)": (np.exp, np.exp(1) - np.exp(-1)),
    "1/(1+25x^2)": (lambda x: 1 / (1 + 25 * x**2), 2 * np.arctan(5) / 5),
}
print(f"{'P':>7} {'degree':>7} {'exp(x) error':>14} {'runge error':>14}")
for p in (11, 101, 1001, 10001):
    rule = compute_rule(p)
    errors = []
    for _, (f, exact) in targets.items():
        errors.append(abs(integrate(rule, f(rule.nodes)) - exact))
    print(f"{p:>7} {rule.degree:>7} {errors[0]:>14.3e} {errors[1]:>14.3e}")
print()

# Arbitrary intervals: sample the integrand at the affinely mapped nodes
# and hand those samples to integrate_on_interval.
rule = compute_rule(101)
a, b = 0.0, np.pi
mapped = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes
estimate = integrate_on_interval(rule, a, b, np.sin(mapped))
print(f"integral of sin over [0, pi]: {estimate!r} (exact 2)")
