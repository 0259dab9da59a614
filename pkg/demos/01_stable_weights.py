"""Build stable quadrature rules on equidistant points and inspect them.

The weights of a rule always sum to 2 (the length of [-1, 1]) and stay
strictly positive no matter how many points are used, as long as the basis
degree keeps its default cap of sqrt(point count - 1).
"""
import numpy as np

from gramquad import compute_rule

# A small rule, fully printed. Three points give a degree-1 basis, and the
# least-squares weights come out flat: every node carries weight 2/3.
rule = compute_rule(3)
print("P = 3 rule")
print("  nodes:  ", rule.nodes)
print("  weights:", rule.weights)
print()

# A medium rule. With 101 points the basis reaches degree 10, so the rule
# integrates all polynomials up to x^10 exactly.
rule = compute_rule(101)
print(f"P = 101 rule (degree cap {rule.degree})")
print(f"  weight sum: {rule.weights.sum():.15f}")
print(f"  weight range: [{rule.weights.min():.6f}, {rule.weights.max():.6f}]")
print()

# Positivity holds across scales. Classical equidistant rules lose this
# property quickly; here the minimum weight shrinks but never changes sign.
print(f"{'P':>8} {'degree':>7} {'min weight':>14} {'sum - 2':>12}")
for p in (5, 11, 26, 101, 401, 1001, 10001):
    rule = compute_rule(p)
    print(
        f"{p:>8} {rule.degree:>7} {rule.weights.min():>14.6e} "
        f"{rule.weights.sum() - 2.0:>12.2e}"
    )
print()

# The degree cap can be lowered explicitly; fewer basis polynomials means a
# smoother weight profile at the price of lower polynomial exactness.
for degree in (2, 6, 10):
    rule = compute_rule(101, degree)
    residual = abs(np.dot(rule.weights, rule.nodes**degree) - 2.0 / (degree + 1))
    print(f"degree {degree:>2}: exact up to x^{degree} (residual {residual:.2e})")
