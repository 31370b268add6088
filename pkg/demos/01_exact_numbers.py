"""Exact arithmetic in Q(sqrt(d)): construction, signs, and field discipline.

Every quantity in this library is a Fraction or a QuadNum p + q*sqrt(d).
Nothing is ever rounded; comparisons are decided by integer arithmetic.
"""

from fractions import Fraction

from sympstairs import IncompatibleFieldError, quad_make, sign, sqrt_rational

# Radicands normalise to a squarefree integer, extracting square factors.
print("sqrt(8/4)  ->", sqrt_rational(Fraction(8, 4)))      # 0+1*sqrt(2)
print("sqrt(50/9) ->", sqrt_rational(Fraction(50, 9)))     # 5/3 sqrt(2)
print("1 + sqrt(9/4) collapses to", quad_make(1, 1, Fraction(9, 4)))

# Exact signs settle razor-thin comparisons that floats would fumble.
x = 3 - 2 * sqrt_rational(2)            # 3 - 2.828... > 0 since 9 > 8
y = 7 - 5 * sqrt_rational(2)            # 7 - 7.071... < 0 since 49 < 50
print("sign(3-2*sqrt(2)) =", sign(x))
print("sign(7-5*sqrt(2)) =", sign(y))

# Arithmetic stays in one field; conjugates make division exact.
s2 = sqrt_rational(2)
print("(1+sqrt(2)) * (1-sqrt(2)) =", (1 + s2) * (1 - s2))
z = Fraction(1, 3) + Fraction(2, 7) * s2
print("z * (1/z) =", z * (1 / z))

# Mixing distinct radicands is a hard error, not a silent approximation.
try:
    sqrt_rational(2) + sqrt_rational(3)
except IncompatibleFieldError as exc:
    print("mixing fields:", exc)
