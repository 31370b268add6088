"""Cremona moves at work: certifying classes and deciding embeddings.

A standard Cremona move sorts a vector, shifts the head and the three
largest entries by the defect, and sorts again.  A class is exceptional
when its push-forward walks down to (0; -1, 0, ..., 0); an embedding exists
when the first reduced vector in the orbit is nonnegative.
"""

from fractions import Fraction

from sympstairs import (
    gen_F,
    certification_trace,
    is_terminal_exceptional,
    method2_cb_decide,
    psi_push,
    reduce_to_reduced,
    volume_bound,
)

# Watch F_3 = (12,4;4,3^9) reduce: 3 moves, 1 move, 3 moves, as scheduled.
trace = certification_trace(gen_F(3))
print("reduction of psi(F_3):")
for line in trace.to_lines():
    print("  ", line)
print("terminal:", is_terminal_exceptional(trace.final), "in", trace.step_count, "moves\n")

# The same engine answers embedding questions.  c_2(7) = 7/5:
lam = Fraction(7, 5)
print("E(1,7) -> P(7/5, 14/5)?        ", method2_cb_decide(2, 7, lam))
print("E(1,7) -> P(0.9999*7/5, ...)?  ", method2_cb_decide(2, 7, lam * Fraction(9999, 10000)))

# On volume branches lambda is an exact square root and the vector square
# vanishes; the decision is still exact.
a = Fraction(17, 2)
lam = volume_bound(2, a)
print(f"E(1,17/2) -> P({lam}, 2*{lam})?", method2_cb_decide(2, a, lam))

# Raw vectors reduce too; polydisc-basis input goes through psi_push.
v = psi_push(10, 5, (4,) * 6 + (1,) * 5)  # the class G_2
print("\nG_2 pushes to", v, "and reduces in", reduce_to_reduced(v).step_count, "moves")
