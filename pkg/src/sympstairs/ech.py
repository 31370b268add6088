"""ECH capacity sequences of ellipsoids and the ratio lower bound.

The capacity sequence of E(1, a) lists the numbers m + n*a (integers
m, n >= 0, not both zero) in nondecreasing order with multiplicity.  The
truncated supremum of c_k(E(1,a)) / c_k(E(1,2b)) is a certified lower bound
for the embedding capacity into the polydisc P(lambda, lambda*b).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["CapacitySequence", "ech_lower_bound", "ech_sequence"]


@dataclass(frozen=True)
class CapacitySequence:
    a_param: Fraction
    values: tuple[Fraction, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def ech_sequence(a, n_terms: int) -> CapacitySequence:
    """First n_terms capacities of E(1, a), exactly.

    One lane per n (the values n*a + m for m = 0, 1, ...) merged through a
    heap; lane n+1 opens lazily when lane n emits its head.  Keys are scaled
    to integers q*(m + n*a) = q*m + n*p, so the heap never compares

    fractions.
    """
    a = Fraction(a)
    if a < 1:
        raise ValueError("needs a >= 1")
    if n_terms < 1:
        raise ValueError("needs at least one term")
    p, q = a.numerator, a.denominator
    # heap entries: (scaled value, lane n, offset m); (0, 0) is excluded
    heap = [(q, 0, 1), (p, 1, 0)]
    scaled: list[int] = []
    while len(scaled) < n_terms:
        val, lane, m = heapq.heappop(heap)
        scaled.append(val)
        heapq.heappush(heap, (val + q, lane, m + 1))
        if m == 0:
            heapq.heappush(heap, (p * (lane + 1), lane + 1, 0))
    return CapacitySequence(a, tuple(Fraction(v, q) for v in scaled))


def ech_lower_bound(b, a, n_terms: int) -> Fraction:
    """max over k <= n_terms of c_k(E(1,a)) / c_k(E(1,2b)).

    A certified lower bound for the capacity c_b(a) at integer b, where the
    polydisc and ellipsoid problems coincide; nondecreasing in n_terms.
    Rational b is accepted for exploratory scans of the ellipsoid target.
    """
    b = Fraction(b)
    if b < 1:
        raise ValueError("needs b >= 1")
    a = Fraction(a)
    if a < 1:
        raise ValueError("needs a >= 1")
    num = ech_sequence(a, n_terms).values
    den = ech_sequence(2 * b, n_terms).values
    best = Fraction(0)
    for x, y in zip(num, den):
        r = x / y
        if r > best:
            best = r
    return best
