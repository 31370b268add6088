"""Cremona transforms and the reduction algorithm on blow-up vectors.

A blow-up vector is a head value with a finite tail, written (mu; a1,...,an)
in the ball basis or (d; m1,...,mn) in the homology basis.  Tails are
logically infinite with zeros: the defect and the Cremona transform pad to
three entries as needed, and trailing zeros are trimmed only on output.
Entries may be Fractions or QuadNums of one shared field; transforms never
divide, so exactness is free.

The reduction loop applies standard Cremona moves (sort descending, apply
the transform, sort again) until the first reduced vector appears, recording
every step so that traces can be replayed and serialized.  All values are
immutable; independent reductions are safe to run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from .numbers import Value, bounds, format_exact, parse_exact, sign

__all__ = [
    "BlowupVector",
    "ReductionLimitError",
    "ReductionStep",
    "ReductionTrace",
    "cremona_transform",
    "default_max_steps",
    "defect",
    "format_vector",
    "is_reduced",
    "is_terminal_exceptional",
    "method2_decide",
    "parse_vector",
    "reduce_to_reduced",
    "standard_move",
]


def _coerce(x) -> Value:
    return Fraction(x) if isinstance(x, int) else x


@dataclass(frozen=True)
class BlowupVector:
    """Head plus tail; ``head2`` is set only for polydisc-basis (d,e;m) vectors."""

    head: Value
    tail: tuple[Value, ...]
    basis: str = "ball"
    head2: Optional[Value] = None

    def __post_init__(self):
        object.__setattr__(self, "head", _coerce(self.head))
        if self.head2 is not None:
            object.__setattr__(self, "head2", _coerce(self.head2))
        object.__setattr__(self, "tail", tuple(_coerce(t) for t in self.tail))
        if (self.basis == "polydisc") != (self.head2 is not None):
            raise ValueError("polydisc-basis vectors carry exactly two head components")

    def _single_head(self) -> Value:
        if self.head2 is not None:
            raise ValueError("polydisc-basis vector: convert via psi_push first")
        return self.head

    def padded_tail(self, n: int = 3) -> tuple[Value, ...]:
        if len(self.tail) >= n:
            return self.tail
        return self.tail + (Fraction(0),) * (n - len(self.tail))

    def sorted(self) -> "BlowupVector":
        self._single_head()
        values, _ = _sort_desc(self.tail)
        return BlowupVector(self.head, values, self.basis)

    def trimmed(self) -> "BlowupVector":
        tail = list(self.tail)
        while tail and tail[-1] == 0:
            tail.pop()
        return BlowupVector(self.head, tuple(tail), self.basis, self.head2)

    def eq_up_to_order(self, other: "BlowupVector") -> bool:
        """Equal head and equal tail multisets, ignoring trailing zeros."""
        if sign(self._single_head() - other._single_head()) != 0:
            return False
        a, _ = _sort_desc(self.trimmed().tail)
        b, _ = _sort_desc(other.trimmed().tail)
        return len(a) == len(b) and all(sign(x - y) == 0 for x, y in zip(a, b))

    def __str__(self):
        return format_vector(self)


def _sort_desc(values: Sequence[Value]) -> tuple[tuple[Value, ...], tuple[int, ...]]:
    """Stable descending sort; returns (sorted values, permutation of indices)."""

    def cmp(i: int, j: int) -> int:
        s = sign(values[j] - values[i])
        return s if s else i - j

    order = tuple(sorted(range(len(values)), key=cmp_to_key(cmp)))
    return tuple(values[i] for i in order), order


def defect(v: BlowupVector) -> Value:
    """delta = head minus the first three tail entries (zero-padded)."""
    t = v.padded_tail()
    return v._single_head() - t[0] - t[1] - t[2]


def cremona_transform(v: BlowupVector) -> BlowupVector:
    """The raw Cremona transform: shift head and first three entries by delta.

    An involution; no reordering is performed.
    """
    t = v.padded_tail()
    d = v._single_head() - t[0] - t[1] - t[2]
    return BlowupVector(v.head + d, (t[0] + d, t[1] + d, t[2] + d) + t[3:], v.basis)


def standard_move(v: BlowupVector) -> BlowupVector:
    """Sort descending, apply the Cremona transform, sort again."""
    return cremona_transform(v.sorted()).sorted()


def is_reduced(v: BlowupVector) -> bool:
    """True iff the tail is non-increasing and the defect is >= 0."""
    t = v.tail
    for x, y in zip(t, t[1:]):
        if sign(x - y) < 0:
            return False
    return sign(defect(v)) >= 0


def is_terminal_exceptional(v: BlowupVector) -> bool:
    """True iff the vector is (0; -1, 0, ..., 0) up to permutation."""
    if sign(v._single_head()) != 0:
        return False
    minus = 0
    for t in v.tail:
        if t == -1:
            minus += 1
        elif t != 0:
            return False
    return minus == 1


@dataclass(frozen=True)
class ReductionStep:
    """One standard move: the sorted vector it acted on, the defect used,
    and the permutation that restored descending order afterwards."""

    before: BlowupVector
    defect: Value
    permutation: tuple[int, ...]


@dataclass(frozen=True)
class ReductionTrace:
    initial: BlowupVector
    steps: tuple[ReductionStep, ...]
    final: BlowupVector
    exhausted: bool = field(default=False)

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def replay(self) -> BlowupVector:
        """Re-run the recorded defects and permutations from the initial vector."""
        v = self.initial
        current = BlowupVector(v.head, v.padded_tail(), v.basis).sorted()
        for step in self.steps:
            moved = cremona_transform(current)
            if sign(moved.head - current.head - step.defect) != 0:
                raise ValueError("trace defect does not match replayed vector")
            tail = tuple(moved.tail[i] for i in step.permutation)
            current = BlowupVector(moved.head, tail, moved.basis)
        return current

    def to_lines(self) -> list[str]:
        lines = [f"init {format_vector(self.initial.trimmed())}"]
        v = self.initial
        current = BlowupVector(v.head, v.padded_tail(), v.basis).sorted()
        for step in self.steps:
            moved = cremona_transform(current)
            tail = tuple(moved.tail[i] for i in step.permutation)
            current = BlowupVector(moved.head, tail, moved.basis)
            lines.append(f"{format_exact(step.defect)} {format_vector(current.trimmed())}")
        return lines


class ReductionLimitError(RuntimeError):
    """Raised when the move cap is exhausted; carries the partial trace."""

    def __init__(self, trace: ReductionTrace):
        self.trace = trace
        super().__init__(
            f"no reduced vector within {trace.step_count} standard Cremona moves"
        )


def _ceil_value(x: Value) -> int:
    hi = bounds(x)[1]
    return math.ceil(hi)


def default_max_steps(v: BlowupVector) -> int:
    """Default move cap: 10 * (tail length + head magnitude, rounded up)."""
    return 10 * (len(v.tail) + _ceil_value(abs(v._single_head())))


def reduce_to_reduced(v: BlowupVector, max_steps: Optional[int] = None) -> ReductionTrace:
    """Apply standard Cremona moves until the first reduced vector.

    Raises :class:`ReductionLimitError` (with the partial trace attached) if
    no reduced vector appears within ``max_steps`` moves.
    """
    if sign(v._single_head()) < 0:
        raise ValueError("reduction requires a nonnegative head")
    cap = default_max_steps(v) if max_steps is None else max_steps
    work = BlowupVector(v.head, v.padded_tail(), v.basis).sorted()
    steps: list[ReductionStep] = []
    while not is_reduced(work):
        if len(steps) >= cap:
            raise ReductionLimitError(
                ReductionTrace(v, tuple(steps), work, exhausted=True)
            )
        delta = defect(work)
        moved = cremona_transform(work)
        tail, perm = _sort_desc(moved.tail)
        steps.append(ReductionStep(before=work, defect=delta, permutation=perm))
        work = BlowupVector(moved.head, tail, moved.basis)
    return ReductionTrace(v, tuple(steps), work)


def method2_decide(mu, a_list, max_steps: Optional[int] = None) -> bool:
    """Decide whether (mu; a1,...,an) lies in the closure of the symplectic cone.

    Returns True (embeds) iff the first reduced vector in the standard-move
    orbit has only nonnegative entries.  A negative square mu^2 - sum(ai^2)
    is an immediate no.
    """
    mu = _coerce(mu)
    if sign(mu) < 0:
        raise ValueError("head must be nonnegative")
    tail = tuple(_coerce(a) for a in a_list)
    alpha_sq = mu * mu - sum((a * a for a in tail), Fraction(0))
    if sign(alpha_sq) < 0:
        return False
    trace = reduce_to_reduced(BlowupVector(mu, tail), max_steps)
    final = trace.final
    return sign(final.head) >= 0 and all(sign(t) >= 0 for t in final.tail)


def format_vector(v: BlowupVector) -> str:
    """Render "(head;t1,...,tn)"; polydisc vectors render as "(d,e;m...)"."""
    if v.head2 is not None:
        head = f"{format_exact(v.head)},{format_exact(v.head2)}"
    else:
        head = format_exact(v.head)
    return f"({head};{','.join(format_exact(t) for t in v.tail)})"


def parse_vector(s: str) -> BlowupVector:
    """Parse the textual vector format accepted by the CLI ``reduce`` command."""
    text = s.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if ";" not in text:
        raise ValueError(f"not a blow-up vector: {s!r}")
    head_part, tail_part = text.split(";", 1)
    heads = [parse_exact(h) for h in head_part.split(",")]
    tail_part = tail_part.strip()
    tail = tuple(parse_exact(t) for t in tail_part.split(",")) if tail_part else ()
    if len(heads) == 1:
        return BlowupVector(heads[0], tail)
    if len(heads) == 2:
        return BlowupVector(heads[0], tail, basis="polydisc", head2=heads[1])
    raise ValueError(f"too many head components in {s!r}")
