"""Synchronous two-color threshold dynamics.

Blue/red states for one round are bitmasks over node ids (blue set; red is
the complement).  The update is simultaneous: every node is evaluated against
the previous round's coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .graph import Graph, GraphError


@dataclass(frozen=True)
class RThreshold:
    """Blue next round iff at least r neighbors are blue now."""
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")

    def __str__(self) -> str:
        return f"r={self.r}"


@dataclass(frozen=True)
class AlphaThreshold:
    """Blue next round iff at least an alpha fraction of neighbors are blue.

    alpha is kept as an exact rational so the tie case (exactly alpha*d(v)
    blue neighbors, which goes blue) never depends on float rounding.
    """
    alpha: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not 0 < a < 1:
            raise ValueError(f"alpha must be in (0,1), got {a}")

    def __str__(self) -> str:
        return f"alpha={self.alpha}"


ThresholdRule = Union[RThreshold, AlphaThreshold]


def parse_rule(text: str) -> ThresholdRule:
    """Parse 'r=3' or 'alpha=1/2' (also accepts 'alpha=0.5')."""
    key, _, val = text.partition("=")
    key = key.strip()
    if key == "r":
        return RThreshold(int(val))
    if key == "alpha":
        return AlphaThreshold(Fraction(val.strip()))
    raise ValueError(f"cannot parse rule {text!r}")


def blue_threshold(rule: ThresholdRule, degree: int) -> int:
    """Minimum blue-neighbor count that makes a node of this degree blue."""
    if isinstance(rule, RThreshold):
        return rule.r
    p, q = rule.alpha.numerator, rule.alpha.denominator
    return -((-p * degree) // q)  # ceil(alpha * degree)


def step(g: Graph, blue: int, rule: ThresholdRule) -> int:
    """One synchronous round; returns the new blue set."""
    if isinstance(rule, AlphaThreshold):
        if g.min_degree < 1:
            raise GraphError("alpha-threshold undefined on isolated nodes")
        p, q = rule.alpha.numerator, rule.alpha.denominator
        new = 0
        for v in range(g.n):
            if (g.adj_mask[v] & blue).bit_count() * q >= p * g.degrees[v]:
                new |= 1 << v
        return new
    r = rule.r
    new = 0
    for v in range(g.n):
        if (g.adj_mask[v] & blue).bit_count() >= r:
            new |= 1 << v
    return new


@dataclass(frozen=True)
class RunResult:
    rounds_to_limit: int
    period: int  # 1 or 2
    limit_states: Tuple[int, ...]  # one or two blue masks
    outcome: str  # all_blue | all_red | mixed_fixed | two_cycle
    b_trace: Tuple[int, ...]  # |B_t| per round, up to entering the limit


class NonConvergence(RuntimeError):
    """max_rounds exhausted without a period-1 or period-2 limit.

    Synchronous symmetric threshold dynamics always settle into period <= 2,
    so hitting this signals a bug or an absurdly small max_rounds.
    """


def run(g: Graph, blue0: int, rule: ThresholdRule,
        max_rounds: int | None = None) -> RunResult:
    """Iterate until a fixed point or a 2-cycle is entered."""
    if max_rounds is None:
        max_rounds = max(4, g.n * g.n)
    full = g.full_mask
    trace = [blue0.bit_count()]
    prev2: int | None = None
    prev = blue0
    for t in range(1, max_rounds + 1):
        cur = step(g, prev, rule)
        if cur == prev:
            outcome = ("all_blue" if cur == full
                       else "all_red" if cur == 0 else "mixed_fixed")
            return RunResult(rounds_to_limit=t - 1, period=1,
                             limit_states=(cur,), outcome=outcome,
                             b_trace=tuple(trace))
        if cur == prev2:
            return RunResult(rounds_to_limit=t - 2, period=2,
                             limit_states=(prev2, prev), outcome="two_cycle",
                             b_trace=tuple(trace))
        trace.append(cur.bit_count())
        prev2, prev = prev, cur
    raise NonConvergence(f"no limit within {max_rounds} rounds")


def ball_coloring(g: Graph, v: int, ell: int) -> int:
    """Blue = all nodes within hop distance ell of v, red elsewhere."""
    return g.ball(v, ell)
