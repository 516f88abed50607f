"""Closed-form threshold / size / round-count bounds for expander dynamics.

All functions are pure formula evaluation.  Vacuous bounds (negative blue
threshold, log base <= 1, and so on) are flagged, never clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class UndefinedBound(ValueError):
    """Requested bound is undefined for these parameters (e.g. sigma >= 1)."""


@dataclass(frozen=True)
class BoundsReport:
    n: int
    alpha: float
    sigma: float
    gamma: float
    b_low: float            # fully-red guarantee: b_0 <= b_low
    b_high: float           # fully-blue guarantee: b_0 >= b_high
    rounds_red_base: float  # log base for the red round bound
    rounds_blue_base: float
    b_low_floor: int
    b_high_ceil: int
    # which statements actually say something at these parameters
    red_threshold_meaningful: bool   # b_low >= 0
    blue_threshold_meaningful: bool  # b_high <= n
    red_rounds_meaningful: bool      # base > 1
    blue_rounds_meaningful: bool

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def round_cap(base: float, n: int, factor: float = 4.0) -> float:
    """Desk-scale cap for the O(log_base n) round bounds."""
    if base <= 1.0:
        return math.inf
    return factor * math.log(n) / math.log(base)


def irregular_alpha_bounds(n: int, alpha, sigma: float,
                           gamma: float) -> BoundsReport:
    """Blue/red seed thresholds for the fraction rule on a possibly
    irregular graph; gamma = min/max degree ratio (1 recovers the regular
    case exactly)."""
    alpha = float(Fraction(alpha)) if not isinstance(alpha, float) else alpha
    if not 0 < alpha < 1:
        raise UndefinedBound(f"alpha must be in (0,1), got {alpha}")
    if not 0 < gamma <= 1:
        raise UndefinedBound(f"gamma must be in (0,1], got {gamma}")
    if sigma < 0:
        raise UndefinedBound(f"sigma must be >= 0, got {sigma}")
    g3 = gamma ** 3
    denom_low = alpha * g3 + (1.0 - alpha)
    denom_high = (1.0 - alpha) * g3 + alpha
    b_low = (g3 / denom_low) * alpha * n \
        - (math.sqrt(2.0 / alpha) / denom_low) * sigma * n
    b_high = (1.0 / denom_high) * alpha * n \
        + (math.sqrt(2.0 / (1.0 - alpha)) / denom_high) * sigma * n
    if sigma > 0:
        red_base = (alpha ** 2) * (gamma ** 2) / (4.0 * sigma ** 2)
        blue_base = ((1.0 - alpha) ** 2) * (gamma ** 2) / (4.0 * sigma ** 2)
    else:
        red_base = blue_base = math.inf
    return BoundsReport(
        n=n, alpha=alpha, sigma=sigma, gamma=gamma,
        b_low=b_low, b_high=b_high,
        rounds_red_base=red_base, rounds_blue_base=blue_base,
        b_low_floor=math.floor(b_low), b_high_ceil=math.ceil(b_high),
        red_threshold_meaningful=b_low >= 0,
        blue_threshold_meaningful=b_high <= n,
        red_rounds_meaningful=red_base > 1.0,
        blue_rounds_meaningful=blue_base > 1.0,
    )


def alpha_bounds(n: int, alpha, sigma: float) -> BoundsReport:
    """Regular-graph seed thresholds: alpha*n -/+ sqrt(2/alpha or 2/(1-alpha))
    * sigma * n, with round-bound bases alpha^2/(4 sigma^2) and
    (1-alpha)^2/(4 sigma^2)."""
    return irregular_alpha_bounds(n, alpha, sigma, gamma=1.0)


def beta(r: int, d: int, sigma: float) -> float:
    """Scale parameter r / ((1 - sigma) d) for stable/target set sizes."""
    if r < 1 or d < 1:
        raise UndefinedBound(f"need r >= 1 and d >= 1, got r={r}, d={d}")
    if sigma >= 1.0:
        raise UndefinedBound(f"beta undefined for sigma={sigma} >= 1")
    return r / ((1.0 - sigma) * d)


def beta_prime(r: int, delta: int, Delta: int, sigma: float) -> float:
    """Irregular analogue r / ((1 - sigma/gamma) delta); equals beta when
    the graph is regular."""
    if delta < 1 or Delta < delta:
        raise UndefinedBound(f"need 1 <= delta <= Delta, got {delta}, {Delta}")
    gam = delta / Delta
    if sigma >= gam:
        raise UndefinedBound(
            f"beta' undefined for sigma={sigma} >= gamma={gam}")
    return r / ((1.0 - sigma / gam) * delta)


def target_size_bound(beta_value: float, n: int) -> float:
    """Guaranteed target-set size: 2*beta*n + 1/beta."""
    if beta_value <= 0:
        raise UndefinedBound(f"beta must be positive, got {beta_value}")
    return 2.0 * beta_value * n + 1.0 / beta_value
