"""Desk-scale experiment suite with reproducible seeding and CSV output.

Every experiment derives per-trial seeds from a master seed with a stable
hash, so (config, master_seed) fixes the output byte for byte.
"""

from __future__ import annotations

import csv
import hashlib
import math
import random
from fractions import Fraction
from io import StringIO
from typing import Dict, Iterable, List, Sequence

from . import __version__
from .bounds import irregular_alpha_bounds, beta as beta_formula, \
    target_size_bound
from .dynamics import AlphaThreshold, RThreshold, ThresholdRule, run, step
from .generators import gen_random_regular
from .graph import Graph, mask_of
from .monopoly import build_target_set
from .spectral import normalized_spectrum


def derive_seed(master_seed: int, index: int) -> int:
    """Stable 64-bit per-trial seed."""
    digest = hashlib.blake2b(f"{master_seed}:{index}".encode(),
                             digest_size=8).digest()
    return int.from_bytes(digest, "big")


def random_blue_set(n: int, b0: int, seed: int) -> int:
    rng = random.Random(seed)
    return mask_of(rng.sample(range(n), b0))


def render_csv(meta: Dict, fieldnames: Sequence[str],
               rows: Iterable[Dict]) -> str:
    """CSV with a '#'-comment header echoing the config."""
    buf = StringIO()
    buf.write(f"# expanderlab {__version__}\n")
    for key in sorted(meta):
        buf.write(f"# {key} = {meta[key]}\n")
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def threshold_sweep(n: int, d: int, alpha: Fraction, b0_values: Sequence[int],
                    trials: int, master_seed: int,
                    max_rounds: int | None = None):
    """Outcome frequencies vs initial blue count on one random regular graph.

    Returns (meta, fieldnames, rows); meta carries the measured sigma and the
    overlaid seed thresholds.
    """
    g = gen_random_regular(n, d, derive_seed(master_seed, 0))
    prof = normalized_spectrum(g)
    report = irregular_alpha_bounds(n, alpha, prof.sigma, 1.0)
    rule = AlphaThreshold(alpha)
    rows = []
    trial_idx = 1
    for b0 in b0_values:
        blue_ct = red_ct = 0
        rounds_sum = 0
        for _ in range(trials):
            blue = random_blue_set(n, b0, derive_seed(master_seed, trial_idx))
            trial_idx += 1
            res = run(g, blue, rule, max_rounds)
            if res.outcome == "all_blue":
                blue_ct += 1
            elif res.outcome == "all_red":
                red_ct += 1
            rounds_sum += res.rounds_to_limit
        rows.append({"b0": b0, "trials": trials,
                     "frac_all_blue": blue_ct / trials,
                     "frac_all_red": red_ct / trials,
                     "mean_rounds": rounds_sum / trials})
    meta = {"experiment": "threshold-sweep", "n": n, "d": d,
            "alpha": str(alpha), "sigma": prof.sigma,
            "b_low": report.b_low, "b_high": report.b_high,
            "trials": trials, "master_seed": master_seed,
            "vacuous_red": not report.red_threshold_meaningful,
            "vacuous_blue": not report.blue_threshold_meaningful}
    return meta, ["b0", "trials", "frac_all_blue", "frac_all_red",
                  "mean_rounds"], rows


def round_scaling(ns: Sequence[int], d: int, alpha: Fraction, rel_b0: float,
                  trials: int, master_seed: int):
    """Rounds-to-consensus vs n at fixed degree and relative seed size."""
    rule = AlphaThreshold(alpha)
    rows = []
    idx = 0
    fitted_c = 0.0
    for n in ns:
        g = gen_random_regular(n, d, derive_seed(master_seed, idx))
        idx += 1
        b0 = min(n, round(rel_b0 * n))
        rounds = []
        for _ in range(trials):
            blue = g.full_mask if b0 == n else random_blue_set(
                n, b0, derive_seed(master_seed, idx))
            idx += 1
            rounds.append(run(g, blue, rule).rounds_to_limit)
        mean_rounds = sum(rounds) / len(rounds)
        fitted_c = max(fitted_c, mean_rounds / math.log(n))
        rows.append({"n": n, "b0": b0, "trials": trials,
                     "mean_rounds": mean_rounds, "max_rounds": max(rounds)})
    meta = {"experiment": "round-scaling", "d": d, "alpha": str(alpha),
            "rel_b0": rel_b0, "trials": trials, "master_seed": master_seed,
            "fitted_c_log": fitted_c}
    return meta, ["n", "b0", "trials", "mean_rounds", "max_rounds"], rows


def mixing_check(g: Graph, sigma: float, pairs: int,
                 master_seed: int, tol: float = 1e-9) -> Dict:
    """Sample (A, B) pairs and test the edge-count concentration inequality."""
    if not g.is_regular():
        raise ValueError("mixing check requires a regular graph")
    n, d = g.n, g.max_degree
    violations = 0
    worst_slack = -math.inf
    rng = random.Random(derive_seed(master_seed, 0))
    for _ in range(pairs):
        a = mask_of(v for v in range(n) if rng.random() < 0.5)
        b = mask_of(v for v in range(n) if rng.random() < 0.5)
        ka, kb = a.bit_count(), b.bit_count()
        lhs = abs(g.edge_boundary_count(a, b) - ka * kb * d / n)
        rhs = sigma * d * math.sqrt(ka * kb * (1 - ka / n) * (1 - kb / n))
        if lhs > rhs + tol:
            violations += 1
        worst_slack = max(worst_slack, lhs - rhs)
    return {"pairs": pairs, "violations": violations,
            "worst_slack": worst_slack, "sigma": sigma, "n": n, "d": d}


def tightness_ball(n: int, d: int, ell: int, alpha: Fraction,
                   master_seed: int, center: int = 0,
                   max_rounds: int | None = None) -> Dict:
    """Blue ball of the given radius on a random regular graph.

    Tracks the center node explicitly: with a small seed the graph must die
    to all red, but only after the ball has been eaten inwards, so the center
    stays blue for the first rounds and the die-out takes >= ell rounds.
    """
    g = gen_random_regular(n, d, derive_seed(master_seed, 0))
    blue = g.ball(center, ell)
    b0 = blue.bit_count()
    rule = AlphaThreshold(alpha)
    if max_rounds is None:
        max_rounds = max(4, n)
    center_blue_rounds = 0  # consecutive rounds 0..k-1 with center blue
    cur = blue
    rounds_to_all_red = None
    t = 0
    while t < max_rounds:
        if cur >> center & 1 and center_blue_rounds == t:
            center_blue_rounds = t + 1
        if cur == 0:
            rounds_to_all_red = t
            break
        nxt = step(g, cur, rule)
        if nxt == cur:
            break
        cur = nxt
        t += 1
    outcome = ("all_red" if rounds_to_all_red is not None
               else "all_blue" if cur == g.full_mask else "other")
    return {"n": n, "d": d, "ell": ell, "alpha": str(alpha), "b0": b0,
            "ball_cap": d ** (ell + 1), "outcome": outcome,
            "rounds_to_all_red": rounds_to_all_red,
            "center_blue_rounds": center_blue_rounds}


def target_bound_audit(n: int, d: int, r: int, seeds: int,
                       master_seed: int):
    """Build target sets across seeds; report size against 2*beta*n + 1/beta."""
    rows = []
    for i in range(seeds):
        g = gen_random_regular(n, d, derive_seed(master_seed, 2 * i))
        sig = normalized_spectrum(g).sigma
        bet = beta_formula(r, d, sig)
        bound = target_size_bound(bet, n)
        cert = build_target_set(g, r, sig, seed=derive_seed(master_seed,
                                                            2 * i + 1))
        rows.append({"seed_index": i, "sigma": sig, "beta": bet,
                     "size": cert.size, "bound": bound,
                     "within_bound": cert.size <= bound + 1,
                     "certified": cert.certificate.outcome == "all_blue"})
    meta = {"experiment": "target-bound-audit", "n": n, "d": d, "r": r,
            "seeds": seeds, "master_seed": master_seed}
    return meta, ["seed_index", "sigma", "beta", "size", "bound",
                  "within_bound", "certified"], rows
