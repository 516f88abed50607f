"""Command-line entry point.

Exit codes: 0 success, 1 precondition / usage error, 2 invariant violation
(a certification or convergence guarantee failed, which means a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bounds import (UndefinedBound, beta as beta_formula, beta_prime,
                     irregular_alpha_bounds, target_size_bound)
from .dynamics import (AlphaThreshold, NonConvergence, RThreshold, parse_rule,
                       run)
from .exact import InstanceTooLarge, max_clique, min_stable_set, \
    min_target_set
from .experiments import (derive_seed, mixing_check, random_blue_set,
                          render_csv, round_scaling, target_bound_audit,
                          threshold_sweep, tightness_ball)
from .generators import (gen_erdos_renyi, gen_named, gen_random_regular)
from .graph import Graph, GraphError, mask_of, nodes_of, read_edge_list, \
    write_edge_list
from .monopoly import ConstructionError, build_target_set, \
    construct_stable_set
from .reductions import alpha_stable_gadget, clique_to_alpha_clique
from .spectral import normalized_spectrum


class InvariantViolation(RuntimeError):
    pass


def _emit(data, out_path):
    text = data if isinstance(data, str) else json.dumps(data, indent=2,
                                                         default=str) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_generate(args):
    if args.kind == "erdos_renyi":
        if args.p is None:
            raise GraphError("erdos_renyi requires --p")
        g = gen_erdos_renyi(args.n, args.p, args.seed)
    elif args.kind == "random_regular":
        if args.d is None:
            raise GraphError("random_regular requires --d")
        g = gen_random_regular(args.n, args.d, args.seed)
    else:
        g = gen_named(args.kind, args.n)
    if args.out:
        write_edge_list(g, args.out)
    else:
        sys.stdout.write(g.to_edge_list_text())


def _cmd_sigma(args):
    g = read_edge_list(args.graph)
    prof = normalized_spectrum(g)
    out = {"sigma": prof.sigma, "gamma": prof.gamma,
           "lambda2": prof.lambda2, "lambdaN": prof.lambda_min,
           "n": g.n, "m": g.m, "disconnected": prof.disconnected}
    if args.full_spectrum:
        out["eigenvalues"] = list(prof.eigenvalues)
    _emit(out, args.out)


def _parse_init(g: Graph, spec: str) -> int:
    kind, _, rest = spec.partition(":")
    if kind == "blue-list":
        with open(rest) as fh:
            return mask_of(int(tok) for tok in fh.read().split())
    params = dict(item.split("=") for item in rest.split(",")) if rest else {}
    if kind == "random":
        return random_blue_set(g.n, int(params["b0"]),
                               int(params.get("seed", 0)))
    if kind == "ball":
        return g.ball(int(params["v"]), int(params["ell"]))
    raise GraphError(f"unknown init spec {spec!r}")


def _cmd_simulate(args):
    g = read_edge_list(args.graph)
    rule = parse_rule(args.rule)
    blue0 = _parse_init(g, args.init)
    res = run(g, blue0, rule, args.max_rounds)
    _emit({"outcome": res.outcome, "rounds": res.rounds_to_limit,
           "period": res.period, "b_trace": list(res.b_trace)}, args.out)


def _cmd_bounds(args):
    g = read_edge_list(args.graph)
    rule = parse_rule(args.rule)
    prof = normalized_spectrum(g)
    out = {"n": g.n, "m": g.m, "sigma": prof.sigma, "gamma": prof.gamma}
    if isinstance(rule, AlphaThreshold):
        report = irregular_alpha_bounds(g.n, rule.alpha, prof.sigma,
                                        prof.gamma)
        out.update(report.as_dict())
    else:
        try:
            b = beta_formula(rule.r, g.max_degree, prof.sigma)
            out["beta"] = b
            out["target_size_bound"] = target_size_bound(b, g.n)
        except UndefinedBound as exc:
            out["beta"] = None
            out["beta_undefined"] = str(exc)
        try:
            bp = beta_prime(rule.r, g.min_degree, g.max_degree, prof.sigma)
            out["beta_prime"] = bp
            out["target_size_bound_irregular"] = target_size_bound(bp, g.n)
        except UndefinedBound as exc:
            out["beta_prime"] = None
            out["beta_prime_undefined"] = str(exc)
    _emit(out, args.out)


def _resolve_sigma(g, text):
    if text == "auto":
        return normalized_spectrum(g).sigma
    return float(text)


def _cmd_stable_set(args):
    g = read_edge_list(args.graph)
    sig = _resolve_sigma(g, args.sigma)
    cert = construct_stable_set(g, args.r, sig, seed=args.seed)
    _emit({"nodes": nodes_of(cert.nodes), "size": cert.size,
           "bound": cert.size_bound, "sigma": sig, "kind": "stable",
           "certified": True}, args.out)


def _cmd_target_set(args):
    g = read_edge_list(args.graph)
    sig = _resolve_sigma(g, args.sigma)
    cert = build_target_set(g, args.r, sig, seed=args.seed)
    _emit({"nodes": nodes_of(cert.nodes), "size": cert.size,
           "bound": cert.size_bound, "sigma": sig, "kind": "target",
           "rounds_to_all_blue": cert.certificate.rounds_to_limit,
           "certified": True}, args.out)


def _cmd_exact(args):
    g = read_edge_list(args.graph)
    if args.problem == "max-clique":
        res = max_clique(g, cap=args.cap or 40)
    else:
        if not args.rule:
            raise GraphError(f"{args.problem} requires --rule")
        rule = parse_rule(args.rule)
        solver = (min_stable_set if args.problem == "min-stable"
                  else min_target_set)
        res = solver(g, rule, cap=args.cap or 20)
    _emit({"optimum": res.optimum,
           "witness": nodes_of(res.witness) if res.witness is not None
           else None,
           "nodes_explored": res.nodes_explored, "method": res.method,
           "status": res.status}, args.out)


def _cmd_reduce(args):
    g = read_edge_list(args.graph)
    alpha = Fraction(args.alpha)
    if args.gadget == "alpha-stable":
        gadget = alpha_stable_gadget(g, alpha)
    else:
        if args.k is None:
            raise GraphError("clique-shift requires --k")
        gadget = clique_to_alpha_clique(g, args.k, alpha)
    if args.out:
        write_edge_list(gadget.gprime, args.out)
    else:
        sys.stdout.write(gadget.gprime.to_edge_list_text())
    if args.map:
        _emit({"node_map": {str(k): v for k, v in gadget.node_map.items()},
               "params": {k: str(v) for k, v in gadget.params.items()}},
              args.map)


def _cmd_experiment(args):
    alpha = Fraction(args.alpha) if args.alpha else Fraction(1, 2)
    name = args.name
    if name == "threshold-sweep":
        b0s = list(range(0, args.n + 1, max(1, args.n // args.sweep_points)))
        meta, fields, rows = threshold_sweep(args.n, args.d, alpha, b0s,
                                             args.trials, args.seed)
        _emit(render_csv(meta, fields, rows), args.out)
    elif name == "round-scaling":
        ns = [int(x) for x in args.ns.split(",")]
        meta, fields, rows = round_scaling(ns, args.d, alpha, args.rel_b0,
                                           args.trials, args.seed)
        _emit(render_csv(meta, fields, rows), args.out)
    elif name == "mixing-check":
        g = (read_edge_list(args.graph) if args.graph
             else gen_random_regular(args.n, args.d,
                                     derive_seed(args.seed, 999)))
        sig = normalized_spectrum(g).sigma
        report = mixing_check(g, sig, args.trials, args.seed)
        if report["violations"]:
            raise InvariantViolation(
                f"mixing inequality violated {report['violations']} times")
        _emit(report, args.out)
    elif name == "tightness-ball":
        report = tightness_ball(args.n, args.d, args.ell, alpha, args.seed)
        _emit(report, args.out)
    elif name == "target-bound-audit":
        meta, fields, rows = target_bound_audit(args.n, args.d, args.r,
                                                args.trials, args.seed)
        if not all(r["certified"] and r["within_bound"] for r in rows):
            raise InvariantViolation("target-set bound audit failed")
        _emit(render_csv(meta, fields, rows), args.out)
    else:
        raise GraphError(f"unknown experiment {name!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="expanderlab",
                                description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--out", default=None)
        return sp

    sp = add("generate", _cmd_generate, help="write a graph edge list")
    sp.add_argument("--kind", required=True,
                    choices=["erdos_renyi", "random_regular", "complete",
                             "cycle", "path", "star", "petersen"])
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("sigma", _cmd_sigma, help="spectral expansion of a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--full-spectrum", action="store_true")

    sp = add("simulate", _cmd_simulate, help="run threshold dynamics")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--rule", required=True)
    sp.add_argument("--init", required=True,
                    help="blue-list:FILE | random:b0=K,seed=S | ball:v=V,ell=L")
    sp.add_argument("--max-rounds", type=int, default=None)

    sp = add("bounds", _cmd_bounds, help="evaluate the closed-form bounds")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--rule", required=True)

    for name, fn in (("stable-set", _cmd_stable_set),
                     ("target-set", _cmd_target_set)):
        sp = add(name, fn, help=f"construct a certified {name}")
        sp.add_argument("--graph", required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--sigma", default="auto")
        sp.add_argument("--seed", type=int, default=0)

    sp = add("exact", _cmd_exact, help="exact solvers for small instances")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--problem", required=True,
                    choices=["min-stable", "min-target", "max-clique"])
    sp.add_argument("--rule", default=None)
    sp.add_argument("--cap", type=int, default=None)

    sp = add("reduce", _cmd_reduce, help="build a hardness gadget")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--gadget", required=True,
                    choices=["alpha-stable", "clique-shift"])
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--map", default=None)

    sp = add("experiment", _cmd_experiment, help="run an experiment suite")
    sp.add_argument("--name", required=True,
                    choices=["threshold-sweep", "round-scaling",
                             "mixing-check", "tightness-ball",
                             "target-bound-audit"])
    sp.add_argument("--graph", default=None)
    sp.add_argument("--n", type=int, default=200)
    sp.add_argument("--d", type=int, default=16)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--ell", type=int, default=1)
    sp.add_argument("--alpha", default=None)
    sp.add_argument("--rel-b0", type=float, default=0.75)
    sp.add_argument("--ns", default="200,400,800")
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--sweep-points", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except (GraphError, UndefinedBound, InstanceTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NonConvergence, ConstructionError, InvariantViolation,
            AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
