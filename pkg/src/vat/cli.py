"""Command-line interface: ``vat <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

from . import budget as budget_mod
from .cache import ResultCache
from .config import load_config
from .counting import count_copies
from .enumeration import ClassConstraint, copy_count, edge_count, extremal_value
from .errors import BudgetExceeded, DomainError, Graph6Error, ParameterError
from .framework import (
    ALL,
    INF,
    builtin_decompositions,
    forbid_partition,
    infer_very_abstract_number,
    lemma_containment_check,
    niceness_check,
    rainbow_partition,
    transfer_check,
    very_abstract_evidence,
)
from .graph import balanced_blowup, construct
from .graph6 import decode, encode_str
from .parameters import chromatic_number, gamma, odd_girth, p_value
from .rainbow import (
    EdgeColoring,
    admits_coloring_without_rainbow,
    find_rainbow_copy,
    greedy_rainbow_embed_bipartite,
    greedy_rainbow_embed_cycle_blowup,
    random_proper_coloring,
)
from .suites import SUITES, run_suite

log = logging.getLogger("vat")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _graph(s: str):
    return decode(s)


def _turan_function(spec: str):
    if spec == "edges":
        return edge_count()
    if spec.startswith("count:"):
        return copy_count(_graph(spec[len("count:"):]))
    raise UsageError(f"--h must be 'edges' or 'count:<g6>', got {spec!r}")


def _partition(spec: str, cfg):
    if spec == "all":
        return ALL
    kind, _, g6 = spec.partition(":")
    if kind == "forbid" and g6:
        return forbid_partition(_graph(g6))
    if kind == "rainbow" and g6:
        return rainbow_partition(_graph(g6), cfg.edge_budget)
    raise UsageError(f"--partition must be forbid:<g6>, rainbow:<g6> or all, got {spec!r}")


def _decomposition(name: str):
    try:
        return builtin_decompositions()[name]
    except KeyError:
        raise UsageError(f"--decomp must be b1 or b2, got {name!r}") from None


def _window(spec: str):
    try:
        lo, hi = (int(x) for x in spec.split(":"))
    except ValueError:
        raise UsageError(f"--window must look like lo:hi, got {spec!r}") from None
    if lo > hi or lo < 0:
        raise UsageError(f"bad window {spec!r}")
    return lo, hi


def _level(spec):
    if spec is None:
        return None
    if spec in ("inf", "infinity"):
        return INF
    return int(spec)


def _ints(spec):
    if not spec:
        return []
    return [int(x) for x in spec.replace(",", " ").split()]


# -- commands -----------------------------------------------------------------------


def cmd_param(args, cfg):
    g = _graph(args.graph)
    wanted = ["chi", "p", "gamma", "odd_girth"] if args.all else [args.which]
    out = {}
    for name in wanted:
        try:
            if name == "chi":
                out["chi"] = chromatic_number(g)
            elif name == "p":
                out["p"] = p_value(g)
            elif name == "gamma":
                out["gamma"] = gamma(g)
            else:
                og = odd_girth(g)
                out["odd_girth"] = "none" if og is None else og
        except DomainError:
            if not args.all:
                raise
            out[name] = "undefined"
    return out


def cmd_count(args, cfg):
    return {"count": count_copies(_graph(args.pattern), _graph(args.host))}


def cmd_gen(args, cfg):
    if args.blowup_of is not None:
        if args.n is None:
            raise UsageError("--blowup-of needs --n")
        spec = balanced_blowup(_graph(args.blowup_of), args.n)
        g = spec.graph()
        out = {"part_sizes": list(spec.part_sizes)}
    else:
        if args.family is None:
            raise UsageError("gen needs --family or --blowup-of")
        g = construct(args.family, _ints(args.params))
        out = {}
    return {"graph6": encode_str(g), "order": g.order, "edges": g.size, **out}


def cmd_extremal(args, cfg):
    h = _turan_function(args.h)
    constraint = ClassConstraint(forbidden=[_graph(f) for f in args.forbid])
    if args.partition:
        p = _partition(args.partition, cfg)
        constraint.membership = p.allowed
        constraint.membership_monotone = p.monotone_claimed
        constraint.name = p.name
    if args.discard:
        constraint.discard = _decomposition(args.discard).discard
    res = extremal_value(args.n, h, constraint, max_n=cfg.max_n)
    return {"n": res.n, "value": res.value, "witnesses": res.witnesses,
            "graphs_scanned": res.graphs_scanned, "budget_hit": res.budget_hit}


def _coloring(args, g, seed):
    if args.colors:
        col = EdgeColoring(g, tuple(_ints(args.colors)))
        if not col.is_proper():
            raise UsageError("--colors is not a proper edge coloring")
        return col
    return random_proper_coloring(g, seed)


def cmd_rainbow(args, cfg):
    g = _graph(args.graph)
    if args.mode != "embed_blowup" and args.pattern is None:
        raise UsageError("--pattern is required")
    if args.mode == "member":
        f = _graph(args.pattern)
        try:
            col = admits_coloring_without_rainbow(g, f, edge_budget=cfg.edge_budget)
        except BudgetExceeded:
            return {"member": "unknown", "coloring": None, "budget_hit": True}
        return {"member": col is not None, "coloring": None if col is None else col.to_dict()}
    col = _coloring(args, g, cfg.seed)
    if args.mode == "find_rainbow":
        rc = find_rainbow_copy(col, _graph(args.pattern))
    elif args.mode == "embed_bipartite":
        rc = greedy_rainbow_embed_bipartite(col, _graph(args.pattern))
    else:
        if args.m is None:
            raise UsageError("--embed-blowup needs --m")
        rc = greedy_rainbow_embed_cycle_blowup(col, args.m)
    return {"coloring": col.to_dict(), "found": rc is not None, "rainbow": None if rc is None else rc.to_dict()}


def cmd_framework(args, cfg):
    d = _decomposition(args.decomp)
    lo, hi = _window(args.window)
    k = _level(args.k)
    if args.mode_ == "lemma":
        levels = _ints(args.levels) or sorted({i for n in range(lo, hi + 1) for i in d.generators.levels(n)})
        orders = _ints(args.orders) or list(range(lo, hi + 1))
        hosts = _ints(args.host_orders) or None
        return lemma_containment_check(d.generators, levels, orders, hosts)
    if args.mode_ == "niceness":
        if args.h is None or k is None:
            raise UsageError("--niceness needs --h and --k")
        patterns = [_graph(x) for x in args.pattern] or None
        return niceness_check(d, _turan_function(args.h), k, (lo, hi), mode=args.mode,
                              max_f_order=args.max_f_order, patterns=patterns)
    if args.partition is None:
        raise UsageError(f"--{args.mode_} needs --partition")
    p = _partition(args.partition, cfg)
    if args.mode_ == "evidence":
        if k is None:
            k = infer_very_abstract_number(p, d, (lo, hi))
            if k is None:
                return {"partition": p.name, "decomposition": d.name, "verdict": "inconclusive-budget",
                        "k": None, "window": [lo, hi], "checks": [], "notes": ["k could not be inferred"]}
        return very_abstract_evidence(p, d, k, (lo, hi)).to_dict()
    if args.h is None:
        raise UsageError("--transfer needs --h")
    return transfer_check(p, d, _turan_function(args.h), (lo, hi), k=k)


COMMANDS = {
    "param": cmd_param,
    "count": cmd_count,
    "gen": cmd_gen,
    "extremal": cmd_extremal,
    "rainbow": cmd_rainbow,
    "framework": cmd_framework,
}

CACHED = {"param", "count", "extremal", "rainbow", "framework"}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vat", allow_abbrev=False,
                                 description="Turán-type searches over abstract chromatic frameworks")
    ap.add_argument("--config", help="key = value config file (default: $VAT_CONFIG)")
    ap.add_argument("--json", action="store_true", help="print JSON instead of TSV")
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--edge-budget", type=int)
    ap.add_argument("--node-budget", type=int)
    ap.add_argument("--time-budget", type=float, dest="time_budget_s")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--cache", dest="cache_path")
    ap.add_argument("--no-cache", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    sub_kw = {"allow_abbrev": False}

    sp = sub.add_parser("param", **sub_kw, help="chromatic number, p, gamma, odd girth")
    sp.add_argument("--graph", required=True)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--chi", dest="which", action="store_const", const="chi")
    grp.add_argument("--p", dest="which", action="store_const", const="p")
    grp.add_argument("--gamma", dest="which", action="store_const", const="gamma")
    grp.add_argument("--odd-girth", dest="which", action="store_const", const="odd_girth")
    grp.add_argument("--all", action="store_true")

    sp = sub.add_parser("count", **sub_kw, help="number of copies of a pattern in a host")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--host", required=True)

    sp = sub.add_parser("gen", **sub_kw, help="construct a graph and print its graph6")
    sp.add_argument("--family")
    sp.add_argument("--params", default="")
    sp.add_argument("--blowup-of")
    sp.add_argument("--n", type=int)

    sp = sub.add_parser("extremal", **sub_kw, help="brute-force maximum of h over a graph class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--forbid", action="append", default=[])
    sp.add_argument("--partition")
    sp.add_argument("--discard", choices=["b1", "b2"])

    sp = sub.add_parser("rainbow", **sub_kw, help="rainbow membership, search and greedy embedders")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--pattern")
    sp.add_argument("--colors", help="color ids in lexicographic edge order (default: seeded random)")
    sp.add_argument("--m", type=int)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--member", dest="mode", action="store_const", const="member")
    grp.add_argument("--find-rainbow", dest="mode", action="store_const", const="find_rainbow")
    grp.add_argument("--embed-bipartite", dest="mode", action="store_const", const="embed_bipartite")
    grp.add_argument("--embed-blowup", dest="mode", action="store_const", const="embed_blowup")

    sp = sub.add_parser("framework", **sub_kw, help="evidence, niceness, transfer and lemma checks")
    grp = sp.add_mutually_exclusive_group(required=True)
    for name in ("evidence", "niceness", "transfer", "lemma"):
        grp.add_argument(f"--{name}", dest="mode_", action="store_const", const=name)
    sp.add_argument("--decomp", required=True)
    sp.add_argument("--partition")
    sp.add_argument("--h")
    sp.add_argument("--window", required=True)
    sp.add_argument("--k", help="level (integer) or inf")
    sp.add_argument("--mode", choices=["exact", "ratio"], default="exact")
    sp.add_argument("--pattern", action="append", default=[], help="niceness: restrict to these F")
    sp.add_argument("--max-f-order", type=int, default=5)
    sp.add_argument("--levels", help="lemma: levels to test")
    sp.add_argument("--orders", help="lemma: pattern orders m (default: every order in the window)")
    sp.add_argument("--host-orders", help="lemma: host orders n (default: same as --orders)")

    sp = sub.add_parser("verify", **sub_kw, help="run acceptance suites")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    return ap


def _tsv_value(v):
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    if isinstance(v, list) and all(isinstance(x, (str, int)) for x in v):
        return ",".join(str(x) for x in v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def render(result, as_json: bool) -> str:
    if as_json:
        return json.dumps(result, sort_keys=True)
    if isinstance(result, list):  # verify
        lines = []
        for suite in result:
            for a in suite["assertions"]:
                lines.append(f"{suite['suite']}\t{'PASS' if a['passed'] else 'FAIL'}\t{a['name']}")
            lines.append(f"{suite['suite']}\t{'PASS' if suite['passed'] else 'FAIL'}\t(suite)")
        return "\n".join(lines)
    return "\n".join(f"{k}\t{_tsv_value(v)}" for k, v in result.items())


def exit_code(command, result) -> int:
    if command == "verify":
        if any(s["budget_hit"] for s in result):
            return EXIT_BUDGET
        return EXIT_OK if all(s["passed"] for s in result) else EXIT_FAIL
    if result.get("budget_hit") is True:
        return EXIT_BUDGET
    if command == "framework":
        if result.get("verdict") == "inconclusive-budget" or result.get("status") == "inconclusive-budget":
            return EXIT_BUDGET
        if "verdict" in result:
            return EXIT_FAIL if result["verdict"] == "refuted" else EXIT_OK
        if "mode" in result:  # niceness: only exact-mode mismatches fail
            return EXIT_FAIL if any(r.get("status") == "fail" for r in result["rows"]) else EXIT_OK
        return EXIT_OK if result.get("passed") else EXIT_FAIL
    return EXIT_OK


def _execute(args, cfg):
    if args.command == "verify":
        return run_suite(args.suite, cfg)
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("config", "json", "cache_path", "no_cache", "verbose", "time_budget_s")}
    params["config"] = cfg.digest_fields()
    cache = ResultCache(None if args.no_cache else cfg.cache_path)
    result = cache.get(args.command, params) if args.command in CACHED else None
    if result is not None:
        log.info("cache hit for %s", args.command)
        return result
    result = COMMANDS[args.command](args, cfg)
    if args.command in CACHED and not _budget_limited(result):
        cache.put(args.command, params, result, _witnesses(result))
    return result


def run_command(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        cfg = load_config(args.config, {
            "max_n": args.max_n, "edge_budget": args.edge_budget, "node_budget": args.node_budget,
            "time_budget_s": args.time_budget_s, "seed": args.seed, "cache_path": args.cache_path,
        })
    except (OSError, ValueError) as exc:
        print(f"vat: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with budget_mod.configured(cfg.node_budget, cfg.time_budget_s):
            result = _execute(args, cfg)
    except Graph6Error as exc:
        print(f"vat: malformed graph6: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ParameterError, DomainError) as exc:
        print(f"vat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"vat: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    print(render(result, args.json), file=stdout)
    return exit_code(args.command, result)


def _budget_limited(result) -> bool:
    return isinstance(result, dict) and (
        result.get("budget_hit") is True
        or result.get("verdict") == "inconclusive-budget"
        or result.get("status") == "inconclusive-budget"
    )


def _witnesses(result):
    if isinstance(result, dict):
        w = result.get("witnesses")
        if isinstance(w, list):
            return [x for x in w if isinstance(x, str)]
    return []


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
