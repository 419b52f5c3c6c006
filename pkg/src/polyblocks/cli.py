"""Command-line front end: ``polyblocks <command> --poly a0,a1,... [options]``."""

import argparse
import csv
import io
import json
import sys

from . import cover, intpoly, modpoly, primestream, search
from .errors import PolyBlocksError, PreconditionFailed


def _poly(text):
    try:
        return intpoly.IntPoly.parse(text)
    except PolyBlocksError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_companion(a):
    f = a.poly
    c = intpoly.companion(f)
    out = {"poly": str(f), "companion": str(c.poly)}
    if f.degree in (2, 3):
        out["closed_form_agrees"] = intpoly.companion_closed_form(f) == c.poly
    return out


def cmd_classify(a):
    r = intpoly.classify(a.poly)
    return {"poly": str(a.poly), "reducible": r.reducible, "group": r.group,
            "delta": str(r.delta), "discriminant": str(r.discriminant), "content": str(r.content)}


def cmd_roots(a):
    r = modpoly.roots_mod_p(a.poly, a.p)
    return {"p": str(r.p), "roots": [str(z) for z in r.roots], "degenerate": r.degenerate}


def cmd_density(a):
    return primestream.enumerate_pf(a.poly, a.x)


def cmd_valuation(a):
    return primestream.valuation_qn(a.poly, a.p, a.N)


def cmd_harvest(a):
    return primestream.harvest_sn(a.poly, a.N)


def cmd_cover(a):
    if a.N is not None:
        return cover.build_cover(a.poly, a.N)
    return cover.find_cover(a.poly, a.kmax or 5000)


def cmd_verify(a):
    if a.plan:
        with open(a.plan) as fh:
            data = json.load(fh)
        if data.get("kind") == "CoverPlan":
            plan = cover.CoverPlan.from_dict(data)
            if not plan.check():
                raise PreconditionFailed("plan fails its structural checks")
            return cover.verify_block(plan.f, plan.n0, plan.N)
        f, n, k = intpoly.IntPoly.parse(data["poly"]), int(data["n"]), int(data["k"])
        return cover.verify_block(f, n, k)
    if a.poly is None or a.n is None or a.k is None:
        raise _Usage("verify needs --plan FILE or --poly, --n and --k")
    return cover.verify_block(a.poly, a.n, a.k)


def cmd_decide(a):
    cert = search.decide_block(a.poly, a.k, a.budget_nodes, minimal=a.minimal)
    out = cert.to_dict()
    if a.scan_max is not None:
        out["sampled_hits"] = [str(n) for n in
                               search.sample_blocks(a.poly, a.k, a.scan_max, a.samples, a.seed)]
    return out


def cmd_gf(a):
    return search.gf_search(a.poly, a.kmax, a.budget_nodes)


def cmd_gscan(a):
    return search.gf_estimate_scan(a.poly, a.kmax, a.budget_nodes)


COMMANDS = {
    "companion": (cmd_companion, ("poly",)),
    "classify": (cmd_classify, ("poly",)),
    "roots": (cmd_roots, ("poly", "p")),
    "density": (cmd_density, ("poly", "x")),
    "valuation": (cmd_valuation, ("poly", "p", "N")),
    "harvest": (cmd_harvest, ("poly", "N")),
    "cover": (cmd_cover, ("poly",)),
    "verify": (cmd_verify, ()),
    "decide": (cmd_decide, ("poly", "k")),
    "gf": (cmd_gf, ("poly", "kmax")),
    "gscan": (cmd_gscan, ("poly", "kmax")),
}


class _Usage(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(prog="polyblocks", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, required) in COMMANDS.items():
        sp = sub.add_parser(name)
        sp.add_argument("--poly", type=_poly, required="poly" in required,
                        help="coefficients, constant term first, e.g. 1,0,1")
        sp.add_argument("--x", type=int, required="x" in required)
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int, required="k" in required)
        sp.add_argument("--kmax", type=int, required="kmax" in required)
        sp.add_argument("--N", type=int, required="N" in required)
        sp.add_argument("--p", type=int, required="p" in required)
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--budget-nodes", type=int, default=search.DEFAULT_BUDGET_NODES)
        sp.add_argument("--out", metavar="FILE")
        if name == "verify":
            sp.add_argument("--plan", metavar="FILE", help="re-verify a saved JSON plan or witness")
        if name == "decide":
            sp.add_argument("--minimal", action="store_true", help="reconstruct the least n")
            sp.add_argument("--scan-max", type=int, help="also sample n <= SCAN_MAX for witnesses")
            sp.add_argument("--samples", type=int, default=1000)
    return parser


def _as_dict(result):
    return result if isinstance(result, dict) else result.to_dict()


def render(result, fmt):
    data = _as_dict(result)
    if fmt == "json":
        return json.dumps(data, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        columns = getattr(result, "csv_columns", None)
        if columns and hasattr(result, "csv_rows"):
            writer.writerow(columns)
            writer.writerows(result.csv_rows())
        elif columns:
            writer.writerow(columns)
            writer.writerow([data[c] for c in columns])
        else:
            writer.writerow(("key", "value"))
            for key, val in sorted(data.items()):
                writer.writerow((key, json.dumps(val) if isinstance(val, (dict, list)) else val))
        return buf.getvalue()
    lines = []
    for key, val in sorted(data.items()):
        lines.append(f"{key}: {json.dumps(val) if isinstance(val, (dict, list)) else val}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, _ = COMMANDS[args.command]
    try:
        result = handler(args)
    except _Usage as exc:
        parser.error(str(exc))
    except PolyBlocksError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        for attr in ("offset",):
            if hasattr(exc, attr):
                err[attr] = getattr(exc, attr)
        sys.stdout.write(json.dumps(err, sort_keys=True) + "\n")
        print(f"polyblocks: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = render(result, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
