"""``mmc`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit, 4 disagreement between counting engines.

Settings resolve as command-line flag, then ``MMC_<KEY>`` environment
variable, then a ``key = value`` config file (``--config`` or ``MMC_CONFIG``),
then the built-in default.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import mpmath

from . import asymptotics as asy
from . import extremal as ex
from . import recurrences as rec
from .chains import Family, SpecError, build_chain, parse_spec
from .exact import BudgetExceeded, DEFAULT_BUDGET, maximal_matching_polynomial
from .transfer import chain_polynomial, count_chain
from .verify import SUITES, named_terms, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3, 4

DEFAULTS = {
    "budget": DEFAULT_BUDGET,
    "n_max": 12,
    "precision": 30,
    "tolerance": 1e-4,
    "format": "text",
    "workers": 1,
    "out": None,
}
_TYPES = {"budget": int, "n_max": int, "precision": int, "tolerance": float, "workers": int}


class Mismatch(RuntimeError):
    pass


def read_config_file(path: str | os.PathLike) -> dict[str, str]:
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line {raw!r}")
        k, v = line.split("=", 1)
        out[k.strip().lower()] = v.strip()
    return out


def resolve_config(flags: dict, env: dict | None = None) -> dict:
    """Merge defaults < config file < environment < flags."""
    env = os.environ if env is None else env
    cfg = dict(DEFAULTS)
    path = flags.get("config") or env.get("MMC_CONFIG")
    layers = []
    if path:
        layers.append(read_config_file(path))
    layers.append({k[4:].lower(): v for k, v in env.items() if k.startswith("MMC_") and k != "MMC_CONFIG"})
    layers.append({k: v for k, v in flags.items() if v is not None and k in DEFAULTS})
    for layer in layers:
        for k, v in layer.items():
            if k not in DEFAULTS:
                continue
            cfg[k] = _TYPES[k](v) if k in _TYPES and isinstance(v, str) else v
    if cfg["budget"] <= 0 or cfg["workers"] <= 0 or cfg["tolerance"] <= 0:
        raise ValueError("budget, workers and tolerance must be positive")
    return cfg


def _emit(text: str, cfg: dict) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.get("out"):
        Path(cfg["out"]).write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------
def _spec(args):
    return parse_spec(args.spec, args.length)


def cmd_count(args, cfg) -> int:
    spec = _spec(args)
    if args.oracle or args.both:
        brute = maximal_matching_polynomial(build_chain(spec), cfg["budget"]).total
    if args.both:
        fast = count_chain(spec)
        if fast != brute:
            raise Mismatch(f"transfer DP {fast} != brute force {brute}")
        value = fast
    elif args.oracle:
        value = brute
    else:
        value = count_chain(spec)
    if args.json:
        _emit(_dumps({"spec": str(spec), "count": str(value)}), cfg)
    else:
        _emit(str(value), cfg)
    return EXIT_OK


def _poly(args, cfg):
    spec = _spec(args)
    if args.oracle:
        return spec, maximal_matching_polynomial(build_chain(spec), cfg["budget"])
    return spec, chain_polynomial(spec)


def cmd_poly(args, cfg) -> int:
    _, p = _poly(args, cfg)
    _emit(_dumps({str(k): str(v) for k, v in p.as_dict().items()}), cfg)
    return EXIT_OK


def cmd_saturation(args, cfg) -> int:
    spec, p = _poly(args, cfg)
    if args.json:
        _emit(_dumps({"spec": str(spec), "saturation": p.saturation_number}), cfg)
    else:
        _emit(str(p.saturation_number), cfg)
    return EXIT_OK


def cmd_seq(args, cfg) -> int:
    terms = rec.generate(rec.paper_recurrence(args.family), args.n_max + 1)
    dp = named_terms(args.family, args.n_max + 1)
    if terms != dp:
        bad = next(i for i, (a, b) in enumerate(zip(terms, dp)) if a != b)
        raise Mismatch(f"recurrence and transfer DP differ at n={bad}")
    if args.bfile:
        _emit(rec.to_bfile(terms), cfg)
    elif args.json:
        _emit(_dumps([str(t) for t in terms]), cfg)
    else:
        _emit("\n".join(str(t) for t in terms), cfg)
    return EXIT_OK


def cmd_gf(args, cfg) -> int:
    _emit(rec.paper_gf(args.family).to_json(), cfg)
    return EXIT_OK


def cmd_growth(args, cfg) -> int:
    est = asy.growth(rec.paper_gf(args.family), cfg["precision"])
    if args.json:
        _emit(est.to_json(), cfg)
    else:
        d = cfg["precision"]
        _emit(
            f"w = {mpmath.nstr(est.w, d)}\nlambda = {mpmath.nstr(est.lam, d)}\n"
            f"C = {mpmath.nstr(est.C, d)}\ndominance_margin = {est.dominance_margin:.6f}",
            cfg,
        )
    return EXIT_OK


def cmd_scan(args, cfg) -> int:
    fam = Family(args.family)
    if args.csv:
        rows = ex.scan_counts(fam, args.n, cfg["workers"])
        _emit("spec,count\n" + "".join(f"{s},{c}\n" for s, c in rows), cfg)
        return EXIT_OK
    rep = ex.scan(fam, args.n, cfg["workers"], histogram=args.histogram, n_max=cfg["n_max"])
    if args.json:
        _emit(rep.to_json(), cfg)
    else:
        _emit(
            f"{rep.family} n={rep.length}: {rep.scanned} canonical chains\n"
            f"min {rep.min_count} at {rep.min_spec!r} ({rep.min_ties} tie(s))\n"
            f"max {rep.max_count} at {rep.max_spec!r} ({rep.max_ties} tie(s))",
            cfg,
        )
    return EXIT_OK


def cmd_discover(args, cfg) -> int:
    if args.family:
        data = named_terms(args.family, args.terms)
    elif args.values:
        data = [int(x) for x in args.values.replace(",", " ").split()]
    else:
        raise ValueError("give --family or --values")
    found = rec.discover(data, args.max_order)
    if found is None:
        out = {"found": False}
    else:
        out = {
            "found": True,
            "order": found.order,
            "coeffs": [str(c) for c in found.coeffs],
            "initial": [str(c) for c in found.initial],
        }
    if args.json or found is None:
        _emit(_dumps(out), cfg)
    else:
        _emit(f"order {found.order}: coeffs {' '.join(out['coeffs'])}", cfg)
    return EXIT_OK


def cmd_verify(args, cfg) -> int:
    suite_cfg = {
        "budget": cfg["budget"],
        "precision": cfg["precision"],
        "tolerance": cfg["tolerance"],
        "workers": cfg["workers"],
        "n": args.n,
    }
    checks = run_suite(args.suite, suite_cfg)
    if args.json:
        _emit(_dumps([json.loads(c.to_json()) for c in checks]), cfg)
    else:
        _emit("\n".join(c.line() for c in checks), cfg)
    failed = [c for c in checks if not c.passed]
    for c in failed:
        print(f"failed: {c.suite}: {c.name}", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (sorted keys)")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--workers", type=int)
    common.add_argument("--budget", type=int, help="oracle search-node budget")
    common.add_argument("--precision", type=int, help="decimal digits for asymptotics")
    common.add_argument("--config", help="key=value configuration file")

    parser = argparse.ArgumentParser(prog="mmc", description="Maximal matchings in hexagonal chains.")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("spec", help="cactus:<OMP...>, benzenoid:<SLR...> or P7, Z5, ...")
        p.add_argument("--length", type=int, help="chain length (needed for lengths 1 and 2)")
        p.add_argument("--oracle", action="store_true", help="use exhaustive search")
        p.set_defaults(func=func)
        return p

    p = spec_cmd("count", cmd_count, "number of maximal matchings")
    p.add_argument("--both", action="store_true", help="cross-check DP against brute force")
    spec_cmd("poly", cmd_poly, "maximal matching polynomial")
    spec_cmd("saturation", cmd_saturation, "size of a smallest maximal matching")

    fam = list(rec.SEQUENCES)
    p = sub.add_parser("seq", parents=[common], help="named-family sequence 0..n_max")
    p.add_argument("family", choices=fam)
    p.add_argument("n_max", type=int)
    p.add_argument("--bfile", action="store_true", help="OEIS b-file format")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("gf", parents=[common], help="rational generating function")
    p.add_argument("family", choices=fam)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("growth", parents=[common], help="dominant pole and growth constants")
    p.add_argument("family", choices=fam)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("scan", parents=[common], help="extremes over all chains of a length")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("n", type=int)
    p.add_argument("--csv", action="store_true", help="every canonical spec with its count")
    p.add_argument("--histogram", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("discover", parents=[common], help="minimal linear recurrence")
    p.add_argument("--family", choices=fam)
    p.add_argument("--terms", type=int, default=30)
    p.add_argument("--values", help="comma or space separated integers")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--n", type=int, default=10, help="largest scan length for the extremal suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    flags = {
        "workers": args.workers,
        "budget": args.budget,
        "precision": args.precision,
        "out": args.out,
        "config": args.config,
    }
    try:
        cfg = resolve_config(flags)
        return args.func(args, cfg)
    except (SpecError, ValueError, rec.InsufficientData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, MemoryError, RecursionError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except Mismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (asy.DominanceError, asy.RootDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
