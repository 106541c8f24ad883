"""Command-line front end.

Commands: verify-paper, check <file>, search <config> [--jobs N] [--out PATH]
[--limit K].  Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import fixtures, jsonio
from .bundles import PullbackBundle, SpectralBundle
from .search import Polarization, SearchConfig, check_model, run_search
from .surfaces import DEFAULT_BOUND, make_base

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _env_bound() -> int:
    raw = os.environ.get("CYBUNDLE_BOUND")
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(EXIT_INPUT)


def cmd_verify_paper(_args) -> int:
    results = fixtures.run_all()
    hard_fail = False
    for fx in results:
        status = "ok" if fx.ok else "FAIL"
        print(f"[{status}] {fx.id}: {fx.description}")
        for check in fx.checks:
            if not check.hard:
                print(f"    (info) {check.quantity}: {check.got}")
                continue
            mark = "ok" if check.ok else "MISMATCH"
            line = f"    [{check.tag}] {check.quantity}: computed {check.got!r}"
            if not check.ok:
                line += f", expected {check.expected!r}"
                hard_fail = True
            print(f"{line}  {mark}")
    total = sum(len(f.checks) for f in results)
    print(f"{len(results)} fixtures, {total} checks, " + ("FAILURES" if hard_fail else "all hard checks passed"))
    return EXIT_FAIL if hard_fail else EXIT_OK


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _parse_model(obj):
    if not isinstance(obj, dict):
        raise ValueError("model file must be a JSON object")
    for key in ("base", "bundle"):
        if key not in obj:
            raise ValueError(f"model file missing field '{key}'")
    surface = make_base(str(obj["base"]))
    spec = obj["bundle"]
    if not isinstance(spec, dict) or "type" not in spec:
        raise ValueError("bundle must be an object with a 'type' field")
    if "n" not in spec:
        raise ValueError("bundle missing field 'n'")
    n = int(spec["n"])
    twist = jsonio.divisor_x_from_json(spec.get("twist"), surface.rank)
    if spec["type"] == "pullback":
        if "c2E" not in spec:
            raise ValueError("pullback bundle missing field 'c2E'")
        bundle = PullbackBundle(n=n, c2E=int(spec["c2E"]), twist=twist)
    elif spec["type"] == "spectral":
        for key in ("eta", "lambda"):
            if key not in spec:
                raise ValueError(f"spectral bundle missing field '{key}'")
        bundle = SpectralBundle(
            n=n,
            eta=jsonio.divisor_from_json(spec["eta"], surface.rank),
            lam=jsonio.frac_from_str(spec["lambda"]),
            twist=twist,
        )
    else:
        raise ValueError(f"unknown bundle type '{spec['type']}'")
    pol_obj = obj.get("polarization", {})
    pol = Polarization(
        H=jsonio.divisor_from_json(pol_obj["H"], surface.rank) if "H" in pol_obj else None,
        h=jsonio.frac_from_str(pol_obj["h"]) if "h" in pol_obj else None,
    )
    return surface, bundle, pol, obj.get("require")


def cmd_check(args) -> int:
    obj = _load_json(args.path)
    try:
        surface, bundle, pol, require = _parse_model(obj)
        record = check_model(
            surface, bundle, pol, require=require, bound=_env_bound(), short_circuit=False
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(record.to_json(), indent=2))
    return EXIT_OK if record.overall else EXIT_FAIL


def cmd_search(args) -> int:
    obj = _load_json(args.config)
    try:
        config = SearchConfig.from_json(obj)
        if config.bound == DEFAULT_BOUND:
            config.bound = _env_bound()
        out = sys.stdout if args.out is None else open(args.out, "w", encoding="utf-8")
        try:
            summary = run_search(config, jobs=args.jobs, out=out, limit=args.limit)
        finally:
            if args.out is not None:
                out.close()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cybundle",
        description="Exact anomaly/stability toolkit for bundle extensions on elliptic Calabi-Yau threefolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify-paper", help="run the built-in example verification suite")
    p.set_defaults(func=cmd_verify_paper)
    p = sub.add_parser("check", help="verify a single model file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("search", help="scan a parameter box from a config file")
    p.add_argument("config")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
