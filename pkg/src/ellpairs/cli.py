"""Command-line front end: ``ellpairs <group> <command> [options]``.

Objects are printed as JSON and tables as CSV (``--format`` switches).  When
``ELLPAIRS_OUTPUT_DIR`` is set, each command also writes its output there
together with a ``manifest.json`` recording the command, seed, input digests
and output digests.  Exit status is 0 when every certification passed, 1
when a certification failed and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from . import __version__
from .catalog import CodeCatalog
from .code import LinearCode, hull_dim, min_distance
from .errors import EllPairsError, NotFoundWithinBudget
from .gf import field_of_order
from .pairs import (
    IntersectionPair,
    classify,
    conjecture_probe,
    ell_bounds,
    ell_routes,
    extend_length,
    pair_from_superregular,
    reduce_ell,
    tune_by_monomial,
)

OUTPUT_ENV = "ELLPAIRS_OUTPUT_DIR"


@dataclass
class Result:
    """What a command hands back to the printer."""

    obj: Any
    rows: Optional[list[dict]] = None
    columns: Optional[list[str]] = None
    ok: bool = True


@dataclass
class RunManifest:
    command: str
    seed: int
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)
    version: str = __version__

    def to_json(self) -> dict:
        return {"command": self.command, "seed": self.seed, "inputs": self.inputs,
                "outputs": self.outputs, "version": self.version}


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load_json(path: str, inputs: dict[str, str]) -> Any:
    raw = Path(path).read_bytes()
    inputs[path] = _sha256(raw)
    return json.loads(raw)


def _scalar_row(obj: dict) -> dict:
    return {k: v for k, v in obj.items() if not isinstance(v, (dict, list))}


def render(res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(res.obj, indent=2, sort_keys=False) + "\n"
    rows = res.rows if res.rows is not None else [_scalar_row(res.obj)]
    cols = res.columns or (list(rows[0]) if rows else [])
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\r\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


# -- command bodies ----------------------------------------------------------------
def _code_record(C: LinearCode) -> dict:
    out = {"name": C.name or "", "q": C.field.q, "n": C.n, "k": C.k}
    try:
        d = min_distance(C) if C.k else None
    except EllPairsError:
        d = None
    out.update(d="unavailable" if d is None else d,
               mds=d is not None and d == C.n - C.k + 1,
               hull_dim=hull_dim(C))
    return out


def cmd_code_info(args, inputs) -> Result:
    C = LinearCode.from_json(_load_json(args.code, inputs))
    return Result(_code_record(C))


def _pair_from_args(args, inputs) -> IntersectionPair:
    if getattr(args, "pair", None):
        return IntersectionPair.from_json(_load_json(args.pair, inputs))
    files = list(args.codes) + [f for f in (args.c1, args.c2) if f]
    if len(files) != 2:
        raise SystemExit("give --pair FILE or exactly two code files")
    c1, c2 = (LinearCode.from_json(_load_json(f, inputs)) for f in files)
    return IntersectionPair.of(c1, c2)


def _pair_record(pair: IntersectionPair) -> dict:
    lo, hi = ell_bounds(pair.n, pair.c1.k, pair.c2.k)
    routes = ell_routes(pair.c1, pair.c2)
    return {
        "q": pair.field.q, "n": pair.n, "k1": pair.c1.k, "k2": pair.c2.k, "ell": pair.ell,
        "ell_min": lo, "ell_max": hi, "class": classify(pair),
        "routes_agree": len(set(routes.values())) == 1, "routes": routes,
        "pair": pair.to_json(),
    }


def cmd_pair_analyze(args, inputs) -> Result:
    rec = _pair_record(_pair_from_args(args, inputs))
    return Result(rec, ok=rec["routes_agree"])


def cmd_pair_tune(args, inputs) -> Result:
    pair = _pair_from_args(args, inputs)
    A, tuned = tune_by_monomial(pair.c1, pair.c2, args.target, budget=args.budget, seed=args.seed)
    return Result(_pair_record(tuned), ok=tuned.ell == args.target)


def cmd_pair_propagate(args, inputs) -> Result:
    pair = _pair_from_args(args, inputs)
    if args.rule == "reduce":
        out = reduce_ell(pair, args.gamma)
        want = (pair.n, pair.c1.k, pair.c2.k - pair.ell + args.gamma, args.gamma)
    else:
        out = extend_length(pair, args.gamma)
        want = (pair.n + pair.ell - args.gamma, pair.c1.k, pair.c2.k, args.gamma)
    rec = _pair_record(out)
    return Result(rec, ok=(out.n, out.c1.k, out.c2.k, out.ell) == want)


def cmd_pair_construct_grs(args, inputs) -> Result:
    from .grs import grs_pair

    F = field_of_order(args.q)
    pair = grs_pair(F, args.n, args.k1, args.k2, args.ell)
    return Result(_pair_record(pair), ok=pair.ell == args.ell)


def cmd_pair_construct_superregular(args, inputs) -> Result:
    from .grs import superregular_from_mds

    F = field_of_order(args.q)
    A = superregular_from_mds(F, args.n)
    pair = pair_from_superregular(A, args.i, args.j, args.ell)
    rec = _pair_record(pair)
    mds = all(C.k == 0 or min_distance(C) == C.n - C.k + 1 for C in (pair.c1, pair.c2))
    rec["mds"] = mds
    return Result(rec, ok=mds and pair.ell == args.ell)


def cmd_pair_probe(args, inputs) -> Result:
    found = conjecture_probe(args.q, args.n, args.k1, args.k2, seed=args.seed, budget=args.budget)
    rows = [{"q": args.q, "n": args.n, "k1": args.k1, "k2": args.k2, "ell": ell,
             "witnessed": w is not None, "route": w.route if w else ""}
            for ell, w in found.items()]
    # a missing witness is not a failed certification
    return Result({"q": args.q, "n": args.n, "k1": args.k1, "k2": args.k2, "results": rows},
                  rows, ["q", "n", "k1", "k2", "ell", "witnessed", "route"])


def cmd_eaqecc_derive(args, inputs) -> Result:
    from .eaqecc import eaqecc_from_pair

    pair = _pair_from_args(args, inputs)
    p = eaqecc_from_pair(pair, limit=args.limit)
    rec = p.to_json()
    rec["label"] = str(p)
    return Result(rec, ok=p.degenerate or p.valid)


def cmd_eaqecc_mds_grid(args, inputs) -> Result:
    from .eaqecc import MDS_GRID_COLUMNS, mds_eaqecc

    F = field_of_order(args.q)
    top = F.q + 1 if args.nmax is None else min(args.nmax, F.q + 1)
    rows, failed = [], []
    for n in range(1, top + 1):
        for k in range(n + 1):
            for ell in range(min(k, n - k) + 1):
                try:
                    p, _ = mds_eaqecc(F, n, k, ell, verify_distance=not args.no_enumerate)
                except EllPairsError as e:
                    failed.append({"n": n, "k": k, "ell": ell, "error": f"{type(e).__name__}: {e}"})
                    continue
                rows.append({"q": F.q, "n": n, "k": k, "ell": ell, "kk": p.k, "d": p.d, "c": p.c,
                             "rate": str(p.rate), "net_rate": str(p.net_rate),
                             "slack": p.singleton_slack, "degenerate": p.degenerate})
    for f in failed:
        print(f"uncertified: n={f['n']} k={f['k']} l={f['ell']}: {f['error']}", file=sys.stderr)
    return Result({"q": F.q, "rows": rows, "failed": failed}, rows, MDS_GRID_COLUMNS, ok=not failed)


def cmd_eaqecc_catalog(args, inputs) -> Result:
    from .eaqecc import CATALOG_COLUMNS, catalog_search

    F = field_of_order(args.q)
    codes = CodeCatalog.from_json(_load_json(args.codes, inputs)) if args.codes else CodeCatalog(F)
    if codes.field != F:
        raise SystemExit(f"catalog file is over GF({codes.field.q}), not GF({F.q})")
    entries = catalog_search(F, range(args.n_min, args.n_max + 1), r=args.r, codes=codes)
    rows = [e.to_row() for e in entries]
    return Result({"q": F.q, "rows": rows}, rows, CATALOG_COLUMNS)


def cmd_reproduce_example(args, inputs) -> Result:
    from .example import reproduce_example

    rows = [{"pair": r.label, "expected": r.expected, "by_rank": r.by_rank,
             "by_intersection": r.by_intersection, "ok": r.ok} for r in reproduce_example()]
    return Result({"rows": rows}, rows, ["pair", "expected", "by_rank", "by_intersection", "ok"],
                  ok=all(r["ok"] for r in rows))


def cmd_selfcheck(args, inputs) -> Result:
    from .selfcheck import run_selfcheck

    report = run_selfcheck(args.profile, seed=args.seed, tamper=args.tamper)
    if not args.timings:
        # keep the report byte-stable across runs
        for s in report["suites"]:
            s.pop("seconds", None)
    rows = [{"suite": s["name"], "passed": s["passed"], "checked": s["checked"],
             "failures": len(s["failures"])} for s in report["suites"]]
    return Result(report, rows, ["suite", "passed", "checked", "failures"], ok=report["passed"])


# -- parser ----------------------------------------------------------------------------
def _pair_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("codes", nargs="*", help="two code JSON files")
    p.add_argument("--pair", help="pair JSON file")
    p.add_argument("--c1", help="first code JSON file")
    p.add_argument("--c2", help="second code JSON file")


def _common(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=("json", "csv"), **({"default": "json"} if defaults else kw))
    p.add_argument("--seed", type=int, **({"default": 0} if defaults else kw))
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ellpairs", description="Linear l-intersection pairs and EAQECCs",
                                 parents=[_common(True)])
    leaf = _common(False)
    ap.add_argument("--version", action="version", version=__version__)
    top = ap.add_subparsers(dest="group", required=True)

    code = top.add_parser("code").add_subparsers(dest="cmd", required=True)
    p = code.add_parser("info", parents=[leaf], help="length, dimension, distance and hull of a code")
    p.add_argument("code", help="code JSON file")
    p.set_defaults(func=cmd_code_info)

    pair = top.add_parser("pair").add_subparsers(dest="cmd", required=True)
    p = pair.add_parser("analyze", parents=[leaf], help="l by every route, bounds and class")
    _pair_inputs(p)
    p.set_defaults(func=cmd_pair_analyze)
    p = pair.add_parser("tune", parents=[leaf], help="monomial search for a target l")
    _pair_inputs(p)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(func=cmd_pair_tune)
    p = pair.add_parser("propagate", parents=[leaf], help="lower l or extend the length")
    p.add_argument("rule", choices=("reduce", "extend"))
    _pair_inputs(p)
    p.add_argument("--gamma", type=int, required=True)
    p.set_defaults(func=cmd_pair_propagate)
    p = pair.add_parser("construct-grs", parents=[leaf], help="GRS pair with prescribed dimensions and l")
    for a in ("q", "n", "k1", "k2", "ell"):
        p.add_argument(f"--{a}", type=int, required=True)
    p.set_defaults(func=cmd_pair_construct_grs)
    p = pair.add_parser("construct-superregular", parents=[leaf], help="MDS pair from a super-regular matrix")
    for a in ("q", "n", "i", "j", "ell"):
        p.add_argument(f"--{a}", type=int, required=True)
    p.set_defaults(func=cmd_pair_construct_superregular)
    p = pair.add_parser("probe-conjecture", parents=[leaf], help="look for a witness for every feasible l")
    for a in ("q", "n", "k1", "k2"):
        p.add_argument(f"--{a}", type=int, required=True)
    p.add_argument("--budget", type=int, default=2000)
    p.set_defaults(func=cmd_pair_probe)

    eq = top.add_parser("eaqecc").add_subparsers(dest="cmd", required=True)
    p = eq.add_parser("derive", parents=[leaf], help="EAQECC parameters of a pair")
    _pair_inputs(p)
    p.add_argument("--limit", type=int, default=1 << 22, help="enumeration budget")
    p.set_defaults(func=cmd_eaqecc_derive)
    p = eq.add_parser("mds-grid", parents=[leaf], help="MDS EAQECC table for one field")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nmax", type=int)
    p.add_argument("--no-enumerate", action="store_true", help="certify MDS column-wise only")
    p.set_defaults(func=cmd_eaqecc_mds_grid)
    p = eq.add_parser("catalog", parents=[leaf], help="positive-net-rate EAQECCs from catalog codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--codes", help="catalog JSON file")
    p.set_defaults(func=cmd_eaqecc_catalog)

    p = top.add_parser("reproduce-example", parents=[leaf], help="the binary length-7 example")
    p.set_defaults(func=cmd_reproduce_example, cmd=None)
    p = top.add_parser("selfcheck", parents=[leaf], help="run the invariant suites")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--tamper", action="store_true", help="negative control on a broken field")
    p.add_argument("--timings", action="store_true", help="include per-suite seconds")
    p.set_defaults(func=cmd_selfcheck, cmd=None)
    return ap


def _slug(args) -> str:
    return "-".join(x for x in (args.group, args.cmd, getattr(args, "rule", None)) if x)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    inputs: dict[str, str] = {}
    try:
        res = args.func(args, inputs)
    except NotFoundWithinBudget as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (EllPairsError, OSError, json.JSONDecodeError, KeyError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    text = render(res, args.format)
    sys.stdout.write(text)
    out_dir = os.environ.get(OUTPUT_ENV)
    if out_dir:
        d = Path(out_dir)
        d.mkdir(parents=True, exist_ok=True)
        name = f"{_slug(args)}.{args.format}"
        data = text.encode()
        (d / name).write_bytes(data)
        man = RunManifest(" ".join(sys.argv[1:] if argv is None else argv), args.seed, inputs, {name: _sha256(data)})
        (d / "manifest.json").write_text(json.dumps(man.to_json(), indent=2) + "\n")
    return 0 if res.ok else 1


if __name__ == "__main__":
    sys.exit(main())
