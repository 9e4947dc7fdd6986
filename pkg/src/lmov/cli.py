"""Command line entry point: ``lmov invariant | lmov | verify | catalog``.

Exit codes: 0 success, 1 a checked statement failed, 2 usage or resource error.
JSON is the canonical output; CSV is offered for N-tables only.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from . import quantum_engine
from .braid_link import CATALOG_NAMES, BraidWord, LinkPresentation, catalog
from .cache import ENV_VAR, DiskCache
from .combinatorics import DegreeCapError, color_key
from .hecke import ConsistencyError
from .lmov_pipeline import LMOVCheckError
from .quantum_engine import CONVENTION_VERSION, ResourceError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    max_color_degree: int = 4
    max_N: int = 10
    max_strands: int = 12
    worker_count: int = 1
    cache_dir: str = None
    convention_version: str = CONVENTION_VERSION
    output_format: str = "json"
    show_timings: bool = False

    def validate(self):
        for name in ("max_color_degree", "max_N", "max_strands", "worker_count"):
            if getattr(self, name) < 1:
                raise ValueError("%s must be positive" % name)
        if self.output_format not in ("json", "csv"):
            raise ValueError("output format must be json or csv")


@dataclass
class ResultRecord:
    link_hash: str
    color: object
    kind: str
    payload: object
    timings: dict = field(default_factory=dict)

    def to_json(self, config):
        out = asdict(self)
        out["convention_version"] = config.convention_version
        if not config.show_timings:
            # keep repeated runs byte-identical
            out.pop("timings")
        return out


class UsageError(ValueError):
    pass


# ----- parsing --------------------------------------------------------------

def parse_link(text):
    """A catalogue name, or JSON {"strands": m, "word": [...]} for an explicit braid."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return LinkPresentation(BraidWord(data["strands"], data.get("word", [])),
                                name=data.get("name"))
    try:
        return catalog(text)
    except KeyError:
        raise UsageError("unknown link %r; try `lmov catalog`" % text)


def parse_color(text, link):
    """"[2,1]" for a knot, or "[[1],[2]]" with one partition per component."""
    try:
        data = json.loads(text)
    except ValueError:
        raise UsageError("colour must be JSON, got %r" % text)
    if not isinstance(data, list):
        raise UsageError("colour must be a list")
    if link.num_components == 1 and all(isinstance(x, int) for x in data):
        data = [data]
    if len(data) != link.num_components:
        raise UsageError("colour has %d entries but the link has %d components"
                         % (len(data), link.num_components))
    out = []
    for part in data:
        if not isinstance(part, list) or not all(isinstance(x, int) and x > 0 for x in part):
            raise UsageError("bad partition %r" % (part,))
        if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
            raise UsageError("partition %r is not weakly decreasing" % (part,))
        out.append(tuple(part))
    return tuple(out)


def _color_json(Avec):
    return [list(a) for a in Avec]


# ----- commands -------------------------------------------------------------

def cmd_invariant(link, Avec, config):
    if sum(sum(a) for a in Avec) > config.max_color_degree:
        raise ResourceError("colour degree exceeds max_color_degree %d" % config.max_color_degree)
    t0 = time.perf_counter()
    inv = quantum_engine.invariant(link, Avec, max_strands=config.max_strands)
    dt = time.perf_counter() - t0
    payload = {"link": link.name or link.to_json(), "color": _color_json(Avec),
               "value": inv.value.to_json(), "pretty": repr(inv.value),
               "provenance": inv.provenance}
    return ResultRecord(link.content_hash(), _color_json(Avec), "W", payload,
                        {"seconds": round(dt, 3)}), True


def cmd_lmov(link, degree, config):
    from .lmov_pipeline import run_pipeline

    if degree > config.max_color_degree:
        raise ResourceError("degree %d exceeds max_color_degree %d"
                            % (degree, config.max_color_degree))
    t0 = time.perf_counter()
    tabs, report = run_pipeline(link, degree, max_strands=config.max_strands,
                                workers=config.worker_count)
    dt = time.perf_counter() - t0
    table = tabs["table"]
    checks = {k: v for k, v in report.items()}
    ok = all(v for k, v in checks.items() if k != "pole_structure_literal")
    entries = []
    for B in sorted(table.N, key=color_key):
        entries.append({"B": _color_json(B),
                        "entries": [[int(g), int(q2), int(n)]
                                    for (g, q2), n in sorted(table.N[B].items())]})
    payload = {"link": link.name or link.to_json(), "degree": degree, "tables": entries,
               "checks": checks,
               "failures": [{"B": _color_json(B), "theorem": kind, "message": msg}
                            for B, kind, msg in table.failures]}
    return ResultRecord(link.content_hash(), None, "N-table", payload,
                        {"seconds": round(dt, 3)}), ok


def cmd_verify(suite, config):
    from .suites import SUITES, run_suite
    names = sorted(SUITES) if suite == "all" else [suite]
    results = {}
    t0 = time.perf_counter()
    for name in names:
        results[name] = run_suite(name)
    dt = time.perf_counter() - t0
    ok = all(r["ok"] for rows in results.values() for r in rows)
    payload = {"suite": suite, "ok": ok, "results": results}
    return ResultRecord("", None, "check-report", payload, {"seconds": round(dt, 3)}), ok


def cmd_catalog():
    rows = []
    for name in CATALOG_NAMES:
        L = catalog(name)
        rows.append({"name": name, "strands": L.strands, "word": list(L.word),
                     "components": L.num_components, "writhes": list(L.writhes),
                     "total_linking": L.total_linking()})
    return rows


def n_table_csv(payload):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["link", "B", "g", "2Q", "N"])
    for row in payload["tables"]:
        B = json.dumps(row["B"], separators=(",", ":"))
        for g, q2, n in row["entries"]:
            w.writerow([payload["link"] if isinstance(payload["link"], str)
                        else json.dumps(payload["link"]), B, g, q2, n])
    return buf.getvalue()


# ----- main -----------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="lmov", description="Coloured HOMFLY invariants and "
                                "LMOV integrality checks for closed braids.")
    p.add_argument("--max-degree", type=int, default=4, dest="max_color_degree")
    p.add_argument("--max-N", type=int, default=10, dest="max_N")
    p.add_argument("--max-strands", type=int, default=12)
    p.add_argument("--workers", type=int, default=1, dest="worker_count")
    p.add_argument("--cache-dir", default=None,
                   help="on-disk cache (default: $%s)" % ENV_VAR)
    p.add_argument("--format", choices=("json", "csv"), default="json", dest="output_format")
    p.add_argument("--timings", action="store_true", dest="show_timings",
                   help="include wall-clock timings (output is then not reproducible)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariant", help="coloured invariant W_A")
    s.add_argument("--link", required=True)
    s.add_argument("--color", required=True)

    s = sub.add_parser("lmov", help="N-tables and structural checks up to a colour degree")
    s.add_argument("--link", required=True)
    s.add_argument("--degree", type=int, default=2)

    s = sub.add_parser("verify", help="run property suites")
    s.add_argument("--suite", default="all",
                   choices=("combinatorics", "symfun", "cutjoin", "numtheory", "engine", "all"))

    sub.add_parser("catalog", help="list the built-in links")
    return p


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True, indent=2))
    out.write("\n")


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    config = RunConfig(max_color_degree=args.max_color_degree, max_N=args.max_N,
                       max_strands=args.max_strands, worker_count=args.worker_count,
                       cache_dir=args.cache_dir or os.environ.get(ENV_VAR),
                       output_format=args.output_format, show_timings=args.show_timings)
    try:
        config.validate()
        if config.cache_dir:
            quantum_engine.set_disk_cache(DiskCache(config.cache_dir))
        if args.command == "catalog":
            _emit(cmd_catalog(), out)
            return EXIT_OK
        if args.command == "invariant":
            link = parse_link(args.link)
            rec, ok = cmd_invariant(link, parse_color(args.color, link), config)
        elif args.command == "lmov":
            link = parse_link(args.link)
            if args.degree < 1:
                raise UsageError("degree must be positive")
            rec, ok = cmd_lmov(link, args.degree, config)
            if config.output_format == "csv":
                out.write(n_table_csv(rec.payload))
                return EXIT_OK if ok else EXIT_FAIL
        else:
            rec, ok = cmd_verify(args.suite, config)
        _emit(rec.to_json(config), out)
        return EXIT_OK if ok else EXIT_FAIL
    except (LMOVCheckError, ConsistencyError) as exc:
        sys.stderr.write("lmov: check failed: %s\n" % exc)
        return EXIT_FAIL
    except (UsageError, ResourceError, DegreeCapError, ValueError) as exc:
        sys.stderr.write("lmov: %s\n" % exc)
        return EXIT_USAGE
    finally:
        quantum_engine.set_disk_cache(None)


if __name__ == "__main__":
    sys.exit(main())
