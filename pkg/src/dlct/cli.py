"""Command-line front end: ``dlct analyze``, ``dlct verify`` and ``dlct catalog``."""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import catalog, suites, tables
from .families import build, parse_family
from .gf2n import FieldSpec
from .transforms import walsh_table
from .vbf import DOT, TRACE, VBF, convention_name, inverse, is_permutation, parse, resolve_field

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

TABLE_NAMES = ("ddt", "lat", "act", "dlct")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _hex(text: str) -> int:
    return int(text, 16)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dlct", description="Exact DDT/LAT/ACT/DLCT analysis of vectorial Boolean functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="compute tables, indicators and spectra")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--sbox", metavar="FILE", help="truth table file, or - for stdin")
    src.add_argument("--family", metavar="SPEC", help="e.g. gold:i=2, kasami:i=2, inverse, welch, bl:k=2, quad:seed=S")
    a.add_argument("--n", type=int)
    a.add_argument("--m", type=int)
    a.add_argument("--modulus", type=_hex, help="field modulus in hex, e.g. 83")
    a.add_argument("--table", choices=TABLE_NAMES + ("all",), action="append",
                   help="table to include; may be repeated")
    a.add_argument("--inverse", action="store_true", help="analyze the compositional inverse")
    a.add_argument("--convention", choices=(DOT, TRACE))
    a.add_argument("--format", choices=("json", "csv"), default="json")
    a.add_argument("--out", metavar="FILE")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=tuple(suites.SUITES) + ("all",), default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int)
    v.add_argument("--out", metavar="FILE")

    c = sub.add_parser("catalog", help="the 16 optimal 4-bit S-box classes")
    c.add_argument("--index", type=int, choices=range(16), metavar="I")
    c.add_argument("--out", metavar="FILE")
    return p


def _load_function(args) -> tuple[VBF, int | None]:
    """The function to analyze and the seed that produced it, if any."""
    if args.family:
        if args.n is None:
            raise UsageError("--family needs --n")
        spec = parse_family(args.family, args.n, args.modulus)
        return build(spec), spec.seed
    text = sys.stdin.read() if args.sbox == "-" else open(args.sbox, encoding="utf-8").read()
    F = parse(text, args.n, args.m)
    if args.modulus is not None:
        F = F.with_field(FieldSpec(F.n, args.modulus))
    return F, None


def _tables(F: VBF, names, convention) -> dict:
    makers = {
        "ddt": lambda: tables.ddt(F),
        "lat": lambda: walsh_table(F, convention),
        "act": lambda: tables.act_from_ddt(F, convention),
        "dlct": lambda: tables.dlct(F, convention),
    }
    return {name: makers[name]() for name in names}


def analyze(args) -> dict:
    F, seed = _load_function(args)
    if args.inverse:
        if not is_permutation(F):
            raise UsageError("--inverse needs a permutation")
        F = inverse(F)
    field = resolve_field(F, args.convention)
    convention = convention_name(field)
    requested = args.table or []
    names = TABLE_NAMES if "all" in requested else tuple(n for n in TABLE_NAMES if n in requested)
    act = tables.act_from_ddt(F, "dot")
    return {
        "meta": {
            "n": F.n,
            "m": F.m,
            "convention": convention,
            "modulus": None if F.field is None else F.field.modulus,
            "seed": seed,
        },
        "tables": _tables(F, names, convention),
        "indicators": tables.indicators(F).as_dict(),
        "spectra": {
            "autocorrelation": tables.autocorrelation_spectrum(F, act).pairs(),
            "extended": tables.extended_spectrum(F, act).pairs(),
        },
    }


def _json(report: dict) -> str:
    def encode(obj):
        if hasattr(obj, "to_dict"):
            return obj.to_dict()
        raise TypeError(type(obj))
    return json.dumps(report, default=encode, indent=1) + "\n"


def _csv(report: dict) -> str:
    out = io.StringIO()
    meta = report["meta"]
    out.write("key,value\n")
    for k in ("n", "m", "convention", "modulus"):
        out.write(f"{k},{'' if meta[k] is None else meta[k]}\n")
    for k, val in report["indicators"].items():
        out.write(f"{k},{val}\n")
    for name, pairs in report["spectra"].items():
        out.write(f"\n{name}_value,count\n")
        out.writelines(f"{v},{c}\n" for v, c in pairs)
    for table in report["tables"].values():
        out.write("\n" + table.to_csv())
    return out.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def verify(args) -> tuple[dict, bool]:
    records = suites.run(args.suite, args.seed, args.max_n)
    passed = all(r["pass"] for r in records)
    report = {"suite": args.suite, "seed": args.seed, "max_n": args.max_n, "passed": passed, "results": records}
    return report, passed


def catalog_report(args) -> dict:
    idx = range(16) if args.index is None else [args.index]
    out = []
    for i in idx:
        e = catalog.get(i)
        got = tables.autocorrelation_spectrum(e.vbf())
        out.append({
            "index": i,
            "table": list(e.table),
            "expected_spectrum": e.expected_spectrum.pairs(),
            "spectrum": got.pairs(),
            "match": got == e.expected_spectrum,
        })
    return {"entries": out}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        try:
            report = analyze(args)
        except (UsageError, ValueError, OSError) as exc:
            print(f"dlct: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        _emit(_csv(report) if args.format == "csv" else _json(report), args.out)
        return EXIT_OK
    if args.command == "verify":
        report, passed = verify(args)
        _emit(_json(report), args.out)
        return EXIT_OK if passed else EXIT_FAILED
    report = catalog_report(args)
    _emit(_json(report), args.out)
    return EXIT_OK if all(e["match"] for e in report["entries"]) else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
