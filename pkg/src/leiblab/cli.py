"""Command line entry point: ``leiblab {report,audit,corpus,isoclinic,liezation}``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import catalog
from .algebra import liezation
from .audit import audit_algebra, audit_fixture_suite
from .checks import FAIL, Check, verdict
from .corpus import CorpusSpec, generate, oracle_der_lie
from .errors import LeibError, ParseError
from .fields import Field
from .isoclinism import IsoclinismWitness, verify_isoclinism
from .maps import der_lie
from .report import build_report, to_json, to_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


def _seed(value):
    if value is not None:
        return value
    env = os.environ.get("LEIBLAB_SEED")
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"LEIBLAB_SEED must be an integer, got {env!r}") from None


def _field(text):
    try:
        return Field.parse(text)
    except LeibError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), "field") from exc


def _load(args) -> tuple[str, object]:
    if getattr(args, "fixture", None):
        F = _field(args.field) if args.field else Field(0)
        return args.fixture, catalog.fixture(args.fixture, F)
    if not getattr(args, "file", None):
        raise _Usage("give an algebra file or --fixture NAME")
    return args.file, catalog.parse_algebra(args.file)


class _Usage(Exception):
    pass


def _print_checks(title: str, checks: list[Check], out) -> None:
    print(f"== {title}", file=out)
    for c in checks:
        print("  " + c.line(), file=out)


# -- subcommands ---------------------------------------------------------------

def cmd_report(args) -> int:
    _, A = _load(args)
    rec = build_report(A, seed=_seed(args.seed), samples=args.samples, audit=not args.no_audit)
    sys.stdout.write(to_json(rec) if args.json else to_text(rec))
    return EXIT_FAIL if rec.get("audit_ok") is False else EXIT_OK


def cmd_audit(args) -> int:
    seed = _seed(args.seed)
    if args.all_fixtures:
        F = _field(args.field) if args.field else Field(0)
        results = audit_fixture_suite(catalog.all_fixtures(F), args.samples, seed)
    else:
        name, A = _load(args)
        results = {name: audit_algebra(A, args.samples, seed)}
    failed = 0
    if args.json:
        doc = {"schema": 1, "results": {k: [c.as_dict() for c in v] for k, v in results.items()}}
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    for name, checks in results.items():
        if not args.json:
            _print_checks(name, checks, sys.stdout)
        failed += sum(c.status == FAIL for c in checks)
    total = sum(len(v) for v in results.values())
    print(f"{total} checks, {failed} failed", file=sys.stderr if args.json else sys.stdout)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_corpus(args) -> int:
    F = _field(args.field)
    spec = CorpusSpec(args.dim, F, args.mode, args.count, _seed(args.seed))
    stats: dict = {}
    failed = count = 0
    t0 = time.perf_counter()
    for idx, A in enumerate(generate(spec, stats)):
        if args.mode == "exhaustive" and args.count and idx >= args.count and args.limit:
            break
        count += 1
        checks: list[Check] = []
        if args.check == "der-oracle":
            ok = der_lie(A) == oracle_der_lie(A)
            checks.append(verdict("der_lie matches enumeration", ok))
        elif args.check == "theorems":
            checks = audit_algebra(A, args.samples, spec.seed)
        bad = [c for c in checks if c.status == FAIL]
        failed += bool(bad)
        if bad or args.verbose:
            print(f"#{idx} {A!r}")
            for c in (bad if not args.verbose else checks):
                print("  " + c.line())
    dt = time.perf_counter() - t0
    print(
        f"{count} algebras ({stats.get('proposals', 0)} proposals), check={args.check}: "
        f"{failed} failing, {dt:.2f}s"
    )
    return EXIT_FAIL if failed else EXIT_OK


def _matrix(doc, key, F):
    M = doc.get(key)
    if not isinstance(M, list) or not all(isinstance(r, list) for r in M):
        raise ParseError("expected a list of rows", key)
    try:
        return tuple(tuple(F.coerce(v if isinstance(v, str) else int(v)) for v in r) for r in M)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), key) from exc


def cmd_isoclinic(args) -> int:
    if not args.verify:
        raise _Usage("isoclinic needs --verify A.json B.json witness.json")
    a_path, b_path, w_path = args.verify
    A, B = catalog.parse_algebra(a_path), catalog.parse_algebra(b_path)
    if A.field != B.field:
        raise ParseError(f"fields differ: {A.field.name} vs {B.field.name}")
    try:
        with open(w_path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", w_path) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{w_path} line {exc.lineno}") from exc
    if not isinstance(doc, dict):
        raise ParseError("witness must be an object with eta and xi", w_path)
    w = IsoclinismWitness(_matrix(doc, "eta", A.field), _matrix(doc, "xi", A.field))
    ok = verify_isoclinism(A, B, w)
    print("isoclinism verified" if ok else "not an isoclinism")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_liezation(args) -> int:
    _, A = _load(args)
    Q, _ = liezation(A)
    sys.stdout.write(catalog.serialize(Q))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def _add_source(p, allow_all=False):
    p.add_argument("file", nargs="?", help="algebra JSON file")
    p.add_argument("--fixture", metavar="NAME", help="catalog algebra (L2a:GAMMA for a parameter)")
    p.add_argument("--field", help="field for --fixture (default rational)")
    if allow_all:
        p.add_argument("--all-fixtures", action="store_true", help="audit every catalog algebra and pairs")


def _add_sampling(p):
    p.add_argument("--seed", type=int, default=None, help="random seed (default $LEIBLAB_SEED or 0)")
    p.add_argument("--samples", type=int, default=64, help="Monte Carlo sample budget (default 64)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leiblab", description="Lie-central derivations of Leibniz algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="structural report for one algebra")
    _add_source(p)
    _add_sampling(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--no-audit", action="store_true", help="skip the audit table")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("audit", help="run every check; exit 1 on failure")
    _add_source(p, allow_all=True)
    _add_sampling(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("corpus", help="generate small algebras and check them")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--field", required=True, help="gf(p)")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="random")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--limit", action="store_true", help="stop exhaustive mode after --count algebras")
    p.add_argument("--check", choices=("der-oracle", "theorems", "none"), default="none")
    p.add_argument("-v", "--verbose", action="store_true")
    _add_sampling(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("isoclinic", help="verify a Lie-isoclinism witness")
    p.add_argument("--verify", nargs=3, metavar=("A", "B", "WITNESS"))
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("liezation", help="print g/g^ann as an algebra file")
    _add_source(p)
    p.set_defaults(func=cmd_liezation)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "samples", 1) < 0:
            raise _Usage("--samples must be non-negative")
        if getattr(args, "all_fixtures", False) and (args.file or args.fixture):
            raise _Usage("--all-fixtures takes no algebra")
        if getattr(args, "file", None) and getattr(args, "fixture", None):
            raise _Usage("give either a file or --fixture, not both")
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"leiblab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LeibError as exc:
        print(f"leiblab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
