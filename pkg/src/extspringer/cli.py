"""Command line entry point: ``extspringer verify|table|solomon|kostka|orbits``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import reports
from .nilpotent_orbits import parabolic_catalogue
from .root_data import CACHE_ENV, DEFAULT_GUARD, CartanType, weyl_group
from .character_theory import solomon_check
from .type_a_springer import kostka_foulkes_bar, partition
from .verifier import (
    ALL_CHECKS, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, SCHEMA, CaseSpec, cmd_table, cmd_verify,
    poly_json,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Config:
    guard: int = DEFAULT_GUARD
    cache_dir: str | None = None
    jobs: int = 1
    format: str = "json"

    @classmethod
    def resolve(cls, args) -> "Config":
        """Config file values, overridden by any flag given explicitly."""
        cfg = cls()
        if args.config:
            with open(args.config) as fh:
                data = json.load(fh)
            unknown = set(data) - {"guard", "cache_dir", "jobs", "format"}
            if unknown:
                raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
            for k, v in data.items():
                setattr(cfg, k, v)
        for k in ("guard", "cache_dir", "jobs", "format"):
            v = getattr(args, k)
            if v is not None:
                setattr(cfg, k, v)
        if cfg.format not in reports.FORMATS:
            raise UsageError(f"unknown format {cfg.format!r}")
        if cfg.jobs < 1:
            raise UsageError("--jobs must be positive")
        return cfg


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _common(p):
    p.add_argument("--format", choices=reports.FORMATS, default=None)
    p.add_argument("--cache-dir", dest="cache_dir", default=None,
                   help=f"enumeration cache (default: ${CACHE_ENV})")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--guard", type=int, default=None, help="maximum Weyl group order")
    p.add_argument("--config", default=None, help="JSON file with guard, cache_dir, jobs, format")
    p.add_argument("--timings", action="store_true", help="include wall time (breaks byte-identity)")


def _family_rank(p, rank_name="rank"):
    p.add_argument("family_pos", nargs="?", metavar="FAMILY")
    p.add_argument(f"{rank_name}_pos", nargs="?", type=int, metavar=rank_name.upper())
    p.add_argument("--family", default=None)
    p.add_argument(f"--{rank_name.replace('_', '-')}", dest=rank_name, type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="extspringer", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("verify", help="run the verification pipeline on one rank")
    _family_rank(p)
    p.add_argument("--orbit", default=None, help="Jordan type, e.g. 3,1 (default: all orbits)")
    p.add_argument("--checks", default=None, help=f"subset of {','.join(ALL_CHECKS)}")
    _common(p)

    p = sub.add_parser("table", help="one row per parabolic orbit up to a rank")
    _family_rank(p, "max_rank")
    p.add_argument("--min-rank", dest="min_rank", type=int, default=2)
    _common(p)

    p = sub.add_parser("solomon", help="bivariate exterior-power table against the product")
    _family_rank(p)
    _common(p)

    p = sub.add_parser("kostka", help="cocharge Kostka-Foulkes polynomial")
    p.add_argument("mu_pos", nargs="?", metavar="MU")
    p.add_argument("lam_pos", nargs="?", metavar="LAMBDA")
    p.add_argument("--mu", default=None)
    p.add_argument("--lambda", dest="lam", default=None)
    _common(p)

    p = sub.add_parser("orbits", help="parabolic orbits with J, K, r, s")
    _family_rank(p)
    _common(p)
    return parser


def _pick(args, name):
    flag, pos = getattr(args, name, None), getattr(args, f"{name}_pos", None)
    if flag is not None and pos is not None and flag != pos:
        raise UsageError(f"conflicting values for {name}: {pos} and {flag}")
    v = flag if flag is not None else pos
    if v is None:
        raise UsageError(f"missing {name}")
    return v


def _family(args) -> str:
    fam = str(_pick(args, "family")).upper()
    if fam not in ("A", "B", "C", "D"):
        raise UsageError(f"unknown family {fam!r}")
    return fam


def _cartan(fam, rank) -> CartanType:
    try:
        return CartanType(fam, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def factored(ms) -> str:
    if not ms:
        return "1"
    return "".join(f"(1 + t*q^{m})" if m != 1 else "(1 + t*q)" for m in ms)


def run(argv=None) -> tuple[str, int]:
    """Rendered document and exit code."""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required")
    cfg = Config.resolve(args)
    cmd = args.command
    doc: dict = {"schema": SCHEMA, "command": cmd}
    code = EXIT_PASS
    if cmd == "verify":
        fam, rank = _family(args), _pick(args, "rank")
        _cartan(fam, rank)
        orbit = partition(_ints(args.orbit)) if args.orbit else None
        checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks else None
        spec = CaseSpec(fam, rank, orbit, checks)
        reps, code = cmd_verify(spec, cfg.guard, cfg.cache_dir, cfg.jobs, args.timings)
        doc.update(family=fam, rank=rank, checks=list(spec.checks),
                   reports=[r.to_dict() for r in reps])
    elif cmd == "table":
        fam, top = _family(args), _pick(args, "max_rank")
        rows, code = cmd_table(fam, top, cfg.guard, cfg.cache_dir, cfg.jobs, args.min_rank, args.timings)
        doc.update(family=fam, max_rank=top, rows=rows)
    elif cmd == "solomon":
        fam, rank = _family(args), _pick(args, "rank")
        _cartan(fam, rank)
        rep = solomon_check(weyl_group(fam, rank, cfg.guard, cfg.cache_dir))
        doc.update(family=fam, rank=rank, exponents=list(rep.exponents),
                   table=poly_json(rep.table, ["t", "q"]), product=poly_json(rep.product, ["t", "q"]),
                   factored=factored(rep.exponents), verdict=rep.verdict)
        code = EXIT_PASS if rep.verdict == "pass" else EXIT_FAIL
    elif cmd == "kostka":
        mu, lam = partition(_ints(_pick(args, "mu"))), partition(_ints(_pick(args, "lam")))
        doc.update(mu=list(mu), **{"lambda": list(lam)},
                   polynomial=poly_json(kostka_foulkes_bar(mu, lam), ["q"]))
    elif cmd == "orbits":
        fam, rank = _family(args), _pick(args, "rank")
        _cartan(fam, rank)
        doc.update(family=fam, rank=rank, orbits=[
            {"jordan_type": list(d.jordan_type), "lambda": list(d.lam), "m": d.m, "J": list(d.J),
             "K": list(d.K), "r": d.r, "s": d.s,
             "coexponents": list(d.coexponents.values) if d.coexponents else None}
            for d in parabolic_catalogue(fam, rank)])
    return reports.render(doc, cfg.format), code


def main(argv=None) -> int:
    try:
        text, code = run(argv)
    except (UsageError, ValueError) as exc:
        print(f"extspringer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
