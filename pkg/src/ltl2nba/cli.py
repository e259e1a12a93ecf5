"""Command-line front end.

Exit status: 0 on success, 1 on unreadable input (syntax errors, bad
options, missing files), 2 when a forced special mode does not apply to the
formula, 3 when ``--verify`` finds a failing check.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .automaton import ModeMismatch, stats, translate
from .export import export_dot, export_hoa, export_json
from .parser import LTLSyntaxError, parse
from .verify import TranslateOptions, run_verify, sampled_batch

log = logging.getLogger("ltl2nba")

EXIT_OK, EXIT_INPUT, EXIT_MODE, EXIT_VERIFY = 0, 1, 2, 3

MODE_CHOICES = {"auto": "auto", "general": "general", "rf": "release-free",
                "uf": "until-free", "release-free": "release-free",
                "until-free": "until-free"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class JobConfig:
    formula: str | None = None
    file: str | None = None
    mode: str = "auto"
    merge: bool = True
    restrict_p: bool = True
    min_os: bool = False
    prune_dead: bool = False
    output_format: str = "hoa"
    verify: bool = False
    sample: int | None = None
    seed: int = 0
    max_size: int = 6
    ap: int = 2
    max_stem: int = 2
    max_loop: int = 2
    occurrence_tags: bool = True
    out: str | None = None

    def validate(self) -> None:
        sources = (self.formula is not None) + (self.file is not None)
        if self.sample is not None:
            if not self.verify:
                raise UsageError("--sample requires --verify")
            if sources:
                raise UsageError("--sample cannot be combined with -f/--file")
        elif sources != 1:
            raise UsageError("give exactly one of -f FORMULA or --file PATH")
        if self.verify and self.max_loop < 1:
            raise UsageError("--max-loop must be at least 1")
        if self.mode not in MODE_CHOICES:
            raise UsageError(f"unknown mode {self.mode!r}")

    @property
    def options(self) -> TranslateOptions:
        return TranslateOptions(
            mode=MODE_CHOICES[self.mode], merge=self.merge,
            restrict=self.restrict_p, min_os=self.min_os, prune=self.prune_dead,
        )

    def formula_text(self) -> str:
        if self.formula is not None:
            return self.formula
        with open(self.file, encoding="utf-8") as fh:
            return fh.read().strip()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def run_translate(cfg: JobConfig) -> int:
    try:
        text = cfg.formula_text()
        f = parse(text, cfg.occurrence_tags)
    except OSError as exc:
        print(f"ltl2nba: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LTLSyntaxError as exc:
        print(f"ltl2nba: syntax error at {exc}\n{exc.pointer()}", file=sys.stderr)
        return EXIT_INPUT
    try:
        o = cfg.options
        a = translate(f, o.mode, merge=o.merge, restrict=o.restrict,
                      min_os=o.min_os, prune=o.prune)
    except ModeMismatch as exc:
        print(f"ltl2nba: mode {MODE_CHOICES[cfg.mode]} does not apply: {exc}", file=sys.stderr)
        return EXIT_MODE
    log.info("translated %s in %s mode", f, a.mode)
    match cfg.output_format:
        case "hoa":
            out = export_hoa(a, name=text)
        case "dot":
            out = export_dot(a)
        case "json":
            out = export_json(a, formula=str(f))
        case "stats":
            out = stats(a).line() + "\n"
    _emit(out, cfg.out)
    return EXIT_OK


def run_verify_job(cfg: JobConfig) -> int:
    params: dict = {}
    ap = None
    if cfg.sample is not None:
        formulas, ap = sampled_batch(cfg.seed, cfg.sample, cfg.max_size, cfg.ap)
        params = {"sample": cfg.sample, "seed": cfg.seed, "max_size": cfg.max_size, "ap": cfg.ap}
    else:
        try:
            formulas = [parse(cfg.formula_text(), cfg.occurrence_tags)]
        except OSError as exc:
            print(f"ltl2nba: {exc}", file=sys.stderr)
            return EXIT_INPUT
        except LTLSyntaxError as exc:
            print(f"ltl2nba: syntax error at {exc}\n{exc.pointer()}", file=sys.stderr)
            return EXIT_INPUT
    try:
        report = run_verify(formulas, cfg.options, cfg.max_stem, cfg.max_loop, ap, params)
    except ModeMismatch as exc:
        print(f"ltl2nba: mode {MODE_CHOICES[cfg.mode]} does not apply: {exc}", file=sys.stderr)
        return EXIT_MODE
    _emit(json.dumps(report, indent=2) + "\n", cfg.out)
    s = report["summary"]
    print(f"verify: {s['passed']}/{s['total']} pass", file=sys.stderr)
    return EXIT_OK if s["passed"] == s["total"] else EXIT_VERIFY


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(
        prog="ltl2nba",
        description="Translate LTL formulas into Büchi automata via disjunctive normal forms.",
    )
    src = p.add_mutually_exclusive_group()
    src.add_argument("-f", "--formula", help="formula text")
    src.add_argument("--file", help="read the formula from a file")
    p.add_argument("--mode", default="auto", choices=sorted(MODE_CHOICES))
    p.add_argument("--format", dest="output_format", default="hoa",
                   choices=["hoa", "dot", "json", "stats"])
    p.add_argument("--no-merge", dest="merge", action="store_false",
                   help="keep states whose formulas share a DNF apart")
    p.add_argument("--no-restrict-p", dest="restrict_p", action="store_false",
                   help="do not restrict process sets to obligation literals")
    p.add_argument("--min-os", action="store_true",
                   help="drop non-minimal obligations")
    p.add_argument("--prune-dead", action="store_true",
                   help="remove states that cannot reach an accepting cycle")
    p.add_argument("--no-occurrence-tags", dest="occurrence_tags", action="store_false",
                   help="treat repeated atoms as the same syntactic node")
    p.add_argument("--verify", action="store_true",
                   help="check the translation against the lasso oracle; prints a JSON report")
    p.add_argument("--sample", type=int, help="verify N sampled formulas instead of one")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--ap", type=int, default=2)
    p.add_argument("--max-stem", type=int, default=2)
    p.add_argument("--max-loop", type=int, default=2)
    p.add_argument("-o", "--out", help="write output here instead of stdout")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = vars(build_parser().parse_args(argv))
    logging.basicConfig(level=logging.INFO if args.pop("verbose") else logging.WARNING,
                        format="%(name)s: %(message)s")
    cfg = JobConfig(**args)
    try:
        cfg.validate()
    except UsageError as exc:
        print(f"ltl2nba: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run_verify_job(cfg) if cfg.verify else run_translate(cfg)


if __name__ == "__main__":
    sys.exit(main())
