"""Self-checks of a translation against the lasso oracle."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .automaton import translate
from .dnf import expansion_set
from .formula import Formula, atoms, negate, subformula_count
from .oracle import (
    accepts_lasso,
    atom_names,
    enumerate_lassos,
    eval_lasso,
    is_empty,
    product,
    sample_formulas,
)

REPORT_SCHEMA = "ltl2nba.verify/1"


@dataclass(frozen=True)
class TranslateOptions:
    mode: str = "auto"
    merge: bool = True
    restrict: bool = True
    min_os: bool = False
    prune: bool = False

    def build(self, f: Formula):
        return translate(
            f, self.mode, merge=self.merge, restrict=self.restrict,
            min_os=self.min_os, prune=self.prune,
        )


def check_equivalence(f: Formula, a, ap, max_stem: int, max_loop: int) -> dict:
    checked = 0
    for w in enumerate_lassos(ap, max_stem, max_loop):
        checked += 1
        expected = eval_lasso(f, w)
        if accepts_lasso(a, w) != expected:
            return {
                "pass": False,
                "lassos": checked,
                "counterexample": {"word": str(w), "formula_holds": expected},
            }
    return {"pass": True, "lassos": checked}


def check_complement(f: Formula, a, options: TranslateOptions) -> dict:
    # a forced special mode rarely fits the negation (U and R swap)
    if options.mode in ("release-free", "until-free"):
        options = replace(options, mode="auto")
    b = options.build(negate(f))
    empty, witness = is_empty(product(a, b))
    if empty:
        return {"pass": True}
    return {
        "pass": False,
        "witness": str(witness),
        "formula_holds": eval_lasso(f, witness),
    }


def check_bounds(f: Formula, a) -> dict:
    n = subformula_count(f)
    ef = len(expansion_set(f, check_bound=False))
    states = len(a.states)
    special = a.mode in ("release-free", "until-free")
    limit = 2 ** (n + 1) if special else 2 ** (2 * n + 1)
    return {
        "pass": ef <= 2 ** (n + 1) and states <= limit,
        "n": n,
        "bound_n1": 2 ** (n + 1),
        "bound_2n1": 2 ** (2 * n + 1),
        "expansion_set": ef,
        "states": states,
        "mode": a.mode,
    }


def verify_formula(
    f: Formula,
    options: TranslateOptions = TranslateOptions(),
    max_stem: int = 2,
    max_loop: int = 2,
    ap=None,
) -> dict:
    if max_loop < 1:
        raise ValueError("max_loop must be at least 1")
    a = options.build(f)
    ap = list(ap) if ap is not None else atoms(f)
    checks = {
        "oracle_equivalence": check_equivalence(f, a, ap, max_stem, max_loop),
        "complement_intersection": check_complement(f, a, options),
        "bounds": check_bounds(f, a),
    }
    return {
        "formula": str(f),
        "mode": a.mode,
        "pass": all(c["pass"] for c in checks.values()),
        "checks": checks,
    }


def run_verify(
    formulas: list[Formula],
    options: TranslateOptions = TranslateOptions(),
    max_stem: int = 2,
    max_loop: int = 2,
    ap=None,
    params: dict | None = None,
) -> dict:
    results = [verify_formula(f, options, max_stem, max_loop, ap) for f in formulas]
    return {
        "schema": REPORT_SCHEMA,
        "params": {
            "mode": options.mode,
            "merge": options.merge,
            "restrict": options.restrict,
            "min_os": options.min_os,
            "prune_dead": options.prune,
            "max_stem": max_stem,
            "max_loop": max_loop,
            **(params or {}),
        },
        "summary": {
            "total": len(results),
            "passed": sum(r["pass"] for r in results),
        },
        "results": results,
    }


def sampled_batch(seed: int, count: int, max_size: int, ap_count: int):
    return sample_formulas(seed, count, max_size, ap_count), atom_names(ap_count)
