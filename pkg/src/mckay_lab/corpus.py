"""Corpus enumeration and the parallel group-by-group verification runner."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd
from multiprocessing import Pool

from .groups import parse_group_spec
from .serialize import report_json
from .verify import verify_group


@dataclass
class CorpusSpec:
    """Which groups to sweep, and how."""

    max_order: int = 0
    groups: list[str] = field(default_factory=list)  # explicit 'r:a,b,c' specs
    jobs: int = 1
    output_dir: str | None = None


def canonical_cyclic(r: int, weights) -> tuple[int, tuple[int, int, int]]:
    """Normal form of 1/r(a,b,c) under coordinate permutation and choice of
    generator of the same embedded subgroup."""
    best = None
    for k in range(1, r):
        if gcd(k, r) != 1:
            continue
        cand = tuple(sorted((k * w) % r for w in weights))
        if best is None or cand < best:
            best = cand
    return (r, best)


def enumerate_cyclic(max_order: int) -> list[str]:
    """All embedded cyclic subgroups 1/r(a,b,c) of SL3 with 2 <= r <= max_order.

    Weights may vanish (transversal A-type groups such as 1/2(1,1,0) are
    included); triples are gcd-normalized and deduplicated up to coordinate
    permutation and subgroup isomorphism.
    """
    seen = set()
    out = []
    for r in range(2, max_order + 1):
        for a in range(r):
            for b in range(a, r):
                c = (-a - b) % r
                if c < b or (a, b, c) == (0, 0, 0):
                    continue
                if gcd(gcd(a, b), gcd(c, r)) != 1:
                    continue
                key = canonical_cyclic(r, (a, b, c))
                if key not in seen:
                    seen.add(key)
                    out.append(f"{r}:{a},{b},{c}")
    return out


def corpus_specs(spec: CorpusSpec) -> list[str]:
    specs = enumerate_cyclic(spec.max_order)
    for extra in spec.groups:
        if extra not in specs:
            specs.append(extra)
    return specs


def _verify_spec(group_spec: str) -> dict:
    return verify_group(parse_group_spec(group_spec))


def run_corpus(spec: CorpusSpec) -> dict:
    """Verify every corpus group and aggregate deterministically.

    Reports are merged in corpus order, so the aggregate is independent of
    the worker count; per-group JSON files are written when an output
    directory is configured.
    """
    specs = corpus_specs(spec)
    if spec.jobs > 1 and len(specs) > 1:
        with Pool(spec.jobs) as pool:
            reports = pool.map(_verify_spec, specs)
    else:
        reports = [_verify_spec(s) for s in specs]

    case_hist: dict[str, int] = {}
    shape_hist: dict[str, int] = {}
    marking_hist: dict[str, int] = {}
    failures = []
    per_group = []
    for group_spec, report in zip(specs, reports):
        for entry in report["per_divisor"]:
            case_hist[entry["case"]] = case_hist.get(entry["case"], 0) + 1
            shape_hist[str(entry["shape"])] = shape_hist.get(str(entry["shape"]), 0) + 1
        for entry in report["per_character"]:
            klass = entry["marking_class"]
            marking_hist[klass] = marking_hist.get(klass, 0) + 1
        if not report["pass"]:
            failures.append({"group": group_spec, "failures": report["failures"]})
        per_group.append(
            {
                "group": group_spec,
                "order": report["order"],
                "pass": report["pass"],
            }
        )
        if spec.output_dir:
            _write_group_report(spec.output_dir, group_spec, report)

    return {
        "max_order": spec.max_order,
        "groups": len(specs),
        "pass": not failures,
        "failures": failures,
        "case_histogram": dict(sorted(case_hist.items())),
        "shape_histogram": dict(sorted(shape_hist.items())),
        "marking_histogram": dict(sorted(marking_hist.items())),
        "per_group": per_group,
    }


def _write_group_report(output_dir: str, group_spec: str, report: dict) -> None:
    os.makedirs(output_dir, exist_ok=True)
    name = group_spec.replace(":", "_").replace(",", "-").replace("+", "_x_")
    with open(os.path.join(output_dir, f"{name}.json"), "w") as fh:
        fh.write(report_json(report))
