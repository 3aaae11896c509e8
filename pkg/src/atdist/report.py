"""Combined reporting: all four measures, weighted sum, sweeps, matrices.

Normalization divides the absolute value by the node count of the larger
tree; the multiset measure reports the Jaccard distance as its normalized
form.  The weighted sum combines the absolute distances (a normalized
variant over the normalized inputs is reported alongside).

``run_counterexamples`` evaluates every built-in variant against the base
tree with the strict threshold and checks the results against the
expected distance and operation tables embedded below.  Multiset rows are
advisory except for the leaf-blindness subset: the published multiset
construction is not reproducible in full (it implies four suites for a
three-suite tree), so only rows forced by leaf-only semantics are hard.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corpus import COUNTEREXAMPLE_NAMES, build_counterexample
from .labeldist import label_distance
from .mapping import NodeMapping
from .multiset import multiset_distance
from .radical import decompose, radical_distance
from .report_types import MeasureResult, OpCounts
from .similarity import ConfigError, ExactSimilarity, validate_epsilon
from .ted import CostConfig, EditOp, TedResult, ted_with_reorder, zs_distance
from .tree import AttackTree

MEASURES = ("label", "ted", "radical", "multiset")
REORDER_MODES = ("off", "on", "min")
DEFAULT_ALPHA = (0.5, 0.25, 0.25, 0.0)


def validate_alpha(alpha) -> tuple[float, float, float, float]:
    values = tuple(float(a) for a in alpha)
    if len(values) != 4:
        raise ConfigError(f"alpha needs exactly 4 weights, got {len(values)}")
    if any(a < 0 for a in values):
        raise ConfigError("alpha weights must be non-negative")
    if not any(a > 0 for a in values):
        raise ConfigError("at least one alpha weight must be positive")
    return values


def wsd(ld: float, ted: float, rd: float, msd: float, alpha=DEFAULT_ALPHA) -> float:
    a1, a2, a3, a4 = validate_alpha(alpha)
    return a1 * ld + a2 * ted + a3 * rd + a4 * msd


@dataclass
class DistanceReport:
    tree_a: str
    tree_b: str
    size_a: int
    size_b: int
    label: MeasureResult
    ted: MeasureResult
    radical: MeasureResult
    multiset: MeasureResult
    wsd: float
    wsd_normalized: float
    ted_reordered: bool
    config: dict
    label_mapping: NodeMapping = field(repr=False, default=None)
    ted_script: list[EditOp] = field(repr=False, default=None)

    def measure(self, name: str) -> MeasureResult:
        return {
            "label": self.label,
            "ted": self.ted,
            "radical": self.radical,
            "multiset": self.multiset,
        }[name]

    def to_json(self) -> dict:
        return {
            "trees": {
                "a": {"name": self.tree_a, "size": self.size_a},
                "b": {"name": self.tree_b, "size": self.size_b},
            },
            "measures": {
                "label": self.label.to_json(),
                "ted": {**self.ted.to_json(), "reordered": self.ted_reordered},
                "radical": self.radical.to_json(),
                "multiset": self.multiset.to_json(),
            },
            "wsd": self.wsd,
            "wsd_normalized": self.wsd_normalized,
            "config": self.config,
        }


def compare_all(
    provider,
    eps: float,
    cfg: CostConfig,
    alpha,
    t1: AttackTree,
    t2: AttackTree,
    reorder: str = "min",
) -> DistanceReport:
    eps = validate_epsilon(eps)
    alpha = validate_alpha(alpha)
    if reorder not in REORDER_MODES:
        raise ConfigError(f"reorder mode must be one of {REORDER_MODES}, got {reorder!r}")
    denom = max(t1.size, t2.size)

    ld, mapping, ld_ops = label_distance(provider, eps, t1, t2)
    ted_result = _run_ted(cfg, provider, eps, t1, t2, reorder)
    rd, rd_ops = radical_distance(provider, eps, t1, t2)
    msd, jaccard, msd_ops = multiset_distance(provider, eps, t1, t2)

    ted_counts = OpCounts.from_counts(ted_result.op_counts())
    report = DistanceReport(
        tree_a=t1.source_name or "a",
        tree_b=t2.source_name or "b",
        size_a=t1.size,
        size_b=t2.size,
        label=MeasureResult(ld, ld / denom, ld_ops),
        ted=MeasureResult(ted_result.distance, ted_result.distance / denom, ted_counts),
        radical=MeasureResult(rd, rd / denom, rd_ops),
        multiset=MeasureResult(msd, jaccard, msd_ops),
        wsd=wsd(ld, ted_result.distance, rd, msd, alpha),
        wsd_normalized=wsd(ld / denom, ted_result.distance / denom, rd / denom, jaccard, alpha),
        ted_reordered=ted_result.reordered,
        config={
            "epsilon": eps,
            "gamma_delta": cfg.gamma_delta,
            "costs": {
                "remove": cfg.c_remove,
                "add": cfg.c_add,
                "label_change": cfg.c_label_change,
            },
            "alpha": list(alpha),
            "provider": getattr(provider, "name", provider.__class__.__name__),
            "lowercase": getattr(provider, "lowercase", True),
            "reorder": reorder,
        },
        label_mapping=mapping,
        ted_script=ted_result.script,
    )
    return report


def _run_ted(cfg, provider, eps, t1, t2, reorder: str) -> TedResult:
    if reorder == "off":
        return zs_distance(cfg, provider, eps, t1, t2)
    if reorder == "min":
        return ted_with_reorder(cfg, provider, eps, t1, t2)
    from .mapping import sibling_reorder

    reordered_tree, _ = sibling_reorder(provider, t1, t2)
    result = zs_distance(cfg, provider, eps, reordered_tree, t2)
    return TedResult(result.distance, result.script, reordered=True)


def radical_dictionaries_json(t1: AttackTree, t2: AttackTree) -> dict:
    return {
        "a": [
            {**radical.to_json(), "node_id": node.node_id}
            for node, radical in decompose(t1).items()
        ],
        "b": [
            {**radical.to_json(), "node_id": node.node_id}
            for node, radical in decompose(t2).items()
        ],
    }


def sweep_grid(start: float = 0.0, stop: float = 1.0, step: float = 0.01) -> list[float]:
    if not (0.0 <= start <= stop <= 1.0):
        raise ConfigError("sweep bounds must satisfy 0 <= start <= stop <= 1")
    if step <= 0:
        raise ConfigError("sweep step must be positive")
    points = []
    i = 0
    while True:
        eps = round(start + i * step, 12)
        if eps > stop + 1e-12:
            break
        points.append(min(eps, stop))
        i += 1
    return points


def epsilon_sweep(
    provider,
    cfg: CostConfig,
    alpha,
    t1: AttackTree,
    t2: AttackTree,
    start: float = 0.0,
    stop: float = 1.0,
    step: float = 0.01,
    reorder: str = "min",
) -> list[dict]:
    """One row per grid point: normalized distances and op percentages."""
    rows = []
    for eps in sweep_grid(start, stop, step):
        report = compare_all(provider, eps, cfg, alpha, t1, t2, reorder=reorder)
        row = {"epsilon": eps, "wsd": report.wsd, "wsd_norm": report.wsd_normalized}
        for name in MEASURES:
            result = report.measure(name)
            row[f"{name}_norm"] = result.normalized
            for kind, pct in result.ops.percentages().items():
                row[f"{name}_{kind}_pct"] = pct
        rows.append(row)
    return rows


SWEEP_COLUMNS = ["epsilon"] + [f"{m}_norm" for m in MEASURES] + ["wsd", "wsd_norm"] + [
    f"{m}_{kind}_pct" for m in MEASURES for kind in ("remove", "add", "change", "match")
]


def pairwise_matrix(
    provider,
    eps: float,
    cfg: CostConfig,
    trees: list[AttackTree],
    measure: str = "ted",
    alpha=DEFAULT_ALPHA,
    reorder: str = "min",
) -> np.ndarray:
    """Symmetric matrix of normalized distances over the given trees."""
    if len(trees) < 2:
        raise ConfigError("pairwise matrix needs at least two trees")
    if measure not in MEASURES + ("wsd",):
        raise ConfigError(f"unknown measure {measure!r}")
    n = len(trees)
    matrix = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            report = compare_all(provider, eps, cfg, alpha, trees[i], trees[j], reorder=reorder)
            value = report.wsd_normalized if measure == "wsd" else report.measure(measure).normalized
            matrix[i, j] = matrix[j, i] = value
    return matrix


# Expected values for the counterexample evaluation, (counterexample, base)
# orientation, strict threshold, exact matching, default costs, no
# reordering.  Ops tuples are (remove, add, change, match).
DISPLAY_NAMES = {
    "order-reversed": "Order Reversed",
    "refinements-switched": "Refinement Switch",
    "extra-intermediate": "Extra Intermediate",
    "missing-intermediate": "Missing Intermediate",
    "extra-leaf": "Extra Leaf",
    "missing-leaf": "Missing Leaf",
    "changed-root": "Changed Root",
    "changed-intermediate": "Changed Intermediate",
    "changed-leaf": "Changed Leaf",
    "move-adjacent": "Move Adjacent",
    "move-up": "Move Up",
    "move-down": "Move Down",
}

EXPECTED_DISTANCES = {
    #                         LD   TED  RD   MSD  WSD
    "order-reversed": (0, 7, 0, 0, 1.75),
    "refinements-switched": (0, 1, 1, 3, 0.5),
    "extra-intermediate": (1, 1, 1, 0, 1.0),
    "missing-intermediate": (1, 1, 4, 0, 1.75),
    "extra-leaf": (1, 1, 1, 1, 1.0),
    "missing-leaf": (1, 1, 1, 1, 1.0),
    "changed-root": (1, 1, 1, 0, 1.0),
    "changed-intermediate": (1, 1, 1, 0, 1.0),
    "changed-leaf": (1, 1, 1, 1, 1.0),
    "move-adjacent": (0, 2, 2, 3, 1.0),
    "move-up": (0, 2, 2, 0, 1.0),
    "move-down": (0, 2, 3, 1, 1.25),
}

EXPECTED_OPS = {
    "order-reversed": {"label": (0, 0, 0, 7), "ted": (0, 0, 6, 1), "radical": (0, 0, 0, 7), "multiset": (0, 0, 0, 4)},
    "refinements-switched": {"label": (0, 0, 0, 7), "ted": (0, 0, 2, 5), "radical": (0, 0, 2, 5), "multiset": (1, 1, 1, 2)},
    "extra-intermediate": {"label": (1, 0, 0, 7), "ted": (1, 0, 0, 7), "radical": (1, 0, 0, 7), "multiset": (0, 0, 0, 4)},
    "missing-intermediate": {"label": (0, 1, 0, 6), "ted": (0, 1, 0, 6), "radical": (1, 3, 0, 4), "multiset": (0, 0, 0, 4)},
    "extra-leaf": {"label": (1, 0, 0, 7), "ted": (1, 0, 0, 7), "radical": (1, 0, 0, 7), "multiset": (1, 0, 0, 4)},
    "missing-leaf": {"label": (0, 1, 0, 6), "ted": (0, 1, 0, 6), "radical": (0, 1, 0, 6), "multiset": (0, 1, 0, 3)},
    "changed-root": {"label": (0, 0, 1, 6), "ted": (0, 0, 1, 6), "radical": (0, 0, 1, 6), "multiset": (0, 0, 0, 4)},
    "changed-intermediate": {"label": (0, 0, 1, 6), "ted": (0, 0, 1, 6), "radical": (0, 0, 1, 6), "multiset": (0, 0, 0, 4)},
    "changed-leaf": {"label": (0, 0, 1, 6), "ted": (0, 0, 1, 6), "radical": (0, 0, 1, 6), "multiset": (0, 0, 1, 3)},
    "move-adjacent": {"label": (0, 0, 0, 7), "ted": (1, 1, 0, 6), "radical": (1, 1, 0, 6), "multiset": (1, 2, 0, 2)},
    "move-up": {"label": (0, 0, 0, 7), "ted": (1, 1, 0, 6), "radical": (1, 1, 0, 6), "multiset": (0, 0, 0, 4)},
    "move-down": {"label": (0, 0, 0, 7), "ted": (1, 1, 0, 6), "radical": (2, 1, 0, 5), "multiset": (0, 1, 0, 3)},
}

# Multiset rows forced by leaf-only semantics; everything else in the
# multiset column is advisory.
MSD_HARD_ROWS = {
    "extra-intermediate": 0.0,
    "missing-intermediate": 0.0,
    "changed-root": 0.0,
    "changed-intermediate": 0.0,
    "extra-leaf": 1.0,
    "missing-leaf": 1.0,
    "changed-leaf": 1.0,
}

_TOL = 1e-9


@dataclass
class CounterexampleRow:
    name: str
    display: str
    report: DistanceReport
    expected: tuple
    failures: list[str]
    advisories: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class CounterexampleReport:
    rows: list[CounterexampleRow]

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def hard_failures(self) -> list[str]:
        return [f"{row.display}: {msg}" for row in self.rows for msg in row.failures]


def run_counterexamples(
    eps: float = 1.0,
    provider=None,
    cfg: CostConfig | None = None,
    alpha=DEFAULT_ALPHA,
) -> CounterexampleReport:
    provider = provider or ExactSimilarity()
    cfg = cfg or CostConfig()
    base = build_counterexample("base")
    rows: list[CounterexampleRow] = []
    for name in COUNTEREXAMPLE_NAMES:
        variant = build_counterexample(name)
        report = compare_all(provider, eps, cfg, alpha, variant, base, reorder="off")
        expected = EXPECTED_DISTANCES[name]
        failures: list[str] = []
        advisories: list[str] = []
        for measure, want in zip(("label", "ted", "radical"), expected[:3]):
            got = report.measure(measure).absolute
            if abs(got - want) > _TOL:
                failures.append(f"{measure} distance {got} != expected {want}")
            got_ops = report.measure(measure).ops.as_tuple()
            want_ops = EXPECTED_OPS[name][measure]
            if got_ops != want_ops:
                failures.append(f"{measure} ops {got_ops} != expected {want_ops}")
        msd_got = report.multiset.absolute
        msd_want = expected[3]
        if name in MSD_HARD_ROWS:
            if abs(msd_got - MSD_HARD_ROWS[name]) > _TOL:
                failures.append(f"multiset distance {msd_got} != expected {MSD_HARD_ROWS[name]}")
        elif abs(msd_got - msd_want) > _TOL:
            advisories.append(f"multiset distance {msd_got} != published {msd_want}")
        msd_ops = report.multiset.ops.as_tuple()
        if msd_ops != EXPECTED_OPS[name]["multiset"]:
            advisories.append(
                f"multiset ops {msd_ops} != published {EXPECTED_OPS[name]['multiset']}"
            )
        if abs(report.wsd - expected[4]) > _TOL:
            failures.append(f"wsd {report.wsd} != expected {expected[4]}")
        rows.append(
            CounterexampleRow(name, DISPLAY_NAMES[name], report, expected, failures, advisories)
        )
    return CounterexampleReport(rows)
