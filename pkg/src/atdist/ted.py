"""Refinement-aware tree edit distance.

Ordered Zhang-Shasha dynamic program over keyroots, with two changes to
the classic cost model:

* the change cost for a node pair is 0 when the labels are semantically
  equivalent under the threshold, otherwise c_label_change;
* when both nodes are internal and their refinements differ, gamma_delta
  is added on top (refinements of leaves are meaningless and never
  charged).

Folding the refinement charge into the change cell is arithmetically the
same as applying it after the fact along the recovered mapping, since it
only ever attaches to mapped pairs.  The edit script is recovered by
backtracking the forest-distance tables.

``ted_with_reorder`` is the safeguard variant: it runs the distance once
as-is and once after sibling reordering, and keeps the cheaper result.
``brute_force_ted`` is an independent exhaustive recursion used to check
the dynamic program on small trees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .mapping import sibling_reorder
from .similarity import ConfigError, equivalent
from .tree import AtNode, AttackTree

_EPS = 1e-9


@dataclass(frozen=True)
class CostConfig:
    c_remove: float = 1.0
    c_add: float = 1.0
    c_label_change: float = 1.0
    gamma_delta: float = 0.5

    def __post_init__(self):
        for name in ("c_remove", "c_add", "c_label_change", "gamma_delta"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative")
        bound = self.c_remove + self.c_add
        if self.gamma_delta > bound + _EPS:
            raise ConfigError(
                f"gamma_delta ({self.gamma_delta}) exceeds c_remove + c_add ({bound}); "
                "a refinement change this expensive would never appear in an optimal script"
            )
        if self.c_label_change > bound + _EPS:
            raise ConfigError(
                f"c_label_change ({self.c_label_change}) exceeds c_remove + c_add ({bound})"
            )


@dataclass(frozen=True)
class EditOp:
    kind: str  # "remove" | "add" | "change" | "match"
    source: AtNode | None
    target: AtNode | None
    label_changed: bool
    refinement_changed: bool
    cost: float

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "source_id": self.source.node_id if self.source else None,
            "target_id": self.target.node_id if self.target else None,
            "label_changed": self.label_changed,
            "refinement_changed": self.refinement_changed,
            "cost": self.cost,
        }


@dataclass
class TedResult:
    distance: float
    script: list[EditOp]
    reordered: bool = False

    def op_counts(self) -> dict[str, int]:
        counts = {"remove": 0, "add": 0, "change": 0, "match": 0}
        for op in self.script:
            counts[op.kind] += 1
        return counts


class _Annotated:
    """Postorder arrays (1-based) for the Zhang-Shasha recurrences."""

    def __init__(self, tree: AttackTree):
        order = tree.postorder()
        self.n = len(order)
        self.nodes: list[AtNode | None] = [None] + order
        index_of = {id(node): k for k, node in enumerate(order, start=1)}
        self.lmd = [0] * (self.n + 1)
        for k in range(1, self.n + 1):
            cur = self.nodes[k]
            while cur.children:
                cur = cur.children[0]
            self.lmd[k] = index_of[id(cur)]
        # keyroots: the highest node for each distinct leftmost-leaf value
        highest: dict[int, int] = {}
        for k in range(1, self.n + 1):
            highest[self.lmd[k]] = k
        self.keyroots = sorted(highest.values())


def _change_cost(cfg: CostConfig, provider, eps: float, x: AtNode, y: AtNode) -> float:
    label = 0.0 if equivalent(provider(x.label, y.label), eps) else cfg.c_label_change
    refinement = 0.0
    if x.children and y.children and x.refinement is not y.refinement:
        refinement = cfg.gamma_delta
    return label + refinement


def zs_distance(cfg: CostConfig, provider, eps: float, t1: AttackTree, t2: AttackTree) -> TedResult:
    a, b = _Annotated(t1), _Annotated(t2)
    td = [[0.0] * (b.n + 1) for _ in range(a.n + 1)]

    def change(i: int, j: int) -> float:
        return _change_cost(cfg, provider, eps, a.nodes[i], b.nodes[j])

    def forest_dist(i: int, j: int) -> list[list[float]]:
        """Fill td for the (i, j) keyroot pair; returns the fd matrix."""
        li, lj = a.lmd[i], b.lmd[j]
        ioff, joff = li - 1, lj - 1
        rows, cols = i - li + 2, j - lj + 2
        fd = [[0.0] * cols for _ in range(rows)]
        for x in range(1, rows):
            fd[x][0] = fd[x - 1][0] + cfg.c_remove
        for y in range(1, cols):
            fd[0][y] = fd[0][y - 1] + cfg.c_add
        for x in range(1, rows):
            for y in range(1, cols):
                if a.lmd[x + ioff] == li and b.lmd[y + joff] == lj:
                    fd[x][y] = min(
                        fd[x - 1][y] + cfg.c_remove,
                        fd[x][y - 1] + cfg.c_add,
                        fd[x - 1][y - 1] + change(x + ioff, y + joff),
                    )
                    td[x + ioff][y + joff] = fd[x][y]
                else:
                    p = a.lmd[x + ioff] - 1 - ioff
                    q = b.lmd[y + joff] - 1 - joff
                    fd[x][y] = min(
                        fd[x - 1][y] + cfg.c_remove,
                        fd[x][y - 1] + cfg.c_add,
                        fd[p][q] + td[x + ioff][y + joff],
                    )
        return fd

    for i in a.keyroots:
        for j in b.keyroots:
            forest_dist(i, j)
    distance = td[a.n][b.n]

    # Backtrack the optimal alignment.  Any branch whose cost reproduces
    # the stored cell value lies on an optimal path; change/subtree
    # branches are preferred so mapped pairs survive where possible.
    mapped: list[tuple[AtNode, AtNode]] = []
    removed: list[AtNode] = []
    added: list[AtNode] = []

    def close(u: float, v: float) -> bool:
        return abs(u - v) <= _EPS

    def recover(i: int, j: int) -> None:
        li, lj = a.lmd[i], b.lmd[j]
        ioff, joff = li - 1, lj - 1
        fd = forest_dist(i, j)
        x, y = i - ioff, j - joff
        while x > 0 and y > 0:
            gi, gj = x + ioff, y + joff
            if a.lmd[gi] == li and b.lmd[gj] == lj:
                if close(fd[x][y], fd[x - 1][y - 1] + change(gi, gj)):
                    mapped.append((a.nodes[gi], b.nodes[gj]))
                    x, y = x - 1, y - 1
                elif close(fd[x][y], fd[x - 1][y] + cfg.c_remove):
                    removed.append(a.nodes[gi])
                    x -= 1
                else:
                    added.append(b.nodes[gj])
                    y -= 1
            else:
                p = a.lmd[gi] - 1 - ioff
                q = b.lmd[gj] - 1 - joff
                if close(fd[x][y], fd[p][q] + td[gi][gj]):
                    recover(gi, gj)
                    x, y = p, q
                elif close(fd[x][y], fd[x - 1][y] + cfg.c_remove):
                    removed.append(a.nodes[gi])
                    x -= 1
                else:
                    added.append(b.nodes[gj])
                    y -= 1
        while x > 0:
            removed.append(a.nodes[x + ioff])
            x -= 1
        while y > 0:
            added.append(b.nodes[y + joff])
            y -= 1

    if a.n and b.n:
        recover(a.n, b.n)
    elif a.n:
        removed.extend(a.nodes[1:])
    elif b.n:
        added.extend(b.nodes[1:])

    script: list[EditOp] = []
    for x_node, y_node in mapped:
        label_eq = equivalent(provider(x_node.label, y_node.label), eps)
        ref_changed = bool(
            x_node.children and y_node.children and x_node.refinement is not y_node.refinement
        )
        if label_eq and not ref_changed:
            script.append(EditOp("match", x_node, y_node, False, False, 0.0))
        else:
            cost = (0.0 if label_eq else cfg.c_label_change) + (
                cfg.gamma_delta if ref_changed else 0.0
            )
            script.append(EditOp("change", x_node, y_node, not label_eq, ref_changed, cost))
    script.extend(EditOp("remove", n, None, False, False, cfg.c_remove) for n in removed)
    script.extend(EditOp("add", None, n, False, False, cfg.c_add) for n in added)
    script.sort(
        key=lambda op: (
            op.source.node_id if op.source else math.inf,
            op.target.node_id if op.target else math.inf,
        )
    )
    total = sum(op.cost for op in script)
    if not close(total, distance):
        raise AssertionError(f"script cost {total} disagrees with DP distance {distance}")
    return TedResult(distance, script, reordered=False)


def ted_with_reorder(
    cfg: CostConfig, provider, eps: float, t1: AttackTree, t2: AttackTree
) -> TedResult:
    """Distance computed twice, with and without sibling reordering.

    Returns the cheaper run; ties keep the plain one.  Script node
    references of a winning reordered run point into the reordered copy
    of t1.
    """
    plain = zs_distance(cfg, provider, eps, t1, t2)
    reordered_tree, _ = sibling_reorder(provider, t1, t2)
    redone = zs_distance(cfg, provider, eps, reordered_tree, t2)
    if redone.distance < plain.distance - _EPS:
        return TedResult(redone.distance, redone.script, reordered=True)
    return plain


def brute_force_ted(
    cfg: CostConfig, provider, eps: float, t1: AttackTree, t2: AttackTree, max_nodes: int = 8
) -> float:
    """Exhaustive ordered forest edit distance; oracle for small trees.

    Recurses on the rightmost tree of each forest (remove its root, add
    the other root, or align the two subtrees), memoized on forest
    shapes.  Independent of the keyroot machinery above.
    """
    if t1.size > max_nodes or t2.size > max_nodes:
        raise ValueError(f"brute force is limited to {max_nodes} nodes per tree")
    a_nodes = t1.postorder()
    b_nodes = t2.postorder()
    a_index = {id(n): k for k, n in enumerate(a_nodes)}
    b_index = {id(n): k for k, n in enumerate(b_nodes)}
    kids_a = {k: tuple(a_index[id(c)] for c in n.children) for k, n in enumerate(a_nodes)}
    kids_b = {k: tuple(b_index[id(c)] for c in n.children) for k, n in enumerate(b_nodes)}

    @lru_cache(maxsize=None)
    def dist(f1: tuple, f2: tuple) -> float:
        if not f1 and not f2:
            return 0.0
        if not f1:
            return dist(f1, f2[:-1] + kids_b[f2[-1]]) + cfg.c_add
        if not f2:
            return dist(f1[:-1] + kids_a[f1[-1]], f2) + cfg.c_remove
        r1, r2 = f1[-1], f2[-1]
        return min(
            dist(f1[:-1] + kids_a[r1], f2) + cfg.c_remove,
            dist(f1, f2[:-1] + kids_b[r2]) + cfg.c_add,
            dist(f1[:-1], f2[:-1])
            + dist(kids_a[r1], kids_b[r2])
            + _change_cost(cfg, provider, eps, a_nodes[r1], b_nodes[r2]),
        )

    return dist((a_index[id(t1.root)],), (b_index[id(t2.root)],))
