"""Greedy semantic node mapping and sibling reordering.

The core engine repeatedly takes the largest entry of a similarity
matrix, pairs that row and column, and deletes both; ties resolve to the
smallest (row, column) among the surviving cells so results are stable
across runs and platforms.  Two consumers sit on top:

* ``greedy_map`` applies the epsilon gate: a popped pair below the
  threshold splits into two lambda pairs (node vs nothing).
* ``sibling_reorder`` keeps every popped pair (no gate) and permutes the
  first tree's siblings so paired children share a left-wise index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .similarity import equivalent, similarity_matrix
from .tree import AtNode, AttackTree


@dataclass(frozen=True)
class MappingPair:
    """source/target are nodes, or None for a lambda side."""

    source: AtNode | None
    target: AtNode | None
    similarity: float


@dataclass
class NodeMapping:
    pairs: list[MappingPair]

    def matched(self) -> list[MappingPair]:
        return [p for p in self.pairs if p.source is not None and p.target is not None]

    def to_json(self) -> list[dict]:
        return [
            {
                "source_id": p.source.node_id if p.source else None,
                "target_id": p.target.node_id if p.target else None,
                "similarity": p.similarity,
            }
            for p in self.pairs
        ]


def greedy_pairs(matrix) -> list[tuple[int, int, float]]:
    """Argmax pairing of rows and columns; returns (row, col, value) pops.

    Pops min(rows, cols) pairs.  The first maximal cell in row-major order
    wins ties, which equals the smallest current-coordinate (row, col)
    because deletions preserve relative order.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    alive_rows = list(range(n_rows))
    alive_cols = list(range(n_cols))
    pops: list[tuple[int, int, float]] = []
    while alive_rows and alive_cols:
        best_i = best_j = -1
        best = -1.0
        for i in alive_rows:
            row = matrix[i]
            for j in alive_cols:
                if row[j] > best:
                    best, best_i, best_j = row[j], i, j
        pops.append((best_i, best_j, float(best)))
        alive_rows.remove(best_i)
        alive_cols.remove(best_j)
    return pops


def greedy_map(provider, eps: float, a: list[AtNode], b: list[AtNode]) -> NodeMapping:
    """Gated greedy mapping between two node lists.

    Pairs that clear the threshold are kept; sub-threshold pops and all
    leftovers become lambda pairs.
    """
    matrix = similarity_matrix(provider, [n.label for n in a], [n.label for n in b])
    pairs: list[MappingPair] = []
    used_a: set[int] = set()
    used_b: set[int] = set()
    for i, j, sim in greedy_pairs(matrix):
        used_a.add(i)
        used_b.add(j)
        if equivalent(sim, eps):
            pairs.append(MappingPair(a[i], b[j], sim))
        else:
            pairs.append(MappingPair(a[i], None, 0.0))
            pairs.append(MappingPair(None, b[j], 0.0))
    for i, node in enumerate(a):
        if i not in used_a:
            pairs.append(MappingPair(node, None, 0.0))
    for j, node in enumerate(b):
        if j not in used_b:
            pairs.append(MappingPair(None, node, 0.0))
    return NodeMapping(pairs)


def sibling_reorder(provider, t1: AttackTree, t2: AttackTree) -> tuple[AttackTree, NodeMapping]:
    """Permute t1's siblings so semantically paired children line up with t2.

    Top-down from the root pair (roots are always mapped).  For each
    mapped pair the children pair up by raw argmax, without the epsilon
    gate; paired t1 children are placed at their partner's index order and
    surplus children keep relative order after them.  t2 is never touched.
    """
    reordered = t1.copy()
    pairs: list[MappingPair] = [
        MappingPair(reordered.root, t2.root, provider(reordered.root.label, t2.root.label))
    ]
    queue: list[tuple[AtNode, AtNode]] = [(reordered.root, t2.root)]
    while queue:
        n1, n2 = queue.pop(0)
        if not n1.children or not n2.children:
            continue
        original = list(n1.children)
        matrix = similarity_matrix(
            provider, [c.label for c in original], [c.label for c in n2.children]
        )
        pops = greedy_pairs(matrix)
        by_target = sorted(pops, key=lambda p: p[1])  # ascending partner index
        paired_rows = {i for i, _, _ in pops}
        n1.children = [original[i] for i, _, _ in by_target] + [
            c for i, c in enumerate(original) if i not in paired_rows
        ]
        for i, j, sim in by_target:
            pairs.append(MappingPair(original[i], n2.children[j], sim))
            queue.append((original[i], n2.children[j]))
    rebuilt = AttackTree(reordered.root, source_name=t1.source_name)
    return rebuilt, NodeMapping(pairs)
