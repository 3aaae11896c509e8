"""Radical decomposition and radical distance.

A radical is a height-one slice of the tree: one internal node's label,
its refinement, and its children's labels.  Distance is computed radical
by radical after greedily mapping radical roots across the trees:

* a mapped root pair costs 1 when the labels are not equivalent, plus 0.5
  when the refinements differ;
* children of a mapped pair are themselves greedily paired, each
  non-equivalent pair costing 1, except that a child whose label is also
  a radical key in its own tree is skipped entirely (its cost is carried
  by its own radical - the double-count guard);
* an unmapped radical costs 1 for its root and 1 per non-key child.

Sibling order never matters: the greedy mapping looks only at labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mapping import greedy_pairs
from .report_types import OpCounts
from .similarity import equivalent, similarity_matrix
from .tree import AtNode, AttackTree, Refinement


@dataclass(frozen=True)
class Radical:
    root_label: str
    refinement: Refinement
    child_labels: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "root_label": self.root_label,
            "refinement": self.refinement.name,
            "child_labels": list(self.child_labels),
        }


def decompose(tree: AttackTree) -> dict[AtNode, Radical]:
    """One radical per internal node, in postorder; leaves never key."""
    return {
        node: Radical(node.label, node.refinement, tuple(c.label for c in node.children))
        for node in tree.postorder()
        if node.children
    }


def radical_distance(
    provider, eps: float, t1: AttackTree, t2: AttackTree
) -> tuple[float, OpCounts]:
    d1 = decompose(t1)
    d2 = decompose(t2)
    roots1 = list(d1)
    roots2 = list(d2)
    keys1 = {n.label for n in roots1}
    keys2 = {n.label for n in roots2}

    distance = 0.0
    ops = OpCounts()

    def children_of_pair(c1: tuple[str, ...], c2: tuple[str, ...]) -> None:
        nonlocal distance
        matrix = similarity_matrix(provider, list(c1), list(c2))
        used1: set[int] = set()
        used2: set[int] = set()
        for i, j, sim in greedy_pairs(matrix):
            used1.add(i)
            used2.add(j)
            if c1[i] in keys1 or c2[j] in keys2:
                continue  # carried by that child's own radical
            if equivalent(sim, eps):
                ops.match += 1
            else:
                distance += 1
                ops.change += 1
        for i, label in enumerate(c1):
            if i not in used1 and label not in keys1:
                distance += 1
                ops.remove += 1
        for j, label in enumerate(c2):
            if j not in used2 and label not in keys2:
                distance += 1
                ops.add += 1

    def unmatched_radical(radical: Radical, keys: set[str], kind: str) -> None:
        nonlocal distance
        distance += 1
        setattr(ops, kind, getattr(ops, kind) + 1)
        for label in radical.child_labels:
            if label not in keys:
                distance += 1
                setattr(ops, kind, getattr(ops, kind) + 1)

    matrix = similarity_matrix(provider, [n.label for n in roots1], [n.label for n in roots2])
    used1: set[int] = set()
    used2: set[int] = set()
    for i, j, sim in greedy_pairs(matrix):
        used1.add(i)
        used2.add(j)
        n1, n2 = roots1[i], roots2[j]
        label_ok = equivalent(sim, eps)
        refinement_ok = n1.refinement is n2.refinement
        if label_ok and refinement_ok:
            ops.match += 1
        else:
            if not label_ok:
                distance += 1
            if not refinement_ok:
                distance += 0.5
            ops.change += 1
        children_of_pair(d1[n1].child_labels, d2[n2].child_labels)
    for i, node in enumerate(roots1):
        if i not in used1:
            unmatched_radical(d1[node], keys1, "remove")
    for j, node in enumerate(roots2):
        if j not in used2:
            unmatched_radical(d2[node], keys2, "add")
    return distance, ops
