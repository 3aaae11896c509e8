"""Structure-free label distance.

All node labels of both trees are thrown into one greedy mapping: each
popped pair below the threshold costs 1 (booked as a single change), each
label left over after pairing costs 1 (remove on the first tree's side,
add on the second).  Tree shape plays no role at all, so any permutation
of children, or even flattening a tree onto its root, leaves the value
unchanged.
"""

from __future__ import annotations

from .mapping import MappingPair, NodeMapping, greedy_pairs
from .report_types import OpCounts
from .similarity import equivalent, similarity_matrix
from .tree import AttackTree


def label_distance(
    provider, eps: float, t1: AttackTree, t2: AttackTree
) -> tuple[float, NodeMapping, OpCounts]:
    nodes_a = t1.postorder()
    nodes_b = t2.postorder()
    matrix = similarity_matrix(provider, [n.label for n in nodes_a], [n.label for n in nodes_b])
    distance = 0.0
    ops = OpCounts()
    pairs: list[MappingPair] = []
    used_a: set[int] = set()
    used_b: set[int] = set()
    for i, j, sim in greedy_pairs(matrix):
        used_a.add(i)
        used_b.add(j)
        if equivalent(sim, eps):
            ops.match += 1
            pairs.append(MappingPair(nodes_a[i], nodes_b[j], sim))
        else:
            distance += 1
            ops.change += 1
            pairs.append(MappingPair(nodes_a[i], None, 0.0))
            pairs.append(MappingPair(None, nodes_b[j], 0.0))
    for i, node in enumerate(nodes_a):
        if i not in used_a:
            distance += 1
            ops.remove += 1
            pairs.append(MappingPair(node, None, 0.0))
    for j, node in enumerate(nodes_b):
        if j not in used_b:
            distance += 1
            ops.add += 1
            pairs.append(MappingPair(None, node, 0.0))
    return distance, NodeMapping(pairs), ops
