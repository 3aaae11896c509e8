"""Attack-suite (multiset) semantics and the suite-set distance.

A suite is one complete attack vector: the multiset of leaf labels that
together reach the root goal.  OR unions the children's suite sets, AND
combines them (multiset union across the cross product), a leaf is its
own singleton suite.  Only leaves survive, so edits confined to internal
nodes are invisible here by construction.

Two suites are equivalent under the threshold when they have equal size
and their elements admit a perfect matching of pairwise-equivalent
labels.  Suite sets are then matched optimally (maximum bipartite
matching - unlike first-fit this stays monotone as the threshold rises);
leftover equal-size suites that differ in exactly one element pair up as
single changes, and everything else is a removal or addition.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from .report_types import OpCounts
from .similarity import equivalent
from .tree import AtNode, AttackTree

Suite = tuple[str, ...]  # sorted leaf labels, with multiplicity


class SuiteExplosionError(RuntimeError):
    """AND combination exceeded the configured suite cap."""


def suites(tree: AttackTree, cap: int = 10_000) -> frozenset[Suite]:
    """Suite set of the whole tree (the root's attack vectors)."""

    def of(node: AtNode) -> frozenset[Suite]:
        if node.is_leaf:
            return frozenset({(node.label,)})
        child_sets = [of(c) for c in node.children]
        if node.refinement.name == "OR":
            merged: set[Suite] = set()
            for s in child_sets:
                merged |= s
            return frozenset(merged)
        combined: set[Suite] = {()}
        for s in child_sets:
            combined = {
                tuple(sorted(left + right)) for left, right in product(combined, s)
            }
            if len(combined) > cap:
                raise SuiteExplosionError(
                    f"AND combination at {node.label!r} exceeds {cap} suites"
                )
        return frozenset(combined)

    return of(tree.root)


def suites_json(tree: AttackTree, cap: int = 10_000) -> list[list[str]]:
    """Suite set as sorted JSON-ready arrays of sorted label arrays."""
    return sorted([list(suite) for suite in suites(tree, cap=cap)])


def _perfect_matching_exists(
    left: list[str], right: list[str], edge
) -> bool:
    """Perfect matching on a small bipartite graph (augmenting paths)."""
    if len(left) != len(right):
        return False
    match_right: list[int | None] = [None] * len(right)

    def augment(i: int, seen: set[int]) -> bool:
        for j in range(len(right)):
            if j in seen or not edge(left[i], right[j]):
                continue
            seen.add(j)
            if match_right[j] is None or augment(match_right[j], seen):
                match_right[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(left)))


def _max_matching(size_a: int, size_b: int, edge) -> list[int | None]:
    """Maximum bipartite matching; returns right-partner per left index."""
    match_right: list[int | None] = [None] * size_b

    def augment(i: int, seen: set[int]) -> bool:
        for j in range(size_b):
            if j in seen or not edge(i, j):
                continue
            seen.add(j)
            if match_right[j] is None or augment(match_right[j], seen):
                match_right[j] = i
                return True
        return False

    for i in range(size_a):
        augment(i, set())
    match_left: list[int | None] = [None] * size_a
    for j, i in enumerate(match_right):
        if i is not None:
            match_left[i] = j
    return match_left


def _suites_equivalent(provider, eps: float, s1: Suite, s2: Suite) -> bool:
    if len(s1) != len(s2):
        return False
    if Counter(s1) == Counter(s2):
        return True
    return _perfect_matching_exists(
        list(s1), list(s2), lambda a, b: equivalent(provider(a, b), eps)
    )


def _differ_in_one(provider, eps: float, s1: Suite, s2: Suite) -> bool:
    """Equal-size suites whose elements match on all but one position."""
    if len(s1) != len(s2) or not s1:
        return False
    n = len(s1)
    match_left = _max_matching(
        n, n, lambda i, j: equivalent(provider(s1[i], s2[j]), eps)
    )
    return sum(1 for j in match_left if j is not None) == n - 1


def multiset_distance(
    provider, eps: float, t1: AttackTree, t2: AttackTree, cap: int = 10_000
) -> tuple[float, float, OpCounts]:
    """Returns (absolute distance, Jaccard distance, op counts)."""
    s1 = sorted(suites(t1, cap=cap))
    s2 = sorted(suites(t2, cap=cap))
    match_left = _max_matching(
        len(s1), len(s2), lambda i, j: _suites_equivalent(provider, eps, s1[i], s2[j])
    )
    matched = sum(1 for j in match_left if j is not None)
    ops = OpCounts(match=matched)
    rest1 = [s for i, s in enumerate(s1) if match_left[i] is None]
    taken = {j for j in match_left if j is not None}
    rest2 = [s for j, s in enumerate(s2) if j not in taken]

    distance = 0.0
    unpaired2 = list(rest2)
    for suite in rest1:
        partner = next(
            (k for k, other in enumerate(unpaired2) if _differ_in_one(provider, eps, suite, other)),
            None,
        )
        if partner is not None:
            unpaired2.pop(partner)
            distance += 1
            ops.change += 1
        else:
            distance += 1
            ops.remove += 1
    for _ in unpaired2:
        distance += 1
        ops.add += 1

    union = len(s1) + len(s2) - matched
    jaccard = 0.0 if union == 0 else 1.0 - matched / union
    return distance, jaccard, ops
