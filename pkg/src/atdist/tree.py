"""Attack-tree data model and traversals.

An attack tree is a rooted, ordered, labeled tree.  Every node carries a
refinement (AND or OR) describing how its children combine; leaves default
to OR, which is never charged by any distance measure.  Trees are treated
as immutable once built: operations that need to rearrange children (the
sibling reorderer) work on private copies and re-index.
"""

from __future__ import annotations

import copy
import enum
from dataclasses import dataclass, field


class TreeError(ValueError):
    """Raised for structurally invalid trees."""


class Refinement(enum.Enum):
    AND = "conjunctive"
    OR = "disjunctive"

    @classmethod
    def from_token(cls, token: str) -> "Refinement":
        for ref in cls:
            if ref.value == token:
                return ref
        raise TreeError(f"unsupported refinement: {token!r}")


@dataclass(eq=False)
class AtNode:
    """One node: a label, a refinement, and an ordered child list.

    node_id is the 1-based postorder index, assigned when the enclosing
    AttackTree is built and refreshed whenever siblings are permuted.
    """

    label: str
    refinement: Refinement = Refinement.OR
    children: list["AtNode"] = field(default_factory=list)
    node_id: int = 0

    def __post_init__(self):
        self.label = self.label.strip()
        if not self.label:
            raise TreeError("node label is empty")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def iter_postorder(self):
        for child in self.children:
            yield from child.iter_postorder()
        yield self

    def __repr__(self):
        kind = self.refinement.name
        return f"AtNode({self.label!r}, {kind}, {len(self.children)} children)"


@dataclass
class AttackTree:
    root: AtNode
    size: int = 0
    source_name: str = ""

    def __post_init__(self):
        self.size = _assign_postorder_ids(self.root)

    def postorder(self) -> list[AtNode]:
        """Left-to-right postorder; the root comes last."""
        return list(self.root.iter_postorder())

    def node_labels(self) -> list[str]:
        return [n.label for n in self.postorder()]

    def internal_nodes(self) -> list[AtNode]:
        return [n for n in self.postorder() if not n.is_leaf]

    def copy(self) -> "AttackTree":
        return AttackTree(copy.deepcopy(self.root), source_name=self.source_name)

    def equals(self, other: "AttackTree") -> bool:
        """Structural equality: label, refinement and child order, node by node."""

        def eq(a: AtNode, b: AtNode) -> bool:
            if a.label != b.label or len(a.children) != len(b.children):
                return False
            if not a.is_leaf and a.refinement is not b.refinement:
                return False
            return all(eq(x, y) for x, y in zip(a.children, b.children))

        return eq(self.root, other.root)


def _assign_postorder_ids(root: AtNode) -> int:
    count = 0
    for node in root.iter_postorder():
        count += 1
        node.node_id = count
    return count


def postorder(tree: AttackTree) -> list[AtNode]:
    return tree.postorder()


def validate(tree: AttackTree) -> list[str]:
    """Re-check the construction invariants; returns a list of problems.

    Walks the tree independently of the cached size so that a corrupted
    fixture (shared subtree, cycle via aliasing) is caught by the count
    and id checks.
    """
    problems: list[str] = []
    seen: set[int] = set()
    stack = [tree.root]
    count = 0
    while stack:
        node = stack.pop()
        if id(node) in seen:
            problems.append(f"node {node.label!r} reachable twice (cycle or shared subtree)")
            continue
        seen.add(id(node))
        count += 1
        if count > tree.size + 1:
            problems.append("traversal exceeds recorded size; aborting walk")
            break
        if not node.label.strip():
            problems.append("empty label")
        stack.extend(node.children)
    if count != tree.size:
        problems.append(f"size mismatch: recorded {tree.size}, reachable {count}")
    ids = sorted(n.node_id for n in tree.root.iter_postorder())
    if ids != list(range(1, tree.size + 1)):
        problems.append("node_id values are not a 1..n postorder permutation")
    return problems
