"""Built-in evaluation corpus: a base tree and twelve single-edit variants.

Each variant applies one small, nameable modification to the base tree
(reorder siblings, flip both refinements, insert/drop an intermediate or a
leaf, relabel a node at each depth, move a leaf sideways/up/down).  The
expected distances and operation counts for every variant live in
report.py next to the harness that checks them.
"""

from __future__ import annotations

from .tree import AtNode, AttackTree, Refinement

AND = Refinement.AND
OR = Refinement.OR


def _n(label: str, refinement: Refinement = OR, *children: AtNode) -> AtNode:
    return AtNode(label, refinement, list(children))


def _builders():
    return {
        # R:OR ( I:OR(A, B), J:AND(C, D) )
        "base": lambda: _n("R", OR, _n("I", OR, _n("A"), _n("B")), _n("J", AND, _n("C"), _n("D"))),
        "order-reversed": lambda: _n(
            "R", OR, _n("J", AND, _n("D"), _n("C")), _n("I", OR, _n("B"), _n("A"))
        ),
        "refinements-switched": lambda: _n(
            "R", OR, _n("I", AND, _n("A"), _n("B")), _n("J", OR, _n("C"), _n("D"))
        ),
        # new node K spliced between R and I
        "extra-intermediate": lambda: _n(
            "R", OR, _n("K", OR, _n("I", OR, _n("A"), _n("B"))), _n("J", AND, _n("C"), _n("D"))
        ),
        "missing-intermediate": lambda: _n(
            "R", OR, _n("A"), _n("B"), _n("J", AND, _n("C"), _n("D"))
        ),
        "extra-leaf": lambda: _n(
            "R", OR, _n("I", OR, _n("A"), _n("B"), _n("E")), _n("J", AND, _n("C"), _n("D"))
        ),
        "missing-leaf": lambda: _n("R", OR, _n("I", OR, _n("A")), _n("J", AND, _n("C"), _n("D"))),
        "changed-root": lambda: _n(
            "Z", OR, _n("I", OR, _n("A"), _n("B")), _n("J", AND, _n("C"), _n("D"))
        ),
        "changed-intermediate": lambda: _n(
            "R", OR, _n("K", OR, _n("A"), _n("B")), _n("J", AND, _n("C"), _n("D"))
        ),
        "changed-leaf": lambda: _n(
            "R", OR, _n("I", OR, _n("E"), _n("B")), _n("J", AND, _n("C"), _n("D"))
        ),
        "move-adjacent": lambda: _n(
            "R", OR, _n("I", OR, _n("A")), _n("J", AND, _n("B"), _n("C"), _n("D"))
        ),
        "move-up": lambda: _n(
            "R", OR, _n("I", OR, _n("A")), _n("B"), _n("J", AND, _n("C"), _n("D"))
        ),
        "move-down": lambda: _n(
            "R", OR, _n("I", OR, _n("A", OR, _n("B"))), _n("J", AND, _n("C"), _n("D"))
        ),
    }


COUNTEREXAMPLE_NAMES = tuple(name for name in _builders() if name != "base")
CORPUS_NAMES = ("base",) + COUNTEREXAMPLE_NAMES


def build_counterexample(name: str) -> AttackTree:
    builders = _builders()
    if name not in builders:
        known = ", ".join(sorted(builders))
        raise KeyError(f"unknown counterexample {name!r}; expected one of: {known}")
    return AttackTree(builders[name](), source_name=name)


def corpus() -> dict[str, AttackTree]:
    """All thirteen trees, keyed by name."""
    return {name: build_counterexample(name) for name in CORPUS_NAMES}
