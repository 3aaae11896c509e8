"""Reading and writing the ADTool XML subset.

Accepted grammar: an ``<adtree>`` root holding one ``<node>`` element;
every ``<node>`` carries an optional ``refinement`` attribute
("conjunctive" or "disjunctive", default disjunctive) and contains exactly
one ``<label>`` followed by zero or more ``<node>`` children.  Defense
material (``switchRole`` attributes or elements, ``parameter`` elements)
is rejected: this tool handles plain attack trees only.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .tree import AtNode, AttackTree, Refinement, TreeError


class AdtoolParseError(ValueError):
    """Malformed or out-of-subset ADTool XML."""


_REJECTED_ELEMENTS = ("switchRole", "parameter")


def parse_adtool_xml(data: bytes | str, source_name: str = "") -> AttackTree:
    if isinstance(data, bytes):
        text = data.decode("utf-8")
    else:
        text = data
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise AdtoolParseError(f"not well-formed XML: {exc}") from exc
    if root.tag != "adtree":
        raise AdtoolParseError(f"expected <adtree> root, found <{root.tag}>")
    nodes = [child for child in root if child.tag == "node"]
    if len(nodes) != 1:
        raise AdtoolParseError(f"<adtree> must hold exactly one <node>, found {len(nodes)}")
    try:
        tree_root = _parse_node(nodes[0], path="/adtree/node")
    except TreeError as exc:
        raise AdtoolParseError(str(exc)) from exc
    return AttackTree(tree_root, source_name=source_name)


def _parse_node(elem: ET.Element, path: str) -> AtNode:
    if elem.get("switchRole") is not None:
        raise AdtoolParseError(f"defense-role node at {path} (switchRole attribute)")
    refinement_token = elem.get("refinement")
    if refinement_token is None:
        refinement = Refinement.OR
    else:
        try:
            refinement = Refinement.from_token(refinement_token)
        except TreeError:
            raise AdtoolParseError(
                f"unsupported refinement {refinement_token!r} at {path}"
            ) from None

    label_text = None
    children: list[AtNode] = []
    child_index = 0
    for child in elem:
        if child.tag == "label":
            if label_text is not None:
                raise AdtoolParseError(f"multiple <label> elements at {path}")
            label_text = child.text or ""
        elif child.tag == "node":
            child_index += 1
            children.append(_parse_node(child, f"{path}/node[{child_index}]"))
        elif child.tag in _REJECTED_ELEMENTS:
            raise AdtoolParseError(f"unsupported <{child.tag}> element at {path}")
        else:
            raise AdtoolParseError(f"unexpected <{child.tag}> element at {path}")
    if label_text is None:
        raise AdtoolParseError(f"missing <label> at {path}")
    if not label_text.strip():
        raise AdtoolParseError(f"empty label at {path}")
    return AtNode(label_text, refinement, children)


def serialize_adtool_xml(tree: AttackTree) -> bytes:
    """Canonical serialization: reparsing yields an equal tree."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', "<adtree>"]
    _write_node(tree.root, lines, depth=1)
    lines.append("</adtree>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _write_node(node: AtNode, lines: list[str], depth: int) -> None:
    pad = "  " * depth
    lines.append(f'{pad}<node refinement="{node.refinement.value}">')
    lines.append(f"{pad}  <label>{_escape(node.label)}</label>")
    for child in node.children:
        _write_node(child, lines, depth + 1)
    lines.append(f"{pad}</node>")


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
    )


def load_file(path) -> AttackTree:
    from pathlib import Path

    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise AdtoolParseError(f"cannot read {p}: {exc}") from exc
    try:
        return parse_adtool_xml(data, source_name=p.stem)
    except AdtoolParseError as exc:
        raise AdtoolParseError(f"{p}: {exc}") from exc
