import pytest

from atdist import (
    AdtoolParseError,
    Refinement,
    build_counterexample,
    parse_adtool_xml,
    serialize_adtool_xml,
)
from atdist.corpus import CORPUS_NAMES


def test_minimal_document():
    tree = parse_adtool_xml(b'<adtree><node refinement="disjunctive"><label>R</label></node></adtree>')
    assert tree.size == 1
    assert tree.root.label == "R"
    assert tree.root.refinement is Refinement.OR


def test_refinement_attribute_mapping():
    doc = (
        '<adtree><node refinement="conjunctive"><label>R</label>'
        "<node><label>A</label></node>"
        '<node refinement="disjunctive"><label>B</label></node>'
        "</node></adtree>"
    )
    tree = parse_adtool_xml(doc)
    assert tree.root.refinement is Refinement.AND
    assert [c.refinement for c in tree.root.children] == [Refinement.OR, Refinement.OR]
    assert [c.label for c in tree.root.children] == ["A", "B"]


def test_child_order_preserved():
    doc = (
        "<adtree><node><label>R</label>"
        "<node><label>Z</label></node>"
        "<node><label>A</label></node>"
        "</node></adtree>"
    )
    tree = parse_adtool_xml(doc)
    assert [c.label for c in tree.root.children] == ["Z", "A"]


@pytest.mark.parametrize(
    "doc, message",
    [
        ('<adtree><node refinement="sequential"><label>R</label></node></adtree>', "unsupported refinement"),
        ("<adtree><node><label>  </label></node></adtree>", "empty label"),
        ("<adtree><node></node></adtree>", "missing <label>"),
        ("<adtree><node><label>R</label><label>S</label></node></adtree>", "multiple <label>"),
        ("<adtree><node><label>R</label><parameter/></node></adtree>", "<parameter>"),
        ("<adtree><node><label>R</label><switchRole/></node></adtree>", "<switchRole>"),
        ('<adtree><node switchRole="yes"><label>D</label></node></adtree>', "defense-role"),
        ("<tree><node><label>R</label></node></tree>", "expected <adtree>"),
        ("<adtree></adtree>", "exactly one <node>"),
        ("<adtree><node><label>R</label>", "not well-formed"),
    ],
)
def test_rejections(doc, message):
    with pytest.raises(AdtoolParseError) as err:
        parse_adtool_xml(doc)
    assert message in str(err.value)


def test_error_names_the_node_path():
    doc = (
        "<adtree><node><label>R</label>"
        '<node><label>A</label></node>'
        '<node switchRole="yes"><label>D</label></node>'
        "</node></adtree>"
    )
    with pytest.raises(AdtoolParseError) as err:
        parse_adtool_xml(doc)
    assert "/adtree/node/node[2]" in str(err.value)


def test_round_trip_on_corpus(trees):
    for name in CORPUS_NAMES:
        reparsed = parse_adtool_xml(serialize_adtool_xml(trees[name]))
        assert reparsed.equals(trees[name]), name


def test_serialize_single_node():
    doc = serialize_adtool_xml(parse_adtool_xml("<adtree><node><label>R</label></node></adtree>"))
    assert doc.count(b"<node") == 1


def test_serialize_is_canonical():
    messy = '<adtree><node  refinement="disjunctive" ><label> R </label></node></adtree>'
    once = serialize_adtool_xml(parse_adtool_xml(messy))
    twice = serialize_adtool_xml(parse_adtool_xml(once))
    assert once == twice


def test_labels_with_markup_characters_survive():
    tree = build_counterexample("base")
    tree.root.label = "a < b & c > d"
    reparsed = parse_adtool_xml(serialize_adtool_xml(tree))
    assert reparsed.root.label == "a < b & c > d"
