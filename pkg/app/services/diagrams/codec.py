"""
Text form of diagrams and labeled trees.

    DIAGRAM := "deg=" INT ";legs=" INT ";" TERM ("," TERM)*
    TREE    := "tree;n=" INT ";" TERM
    TERM    := INT | "(" TERM "," TERM ")"

Whitespace is rejected outright; integers are decimal.
"""
import logging
import re
from functools import lru_cache
from typing import Union

import pyparsing as pp

from app.errors import DiagramSyntaxError
from app.services.diagrams.model import (
    LabeledTree,
    LineDiagram,
    diagram_key,
    tree_key,
    validate_labeled_tree,
    validate_line_diagram,
)

logger = logging.getLogger(__name__)

_WHITESPACE = re.compile(r"\s")


@lru_cache(maxsize=None)
def _grammar():
    integer = pp.Word(pp.nums).set_parse_action(lambda t: [int(t[0])])
    term = pp.Forward()
    pair = pp.Suppress("(") + term + pp.Suppress(",") + term + pp.Suppress(")")
    pair.set_parse_action(lambda t: [(t[0], t[1])])
    term <<= integer | pair

    diagram = (
        pp.Suppress("deg=") + integer("degree")
        + pp.Suppress(";legs=") + integer("legs")
        + pp.Suppress(";") + pp.Group(term + pp.ZeroOrMore(pp.Suppress(",") + term))("components")
    )
    tree = pp.Suppress("tree;n=") + integer("size") + pp.Suppress(";") + term("term")
    return diagram, tree


def _check_whitespace(text: str) -> None:
    found = _WHITESPACE.search(text)
    if found:
        raise DiagramSyntaxError(text, found.start(), "whitespace is not allowed")


def parse_diagram(text: str) -> LineDiagram:
    _check_whitespace(text)
    diagram, _ = _grammar()
    try:
        result = diagram.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise DiagramSyntaxError(text, e.loc, e.msg) from e
    d = LineDiagram(
        degree=result["degree"],
        legs=result["legs"],
        components=tuple(result["components"]),
    )
    validate_line_diagram(d)
    return d


def parse_tree(text: str) -> LabeledTree:
    _check_whitespace(text)
    _, tree = _grammar()
    try:
        result = tree.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise DiagramSyntaxError(text, e.loc, e.msg) from e
    t = LabeledTree(size=result["size"], term=result["term"])
    validate_labeled_tree(t)
    return t


def parse(text: str) -> Union[LineDiagram, LabeledTree]:
    if text.startswith("tree;"):
        return parse_tree(text)
    return parse_diagram(text)


def serialize(value: Union[LineDiagram, LabeledTree]) -> str:
    if isinstance(value, LabeledTree):
        return tree_key(value)
    return diagram_key(value)


@lru_cache(maxsize=200_000)
def diagram_from_key(key: str) -> LineDiagram:
    return parse_diagram(key)


@lru_cache(maxsize=200_000)
def tree_from_key(key: str) -> LabeledTree:
    return parse_tree(key)
