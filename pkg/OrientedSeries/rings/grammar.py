"""
Element grammar shared by every ring instance and the CLI.

Literals:
    integers      ``-?[0-9]+``
    rationals     ``p/q``
    coefficients  ``[c0,c1,...]`` (polynomials and truncated series, c0 first)
    pairs         ``(a,b)``
    coordinates   ``{q0,q1,...}`` (structure-constant algebras)

A bare scalar is accepted by every carrier and denotes q·1. Rendering always
produces the carrier's canonical form, so ``parse(render(x)) == x``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, List, Tuple, Union

from .base import Element, ParseError

if TYPE_CHECKING:
    from .base import RingInstance

_CLOSERS = {"[": "]", "(": ")", "{": "}"}


@dataclass(frozen=True)
class ScalarNode:
    """A parsed integer or rational literal."""

    value: Fraction
    position: int


@dataclass(frozen=True)
class GroupNode:
    """A parsed bracketed literal; ``opener`` is one of ``[ ( {``."""

    opener: str
    items: Tuple["SyntaxNode", ...]
    position: int


SyntaxNode = Union[ScalarNode, GroupNode]


class SyntaxParser:
    """Recursive-descent scanner over one literal string.

    The parser is also used by ``topology.interval.parse_open`` to read the
    bound lists of a serialized basic open.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_space()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def parse_value(self) -> SyntaxNode:
        char = self.peek()
        if char in _CLOSERS:
            return self._parse_group(char)
        if char == "-" or char.isdigit():
            return self._parse_scalar()
        if not char:
            raise ParseError("unexpected end of input", self.pos)
        raise ParseError(f"unexpected character {char!r}", self.pos)

    def _parse_group(self, opener: str) -> GroupNode:
        start = self.pos
        self.pos += 1
        closer = _CLOSERS[opener]
        items: List[SyntaxNode] = []
        if self.peek() == closer:
            self.pos += 1
            return GroupNode(opener, (), start)
        while True:
            items.append(self.parse_value())
            char = self.peek()
            if char == ",":
                self.pos += 1
            elif char == closer:
                self.pos += 1
                return GroupNode(opener, tuple(items), start)
            else:
                raise ParseError(f"expected ',' or {closer!r}", self.pos)

    def _parse_digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", self.pos)
        return self.text[start : self.pos]

    def _parse_scalar(self) -> ScalarNode:
        start = self.pos
        sign = 1
        if self.text[self.pos] == "-":
            sign = -1
            self.pos += 1
        numerator = int(self._parse_digits())
        denominator = 1
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            denominator = int(self._parse_digits())
            if denominator == 0:
                raise ParseError("zero denominator", self.pos - 1)
        return ScalarNode(Fraction(sign * numerator, denominator), start)


def parse_syntax(text: str) -> SyntaxNode:
    """Parse a complete literal into a syntax tree.

    Raises:
        ParseError: If the text is not a single well-formed literal
    """
    parser = SyntaxParser(text)
    node = parser.parse_value()
    if not parser.at_end():
        raise ParseError("trailing characters", parser.pos)
    return node


def parse_element(ring: "RingInstance", text: str) -> Element:
    """Parse ``text`` into a canonical element of ``ring``.

    Args:
        ring: Target instance
        text: Literal in the element grammar

    Returns:
        The canonical Element

    Raises:
        ParseError: On malformed input, with the offending position
        WrongArity: If a pair or coordinate literal has the wrong length
    """
    return element_from_node(ring, parse_syntax(text))


def element_from_node(ring: "RingInstance", node: SyntaxNode) -> Element:
    return Element(ring, ring._from_syntax(node))


def render_element(x: Element) -> str:
    return x.ring.render(x)
