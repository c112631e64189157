"""Text syntax for bundle expressions and symmetric functions.

Bundles::

    expr  := NAME ":" INT
           | "wedge" "(" INT "," expr ")"
           | "sym" "(" INT "," expr ")"
           | "schur" "(" shape "," expr ")"
           | "tensor" "(" expr "," expr ")"
           | "oplus" "(" expr "," expr ")"
    shape := "[" [INT ("," INT)*] "]"

Symmetric functions::

    func  := term (("+" | "-") term)*
    term  := [INT "*"] atom
    atom  := ("e" | "h" | "p") "_" INT | "s_" shape

A single unscaled atom parses to a NamedFunction; any other combination must
consist of Schur functions and parses to a SchurVector.
"""
from typing import List, Tuple, Union

from .chern import Base, BundleExpr, DirectSum, NamedFunction, SchurFunctor, Tensor, sym, wedge
from .combinat import Partition
from .exceptions import DSLParseError, InvalidBundleError, ParameterRangeError
from .schurbasis import SchurVector

KEYWORDS = ("wedge", "sym", "schur", "tensor", "oplus")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, *expected: str):
        raise DSLParseError(self.text, self.pos, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, literal: str) -> bool:
        self.skip()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str):
        if not self.accept(literal):
            self.fail(repr(literal))

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("integer")
        return int(self.text[start:self.pos])

    def identifier(self, *expected: str) -> str:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] in "_'"):
                self.pos += 1
        if start == self.pos:
            self.fail(*(expected or ("identifier",)))
        return self.text[start:self.pos]

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.fail("end of input")

    def shape(self) -> Partition:
        start = self.pos
        self.expect("[")
        parts: List[int] = []
        if not self.accept("]"):
            parts.append(self.integer())
            while self.accept(","):
                parts.append(self.integer())
            self.expect("]")
        try:
            return Partition(parts)
        except ParameterRangeError:
            self.pos = start
            self.fail("weakly decreasing shape")

    def bundle(self) -> BundleExpr:
        start = self.pos
        name = self.identifier("bundle name", *KEYWORDS)
        if self.accept(":"):
            rank = self.integer()
            try:
                return Base(name, rank)
            except InvalidBundleError:
                self.pos = start
                self.fail("positive rank")
        if name not in KEYWORDS:
            self.fail("':'")
        self.expect("(")
        if name in ("wedge", "sym"):
            k = self.integer()
            self.expect(",")
            child = self.bundle()
            node = wedge(k, child) if name == "wedge" else sym(k, child)
        elif name == "schur":
            lam = self.shape()
            self.expect(",")
            node = SchurFunctor(lam, self.bundle())
        else:
            left = self.bundle()
            self.expect(",")
            right = self.bundle()
            node = Tensor(left, right) if name == "tensor" else DirectSum(left, right)
        self.expect(")")
        return node

    def atom(self) -> NamedFunction:
        family = self.peek()
        if family not in ("e", "h", "p", "s"):
            self.fail("'e_'", "'h_'", "'p_'", "'s_'")
        self.pos += 1
        self.expect("_")
        if family == "s":
            return NamedFunction("s", self.shape())
        return NamedFunction(family, self.integer())

    def term(self) -> Tuple[int, NamedFunction]:
        coeff = 1
        if self.peek().isdigit():
            coeff = self.integer()
            self.expect("*")
        return coeff, self.atom()

    def function(self) -> List[Tuple[int, NamedFunction]]:
        terms = [self.term()]
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                c, atom = self.term()
                terms.append((-c, atom))
            else:
                return terms


def parse_bundle(text: str) -> BundleExpr:
    """Parse a bundle expression such as ``tensor(wedge(2, E:4), F:2)``."""
    parser = _Parser(text)
    expr = parser.bundle()
    parser.end()
    try:
        expr.alphabets()
    except InvalidBundleError as e:
        raise DSLParseError(text, 0, (f"at most two consistent base bundles ({e.message})",))
    return expr


def parse_symmetric(text: str) -> Union[NamedFunction, SchurVector]:
    """Parse ``e_3``, ``s_[2,1]`` or a combination such as ``2*s_[2] - s_[1,1]``."""
    parser = _Parser(text)
    terms = parser.function()
    parser.end()
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    if any(atom.kind != "s" for _, atom in terms):
        raise DSLParseError(text, 0, ("a combination of Schur functions s_[...]",))
    vector = SchurVector()
    for c, atom in terms:
        vector = vector + SchurVector.s(atom.index, c)
    return vector


def parse_shape(text: str) -> Partition:
    """Parse ``[2,1]`` or ``2,1``."""
    stripped = text.strip()
    parser = _Parser(stripped if stripped.startswith("[") else f"[{stripped}]")
    lam = parser.shape()
    parser.end()
    return lam
