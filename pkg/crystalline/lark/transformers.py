# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import json
import pathlib
import threading
from typing import Any, Sequence

from lark import Lark, Token, Transformer, UnexpectedInput, v_args
from lark.exceptions import VisitError

from crystalline.shared import DescriptionError
from crystalline.strata import TeichmullerPolynomial
from crystalline.wittring import GaloisRing

PATH = pathlib.Path(__file__).parent.absolute()


class LarkParserSingleton:
    """Holds one lalr parser per grammar in definitions/, built on first use."""

    __instances: dict[str, Lark] = {}
    __lock = threading.Lock()

    @staticmethod
    def get(grammar: str) -> Lark:
        """
        Returns the parser for definitions/<grammar>.lark.

        :param grammar: Grammar name without suffix.
        :type grammar: str
        :rtype: Lark
        """
        if grammar not in LarkParserSingleton.__instances:
            with LarkParserSingleton.__lock:
                if grammar not in LarkParserSingleton.__instances:
                    LarkParserSingleton.__instances[grammar] = Lark.open(
                        str(PATH / f"definitions/{grammar}.lark"), parser="lalr"
                    )
        return LarkParserSingleton.__instances[grammar]


class DescriptionTransformer(Transformer):
    """
    Transforms a parsed description into plain Python values: dicts keep the
    key order of the file.
    """

    def object(self, pairs: list[tuple[str, Any]]) -> dict[str, Any]:
        result: dict[str, Any] = {}
        for key, value in pairs:
            if key in result:
                raise DescriptionError(f"Duplicate key {key!r}")
            result[key] = value
        return result

    def pair(self, children: list[Any]) -> tuple[str, Any]:
        return children[0], children[1]

    def bare_key(self, children: list[Token]) -> str:
        return str(children[0])

    def array(self, children: list[Any]) -> list[Any]:
        return list(children)

    def string(self, children: list[Token]) -> str:
        return json.loads(children[0])

    def integer(self, children: list[Token]) -> int:
        return int(children[0])

    def true(self, _: list[Any]) -> bool:
        return True

    def false(self, _: list[Any]) -> bool:
        return False

    def null(self, _: list[Any]) -> None:
        return None


@v_args(inline=True)
class PolynomialTransformer(Transformer):
    """
    Evaluates a parsed polynomial expression to a
    :class:`~crystalline.strata.TeichmullerPolynomial`.

    :param ring: The coefficient ring W_m(F_q).
    :type ring: GaloisRing
    :param variables: Names of the variables, in order.
    :type variables: Sequence[str]
    """

    def __init__(self, ring: GaloisRing, variables: Sequence[str]) -> None:
        super().__init__()
        self.ring = ring
        self.variables = list(variables)

    def _constant(self, value: Any) -> TeichmullerPolynomial:
        return TeichmullerPolynomial.constant(self.ring, len(self.variables), value)

    def number(self, token: Token) -> TeichmullerPolynomial:
        return self._constant(int(token))

    def coords(self, *tokens: Token) -> TeichmullerPolynomial:
        if len(tokens) != self.ring.d:
            raise DescriptionError(
                f"Element needs {self.ring.d} coordinates, got {len(tokens)}",
                tokens[0].line,
                tokens[0].column,
            )
        return self._constant(self.ring.element([int(t) for t in tokens]))

    def name(self, token: Token) -> TeichmullerPolynomial:
        if str(token) in self.variables:
            return TeichmullerPolynomial.variable(
                self.ring, len(self.variables), self.variables.index(str(token))
            )
        if str(token) == "p":
            return self._constant(self.ring.p)
        raise DescriptionError(f"Unknown variable {token}", token.line, token.column)

    def add(self, a: TeichmullerPolynomial, b: TeichmullerPolynomial) -> TeichmullerPolynomial:
        return a + b

    def sub(self, a: TeichmullerPolynomial, b: TeichmullerPolynomial) -> TeichmullerPolynomial:
        return a - b

    def mul(self, a: TeichmullerPolynomial, b: TeichmullerPolynomial) -> TeichmullerPolynomial:
        return a * b

    def neg(self, a: TeichmullerPolynomial) -> TeichmullerPolynomial:
        return -a

    def pow(self, a: TeichmullerPolynomial, exponent: Token) -> TeichmullerPolynomial:
        return a ** int(exponent)


def _transform(transformer: Transformer, tree: Any) -> Any:
    try:
        return transformer.transform(tree)
    except VisitError as error:
        if isinstance(error.orig_exc, DescriptionError):
            raise error.orig_exc from None
        raise


def _description_error(error: UnexpectedInput, text: str) -> DescriptionError:
    if error.line < 1:
        lines = text.split("\n")
        return DescriptionError("unexpected end of input", len(lines), len(lines[-1]) + 1)
    context = error.get_context(text).rstrip()
    return DescriptionError(f"unexpected input\n{context}", error.line, error.column)


def parse_description(text: str) -> Any:
    """
    Parses a relaxed-JSON description.

    :raises DescriptionError: With line and column of the offending token.
    """
    try:
        tree = LarkParserSingleton.get("description").parse(text)
    except UnexpectedInput as error:
        raise _description_error(error, text) from error
    return _transform(DescriptionTransformer(), tree)


def parse_polynomial(
    text: str, ring: GaloisRing, variables: Sequence[str] = ()
) -> TeichmullerPolynomial:
    """
    Parses an expression like "t^2 + [0, 1]*t + p" over ring.

    :raises DescriptionError: On syntax errors and unknown names.
    """
    try:
        tree = LarkParserSingleton.get("polynomial").parse(text)
    except UnexpectedInput as error:
        raise _description_error(error, text) from error
    return _transform(PolynomialTransformer(ring, variables), tree)
