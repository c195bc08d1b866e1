# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.lark import LarkParserSingleton, parse_description, parse_polynomial
from crystalline.shared import DescriptionError
from crystalline.strata import TeichmullerPolynomial
from crystalline.wittring import FieldParams, galois_ring


class DescriptionParserTest(unittest.TestCase):
    """
    Tests for the relaxed JSON grammar
    """

    def test_json(self):
        """
        Plain JSON parses to plain values
        """
        data = parse_description('{"p": 2, "matrix": [[1, -2]], "ok": true, "x": null}')
        self.assertEqual(data, {"p": 2, "matrix": [[1, -2]], "ok": True, "x": None})

    def test_relaxed(self):
        """
        Bare keys, comments and trailing commas
        """
        text = '// header\n{\n  p: 3,  # prime\n  list: [1, 2,],\n  name: "E",\n}\n'
        data = parse_description(text)
        self.assertEqual(data, {"p": 3, "list": [1, 2], "name": "E"})
        self.assertEqual(list(data), ["p", "list", "name"])

    def test_duplicate_key(self):
        """
        A key may appear once per object
        """
        with self.assertRaises(DescriptionError):
            parse_description("{p: 2, p: 3}")

    def test_position(self):
        """
        Syntax errors carry line and column
        """
        with self.assertRaises(DescriptionError) as context:
            parse_description("{\n  p: 2\n  m: 3\n}")
        self.assertEqual(context.exception.line, 3)
        self.assertEqual(context.exception.column, 3)
        with self.assertRaises(DescriptionError):
            parse_description("{p: 2")

    def test_singleton(self):
        """
        Parsers are built once per grammar
        """
        parser = LarkParserSingleton.get("description")
        self.assertIs(parser, LarkParserSingleton.get("description"))


class PolynomialParserTest(unittest.TestCase):
    """
    Tests for polynomial expressions over W_m(F_q)
    """

    def setUp(self):
        self.ring = galois_ring(FieldParams(2, 2), 3)
        self.t = TeichmullerPolynomial.variable(self.ring, 1, 0)

    def test_expression(self):
        """
        Powers, products with coordinate lists and the prime p
        """
        u = self.ring.generator
        parsed = parse_polynomial("t^2 + [0, 1]*t + p", self.ring, ["t"])
        self.assertEqual(parsed, self.t**2 + u * self.t + 2)

    def test_precedence(self):
        """
        Unary minus, parentheses and left associativity
        """
        parsed = parse_polynomial("-(t - 1)*(t + 1) - 3 - 1", self.ring, ["t"])
        self.assertEqual(parsed, 1 - self.t * self.t - 4)

    def test_two_variables(self):
        """
        Variables are numbered in the given order
        """
        parsed = parse_polynomial("x*y^3", self.ring, ["x", "y"])
        self.assertEqual(parsed.terms[0][0], (1, 3))

    def test_errors(self):
        """
        Unknown names and wrong coordinate counts
        """
        with self.assertRaises(DescriptionError) as context:
            parse_polynomial("t + s", self.ring, ["t"])
        self.assertEqual(context.exception.column, 5)
        with self.assertRaises(DescriptionError):
            parse_polynomial("[1, 0, 1]", self.ring, ["t"])
        with self.assertRaises(DescriptionError):
            parse_polynomial("t +", self.ring, ["t"])


if __name__ == "__main__":
    unittest.main()
