# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Input descriptions of crystals, families and Artin-Schreier systems.

A description is relaxed JSON (see definitions/description.lark). Its fields
are validated by pydantic models whose ``build`` methods create the library
objects. Matrix entries may be

- an integer, read modulo p^m,
- a list of d integers, the coordinates in the basis 1, u, ..., u^{d-1},
- an object with a "coords" list (the output format of elements),
- a string expression such as "t^2 + p" (see definitions/polynomial.lark),
- for families, a list of monomials {exponents: [...], coeff: ...}.
"""

import pathlib
from typing import Any, Sequence, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from crystalline.artinschreier import ASFamily, ASInstance
from crystalline.fcrystal import FCrystal, make_crystal, standard_E
from crystalline.shared import CrystallineError, DescriptionError, NotACrystal
from crystalline.strata import FamilyCrystal, TeichmullerPolynomial
from crystalline.wittring import FieldParams, GaloisRing, GaloisRingElement, galois_ring

from .transformers import parse_description, parse_polynomial

Model = TypeVar("Model", bound=BaseModel)


def _ring_entry(value: Any, ring: GaloisRing) -> GaloisRingElement:
    if isinstance(value, bool):
        raise DescriptionError(f"Expected a ring element, got {value!r}")
    if isinstance(value, int):
        return ring.element(value)
    if isinstance(value, dict) and set(value) <= {"p", "d", "m", "coords"} and "coords" in value:
        value = value["coords"]
    if isinstance(value, list) and all(isinstance(c, int) for c in value):
        if len(value) != ring.d:
            raise DescriptionError(f"Element needs {ring.d} coordinates, got {value}")
        return ring.element(value)
    if isinstance(value, str):
        polynomial = parse_polynomial(value, ring)
        return polynomial.evaluate([])
    raise DescriptionError(f"Cannot read {value!r} as an element of {ring}")


def _family_entry(value: Any, ring: GaloisRing, variables: Sequence[str]) -> TeichmullerPolynomial:
    nvars = len(variables)
    if isinstance(value, str):
        return parse_polynomial(value, ring, variables)
    if isinstance(value, list) and all(isinstance(term, dict) for term in value):
        terms = []
        for term in value:
            if set(term) != {"exponents", "coeff"}:
                raise DescriptionError(f"A monomial needs exponents and coeff, got {sorted(term)}")
            exponents = term["exponents"]
            if not isinstance(exponents, list) or len(exponents) != nvars:
                raise DescriptionError(f"Monomial {term} needs {nvars} exponents")
            terms.append((exponents, _ring_entry(term["coeff"], ring)))
        try:
            return TeichmullerPolynomial(ring, nvars, terms)
        except ValueError as error:
            raise DescriptionError(str(error)) from error
    return TeichmullerPolynomial.constant(ring, nvars, _ring_entry(value, ring))


def _field(p: int, d: int) -> FieldParams:
    try:
        return FieldParams(p, d)
    except ValueError as error:
        raise DescriptionError(str(error)) from error


def _check_square(matrix: list[list[Any]], rank: int | None) -> None:
    if not matrix or any(len(row) != len(matrix) for row in matrix):
        raise ValueError("matrix must be square and nonempty")
    if rank is not None and rank != len(matrix):
        raise ValueError(f"rank is {rank} but the matrix has {len(matrix)} rows")


class CrystalDescription(BaseModel):
    """{p, d, m, n, rank, matrix} or {p, d, m, n, standard: [a, b]}."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    p: int
    d: int = 1
    m: int
    n: int = 1
    rank: int | None = None
    matrix: list[list[Any]] | None = None
    standard: tuple[int, int] | None = None

    @model_validator(mode="after")
    def _matrix_or_standard(self) -> "CrystalDescription":
        if (self.matrix is None) == (self.standard is None):
            raise ValueError("give exactly one of matrix and standard")
        if self.matrix is not None:
            _check_square(self.matrix, self.rank)
        if self.m < 1 or self.n < 1 or self.d < 1:
            raise ValueError("m, n and d must be positive")
        return self

    def build(self, precision: int | None = None) -> FCrystal:
        """
        The crystal at precision m, or at the given precision.

        :raises NotACrystal: If det vanishes modulo p^m.
        :raises DescriptionError: If an entry cannot be read.
        """
        m = self.m if precision is None else precision
        base = _field(self.p, self.d)
        if self.standard is not None:
            a, b = self.standard
            return standard_E(a, b, self.n, base, m)
        ring = galois_ring(base, m)
        rows = [[_ring_entry(x, ring) for x in row] for row in self.matrix or []]
        try:
            return make_crystal(base, self.n, m, rows)
        except NotACrystal:
            raise
        except CrystallineError as error:
            raise DescriptionError(str(error)) from error


class FamilyDescription(BaseModel):
    """{p, d, m, n, rank, vars: [names], matrix}."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    p: int
    d: int = 1
    m: int = 1
    n: int = 1
    rank: int | None = None
    variables: list[str] = Field(default=["t"], alias="vars")
    matrix: list[list[Any]]

    @model_validator(mode="after")
    def _shape(self) -> "FamilyDescription":
        _check_square(self.matrix, self.rank)
        if len(set(self.variables)) != len(self.variables) or "p" in self.variables:
            raise ValueError(f"variables must be distinct and differ from p: {self.variables}")
        return self

    def _entries(self, ring: GaloisRing) -> tuple[tuple[TeichmullerPolynomial, ...], ...]:
        return tuple(
            tuple(_family_entry(x, ring, self.variables) for x in row) for row in self.matrix
        )

    def build(self, precision: int | None = None) -> FamilyCrystal:
        """The crystal family at precision m, or at the given precision."""
        m = self.m if precision is None else precision
        base = _field(self.p, self.d)
        entries = self._entries(galois_ring(base, m))
        return FamilyCrystal(base, tuple(self.variables), self.n, m, entries)

    def build_as_family(self) -> ASFamily:
        """The matrix read modulo p as an Artin-Schreier family."""
        base = _field(self.p, self.d)
        return ASFamily(base, tuple(self.variables), self._entries(galois_ring(base, 1)))


class ASDescription(BaseModel):
    """{p, d, n, A: [[field elements]]}."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    p: int
    d: int = 1
    n: int | None = None
    matrix: list[list[Any]] = Field(alias="A")

    @model_validator(mode="after")
    def _shape(self) -> "ASDescription":
        _check_square(self.matrix, self.n)
        return self

    def build(self) -> ASInstance:
        base = _field(self.p, self.d)
        ring = galois_ring(base, 1)
        rows = [[_ring_entry(x, ring).residue() for x in row] for row in self.matrix]
        return ASInstance.from_rows(base, rows)


def read_description(text: str, model: type[Model]) -> Model:
    """
    Parses text and validates it against model.

    :raises DescriptionError: On syntax errors (with line and column) and on
        invalid fields.
    """
    return _validate(parse_description(text), model)


def _validate(data: Any, model: type[Model]) -> Model:
    if not isinstance(data, dict):
        raise DescriptionError("A description must be an object", 1, 1)
    try:
        return model.model_validate(data)
    except ValidationError as error:
        raise DescriptionError(str(error)) from error


def load_description(path: str | pathlib.Path, model: type[Model]) -> Model:
    """Reads a description file."""
    with open(path, "r", encoding="utf-8") as file:
        return read_description(file.read(), model)


def read_as_input(text: str) -> ASDescription | FamilyDescription:
    """
    An Artin-Schreier system (key "A") or a family of them (key "matrix",
    entries polynomials in the variables).

    :raises DescriptionError: On syntax errors and invalid fields.
    """
    data = parse_description(text)
    if isinstance(data, dict) and "A" in data:
        return _validate(data, ASDescription)
    return _validate(data, FamilyDescription)


def load_crystal(path: str | pathlib.Path) -> CrystalDescription:
    return load_description(path, CrystalDescription)


def load_family(path: str | pathlib.Path) -> FamilyDescription:
    return load_description(path, FamilyDescription)


def load_as_instance(path: str | pathlib.Path) -> ASDescription:
    return load_description(path, ASDescription)


def load_as_input(path: str | pathlib.Path) -> ASDescription | FamilyDescription:
    with open(path, "r", encoding="utf-8") as file:
        return read_as_input(file.read())
