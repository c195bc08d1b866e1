# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Linear algebra over F_{p^d} through galois FieldArrays.
"""

from typing import Sequence

import galois
import numpy as np

from .field_params import FieldParams
from .finite_field_element import FiniteFieldElement


def to_galois(
    params: FieldParams, rows: Sequence[Sequence[FiniteFieldElement]]
) -> galois.FieldArray:
    """
    Converts a matrix of field elements to a galois array over the same field.

    :param params: The field all entries live in.
    :type params: FieldParams
    :param rows: The matrix.
    :type rows: Sequence[Sequence[FiniteFieldElement]]
    :rtype: galois.FieldArray
    """
    field = params.galois_field()
    return field(np.array([[x.to_int() for x in row] for row in rows], dtype=np.int64))


def from_galois(params: FieldParams, array: galois.FieldArray) -> list[list[FiniteFieldElement]]:
    return [[FiniteFieldElement.from_int(params, int(x)) for x in row] for row in array]


def twisted_product(
    params: FieldParams, matrix: galois.FieldArray, twist: int, factors: int
) -> galois.FieldArray:
    """
    The product A * A^[p^n] * A^[p^2n] * ... with the given number of factors,
    where [p^k] raises every entry to the p^k-th power. This is the matrix of
    the factors-th iterate of the sigma^n-linear map with matrix A.

    :param params: The field of the entries.
    :type params: FieldParams
    :param matrix: Square matrix A.
    :type matrix: galois.FieldArray
    :param twist: n.
    :type twist: int
    :param factors: Number of factors, at least 1.
    :type factors: int
    :rtype: galois.FieldArray
    """
    product = matrix.copy()
    for j in range(1, factors):
        product = product @ matrix ** (params.p ** ((j * twist) % params.d))
    return product


def stable_rank(params: FieldParams, matrix: galois.FieldArray, twist: int, factors: int) -> int:
    """Rank of :func:`twisted_product` over F_{p^d}."""
    return int(np.linalg.matrix_rank(twisted_product(params, matrix, twist, factors)))
