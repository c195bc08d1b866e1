# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Exact arithmetic in F_{p^d} and in W_m(F_{p^d}) = GR(p^m, d).
"""

from .field_params import FieldParams, modulus_coefficients
from .galois_ring import (
    GaloisRing,
    GaloisRingElement,
    change_precision,
    frobenius,
    galois_ring,
    gr_add,
    gr_inv,
    gr_mul,
    residue,
    teichmuller_modulus,
    valuation,
)
from .finite_field_element import FiniteFieldElement, teichmuller
from .embedding import embed, embed_field, embedding_root
from .ring_matrix import RingMatrix, Vector
from .field_linalg import stable_rank, to_galois, twisted_product
