# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Canonical embeddings W_m(F_{p^d}) -> W_m(F_{p^{d'}}) for d | d'.

The generator u of the small ring is sent to the Teichmueller lift of the
least root (in integer encoding) of the field modulus inside F_{p^{d'}}. The
choice is deterministic and compatible with reduction modulo p.
"""

import functools

import galois

from crystalline.shared import NotASubfield

from .field_params import FieldParams
from .finite_field_element import FiniteFieldElement, teichmuller
from .galois_ring import GaloisRingElement, galois_ring


@functools.lru_cache(maxsize=None)
def embedding_root(source: FieldParams, target: FieldParams) -> FiniteFieldElement:
    """
    The image of u under the field embedding F_{p^d} -> F_{p^{d'}}.

    :param source: The subfield.
    :type source: FieldParams
    :param target: The extension field.
    :type target: FieldParams
    :raises NotASubfield: If p differs or d does not divide d'.
    :rtype: FiniteFieldElement
    """
    if source.p != target.p or target.d % source.d != 0:
        raise NotASubfield(f"{source} is not a subfield of {target}")
    field = target.galois_field()
    modulus = galois.Poly(list(reversed(source.modulus)), field=field)
    root = min(int(r) for r in modulus.roots())
    return FiniteFieldElement.from_int(target, root)


@functools.lru_cache(maxsize=None)
def _generator_powers(
    source: FieldParams, target: FieldParams, precision: int
) -> tuple[GaloisRingElement, ...]:
    tau = teichmuller(embedding_root(source, target), precision)
    powers = [galois_ring(target, precision).one]
    for _ in range(source.d - 1):
        powers.append(powers[-1] * tau)
    return tuple(powers)


def embed(a: GaloisRingElement, target: FieldParams) -> GaloisRingElement:
    """
    Maps a into W_m(F_{p^{d'}}).

    The map is a ring homomorphism commuting with Frobenius and Teichmueller
    lifts. Embedding into the same field is the identity.

    :param a: Element over F_{p^d}.
    :type a: GaloisRingElement
    :param target: F_{p^{d'}} with d | d'.
    :type target: FieldParams
    :raises NotASubfield: If d does not divide d'.
    :rtype: GaloisRingElement
    """
    if a.params == target:
        return a
    powers = _generator_powers(a.params, target, a.precision)
    result = galois_ring(target, a.precision).zero
    for c, power in zip(a.coords, powers):
        if c:
            result = result + power * c
    return result


def embed_field(x: FiniteFieldElement, target: FieldParams) -> FiniteFieldElement:
    """Field version of :func:`embed`."""
    if x.params == target:
        return x
    return embed(GaloisRingElement(galois_ring(x.params, 1), x.coords), target).residue()
