# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Lark grammars for the input descriptions and their transformers.
"""

from .transformers import (
    DescriptionTransformer,
    LarkParserSingleton,
    PolynomialTransformer,
    parse_description,
    parse_polynomial,
)
from .readers import (
    ASDescription,
    CrystalDescription,
    FamilyDescription,
    load_as_input,
    load_as_instance,
    load_crystal,
    load_description,
    load_family,
    read_as_input,
    read_description,
)
