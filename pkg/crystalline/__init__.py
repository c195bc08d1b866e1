# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Exact arithmetic workbench for F^n-crystals over finite fields.
"""

__version__ = "0.1.0"
