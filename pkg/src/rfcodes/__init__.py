"""Rational-function codes over the projective line of a finite field.

Submodules:

* :mod:`rfcodes.gf` finite fields, polynomials and extension towers
* :mod:`rfcodes.rfcode` encoder, recognizer and error-correcting decoder
* :mod:`rfcodes.zeta` divisor counts from an L-polynomial
* :mod:`rfcodes.thresholds` numeric thresholds and rate bounds
"""
from .gf import field_make, parse_field
from .rfcode import CodeParams, Codeword, decode, encode, iota, recognize

__all__ = ["field_make", "parse_field", "CodeParams", "Codeword", "encode", "decode", "recognize", "iota"]
__version__ = "0.1.0"
