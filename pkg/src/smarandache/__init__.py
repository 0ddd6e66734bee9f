"""Smarandache idempotents in group rings Z2[C_n] and exact group algebras."""

from .gf2_ring import Gf2Element, add, complement_one, is_idempotent, make, mul, parse, square, to_text

__version__ = "0.1.0"
