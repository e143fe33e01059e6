"""Lie poset algebras of types B, C and D: index, Frobenius and contact structure."""

__version__ = "0.1.0"
