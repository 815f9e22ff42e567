"""Trivalent logics of indicative conditionals: semantics, tableaux, sequents and finite algebras."""
__version__ = "0.1.0"
