"""Finite geometry of the three-qubit Pauli group.

Exact, exhaustive catalogs for the symplectic polar space W(5,2) built from
three-qubit Pauli observables: points, totally isotropic lines and planes,
geometric hyperplanes and their Veldkamp lines, Mermin pentagrams with their
double-six families, doily spreads, Mermin squares, the weight diagram of the
20-dimensional SU(6) irrep, and seven-generator Clifford frames.

Everything is deterministic and integer-exact: no randomness and no floating
point in any geometric predicate.
"""

__version__ = "0.1.0"

from . import contextuality, pauli, polar, weights  # noqa: F401
