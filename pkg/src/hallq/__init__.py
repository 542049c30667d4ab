"""Derived Hall numbers of quiver representations over finite fields."""
from .finfield import FiniteField, field_make, mat_solve, enumerate_vectors

__version__ = "0.1.0"
