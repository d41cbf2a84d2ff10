"""Parabolic Lusztig q-analogs of weight multiplicity and graded Euler
characters of E_mu^* (x) Sym(n) on flag manifolds G/P."""

__version__ = "0.1.0"
