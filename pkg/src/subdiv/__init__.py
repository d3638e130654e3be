"""Triangulations of simplices, their local h-polynomials, and exact
real-rootedness and interlacing certificates over the rationals."""

__version__ = "0.1.0"
