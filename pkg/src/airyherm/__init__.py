"""Lacunary Hermite generating functions, Airy-heat kernels and Gould-Hopper polynomials.

Two engines: exact rational series and polynomials (``exactnum``, ``hermite``,
``lacunary``) and double-precision quadrature (``kernels``, ``pde``).
"""

__version__ = "0.1.0"
