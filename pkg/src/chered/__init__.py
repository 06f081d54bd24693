"""Exact-arithmetic workbench for rational Cherednik algebras at t=0,
covering cyclic reflection groups and the Weyl group of type B2."""

__version__ = "0.1.0"
