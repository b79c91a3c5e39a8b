"""Verification workbench for linear Chern-Simons theory and its chiral WZW boundary."""

__version__ = '0.1.0'
