"""Exact verification of terminating q-Watson, q-Dixon and q-Whipple type summations."""

__version__ = "0.1.0"
