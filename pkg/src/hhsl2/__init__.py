"""Hochschild cohomology of U(sl2) in odd characteristic, computed as Ext_U(k, S)."""

__version__ = "0.1.0"
