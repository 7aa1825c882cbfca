"""integra: numerical verification of a catalog of definite-integral identities."""

__version__ = "0.1.0"
