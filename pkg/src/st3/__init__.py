"""Exact Sato-Tate group catalog and statistics for abelian threefolds."""

__version__ = "0.1.0"
