"""
Exact irreducible characters of symmetric groups, with zero and
nonzero certificates and hook-length gap sets of self-conjugate
partitions.
"""

__version__ = "1.0.0"
