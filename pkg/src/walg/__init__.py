"""walg: exact computations around twisted W-algebra modules, screening
operators on Fock spaces, and rank-one Virasoro structure."""

__version__ = "0.1.0"
