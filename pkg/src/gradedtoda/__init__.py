"""Z2 x Z2-graded sl2: algebra, currents, Toda systems and their numerics."""

__version__ = "0.1.0"
