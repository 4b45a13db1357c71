"""amalgamlab: exact computations with 2-transitive groups and their amalgams."""

__version__ = "0.1.0"
