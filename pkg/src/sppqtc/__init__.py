"""Bijection between symmetric plane partitions and quasi-transpose-complementary
plane partitions, with every intermediate construction exposed."""

__version__ = "0.1.0"
