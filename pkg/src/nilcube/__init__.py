"""Exact-arithmetic engine for the relatively free algebra with every cube zero:
bases of multigraded components, nilpotency degrees, and the minimal generating
system of the 3x3 matrix invariant algebra.
"""

__version__ = "0.1.0"
