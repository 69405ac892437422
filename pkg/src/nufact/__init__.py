"""nufact: a workbench for non-unique factorization at desk scale.

Subpackages cover exact arithmetic in finite abelian groups, the monoid of
zero-sum sequences with atom/length-set enumeration, brute-force
factorization in the quadratic order Z[(1+sqrt(-23))/2], quaternion identity
checking over Q(sqrt(3)), an abstract divisor calculus on cycles of maximal
ideals with SVG diagrams, and an exact triangular-order oracle that
cross-validates the calculus.
"""

from . import abelian, divcalc, quadring, quatcheck, tring, zerosum

__all__ = ["abelian", "divcalc", "quadring", "quatcheck", "tring", "zerosum"]
__version__ = "0.1.0"
