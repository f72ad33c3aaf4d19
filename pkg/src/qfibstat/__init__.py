"""Exact q-Fibonacci polynomials from set partition statistics.

Modules:

``poly``      sparse Laurent polynomials in x, y, p, q with integer coefficients
``combinat``  set partitions, pattern avoidance, ls/rb, and the bijections
``qfib``      the q- and p,q-Fibonacci families and (p,)q-binomials
``lgv``       paths in the Fibonacci digraph and minors of its path matrix
``verify``    the identity registry and its runner
``cli``       the ``qfib`` command
"""

from .combinat import (CeilingExceeded, InvalidPartition, SetPartition, contains_pattern,
                       enumerate_avoiders, layered_matchings, layered_partitions, ls, rb,
                       stats)
from .lgv import closed_form_minor, minor
from .poly import LaurentPoly, NonExactDivision, ParseError
from .qfib import Family, family_poly, pqbinom, qbinom

__all__ = [
    "CeilingExceeded", "Family", "InvalidPartition", "LaurentPoly", "NonExactDivision",
    "ParseError", "SetPartition", "closed_form_minor", "contains_pattern",
    "enumerate_avoiders", "family_poly", "layered_matchings", "layered_partitions", "ls",
    "minor", "pqbinom", "qbinom", "rb", "stats",
]
