"""Degree-based test for "exactly two Q-main eigenvalues".

A connected non-regular graph has exactly two Q-main eigenvalues iff there
is a single pair (a, b) with

    S(v) = a*d(v) + b - d(v)^2      for every vertex v,

where S(v) is the sum of the neighbors' degrees.  Regular graphs satisfy
the equation for infinitely many pairs and have exactly one main eigenvalue,
so they are reported as underdetermined rather than with an arbitrary pair.
Everything here is exact rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import Graph, GraphError, degree_profile, is_connected

NO_SOLUTION = "no_solution"
UNIQUE = "unique"
UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class AbSolution:
    """Outcome of the per-vertex linear system in (a, b).

    kind is one of "no_solution", "unique", "underdetermined".  For unique
    solutions `a` and `b` are Fractions and `integral` records whether both
    are integers; for the underdetermined (regular) case `degree` is the
    common degree.
    """

    kind: str
    a: Fraction | None = None
    b: Fraction | None = None
    integral: bool | None = None
    degree: int | None = None


def solve_ab(g: Graph) -> AbSolution:
    """Solve S(v) = a*d(v) + b - d(v)^2 over all vertices, exactly.

    Regular input -> underdetermined.  Otherwise the 2x2 system from two
    distinct degrees is solved and verified at every vertex.
    """
    if g.m == 0:
        raise GraphError("empty edge set")
    if not is_connected(g):
        raise GraphError("not connected")
    prof = degree_profile(g)
    degs = prof.degrees
    svals = prof.neighbor_sums
    d1 = degs[0]
    v2 = next((v for v in range(g.n) if degs[v] != d1), None)
    if v2 is None:
        return AbSolution(UNDERDETERMINED, degree=d1)
    d2 = degs[v2]
    # a*d1 + b = d1^2 + S(v1);  a*d2 + b = d2^2 + S(v2)
    rhs1 = d1 * d1 + svals[0]
    rhs2 = d2 * d2 + svals[v2]
    a = Fraction(rhs1 - rhs2, d1 - d2)
    b = Fraction(rhs1) - a * d1
    for v in range(g.n):
        if a * degs[v] + b != degs[v] ** 2 + svals[v]:
            return AbSolution(NO_SOLUTION)
    return AbSolution(
        UNIQUE, a=a, b=b, integral=(a.denominator == 1 and b.denominator == 1)
    )


def has_exactly_two_q_mains(g: Graph) -> bool:
    """Criterion-side decision; the spectral count is computed independently
    and the equivalence of the two is itself a tested theorem."""
    return solve_ab(g).kind == UNIQUE


def check_membership(g: Graph, a, b) -> list[Fraction]:
    """Per-vertex residuals d(v)^2 + S(v) - a*d(v) - b.

    All-zero residuals mean g satisfies the degree equation for this (a, b).
    """
    prof = degree_profile(g)
    a = Fraction(a)
    b = Fraction(b)
    return [
        Fraction(d * d + s) - a * d - b
        for d, s in zip(prof.degrees, prof.neighbor_sums)
    ]
