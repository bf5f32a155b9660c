"""Brute-force checks on split bundles over a genus-0 base.

Nothing here reads an HN filtration.  ``max_subset_sum`` enumerates every
r-subset of exponents, and section counts come from the genus-0 formula
``h0(O(d)) = max(0, d + 1)`` applied summand by summand to
``wedge^r E (x) O(b)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bundle import SplitBundle, _check_r, hn_of_split, lambda_char0

__all__ = [
    "OracleReport",
    "max_subset_sum",
    "h0_line_genus0",
    "h0_taut_twist",
    "verify_theorem_split",
]


@dataclass(frozen=True)
class OracleReport:
    r: int
    lambda_formula: Fraction
    lambda_oracle: Fraction
    h0_at_boundary: int
    h0_beyond_boundary: int
    verdict: bool

    def __post_init__(self):
        expected = (
            self.lambda_formula == self.lambda_oracle
            and self.h0_at_boundary >= 1
            and self.h0_beyond_boundary == 0
        )
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict} disagrees with the report fields")


def _subset_sums(e: SplitBundle, r: int):
    # lexicographic over sorted-descending exponents; the stable sort keeps
    # input order among equal exponents
    return (sum(s) for s in itertools.combinations(e.canonical(), r))


def max_subset_sum(e: SplitBundle, r: int) -> Fraction:
    """Largest sum of ``r`` exponents, by exhaustive enumeration."""
    _check_r(r, e.rank)
    return Fraction(max(_subset_sums(e, r)))


def h0_line_genus0(d: int) -> int:
    return max(0, d + 1)


def h0_taut_twist(e: SplitBundle, r: int, b: int) -> int:
    """``h0(Gr_r(E), O(1) (x) phi^* O(b))`` on P^1.

    By the projection formula this is ``h0(P^1, wedge^r E (x) O(b))``.
    """
    _check_r(r, e.rank)
    return sum(h0_line_genus0(s + b) for s in _subset_sums(e, r))


def verify_theorem_split(e: SplitBundle, r: int) -> OracleReport:
    """Check that the boundary class ``eta - lambda f`` is effective and
    ``eta - (lambda + 1) f`` is not, by counting sections."""
    _check_r(r, e.rank - 1)
    lam_formula = lambda_char0(hn_of_split(e), r)
    lam_oracle = max_subset_sum(e, r)
    # lambda is a subset sum of integers, hence integral
    boundary = int(lam_oracle)
    at = h0_taut_twist(e, r, -boundary)
    beyond = h0_taut_twist(e, r, -boundary - 1)
    verdict = lam_formula == lam_oracle and at >= 1 and beyond == 0
    return OracleReport(r, lam_formula, lam_oracle, at, beyond, verdict)
