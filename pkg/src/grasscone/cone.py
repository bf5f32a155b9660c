"""Rank-two Neron-Severi lattice of ``Gr_r(E)`` and its cones.

Classes are written ``alpha * eta + beta * f`` with ``eta`` the class of the
tautological ``O(1)`` and ``f`` the pullback of a degree-one line bundle
from the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bundle import BundleDescriptor, _check_r, bundle_lambda, bundle_rank
from .errors import ValidationError

__all__ = [
    "NSClass",
    "Ray",
    "Cone2D",
    "FIBER",
    "pseff_cone",
    "contains",
    "on_boundary",
    "pullback_class",
]


@dataclass(frozen=True)
class NSClass:
    eta_coeff: Fraction
    fiber_coeff: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eta_coeff", Fraction(self.eta_coeff))
        object.__setattr__(self, "fiber_coeff", Fraction(self.fiber_coeff))

    def __iter__(self):
        yield self.eta_coeff
        yield self.fiber_coeff

    def is_zero(self) -> bool:
        return self.eta_coeff == 0 and self.fiber_coeff == 0

    def __str__(self):
        return f"({self.eta_coeff},{self.fiber_coeff})"


@dataclass(frozen=True)
class Ray:
    """A ray, stored as a primitive integer vector.

    Only directions in the half-plane ``eta > 0`` (plus ``+f``) are
    representable; every cone this package builds lives there.  Use
    :meth:`through` to normalize an arbitrary class.
    """

    eta: int
    fiber: int

    def __post_init__(self):
        if math.gcd(self.eta, self.fiber) != 1:
            raise ValidationError(f"ray ({self.eta},{self.fiber}) is not primitive", "direction")
        if not (self.eta > 0 or (self.eta == 0 and self.fiber == 1)):
            raise ValidationError(
                f"ray ({self.eta},{self.fiber}) lies outside eta > 0 and is not +f",
                "direction",
            )

    @classmethod
    def through(cls, x) -> Ray:
        """The ray spanned by ``x`` (an NSClass or a pair), scaled to be primitive."""
        alpha, beta = (Fraction(c) for c in x)
        if alpha == 0 and beta == 0:
            raise ValidationError("the zero class spans no ray", "direction")
        den = alpha.denominator * beta.denominator // math.gcd(alpha.denominator, beta.denominator)
        a, b = int(alpha * den), int(beta * den)
        g = math.gcd(a, b)
        return cls(a // g, b // g)

    @property
    def direction(self) -> NSClass:
        return NSClass(self.eta, self.fiber)

    def __str__(self):
        return f"({self.eta},{self.fiber})"


FIBER = Ray(0, 1)


@dataclass(frozen=True, eq=False)
class Cone2D:
    """Cone spanned by two independent rays; equality ignores ray order."""

    ray_a: Ray
    ray_b: Ray

    def __post_init__(self):
        if self.ray_a.eta * self.ray_b.fiber - self.ray_a.fiber * self.ray_b.eta == 0:
            raise ValidationError(
                f"rays {self.ray_a} and {self.ray_b} are linearly dependent", "rays"
            )

    def __eq__(self, other):
        if not isinstance(other, Cone2D):
            return NotImplemented
        return {self.ray_a, self.ray_b} == {other.ray_a, other.ray_b}

    def __hash__(self):
        return hash(frozenset((self.ray_a, self.ray_b)))

    def coordinates(self, x) -> tuple[Fraction, Fraction]:
        """Solve ``x = s * ray_a + t * ray_b`` exactly."""
        alpha, beta = (Fraction(c) for c in x)
        a, b = self.ray_a, self.ray_b
        det = a.eta * b.fiber - a.fiber * b.eta
        s = (alpha * b.fiber - beta * b.eta) / det
        t = (a.eta * beta - a.fiber * alpha) / det
        return s, t


def pseff_cone(b: BundleDescriptor, r: int) -> Cone2D:
    """Pseudo-effective cone of ``Gr_r(E)``: rays ``f`` and ``eta - lambda f``."""
    _check_r(r, bundle_rank(b) - 1)
    lam = bundle_lambda(b, r)
    return Cone2D(FIBER, Ray.through((1, -lam)))


def contains(c: Cone2D, x) -> bool:
    s, t = c.coordinates(x)
    return s >= 0 and t >= 0


def on_boundary(c: Cone2D, x) -> bool:
    """True iff ``x`` is a positive multiple of exactly one generator."""
    s, t = c.coordinates(x)
    if s < 0 or t < 0:
        return False
    return (s == 0) != (t == 0)


def pullback_class(x: NSClass, total_degree: int) -> NSClass:
    """Pull back along the base change of a cover of degree ``total_degree``.

    The tautological class pulls back to the tautological class; the fiber
    class is multiplied by the degree of the map of curves.
    """
    if isinstance(total_degree, bool) or not isinstance(total_degree, int) or total_degree < 1:
        raise ValidationError(f"total degree must be a positive integer, got {total_degree!r}",
                              "total_degree")
    return NSClass(x.eta_coeff, total_degree * x.fiber_coeff)
