"""Numerical presentations of vector bundles on a curve.

A bundle is never stored as sheaf data.  What survives is the numerics of its
Harder-Narasimhan filtration: for each semistable subquotient, its rank and
degree.  Split bundles ``L^a_1 + ... + L^a_N`` (``L`` of degree one) are kept
as their exponent multiset.

All arithmetic is exact; slopes are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import RangeError, ValidationError

__all__ = [
    "HNBlock",
    "HNType",
    "SplitBundle",
    "StrongHNData",
    "CharZero",
    "Split",
    "Strong",
    "BundleDescriptor",
    "is_prime",
    "slope",
    "hn_of_split",
    "lambda_char0",
    "lambda_strong",
    "bundle_lambda",
    "bundle_rank",
    "frobenius_split",
    "shift_strong",
    "dual_split",
    "exterior_power_split",
]


def _require_int(value, field):
    # bool is an int subclass; a JSON ``true`` must not pass as a degree
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}", field)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


@dataclass(frozen=True)
class HNBlock:
    """One subquotient ``E_i / E_{i-1}`` of a Harder-Narasimhan filtration."""

    rank: int
    degree: int

    def __post_init__(self):
        _require_int(self.rank, "rank")
        _require_int(self.degree, "degree")
        if self.rank < 1:
            raise ValidationError(f"rank must be >= 1, got {self.rank}", "rank")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


def slope(block: HNBlock) -> Fraction:
    """Return ``degree / rank`` of a block in lowest terms."""
    return Fraction(block.degree, block.rank)


@dataclass(frozen=True)
class HNType:
    """Ordered HN blocks, slopes strictly decreasing.

    Malformed filtrations are rejected, never re-sorted.
    """

    blocks: tuple[HNBlock, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValidationError("HN type needs at least one block", "blocks")
        for i, block in enumerate(blocks):
            if not isinstance(block, HNBlock):
                raise ValidationError(f"expected HNBlock, got {block!r}", f"blocks[{i}]")
        for i in range(1, len(blocks)):
            if not blocks[i].slope < blocks[i - 1].slope:
                raise ValidationError(
                    "slopes not strictly decreasing: "
                    f"{blocks[i - 1].slope} then {blocks[i].slope}",
                    f"blocks[{i}]",
                )

    @classmethod
    def from_pairs(cls, pairs) -> HNType:
        return cls(tuple(HNBlock(rank, degree) for rank, degree in pairs))

    def pairs(self) -> list[list[int]]:
        return [[b.rank, b.degree] for b in self.blocks]

    @property
    def rank(self) -> int:
        return sum(b.rank for b in self.blocks)

    @property
    def degree(self) -> int:
        return sum(b.degree for b in self.blocks)

    def cumulative_ranks(self) -> list[int]:
        """Ranks of ``E_0, E_1, ..., E_m``."""
        return [0, *itertools.accumulate(b.rank for b in self.blocks)]

    def cumulative_degrees(self) -> list[int]:
        return [0, *itertools.accumulate(b.degree for b in self.blocks)]


@dataclass(frozen=True)
class SplitBundle:
    """Exponents ``a_i`` of ``L^a_1 + ... + L^a_N``, stored as given.

    The multiset is kept in input order; :meth:`canonical` gives the
    sorted-descending form.  ``N >= 1`` here so that exterior powers of
    top degree (a single line bundle) are representable; the rank >= 2
    requirement of a Grassmann bundle is enforced where the Grassmannian is
    formed.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if not exps:
            raise ValidationError("a split bundle needs at least one exponent", "exponents")
        for i, a in enumerate(exps):
            _require_int(a, f"exponents[{i}]")

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def canonical(self) -> tuple[int, ...]:
        return tuple(sorted(self.exponents, reverse=True))

    def __eq__(self, other):
        if not isinstance(other, SplitBundle):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())


@dataclass(frozen=True)
class StrongHNData:
    """HN type of ``(F^delta)^* E`` in characteristic ``p``, with every
    subquotient strongly semistable.  ``delta`` is trusted input."""

    characteristic: int
    delta: int
    hn: HNType

    def __post_init__(self):
        _require_int(self.characteristic, "characteristic")
        _require_int(self.delta, "delta")
        if not is_prime(self.characteristic):
            raise ValidationError(
                f"characteristic must be prime, got {self.characteristic}", "characteristic"
            )
        if self.delta < 0:
            raise ValidationError(f"delta must be >= 0, got {self.delta}", "delta")
        if not isinstance(self.hn, HNType):
            raise ValidationError("expected an HNType", "hn")


@dataclass(frozen=True)
class CharZero:
    hn: HNType


@dataclass(frozen=True)
class Split:
    bundle: SplitBundle
    characteristic: int = 0

    def __post_init__(self):
        _require_int(self.characteristic, "characteristic")
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValidationError(
                f"characteristic must be 0 or prime, got {self.characteristic}",
                "characteristic",
            )


@dataclass(frozen=True)
class Strong:
    data: StrongHNData


BundleDescriptor = Union[CharZero, Split, Strong]


def hn_of_split(e: SplitBundle) -> HNType:
    """HN filtration of a split bundle: equal exponents grouped, descending."""
    blocks = []
    for a, group in itertools.groupby(e.canonical()):
        mult = len(list(group))
        blocks.append(HNBlock(mult, mult * a))
    return HNType(tuple(blocks))


def _check_r(r, upper, what="r"):
    if isinstance(r, bool) or not isinstance(r, int):
        raise RangeError(f"{what} must be an integer, got {r!r}")
    if not 1 <= r <= upper:
        raise RangeError(f"{what} = {r} out of range 1..{upper}")


def lambda_char0(hn: HNType, r: int) -> Fraction:
    """``deg E_{l-1} + (r - rk E_{l-1}) * mu(E_l / E_{l-1})``.

    ``l`` is the unique block with ``rk E_{l-1} < r <= rk E_l``.  Accepts
    ``r`` up to the full rank, where the value is ``deg E``.
    """
    _check_r(r, hn.rank)
    ranks = hn.cumulative_ranks()
    degrees = hn.cumulative_degrees()
    for ell in range(1, len(ranks)):
        if ranks[ell - 1] < r <= ranks[ell]:
            block = hn.blocks[ell - 1]
            return degrees[ell - 1] + (r - ranks[ell - 1]) * block.slope
    raise AssertionError("unreachable: r within total rank")


def lambda_strong(d: StrongHNData, r: int) -> Fraction:
    return lambda_char0(d.hn, r) / d.characteristic**d.delta


def bundle_rank(b: BundleDescriptor) -> int:
    if isinstance(b, CharZero):
        return b.hn.rank
    if isinstance(b, Split):
        return b.bundle.rank
    if isinstance(b, Strong):
        return b.data.hn.rank
    raise TypeError(f"not a bundle descriptor: {b!r}")


def bundle_lambda(b: BundleDescriptor, r: int) -> Fraction:
    """The lambda invariant for whichever presentation ``b`` is.

    Split bundles need no Frobenius stabilization (each isotypic block is
    strongly semistable), so they use the characteristic-zero formula in
    every characteristic.
    """
    if isinstance(b, CharZero):
        return lambda_char0(b.hn, r)
    if isinstance(b, Split):
        return lambda_char0(hn_of_split(b.bundle), r)
    if isinstance(b, Strong):
        return lambda_strong(b.data, r)
    raise TypeError(f"not a bundle descriptor: {b!r}")


def frobenius_split(e: SplitBundle, p: int, j: int) -> SplitBundle:
    """``(F^j)^* e``: each exponent scaled by ``p**j``."""
    if not is_prime(p):
        raise ValidationError(f"characteristic must be prime, got {p}", "characteristic")
    if j < 0:
        raise RangeError(f"j = {j} must be >= 0")
    q = p**j
    return SplitBundle(tuple(a * q for a in e.exponents))


def shift_strong(d: StrongHNData, j: int) -> StrongHNData:
    """Pull the stabilized filtration back ``j`` more times."""
    if j < 0:
        raise RangeError(f"j = {j} must be >= 0")
    q = d.characteristic**j
    hn = HNType(tuple(HNBlock(b.rank, b.degree * q) for b in d.hn.blocks))
    return StrongHNData(d.characteristic, d.delta + j, hn)


def dual_split(e: SplitBundle) -> SplitBundle:
    return SplitBundle(tuple(-a for a in e.exponents))


def exterior_power_split(e: SplitBundle, r: int) -> SplitBundle:
    """``wedge^r e``: one exponent per r-subset, in combination order."""
    _check_r(r, e.rank)
    return SplitBundle(tuple(sum(s) for s in itertools.combinations(e.exponents, r)))
