"""Effectivity certificates for the boundary ray of the pseudo-effective cone.

Given a cover ``Phi: Y -> X`` on which ``(F^delta)^* E`` pulls back to a sum of
powers of one line bundle ``LL`` (of degree ``l_degree`` on ``Y``), the line
bundle ``LL~`` built from the top of the pulled-back HN filtration is a summand
of ``wedge^r``, which gives a nonzero section of ``O(1) (x) LL~^*`` upstairs.
Its class is the pullback of ``eta - lambda f``.  The certificate records the
numbers behind each step so they can be rechecked independently.

Cover models are input data.  They are checked for consistency with the HN
data, never constructed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .bundle import SplitBundle, StrongHNData, _check_r, _require_int, lambda_strong
from .cone import NSClass, pullback_class
from .errors import GrassconeError, ValidationError
from .oracle import max_subset_sum

__all__ = [
    "CoverModel",
    "CertificateChecks",
    "EffectivityCertificate",
    "check_cover",
    "build_certificate",
    "verify_certificate",
]


@dataclass(frozen=True)
class CoverModel:
    cover_degree: int
    l_degree: int
    exponents: SplitBundle

    def __post_init__(self):
        _require_int(self.cover_degree, "cover_degree")
        _require_int(self.l_degree, "l_degree")
        if self.cover_degree < 1:
            raise ValidationError(f"must be >= 1, got {self.cover_degree}", "cover_degree")
        if self.l_degree < 1:
            # a negative degree is handled by dualizing LL and negating the exponents
            raise ValidationError(f"must be >= 1, got {self.l_degree}", "l_degree")
        if not isinstance(self.exponents, SplitBundle):
            object.__setattr__(self, "exponents", SplitBundle(tuple(self.exponents)))


@dataclass(frozen=True)
class CertificateChecks:
    summand_ok: bool
    degree_identity_ok: bool
    pullback_identity_ok: bool

    def all(self) -> bool:
        return self.summand_ok and self.degree_identity_ok and self.pullback_identity_ok


@dataclass(frozen=True)
class EffectivityCertificate:
    r: int
    ell: int
    n: int
    selected_exponents: tuple[int, ...]
    tilde_l_degree: int
    total_map_degree: int
    checks: CertificateChecks

    def __post_init__(self):
        object.__setattr__(self, "selected_exponents", tuple(self.selected_exponents))


def check_cover(d: StrongHNData, cm: CoverModel) -> list[list[int]]:
    """Validate ``cm`` against ``d`` and return the exponents cut into HN blocks.

    Within a block the exponents must agree, and the block exponent ``a``
    must match the block slope: ``l_degree * a == cover_degree * mu``.
    """
    exps = cm.exponents.canonical()
    if len(exps) != d.hn.rank:
        raise ValidationError(
            f"cover has {len(exps)} exponents but the bundle has rank {d.hn.rank}", "exponents"
        )
    ranks = d.hn.cumulative_ranks()
    groups = []
    for i, block in enumerate(d.hn.blocks):
        group = list(exps[ranks[i]:ranks[i + 1]])
        if len(set(group)) != 1:
            raise ValidationError(
                f"exponents {group} of HN block {i + 1} are not all equal", f"blocks[{i}]"
            )
        if cm.l_degree * group[0] != cm.cover_degree * block.slope:
            raise ValidationError(
                f"HN block {i + 1}: slope mismatch, l_degree*a = {cm.l_degree * group[0]} "
                f"but cover_degree*mu = {cm.cover_degree * block.slope}",
                f"blocks[{i}]",
            )
        groups.append(group)
    return groups


def build_certificate(d: StrongHNData, cm: CoverModel, r: int) -> EffectivityCertificate:
    groups = check_cover(d, cm)
    n_total = d.hn.rank
    _check_r(r, n_total - 1)

    ranks = d.hn.cumulative_ranks()
    ell = next(i for i in range(1, len(ranks)) if ranks[i - 1] < r <= ranks[i])
    n = ranks[ell - 1]
    # sigma lists blocks 1..m in order; lowest indices first inside a block
    top = [a for group in groups[:ell - 1] for a in group]
    selected = tuple(top + [groups[ell - 1][0]] * (r - n))

    e = cm.l_degree
    tilde = e * sum(selected)
    total_degree = d.characteristic**d.delta * cm.cover_degree
    lam = lambda_strong(d, r)

    is_submultiset = not (Counter(selected) - Counter(cm.exponents.exponents))
    summand_ok = (
        len(selected) == r
        and is_submultiset
        and tilde == e * sum(selected)
        and sum(selected) == max_subset_sum(cm.exponents, r)
    )
    degree_identity_ok = Fraction(tilde) == lam * total_degree
    pullback_identity_ok = pullback_class(NSClass(1, -lam), total_degree) == NSClass(1, -tilde)

    return EffectivityCertificate(
        r=r,
        ell=ell,
        n=n,
        selected_exponents=selected,
        tilde_l_degree=tilde,
        total_map_degree=total_degree,
        checks=CertificateChecks(summand_ok, degree_identity_ok, pullback_identity_ok),
    )


def verify_certificate(cert: EffectivityCertificate, d: StrongHNData, cm: CoverModel) -> bool:
    """Rebuild from scratch and compare every field."""
    try:
        rebuilt = build_certificate(d, cm, cert.r)
    except GrassconeError:
        return False
    return rebuilt == cert and rebuilt.checks.all()
