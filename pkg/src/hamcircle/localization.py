"""Pushforward to a point by fixed-point localization.

For isolated fixed points the integral of a class is the sum over fixed
points of ``alpha|_p / (Lambda_p u^N)`` with ``Lambda_p`` the product of the
weights at ``p``. The sum is computed exactly; any negative powers of ``u``
left over are kept, because for genuine classes they must cancel and a
nonzero residue is evidence that the input is not realizable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import LaurentPoly, RatMatrix
from .certificate import Certificate, PreconditionError, failed, passed
from .classes import ClassRestrictions
from .fixed_points import FixedPointSet


@dataclass(frozen=True)
class LocalizationSum:
    total: LaurentPoly
    per_point: Mapping[str, LaurentPoly]


def localization_sum(fps: FixedPointSet, cls: ClassRestrictions) -> LocalizationSum:
    if set(cls.labels) != set(fps.labels):
        extra = sorted(set(cls.labels) ^ set(fps.labels))
        raise PreconditionError(f"class and fixed-point labels differ at {extra}", extra[0])
    n = fps.half_dim
    per_point = {p.label: cls[p.label].shift(-n) / p.euler for p in fps.points}
    total = sum(per_point.values(), LaurentPoly())
    return LocalizationSum(total, per_point)


def integrate(fps: FixedPointSet, cls: ClassRestrictions) -> LaurentPoly:
    return localization_sum(fps, cls).total


def residue_check(fps: FixedPointSet) -> Certificate:
    """Check ``sum_p H(p)^k / Lambda_p == 0`` for ``k = 0 .. N-1``.

    These are the pushforwards of powers of the equivariant symplectic class
    below top degree. They are invariant under shifting the moment map, so no
    normalization is needed.
    """
    sums = []
    for k in range(fps.half_dim):
        s = sum((p.moment ** k / p.euler for p in fps.points), Fraction(0))
        sums.append(s)
        if s != 0:
            return failed("residues", f"k={k}: {s}", k=k, value=s, sums=sums)
    return passed("residues", f"sums vanish for k=0..{fps.half_dim - 1}", sums=sums)


def pairing_entry(fps: FixedPointSet, a: ClassRestrictions, b: ClassRestrictions) -> Fraction:
    n = fps.half_dim
    d = n - a.u_degree - b.u_degree
    if d < 0:
        return Fraction(0)
    return integrate(fps, (a * b).times_u(d)).coefficient(0)


def pairing_matrix(fps: FixedPointSet, classes: Sequence[ClassRestrictions]) -> RatMatrix:
    """Gram matrix of ``int alpha_i alpha_j u^d``, ``d`` completing to top degree.

    Entries where the product already exceeds top degree are 0 by convention.
    """
    rows = [[pairing_entry(fps, a, b) for b in classes] for a in classes]
    return RatMatrix.from_rows(rows, cols=len(classes))
