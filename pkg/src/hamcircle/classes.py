"""Equivariant cohomology classes stored as their restrictions to the fixed
points, plus the equivariant extension of the symplectic form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .algebra import LaurentPoly, Scalar
from .certificate import PreconditionError
from .fixed_points import FixedPointSet


@dataclass(frozen=True, eq=False)
class ClassRestrictions:
    """A degree-``2k`` class given by ``alpha|_p = c_p * u^k`` at each point.

    Restrictions are kept in the order supplied (normally the fixed-point
    order) and must each be zero or homogeneous of ``u``-degree ``k``.
    """

    degree: int
    restrictions: Mapping[str, LaurentPoly]

    def __post_init__(self):
        if self.degree < 0 or self.degree % 2:
            raise ValueError(f"class degree must be a nonnegative even integer, got {self.degree}")
        k = self.degree // 2
        rs = dict(self.restrictions)
        for label, f in rs.items():
            if not isinstance(f, LaurentPoly):
                raise TypeError(f"restriction at {label} is not a LaurentPoly")
            if not f.is_monomial_of_degree(k):
                raise ValueError(f"restriction at {label} is not homogeneous of u-degree {k}: {f}")
        object.__setattr__(self, "restrictions", rs)

    @classmethod
    def from_coefficients(cls, degree: int, coeffs: Mapping[str, Scalar]) -> ClassRestrictions:
        k = degree // 2
        return cls(degree, {lab: LaurentPoly.monomial(c, k) for lab, c in coeffs.items()})

    @classmethod
    def constant(cls, labels: Sequence[str], value: Scalar = 1) -> ClassRestrictions:
        return cls.from_coefficients(0, {lab: value for lab in labels})

    @property
    def u_degree(self) -> int:
        return self.degree // 2

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.restrictions)

    def __getitem__(self, label: str) -> LaurentPoly:
        return self.restrictions[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self.restrictions)

    def coefficient(self, label: str) -> Fraction:
        return self.restrictions[label].coefficient(self.u_degree)

    def coefficients(self) -> dict[str, Fraction]:
        return {lab: self.coefficient(lab) for lab in self.restrictions}

    def support(self) -> list[str]:
        return [lab for lab, f in self.restrictions.items() if f]

    def is_zero(self) -> bool:
        return not self.support()

    def _check_labels(self, other: ClassRestrictions) -> None:
        if set(self.restrictions) != set(other.restrictions):
            missing = sorted(set(self.restrictions) ^ set(other.restrictions))
            raise PreconditionError(f"label sets differ at {missing}", missing[0])

    def times_u(self, m: int) -> ClassRestrictions:
        """Module action of ``u^m``."""
        if m < 0:
            raise ValueError("negative powers of u are not classes")
        return ClassRestrictions(self.degree + 2 * m, {lab: f.shift(m) for lab, f in self.restrictions.items()})

    def scale(self, c: Scalar) -> ClassRestrictions:
        return ClassRestrictions(self.degree, {lab: f * Fraction(c) for lab, f in self.restrictions.items()})

    def __add__(self, other: ClassRestrictions) -> ClassRestrictions:
        self._check_labels(other)
        if self.degree != other.degree:
            raise ValueError("cannot add classes of different degree")
        return ClassRestrictions(self.degree, {lab: f + other[lab] for lab, f in self.restrictions.items()})

    def __neg__(self) -> ClassRestrictions:
        return self.scale(-1)

    def __sub__(self, other: ClassRestrictions) -> ClassRestrictions:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ClassRestrictions):
            return class_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> ClassRestrictions:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = ClassRestrictions.constant(self.labels)
        for _ in range(n):
            out = class_mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassRestrictions):
            return NotImplemented
        return self.degree == other.degree and self.restrictions == other.restrictions

    def __repr__(self) -> str:
        body = ", ".join(f"{lab}: {f}" for lab, f in self.restrictions.items())
        return f"ClassRestrictions(degree={self.degree}, {{{body}}})"


def class_mul(a: ClassRestrictions, b: ClassRestrictions) -> ClassRestrictions:
    """Cup product: restriction to fixed points is a ring map, so multiply pointwise."""
    a._check_labels(b)
    return ClassRestrictions(a.degree + b.degree, {lab: f * b[lab] for lab, f in a.restrictions.items()})


def omega_class(fps: FixedPointSet) -> ClassRestrictions:
    """Equivariant symplectic class with restriction ``-H(p) u``.

    Requires moments normalized so the maximum is 0.
    """
    top = max(p.moment for p in fps.points)
    if top != 0:
        label = next(p.label for p in fps.points if p.moment == top)
        raise PreconditionError(f"moment map not normalized: maximum {top} at {label}", label)
    return ClassRestrictions.from_coefficients(2, {p.label: -p.moment for p in fps.points})
