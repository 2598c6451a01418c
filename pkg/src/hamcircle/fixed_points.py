"""Fixed-point data of a Hamiltonian circle action: weights, moment values,
Morse indices, Betti numbers and the necessary conditions they must satisfy.

Construction is deliberately permissive (mutated or hand-written data must be
representable); :func:`validate` is where the rules are enforced.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .certificate import Certificate, PreconditionError, failed, passed


@dataclass(frozen=True)
class FixedPoint:
    label: str
    moment: Fraction
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moment", Fraction(self.moment))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @property
    def negative_weights(self) -> tuple[int, ...]:
        return tuple(w for w in self.weights if w < 0)

    @property
    def index(self) -> int:
        """Morse index of the moment map: twice the number of negative weights."""
        return 2 * len(self.negative_weights)

    @property
    def euler(self) -> int:
        """Product of all weights (the equivariant Euler class coefficient)."""
        return math.prod(self.weights)


@dataclass(frozen=True)
class FixedPointSet:
    half_dim: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.points)

    def point(self, label: str) -> FixedPoint:
        for p in self.points:
            if p.label == label:
                return p
        raise KeyError(label)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def maximum(self) -> FixedPoint:
        """The unique point with all weights negative."""
        tops = [p for p in self.points if p.weights and all(w < 0 for w in p.weights)]
        if len(tops) != 1:
            raise PreconditionError(f"expected exactly one all-negative point, found {len(tops)}")
        return tops[0]

    @property
    def minimum(self) -> FixedPoint:
        """The unique point with all weights positive."""
        bottoms = [p for p in self.points if p.weights and all(w > 0 for w in p.weights)]
        if len(bottoms) != 1:
            raise PreconditionError(f"expected exactly one all-positive point, found {len(bottoms)}")
        return bottoms[0]

    def is_normalized(self) -> bool:
        return max(p.moment for p in self.points) == 0

    def with_points(self, points: Iterable[FixedPoint]) -> FixedPointSet:
        return FixedPointSet(self.half_dim, tuple(points))


@dataclass(frozen=True)
class BettiProfile:
    """Even Betti numbers ``b_0, b_2, ..., b_2N``; odd ones vanish."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def half_dim(self) -> int:
        return len(self.values) - 1

    def b(self, degree: int) -> int:
        """Betti number in cohomological ``degree`` (zero when odd or out of range)."""
        if degree % 2 or degree < 0 or degree // 2 >= len(self.values):
            return 0
        return self.values[degree // 2]

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __len__(self) -> int:
        return len(self.values)


def betti(fps: FixedPointSet) -> BettiProfile:
    """``b_2k`` is the number of fixed points with exactly ``k`` negative weights."""
    counts = Counter(len(p.negative_weights) for p in fps.points)
    if counts and max(counts) > fps.half_dim:
        raise PreconditionError("a point has more negative weights than the half-dimension")
    return BettiProfile(tuple(counts.get(k, 0) for k in range(fps.half_dim + 1)))


def check_structure(fps: FixedPointSet) -> Certificate:
    name = "structure"
    if fps.half_dim < 1:
        return failed(name, f"half_dim must be positive, got {fps.half_dim}")
    if len(fps.points) < 2:
        return failed(name, "at least two fixed points are required")
    seen: set[str] = set()
    for p in fps.points:
        if p.label in seen:
            return failed(name, f"duplicate label {p.label}", label=p.label)
        seen.add(p.label)
    for p in fps.points:
        if len(p.weights) != fps.half_dim:
            return failed(
                name,
                f"{p.label} has {len(p.weights)} weights, expected {fps.half_dim}",
                label=p.label,
            )
        if any(w == 0 for w in p.weights):
            return failed(name, f"zero weight at {p.label} (fixed point not isolated)", label=p.label)
    tops = [p.label for p in fps.points if all(w < 0 for w in p.weights)]
    bottoms = [p.label for p in fps.points if all(w > 0 for w in p.weights)]
    if len(tops) != 1:
        return failed(name, f"expected exactly one all-negative point, found {len(tops)}", labels=tops)
    if len(bottoms) != 1:
        return failed(name, f"expected exactly one all-positive point, found {len(bottoms)}", labels=bottoms)
    return passed(name, f"{len(fps.points)} isolated fixed points, half_dim {fps.half_dim}", points=len(fps.points), half_dim=fps.half_dim)


def check_duality(fps: FixedPointSet) -> Certificate:
    profile = betti(fps)
    v = profile.values
    if v[0] != 1 or v[-1] != 1:
        return failed("duality", "b_0 and b_2N must both be 1", betti=list(v))
    for k in range(len(v)):
        if v[k] != v[-1 - k]:
            return failed(
                "duality",
                f"b_{2 * k} = {v[k]} differs from b_{2 * (len(v) - 1 - k)} = {v[-1 - k]}",
                betti=list(v),
                degree=2 * k,
            )
    return passed("duality", f"betti {list(v)} is symmetric", betti=list(v))


def check_extrema(fps: FixedPointSet) -> Certificate:
    top, bottom = fps.maximum, fps.minimum
    for p in fps.points:
        if p is not top and p.moment >= top.moment:
            return failed(
                "extrema",
                f"{p.label} has moment {p.moment} >= maximum {top.label} ({top.moment})",
                label=p.label,
                extremum=top.label,
            )
        if p is not bottom and p.moment <= bottom.moment:
            return failed(
                "extrema",
                f"{p.label} has moment {p.moment} <= minimum {bottom.label} ({bottom.moment})",
                label=p.label,
                extremum=bottom.label,
            )
    return passed("extrema", f"maximum {top.label}, minimum {bottom.label}", maximum=top.label, minimum=bottom.label)


def validate(fps: FixedPointSet) -> Certificate:
    """Structural rules, then Poincare duality, then strict extrema.

    Returns the first failing certificate, or a pass.
    """
    for check in (check_structure, check_duality, check_extrema):
        cert = check(fps)
        if not cert.passed:
            return Certificate("validate", cert.status, f"{cert.check}: {cert.message}", cert.witness)
    return passed("validate", "structure, duality and extrema hold", betti=list(betti(fps).values))


def normalize_moment(fps: FixedPointSet) -> FixedPointSet:
    """Shift all moment values so the maximum is 0."""
    top = max(p.moment for p in fps.points)
    if top == 0:
        return fps
    return fps.with_points(replace(p, moment=p.moment - top) for p in fps.points)


def relabel(fps: FixedPointSet, mapping: dict[str, str]) -> FixedPointSet:
    return fps.with_points(replace(p, label=mapping.get(p.label, p.label)) for p in fps.points)


def reorder(fps: FixedPointSet, order: Sequence[int]) -> FixedPointSet:
    return fps.with_points(fps.points[i] for i in order)
