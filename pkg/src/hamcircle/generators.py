"""Ground-truth datasets: projective spaces with linear circle actions,
products of those, and single-edit mutations for negative testing."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence, Union

from .canonical import CanonicalBasis, verify_canonical
from .classes import ClassRestrictions
from .fixed_points import BettiProfile, FixedPoint, FixedPointSet, normalize_moment

Generated = tuple[FixedPointSet, CanonicalBasis]


class CollisionError(ValueError):
    """Product data is degenerate for the chosen weights; perturb them."""


@dataclass(frozen=True)
class CpnSpec:
    n: int
    action_weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "action_weights", tuple(int(a) for a in self.action_weights))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if len(self.action_weights) != self.n + 1:
            raise ValueError(f"need {self.n + 1} action weights, got {len(self.action_weights)}")
        a = self.action_weights
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError(f"action weights must be strictly increasing: {a}")

    @classmethod
    def standard(cls, n: int) -> CpnSpec:
        return cls(n, tuple(range(n + 1)))


def gen_cpn(spec: Union[CpnSpec, int], weights: Sequence[int] | None = None) -> Generated:
    """``CP^n`` with the circle acting by ``a_0, ..., a_n`` on homogeneous
    coordinates.

    Point ``p_i`` has weights ``a_j - a_i`` and moment ``a_i - a_n``. The
    canonical class ``alpha_k`` restricts to
    ``(-1)^k prod_{l<k} (a_j - a_l) u^k`` at ``p_j``; the sign makes the value
    at ``p_k`` the product of its negative weights.
    """
    if not isinstance(spec, CpnSpec):
        spec = CpnSpec(spec, tuple(weights) if weights is not None else tuple(range(spec + 1)))
    a = spec.action_weights
    n = spec.n
    labels = [f"p{i}" for i in range(n + 1)]
    points = [
        FixedPoint(labels[i], Fraction(a[i] - a[n]), tuple(a[j] - a[i] for j in range(n + 1) if j != i))
        for i in range(n + 1)
    ]
    fps = FixedPointSet(n, tuple(points))
    classes = {}
    for k in range(n + 1):
        coeffs = {
            labels[j]: (-1) ** k * math.prod(a[j] - a[l] for l in range(k)) if j >= k else 0
            for j in range(n + 1)
        }
        classes[labels[k]] = ClassRestrictions.from_coefficients(2 * k, coeffs)
    return fps, CanonicalBasis(classes)


def gen_product(left: Generated, right: Generated) -> Generated:
    """Diagonal circle on a product: weights concatenate, moments add,
    canonical classes multiply as tensors. The result is re-verified."""
    lf, lb = left
    rf, rb = right
    points = []
    for p in lf.points:
        for q in rf.points:
            weights = p.weights + q.weights
            if any(w == 0 for w in weights):
                raise CollisionError(f"zero weight at {p.label}.{q.label}")
            points.append(FixedPoint(f"{p.label}.{q.label}", p.moment + q.moment, weights))
    fps = normalize_moment(FixedPointSet(lf.half_dim + rf.half_dim, tuple(points)))
    classes = {}
    for p in lf.points:
        for q in rf.points:
            a, b = lb[p.label], rb[q.label]
            coeffs = {
                f"{x}.{y}": a.coefficient(x) * b.coefficient(y)
                for x in lf.labels
                for y in rf.labels
            }
            classes[f"{p.label}.{q.label}"] = ClassRestrictions.from_coefficients(a.degree + b.degree, coeffs)
    basis = CanonicalBasis(classes)
    cert = verify_canonical(fps, basis)
    if not cert.passed:
        raise CollisionError(f"product classes fail verification: {cert.message}")
    return fps, basis


@dataclass(frozen=True)
class NegateWeight:
    label: str
    slot: int

    def describe(self) -> str:
        return f"negate-weight({self.label}, {self.slot})"


@dataclass(frozen=True)
class ShiftMoment:
    label: str
    delta: Fraction

    def describe(self) -> str:
        return f"shift-moment({self.label}, {self.delta})"


@dataclass(frozen=True)
class DropPoint:
    label: str

    def describe(self) -> str:
        return f"drop-point({self.label})"


Edit = Union[NegateWeight, ShiftMoment, DropPoint]


def mutate(fps: FixedPointSet, edit: Edit) -> FixedPointSet:
    """Apply one edit and return the copy. Nothing is validated."""
    if edit.label not in fps.labels:
        raise ValueError(f"unknown label {edit.label!r}")
    if isinstance(edit, DropPoint):
        return fps.with_points(p for p in fps.points if p.label != edit.label)
    out = []
    for p in fps.points:
        if p.label == edit.label:
            if isinstance(edit, NegateWeight):
                if not 0 <= edit.slot < len(p.weights):
                    raise ValueError(f"unknown weight slot {edit.slot} at {p.label}")
                w = list(p.weights)
                w[edit.slot] = -w[edit.slot]
                p = replace(p, weights=tuple(w))
            elif isinstance(edit, ShiftMoment):
                p = replace(p, moment=p.moment + Fraction(edit.delta))
            else:
                raise TypeError(f"unsupported edit {edit!r}")
        out.append(p)
    return fps.with_points(out)


def single_edit_mutations(fps: FixedPointSet, shift: Fraction = Fraction(1, 2)) -> list[Edit]:
    """Every weight negation, every ``+-shift`` of an interior moment, every drop."""
    edits: list[Edit] = []
    for p in fps.points:
        edits.extend(NegateWeight(p.label, s) for s in range(len(p.weights)))
    interior = [p for p in fps.points if any(w < 0 for w in p.weights) and any(w > 0 for w in p.weights)]
    for p in interior:
        edits.append(ShiftMoment(p.label, shift))
        edits.append(ShiftMoment(p.label, -shift))
    edits.extend(DropPoint(p.label) for p in fps.points)
    return edits


def random_unimodal_profile(rng: random.Random, half_dim: int, max_step: int = 3) -> BettiProfile:
    """Symmetric profile with ``b_0 = 1``, nondecreasing up to the middle."""
    first = [1]
    for _ in range(half_dim // 2):
        first.append(first[-1] + rng.randint(0, max_step))
    tail = first[: (half_dim + 1) // 2][::-1]
    return BettiProfile(tuple(first + tail))


def random_symmetric_profile(rng: random.Random, half_dim: int, max_value: int = 6) -> BettiProfile:
    """Symmetric profile with ``b_0 = 1`` and otherwise arbitrary entries."""
    first = [1] + [rng.randint(0, max_value) for _ in range(half_dim // 2)]
    tail = first[: (half_dim + 1) // 2][::-1]
    return BettiProfile(tuple(first + tail))
