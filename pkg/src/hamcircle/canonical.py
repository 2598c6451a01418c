"""Canonical classes: verification of their defining axioms and the
degree slices they span as a module over ``Q[u]``.

Canonical classes are only ever verified here. Fixed-point data alone does
not determine the restrictions of ``alpha_p`` at unrelated points, so there
is nothing to construct without extra input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .algebra import is_nonsingular
from .certificate import Certificate, PreconditionError, failed, passed
from .classes import ClassRestrictions
from .fixed_points import FixedPointSet
from .localization import pairing_matrix


@dataclass(frozen=True, eq=False)
class CanonicalBasis:
    classes: Mapping[str, ClassRestrictions]

    def __post_init__(self):
        object.__setattr__(self, "classes", dict(self.classes))

    def __getitem__(self, label: str) -> ClassRestrictions:
        return self.classes[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalBasis):
            return NotImplemented
        return self.classes == other.classes


def leading_value(fps: FixedPointSet, label: str) -> Fraction:
    """Required ``alpha_p|_p`` coefficient: product of the negative weights (1 if none)."""
    return Fraction(math.prod(fps.point(label).negative_weights))


def must_vanish(fps: FixedPointSet, p_label: str, q_label: str) -> bool:
    """Whether ``alpha_p|_q`` is forced to be zero.

    Applied literally: ``q != p`` and either ``H(q) <= H(p)`` or
    ``index(q) <= index(p)``. Ties in moment value therefore force vanishing.
    """
    if p_label == q_label:
        return False
    p, q = fps.point(p_label), fps.point(q_label)
    return q.moment <= p.moment or q.index <= p.index


def _omega_coefficients(fps: FixedPointSet) -> dict[str, Fraction]:
    top = max(p.moment for p in fps.points)
    return {p.label: top - p.moment for p in fps.points}


def _vanishing_tests(fps, basis, p_label, include_partners):
    """Test classes ``beta`` with ``deg alpha_p + deg beta`` below top degree,
    as ``(name, {label: beta|_x coefficient})``."""
    n = fps.half_dim
    k = basis[p_label].u_degree
    h = _omega_coefficients(fps)
    tests = []
    for j in range(n - k):
        tests.append((f"omega^{j}", {x: h[x] ** j for x in fps.labels}))
    if include_partners:
        for q_label, beta in basis.classes.items():
            if q_label == p_label:
                continue
            for j in range(n - k - beta.u_degree):
                coeffs = beta.coefficients()
                tests.append((f"{q_label}*omega^{j}", {x: coeffs[x] * h[x] ** j for x in fps.labels}))
    return tests


def _residues(fps, coeffs, tests):
    euler = {p.label: p.euler for p in fps.points}
    return [
        sum((coeffs[x] * beta[x] / euler[x] for x in fps.labels), Fraction(0))
        for _, beta in tests
    ]


def _pinpoint(fps, basis, p_label):
    """Find the single restriction of ``alpha_p`` whose change explains every
    localization residue, if exactly one does."""
    alpha = basis[p_label]
    coeffs = alpha.coefficients()
    tests = _vanishing_tests(fps, basis, p_label, include_partners=True)
    r = _residues(fps, coeffs, tests)
    euler = {p.label: p.euler for p in fps.points}
    candidates = []
    for x in alpha.support():
        if x == p_label:
            continue
        v = [Fraction(beta[x], euler[x]) for _, beta in tests]
        i = next((i for i, vi in enumerate(v) if vi != 0), None)
        if i is None:
            continue
        delta = r[i] / v[i]
        if delta != 0 and all(ri == delta * vi for ri, vi in zip(r, v)):
            candidates.append((x, coeffs[x] - delta))
    return candidates


def verify_canonical(
    fps: FixedPointSet, basis: CanonicalBasis, strict_integral: bool = False
) -> Certificate:
    """Check every canonical-class condition, reporting the first violation as
    ``(p, q, axiom)``.

    Axioms, in the order checked: ``degree`` (one class per point, degree =
    index), ``leading`` and ``vanishing`` (the two defining conditions),
    ``integrality`` (only with ``strict_integral``), ``localization``
    (integrals of ``alpha_p * omega^j`` below top degree vanish),
    ``pairing-localization`` (same for ``alpha_p * alpha_q * omega^j``) and
    ``basis`` (the pairing matrix is nonsingular).
    """
    name = "canonical"
    labels = fps.labels
    if set(basis.classes) != set(labels):
        diff = sorted(set(basis.classes) ^ set(labels))
        return failed(name, f"basis and fixed points disagree at {diff}", p=diff[0], q=None, axiom="degree")
    for p in fps.points:
        alpha = basis[p.label]
        if set(alpha.labels) != set(labels):
            diff = sorted(set(alpha.labels) ^ set(labels))
            return failed(name, f"class {p.label} is not defined on {diff}", p=p.label, q=diff[0], axiom="degree")
        if alpha.degree != p.index:
            return failed(
                name,
                f"class {p.label} has degree {alpha.degree}, index is {p.index}",
                p=p.label, q=p.label, axiom="degree",
            )

    for p in fps.points:
        alpha = basis[p.label]
        want = leading_value(fps, p.label)
        got = alpha.coefficient(p.label)
        if got != want:
            return failed(
                name,
                f"{p.label}|{p.label} = {got}, expected product of negative weights {want}",
                p=p.label, q=p.label, axiom="leading", expected=want, found=got,
            )
        for q in fps.points:
            if must_vanish(fps, p.label, q.label) and alpha.coefficient(q.label) != 0:
                return failed(
                    name,
                    f"{p.label}|{q.label} = {alpha.coefficient(q.label)} must vanish",
                    p=p.label, q=q.label, axiom="vanishing", found=alpha.coefficient(q.label),
                )

    if strict_integral:
        for p in fps.points:
            for q_label, c in basis[p.label].coefficients().items():
                if c.denominator != 1:
                    return failed(
                        name, f"{p.label}|{q_label} = {c} is not an integer",
                        p=p.label, q=q_label, axiom="integrality", found=c,
                    )

    for p in fps.points:
        coeffs = basis[p.label].coefficients()
        tests = _vanishing_tests(fps, basis, p.label, include_partners=False)
        for (test, _), value in zip(tests, _residues(fps, coeffs, tests)):
            if value != 0:
                candidates = _pinpoint(fps, basis, p.label)
                q = candidates[0][0] if len(candidates) == 1 else None
                witness = dict(
                    p=p.label, q=q, axiom="localization", test=test, value=value,
                    candidates=[c for c, _ in candidates],
                )
                if q is not None:
                    witness["consistent_value"] = candidates[0][1]
                return failed(name, f"integral of {p.label}*{test} is {value}, must be 0", **witness)

    order = list(labels)
    for i, a in enumerate(order):
        ca = basis[a].coefficients()
        for b in order[i:]:
            cb = basis[b].coefficients()
            prod = {x: ca[x] * cb[x] for x in labels}
            h = _omega_coefficients(fps)
            for j in range(fps.half_dim - basis[a].u_degree - basis[b].u_degree):
                beta = {x: h[x] ** j for x in labels}
                value = _residues(fps, prod, [("", beta)])[0]
                if value != 0:
                    return failed(
                        name, f"integral of {a}*{b}*omega^{j} is {value}, must be 0",
                        p=a, q=b, axiom="pairing-localization", j=j, value=value,
                    )

    gram = pairing_matrix(fps, [basis[lab] for lab in labels])
    if not is_nonsingular(gram):
        return failed(name, "pairing matrix is singular", p=None, q=None, axiom="basis", pairing=gram)
    return passed(name, f"{len(labels)} canonical classes verified", classes=len(labels))


def degree_slice_terms(fps: FixedPointSet, d: int) -> list[tuple[str, int]]:
    """``(label, m)`` for each ``alpha_p * u^m`` spanning degree ``d``."""
    if d % 2:
        raise ValueError(f"degree slice requires an even degree, got {d}")
    if d < 0:
        raise ValueError(f"degree slice requires a nonnegative degree, got {d}")
    return [(p.label, (d - p.index) // 2) for p in fps.points if p.index <= d]


def degree_slice(fps: FixedPointSet, basis: CanonicalBasis, d: int) -> list[ClassRestrictions]:
    """Rational basis of the degree-``d`` part: ``alpha_p u^((d - index p)/2)``
    for every point of index at most ``d``."""
    return [basis[label].times_u(m) for label, m in degree_slice_terms(fps, d)]


def require_basis(fps: FixedPointSet, basis: CanonicalBasis) -> None:
    cert = verify_canonical(fps, basis)
    if not cert.passed:
        raise PreconditionError(f"canonical basis rejected: {cert.message}", cert.witness.get("p"))
