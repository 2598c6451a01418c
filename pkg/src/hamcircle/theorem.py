"""Betti-number inequality, unimodality, and a step-by-step replay of the
kernel argument behind the inequality.

Write ``2N`` for the dimension and assume ``N`` is even. The restriction map
from the degree ``N - 2`` part of equivariant cohomology to the fixed points
of index ``0 mod 4`` (below the top) is called ``Phi`` here. A kernel element
``alpha`` has ``int alpha^2 omega_H = 0`` by degree, while localization writes
that integral as a sum over index ``2 mod 4`` points of terms that all have
the same sign. So every term vanishes, ``alpha`` is supported at the maximum
only, and then ``int alpha`` cannot vanish. Hence ``Phi`` is injective on
genuine data, and counting dimensions gives the inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .algebra import RatMatrix, nullspace
from .canonical import CanonicalBasis, degree_slice, degree_slice_terms
from .certificate import NOT_COVERED, Certificate, PreconditionError, failed, passed
from .classes import ClassRestrictions
from .fixed_points import BettiProfile, FixedPointSet, betti, normalize_moment, validate
from .localization import integrate

CONSISTENT = "CONSISTENT"
CONTRADICTION = "CONTRADICTION"


def inequality_sums(profile: BettiProfile) -> tuple[list[int], list[int]]:
    """Degrees summed on each side: ``2 mod 4`` in ``[2, N-2]`` on the left,
    ``0 mod 4`` in ``[4, N]`` on the right."""
    n = profile.half_dim
    left = [i for i in range(2, n - 1) if i % 4 == 2]
    right = [i for i in range(4, n + 1) if i % 4 == 0]
    return left, right


def check_inequality(profile: BettiProfile) -> Certificate:
    n = profile.half_dim
    if (2 * n) % 4:
        return Certificate(
            "inequality", NOT_COVERED, f"dimension {2 * n} is not divisible by 4", {"dimension": 2 * n}
        )
    left_deg, right_deg = inequality_sums(profile)
    left = sum(profile.b(i) for i in left_deg)
    right = sum(profile.b(i) for i in right_deg)
    witness = dict(dimension=2 * n, left=left, right=right, left_degrees=left_deg, right_degrees=right_deg)
    text = f"{' + '.join(f'b_{i}' for i in left_deg) or '0'} = {left}, {' + '.join(f'b_{i}' for i in right_deg) or '0'} = {right}"
    if left <= right:
        return passed("inequality", f"{left} <= {right} ({text})", **witness)
    return failed("inequality", f"{left} > {right} ({text})", **witness)


def check_unimodality(profile: BettiProfile) -> Certificate:
    v = profile.values
    for i in range(profile.half_dim // 2):
        if v[i] > v[i + 1]:
            return failed(
                "unimodality",
                f"b_{2 * i} = {v[i]} > b_{2 * i + 2} = {v[i + 1]}",
                i=i, betti=list(v),
            )
    return passed("unimodality", f"betti {list(v)} is unimodal", betti=list(v))


@dataclass(frozen=True)
class PhiMap:
    half_dim: int
    domain_terms: tuple[tuple[str, int], ...]
    domain_basis: tuple[ClassRestrictions, ...]
    target_labels: tuple[str, ...]
    matrix: RatMatrix

    def to_dict(self) -> dict[str, Any]:
        return {
            "domain": [f"u^{m}*{lab}" if m else lab for lab, m in self.domain_terms],
            "targets": list(self.target_labels),
            "matrix": [[str(x) for x in row] for row in self.matrix.entries],
        }


def phi_targets(fps: FixedPointSet) -> list[str]:
    top = 2 * fps.half_dim
    return [p.label for p in fps.points if p.index % 4 == 0 and p.index < top]


def build_phi(fps: FixedPointSet, basis: CanonicalBasis) -> PhiMap:
    """One row per degree ``N - 2`` slice class, one column per target point;
    each entry is the coefficient of ``u^((N-2)/2)`` in the restriction."""
    n = fps.half_dim
    if n % 2:
        raise PreconditionError(f"Phi needs an even half-dimension, got {n}")
    terms = degree_slice_terms(fps, n - 2)
    domain = degree_slice(fps, basis, n - 2)
    targets = phi_targets(fps)
    rows = [[cls.coefficient(t) for t in targets] for cls in domain]
    return PhiMap(n, tuple(terms), tuple(domain), tuple(targets), RatMatrix.from_rows(rows, cols=len(targets)))


def phi_kernel(phi: PhiMap) -> list[ClassRestrictions]:
    if not phi.domain_basis:
        return []
    out = []
    # the map sends coefficient vectors v to v^T M, so its kernel is null(M^T)
    for v in nullspace(phi.matrix.transpose()):
        total = None
        for c, cls in zip(v, phi.domain_basis):
            term = cls.scale(c)
            total = term if total is None else total + term
        out.append(total)
    return out


@dataclass(frozen=True)
class SignCertificate:
    per_point: Mapping[str, Fraction]
    total: Fraction
    uniform: bool
    sign: int
    any_nonzero: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "per_point": {k: str(v) for k, v in self.per_point.items()},
            "total": str(self.total),
            "uniform_sign": self.uniform,
            "sign": self.sign,
            "any_nonzero": self.any_nonzero,
        }


def sign_certificate(fps: FixedPointSet, cls: ClassRestrictions) -> SignCertificate:
    """``u^-1`` coefficients of ``int alpha^2 omega_H`` at the index ``2 mod 4``
    points: ``-c_p^2 H(p) / Lambda_p``.

    ``cls`` may be any tuple of degree ``N - 2`` vanishing at the index
    ``0 mod 4`` points below the top, genuine class or not.
    """
    n = fps.half_dim
    top = max(p.moment for p in fps.points)
    if top != 0:
        label = next(p.label for p in fps.points if p.moment == top)
        raise PreconditionError(f"moment map not normalized: maximum {top} at {label}", label)
    if cls.degree != n - 2:
        raise PreconditionError(f"class has degree {cls.degree}, expected {n - 2}")
    if set(cls.labels) != set(fps.labels):
        diff = sorted(set(cls.labels) ^ set(fps.labels))
        raise PreconditionError(f"class and fixed-point labels differ at {diff}", diff[0])
    for label in phi_targets(fps):
        if cls.coefficient(label) != 0:
            raise PreconditionError(f"class does not vanish at {label} (index 0 mod 4)", label)
    per_point = {}
    for p in fps.points:
        if p.index % 4 == 2:
            c = cls.coefficient(p.label)
            per_point[p.label] = -c * c * p.moment / p.euler
    total = sum(per_point.values(), Fraction(0))
    values = list(per_point.values())
    uniform = all(x >= 0 for x in values) or all(x <= 0 for x in values)
    nonzero = [x for x in values if x != 0]
    sign = 0
    if nonzero and uniform:
        sign = 1 if nonzero[0] > 0 else -1
    return SignCertificate(per_point, total, uniform, sign, bool(nonzero))


def dimension_count(fps: FixedPointSet) -> dict[str, Any]:
    """Compare the dimension of the degree ``N - 2`` slice with the number of
    Phi targets. The target count is also rewritten through Poincare duality
    (``b_i = b_(2N-i)``) the way the counting argument uses it."""
    profile = betti(fps)
    n = fps.half_dim
    domain_dim = sum(profile.b(i) for i in range(0, n - 1, 2))
    target_dim = sum(profile.b(i) for i in range(0, 2 * n, 4))
    dual_dim = sum(profile.b(i) for i in range(0, n, 4)) + sum(
        profile.b(2 * n - i) for i in range(0, 2 * n, 4) if i >= n
    )
    return {
        "domain_dim": domain_dim,
        "target_dim": target_dim,
        "target_dim_via_duality": dual_dim,
        "forces_kernel": domain_dim > target_dim,
    }


def _judge_kernel_element(fps: FixedPointSet, alpha: ClassRestrictions) -> dict[str, Any]:
    cert = sign_certificate(fps, alpha)
    entry: dict[str, Any] = {
        "restrictions": {lab: alpha.coefficient(lab) for lab in fps.labels},
        "certificate": cert,
    }
    if cert.total != 0:
        entry["reason"] = "localization-identity"
        entry["detail"] = f"int alpha^2 omega_H has u^-1 coefficient {cert.total}, must be 0"
        return entry
    if cert.any_nonzero:
        entry["reason"] = "sign-law"
        entry["detail"] = "summands of mixed sign; data violates the uniform-sign law"
        return entry
    support = alpha.support()
    top = fps.maximum.label
    if not support:
        entry["reason"] = "injectivity"
        entry["detail"] = "nonzero combination of basis classes restricts to zero everywhere"
        return entry
    residue = integrate(fps, alpha).negative_part()
    entry["reason"] = "top-point-integral"
    entry["detail"] = f"alpha is supported at {support}; int alpha = {residue}, must be 0"
    entry["integral"] = residue
    if support != [top] and not residue:
        entry["reason"] = "degenerate-moments"
        entry["detail"] = f"alpha supported at {support} with vanishing moment terms"
    return entry


def replay_proof(fps: FixedPointSet, basis: CanonicalBasis) -> Certificate:
    """Run the kernel argument on concrete data.

    Verdict CONSISTENT: Phi is injective. Verdict CONTRADICTION: some kernel
    element breaks a localization identity, so the data cannot come from a
    closed Hamiltonian circle manifold. The basis is taken as given (verify
    it separately) so fabricated restriction data can be probed.
    """
    cert = validate(fps)
    if not cert.passed:
        raise PreconditionError(f"fixed-point data invalid: {cert.message}", cert.witness.get("label"))
    profile = betti(fps)
    inequality = check_inequality(profile)
    if fps.half_dim % 2:
        return Certificate(
            "theorem", NOT_COVERED, f"dimension {2 * fps.half_dim} is not divisible by 4",
            {"verdict": "NOT_COVERED", "inequality": inequality},
        )
    fps = normalize_moment(fps)
    phi = build_phi(fps, basis)
    kernel = phi_kernel(phi)
    counts = dimension_count(fps)
    judged = [_judge_kernel_element(fps, alpha) for alpha in kernel]
    verdict = CONTRADICTION if judged else CONSISTENT
    witness = {
        "verdict": verdict,
        "inequality": inequality,
        "dimension_count": counts,
        "phi": phi,
        "kernel_dim": len(kernel),
        "kernel": judged,
    }
    if verdict == CONSISTENT:
        msg = f"Phi is injective; {inequality.message}"
        if inequality.passed:
            return passed("theorem", msg, **witness)
        return failed("theorem", msg, **witness)
    first = judged[0]
    msg = (
        f"data not realizable by a closed Hamiltonian S^1-manifold: "
        f"kernel of dimension {len(kernel)}, {first['reason']}: {first['detail']}"
    )
    return failed("theorem", msg, **witness)
