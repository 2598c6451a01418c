"""Exact verification engine for Hamiltonian circle actions with isolated
fixed points: Betti numbers, localization, canonical classes, and the
Betti-number inequality in dimensions divisible by four."""

from .algebra import LaurentPoly, RatMatrix, coefficient, laurent_mul, nullspace, rank
from .canonical import CanonicalBasis, degree_slice, verify_canonical
from .certificate import Certificate, PreconditionError
from .classes import ClassRestrictions, class_mul, omega_class
from .dataset import Dataset, DatasetError, parse_dataset, serialize_dataset
from .fixed_points import BettiProfile, FixedPoint, FixedPointSet, betti, normalize_moment, validate
from .generators import CpnSpec, gen_cpn, gen_product, mutate
from .localization import LocalizationSum, integrate, pairing_matrix, residue_check
from .theorem import (
    PhiMap,
    SignCertificate,
    build_phi,
    check_inequality,
    check_unimodality,
    phi_kernel,
    replay_proof,
    sign_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BettiProfile",
    "CanonicalBasis",
    "Certificate",
    "ClassRestrictions",
    "CpnSpec",
    "Dataset",
    "DatasetError",
    "FixedPoint",
    "FixedPointSet",
    "LaurentPoly",
    "LocalizationSum",
    "PhiMap",
    "PreconditionError",
    "RatMatrix",
    "SignCertificate",
    "betti",
    "build_phi",
    "check_inequality",
    "check_unimodality",
    "class_mul",
    "coefficient",
    "degree_slice",
    "gen_cpn",
    "gen_product",
    "integrate",
    "laurent_mul",
    "mutate",
    "normalize_moment",
    "nullspace",
    "omega_class",
    "pairing_matrix",
    "parse_dataset",
    "phi_kernel",
    "rank",
    "replay_proof",
    "residue_check",
    "serialize_dataset",
    "sign_certificate",
    "validate",
    "verify_canonical",
]
