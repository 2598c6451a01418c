"""JSON dataset format.

::

    {"half_dim": 2,
     "points": [{"label": "p0", "moment": "-2", "weights": [1, 2]}, ...],
     "classes": [{"name": "p1", "degree": 2,
                  "restrictions": {"p0": "0", "p1": "-1", "p2": "-2"}}, ...]}

Rationals are strings (``"p/q"`` or integers). A class restriction is the
single coefficient of ``u^(degree/2)``. A class whose name is a fixed-point
label is read as that point's canonical class. Without ``"classes"`` the
dataset is in minimal mode.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any, Mapping

from .algebra import parse_rational
from .canonical import CanonicalBasis
from .classes import ClassRestrictions
from .fixed_points import FixedPoint, FixedPointSet


class DatasetError(ValueError):
    """Schema or content violation; the message starts with the JSON path."""


@dataclass(frozen=True, eq=False)
class Dataset:
    fixed_point_set: FixedPointSet
    classes: Mapping[str, ClassRestrictions] | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        mine = None if self.classes is None else dict(self.classes)
        theirs = None if other.classes is None else dict(other.classes)
        return self.fixed_point_set == other.fixed_point_set and mine == theirs

    @property
    def is_full(self) -> bool:
        return self.classes is not None

    def canonical_basis(self) -> CanonicalBasis | None:
        """Classes named after fixed points, or None if some point lacks one."""
        if self.classes is None:
            return None
        labels = self.fixed_point_set.labels
        if not all(lab in self.classes for lab in labels):
            return None
        return CanonicalBasis({lab: self.classes[lab] for lab in labels})

    @classmethod
    def from_generated(cls, fps: FixedPointSet, basis: CanonicalBasis) -> Dataset:
        return cls(fps, dict(basis.classes))


def _expect(cond: bool, path: str, msg: str) -> None:
    if not cond:
        raise DatasetError(f"{path}: {msg}")


def _int(value: Any, path: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), path, f"expected an integer, got {value!r}")
    return value


def _rational(value: Any, path: str):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise DatasetError(f"{path}: {exc}") from None


def dataset_from_obj(doc: Any) -> Dataset:
    _expect(isinstance(doc, dict), "$", "top level must be an object")
    unknown = set(doc) - {"half_dim", "points", "classes"}
    _expect(not unknown, "$", f"unknown keys {sorted(unknown)}")
    _expect("half_dim" in doc, "$", "missing 'half_dim'")
    _expect("points" in doc, "$", "missing 'points'")
    n = _int(doc["half_dim"], "$.half_dim")
    _expect(n >= 1, "$.half_dim", f"must be positive, got {n}")
    raw_points = doc["points"]
    _expect(isinstance(raw_points, list), "$.points", "expected a list")
    points = []
    seen: set[str] = set()
    for i, rp in enumerate(raw_points):
        path = f"$.points[{i}]"
        _expect(isinstance(rp, dict), path, "expected an object")
        _expect(set(rp) == {"label", "moment", "weights"}, path, "keys must be label, moment, weights")
        label = rp["label"]
        _expect(isinstance(label, str) and label != "", f"{path}.label", "expected a nonempty string")
        _expect(label not in seen, f"{path}.label", f"duplicate label {label}")
        seen.add(label)
        moment = _rational(rp["moment"], f"{path}.moment")
        ws = rp["weights"]
        _expect(isinstance(ws, list), f"{path}.weights", "expected a list")
        weights = [_int(w, f"{path}.weights[{j}]") for j, w in enumerate(ws)]
        _expect(
            len(weights) == n, f"{path}.weights",
            f"weight-count mismatch at {label}: {len(weights)} weights, half_dim {n}",
        )
        for j, w in enumerate(weights):
            _expect(w != 0, f"{path}.weights[{j}]", f"zero weight at {label}")
        points.append(FixedPoint(label, moment, tuple(weights)))
    fps = FixedPointSet(n, tuple(points))

    if "classes" not in doc:
        return Dataset(fps, None)
    raw_classes = doc["classes"]
    _expect(isinstance(raw_classes, list), "$.classes", "expected a list")
    classes: dict[str, ClassRestrictions] = {}
    for i, rc in enumerate(raw_classes):
        path = f"$.classes[{i}]"
        _expect(isinstance(rc, dict), path, "expected an object")
        _expect(set(rc) == {"name", "degree", "restrictions"}, path, "keys must be name, degree, restrictions")
        name = rc["name"]
        _expect(isinstance(name, str) and name != "", f"{path}.name", "expected a nonempty string")
        _expect(name not in classes, f"{path}.name", f"duplicate class name {name}")
        degree = _int(rc["degree"], f"{path}.degree")
        _expect(degree >= 0 and degree % 2 == 0, f"{path}.degree", f"must be a nonnegative even integer, got {degree}")
        rs = rc["restrictions"]
        _expect(isinstance(rs, dict), f"{path}.restrictions", "expected an object")
        for lab in rs:
            _expect(lab in seen, f"{path}.restrictions.{lab}", f"unknown label {lab}")
        for lab in fps.labels:
            _expect(lab in rs, f"{path}.restrictions", f"missing restriction at {lab}")
        coeffs = {lab: _rational(rs[lab], f"{path}.restrictions.{lab}") for lab in fps.labels}
        classes[name] = ClassRestrictions.from_coefficients(degree, coeffs)
    return Dataset(fps, classes)


def parse_dataset(text: str) -> Dataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"$: invalid JSON ({exc})") from None
    return dataset_from_obj(doc)


def dataset_to_obj(ds: Dataset) -> dict[str, Any]:
    fps = ds.fixed_point_set
    out: dict[str, Any] = {
        "half_dim": fps.half_dim,
        "points": [
            {"label": p.label, "moment": str(p.moment), "weights": list(p.weights)} for p in fps.points
        ],
    }
    if ds.classes is not None:
        out["classes"] = [
            {
                "name": name,
                "degree": cls.degree,
                "restrictions": {lab: str(cls.coefficient(lab)) for lab in fps.labels if lab in cls.restrictions},
            }
            for name, cls in ds.classes.items()
        ]
    return out


def serialize_dataset(ds: Dataset) -> str:
    return json.dumps(dataset_to_obj(ds), indent=2) + "\n"


def dataset_digest(ds: Dataset) -> str:
    canonical = json.dumps(dataset_to_obj(ds), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
