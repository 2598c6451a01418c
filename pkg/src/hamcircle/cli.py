"""Command-line interface.

Every command prints one JSON report (or a text table with
``--format text``) and exits 0 on pass/consistent, 1 on fail/contradiction,
2 on not-covered or usage errors. ``gen`` and ``mutate`` print datasets.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Any, Sequence

from .algebra import parse_rational
from .canonical import verify_canonical
from .certificate import FAIL, NOT_COVERED, PASS, Certificate, PreconditionError, to_jsonable
from .classes import ClassRestrictions, omega_class
from .dataset import Dataset, DatasetError, dataset_digest, parse_dataset, serialize_dataset
from .fixed_points import BettiProfile, FixedPointSet, betti, check_duality, check_extrema, check_structure, normalize_moment
from .generators import (
    CollisionError,
    CpnSpec,
    DropPoint,
    NegateWeight,
    ShiftMoment,
    gen_cpn,
    gen_product,
    mutate,
    random_unimodal_profile,
)
from .localization import localization_sum, residue_check
from .theorem import build_phi, check_inequality, check_unimodality, phi_kernel, replay_proof

EXIT = {"PASS": 0, "CONSISTENT": 0, "FAIL": 1, "CONTRADICTION": 1, "NOT_COVERED": 2, "USAGE_ERROR": 2}


GLOBAL_DEFAULTS = {"format": "json", "strict_integral": False, "no_normalize": False, "seed": 0}


class UsageError(Exception):
    pass


def full_validate(fps: FixedPointSet) -> list[Certificate]:
    """Structural checks first (stop there on failure), then duality,
    extrema and localization residues, all of which always run."""
    structure = check_structure(fps)
    if not structure.passed:
        return [structure]
    return [structure, check_duality(fps), check_extrema(fps), residue_check(fps)]


def _verdict(certs: Sequence[Certificate]) -> str:
    if any(c.status == FAIL for c in certs):
        return "FAIL"
    if any(c.status == NOT_COVERED for c in certs):
        return "NOT_COVERED"
    return "PASS"


def _report(command: str, ds: Dataset | None, checks: Sequence[Certificate], verdict: str, **result: Any) -> dict:
    return {
        "command": command,
        "dataset_digest": dataset_digest(ds) if ds is not None else None,
        "verdict": verdict,
        "exit_code": EXIT[verdict],
        "checks": [c.to_dict() for c in checks],
        "result": to_jsonable(result),
    }


def _basis_or_usage(ds: Dataset):
    basis = ds.canonical_basis()
    if basis is None:
        raise UsageError("this command needs full-mode data with a canonical class named after every fixed point")
    return basis


def _moments(ds: Dataset, no_normalize: bool) -> FixedPointSet:
    fps = ds.fixed_point_set
    if fps.is_normalized():
        return fps
    if no_normalize:
        raise UsageError("moment map is not normalized (maximum is not 0) and --no-normalize was given")
    return normalize_moment(fps)


def cmd_validate(ds: Dataset, args) -> dict:
    certs = full_validate(ds.fixed_point_set)
    return _report("validate", ds, certs, _verdict(certs))


def cmd_betti(ds: Dataset, args) -> dict:
    cert = check_structure(ds.fixed_point_set)
    if not cert.passed:
        return _report("betti", ds, [cert], "FAIL")
    profile = betti(ds.fixed_point_set)
    return _report("betti", ds, [cert], "PASS", betti=list(profile.values))


def cmd_integrate(ds: Dataset, args) -> dict:
    cert = check_structure(ds.fixed_point_set)
    if not cert.passed:
        return _report("integrate", ds, [cert], "FAIL")
    if args.omega_power is not None:
        fps = _moments(ds, args.no_normalize)
        cls = omega_class(fps) ** args.omega_power
        what = f"omega^{args.omega_power}"
    else:
        fps = ds.fixed_point_set
        if ds.classes is None or args.class_name not in ds.classes:
            raise UsageError(f"unknown class {args.class_name!r}")
        cls = ds.classes[args.class_name]
        what = args.class_name
    loc = localization_sum(fps, cls)
    residue = loc.total.negative_part()
    if residue:
        check = Certificate("purity", FAIL, f"integral of {what} has negative powers of u: {residue}", {"residue": residue})
    else:
        check = Certificate("purity", PASS, f"integral of {what} is a polynomial", {})
    return _report(
        "integrate", ds, [cert, check], _verdict([check]),
        integrand=what, integral=loc.total, per_point=dict(loc.per_point),
    )


def cmd_residues(ds: Dataset, args) -> dict:
    cert = check_structure(ds.fixed_point_set)
    if not cert.passed:
        return _report("residues", ds, [cert], "FAIL")
    res = residue_check(ds.fixed_point_set)
    return _report("residues", ds, [res], _verdict([res]))


def cmd_verify_canonical(ds: Dataset, args) -> dict:
    cert = check_structure(ds.fixed_point_set)
    if not cert.passed:
        return _report("verify-canonical", ds, [cert], "FAIL")
    basis = _basis_or_usage(ds)
    fps = _moments(ds, args.no_normalize)
    res = verify_canonical(fps, basis, strict_integral=args.strict_integral)
    return _report("verify-canonical", ds, [res], _verdict([res]))


def cmd_phi(ds: Dataset, args) -> dict:
    cert = check_structure(ds.fixed_point_set)
    if not cert.passed:
        return _report("phi", ds, [cert], "FAIL")
    basis = _basis_or_usage(ds)
    fps = ds.fixed_point_set
    if fps.half_dim % 2:
        info = Certificate("phi", NOT_COVERED, f"dimension {2 * fps.half_dim} is not divisible by 4", {})
        return _report("phi", ds, [info], "NOT_COVERED")
    phi = build_phi(fps, basis)
    kernel = phi_kernel(phi)
    info = Certificate("phi", PASS, f"{phi.matrix.rows}x{phi.matrix.cols} matrix, kernel dimension {len(kernel)}", {})
    return _report(
        "phi", ds, [info], "PASS",
        phi=phi, kernel_dim=len(kernel),
        kernel=[{lab: k.coefficient(lab) for lab in fps.labels} for k in kernel],
    )


def cmd_check_theorem(ds: Dataset, args) -> dict:
    fps = ds.fixed_point_set
    certs = full_validate(fps)
    if any(not c.passed for c in certs[:3]):
        return _report("check-theorem", ds, certs, "FAIL")
    inequality = check_inequality(betti(fps))
    basis = ds.canonical_basis()
    residues = certs[3]
    if basis is None:
        replay = Certificate("theorem", NOT_COVERED, "minimal-mode data: no canonical classes to replay the argument", {})
        return _report("check-theorem", ds, certs + [inequality, replay], _verdict([residues, inequality]))
    fps = _moments(ds, args.no_normalize)
    canonical = verify_canonical(fps, basis, strict_integral=args.strict_integral)
    theorem = replay_proof(fps, basis)
    if theorem.status == NOT_COVERED:
        verdict = "NOT_COVERED"
    else:
        verdict = theorem.witness["verdict"]
    exit_code = {PASS: 0, FAIL: 1, NOT_COVERED: 2}[theorem.status]
    if not residues.passed and exit_code != 1:
        # the replay found nothing, but the data already fails localization
        verdict, exit_code = "FAIL", 1
    report = _report("check-theorem", ds, certs + [canonical, inequality, theorem], verdict)
    report["exit_code"] = exit_code
    return report


def cmd_check_unimodality(ds: Dataset | None, args) -> dict:
    if args.profile:
        try:
            profile = BettiProfile(tuple(int(x) for x in args.profile.split(",")))
        except ValueError:
            raise UsageError(f"malformed profile {args.profile!r}") from None
    else:
        cert = check_structure(ds.fixed_point_set)
        if not cert.passed:
            return _report("check-unimodality", ds, [cert], "FAIL")
        profile = betti(ds.fixed_point_set)
    res = check_unimodality(profile)
    return _report("check-unimodality", ds, [res], _verdict([res]), betti=list(profile.values))


def _read_dataset(path: str) -> Dataset:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_dataset(text)


REPORT_COMMANDS = {
    "validate": cmd_validate,
    "betti": cmd_betti,
    "integrate": cmd_integrate,
    "residues": cmd_residues,
    "verify-canonical": cmd_verify_canonical,
    "phi": cmd_phi,
    "check-theorem": cmd_check_theorem,
    "check-unimodality": cmd_check_unimodality,
}


def run(command: str, ds: Dataset | None, args) -> dict:
    """Dispatch one report command; engine errors become report entries."""
    try:
        return REPORT_COMMANDS[command](ds, args)
    except UsageError as exc:
        err = Certificate("usage", FAIL, str(exc), {})
        return _report(command, ds, [err], "USAGE_ERROR")
    except (PreconditionError, DatasetError, ValueError) as exc:
        witness = {"label": exc.label} if getattr(exc, "label", None) else {}
        err = Certificate("input", FAIL, str(exc), witness)
        return _report(command, ds, [err], "FAIL")


def render_text(report: dict) -> str:
    lines = [f"{report['command']}: {report['verdict']}"]
    if report["dataset_digest"]:
        lines.append(f"  dataset  {report['dataset_digest'][:16]}")
    for c in report["checks"]:
        lines.append(f"  [{c['status']:>11}] {c['check']}: {c['message']}")
    for key, value in report["result"].items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=False)
        lines.append(f"  {key} = {value}")
    return "\n".join(lines) + "\n"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "text"))
    common.add_argument("--strict-integral", action="store_true", help="require integer canonical restrictions")
    common.add_argument("--no-normalize", action="store_true", help="reject unnormalized moments instead of shifting")
    common.add_argument("--seed", type=int, help="seed for random corpus generation only")

    parser = argparse.ArgumentParser(prog="hamcircle", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "betti", "residues", "verify-canonical", "phi", "check-theorem"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file", help="dataset JSON, or - for stdin")
    p = sub.add_parser("integrate", parents=[common])
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--class", dest="class_name")
    g.add_argument("--omega-power", type=int)
    p = sub.add_parser("check-unimodality", parents=[common])
    p.add_argument("file", nargs="?")
    p.add_argument("--profile", help="comma-separated b_0,b_2,...,b_2N")

    gen = sub.add_parser("gen", parents=[common]).add_subparsers(dest="gen_command", required=True)
    p = gen.add_parser("cpn", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", type=_int_list)
    p = gen.add_parser("product", parents=[common])
    p.add_argument("left")
    p.add_argument("right")
    p = gen.add_parser("profiles", parents=[common])
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-half-dim", type=int, default=20)

    p = sub.add_parser("mutate", parents=[common])
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--negate-weight", nargs=2, metavar=("LABEL", "SLOT"))
    g.add_argument("--shift-moment", nargs=2, metavar=("LABEL", "DELTA"))
    g.add_argument("--drop-point", metavar="LABEL")
    return parser


def _mutate_dataset(ds: Dataset, args) -> Dataset:
    if args.negate_weight:
        label, slot = args.negate_weight
        try:
            edit = NegateWeight(label, int(slot))
        except ValueError:
            raise UsageError(f"weight slot must be an integer, got {slot!r}") from None
    elif args.shift_moment:
        label, delta = args.shift_moment
        try:
            edit = ShiftMoment(label, parse_rational(delta))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        edit = DropPoint(args.drop_point)
    try:
        fps = mutate(ds.fixed_point_set, edit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    classes = ds.classes
    if classes is not None and isinstance(edit, DropPoint):
        classes = {
            name: ClassRestrictions(cls.degree, {lab: f for lab, f in cls.restrictions.items() if lab != edit.label})
            for name, cls in classes.items()
            if name != edit.label
        }
    return Dataset(fps, classes)


def _generate(args) -> str:
    if args.gen_command == "cpn":
        weights = args.weights if args.weights is not None else list(range(args.n + 1))
        fps, basis = gen_cpn(CpnSpec(args.n, tuple(weights)))
        return serialize_dataset(Dataset.from_generated(fps, basis))
    if args.gen_command == "product":
        left, right = _read_dataset(args.left), _read_dataset(args.right)
        lb, rb = left.canonical_basis(), right.canonical_basis()
        if lb is None or rb is None:
            raise UsageError("gen product needs full-mode datasets with canonical classes")
        fps, basis = gen_product((left.fixed_point_set, lb), (right.fixed_point_set, rb))
        return serialize_dataset(Dataset.from_generated(fps, basis))
    rng = random.Random(args.seed)
    lines = []
    for _ in range(args.count):
        n = 2 * rng.randint(1, max(1, args.max_half_dim // 2))
        lines.append(",".join(str(b) for b in random_unimodal_profile(rng, n).values))
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    for key, default in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, default)

    if args.command in ("gen", "mutate"):
        try:
            if args.command == "gen":
                out = _generate(args)
            else:
                out = serialize_dataset(_mutate_dataset(_read_dataset(args.file), args))
        except (UsageError, DatasetError, CollisionError, ValueError) as exc:
            print(f"hamcircle: {exc}", file=sys.stderr)
            return 2
        sys.stdout.write(out)
        return 0

    ds = None
    try:
        if args.command != "check-unimodality" or not args.profile:
            if getattr(args, "file", None) is None:
                raise UsageError("a dataset file or --profile is required")
            ds = _read_dataset(args.file)
    except UsageError as exc:
        report = _report(args.command, None, [Certificate("usage", FAIL, str(exc), {})], "USAGE_ERROR")
    except DatasetError as exc:
        report = _report(args.command, None, [Certificate("input", FAIL, str(exc), {})], "FAIL")
    else:
        report = run(args.command, ds, args)

    if args.format == "text":
        sys.stdout.write(render_text(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return report["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
