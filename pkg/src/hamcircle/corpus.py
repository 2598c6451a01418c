"""The bundled dataset corpus: generated ground truth, a few mutations, and
one hand-built dataset that violates the Betti-number inequality."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .dataset import Dataset, parse_dataset
from .generators import Generated, NegateWeight, ShiftMoment, gen_cpn, gen_product, mutate


def generic_product(i: int, j: int) -> Generated:
    """``CP^i x CP^j`` with right-hand weights spaced by ``2i + 1`` so that no
    two product points share a moment value."""
    return gen_product(gen_cpn(i), gen_cpn(j, [k * (2 * i + 1) for k in range(j + 1)]))


def generated_datasets() -> dict[str, Generated]:
    out: dict[str, Generated] = {f"cp{n}": gen_cpn(n) for n in range(1, 9)}
    for i in range(1, 4):
        for j in range(i, 4):
            out[f"cp{i}xcp{j}"] = generic_product(i, j)
    out["cp1xcp1-equal"] = gen_product(gen_cpn(1), gen_cpn(1))
    return out


def load_bundled(name: str) -> Dataset:
    text = resources.files("hamcircle").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    return parse_dataset(text)


def bundled_corpus() -> dict[str, Dataset]:
    corpus = {name: Dataset.from_generated(*g) for name, g in generated_datasets().items()}
    cp2, cp4 = corpus["cp2"], corpus["cp4"]
    corpus["cp2-shift-p1"] = Dataset(mutate(cp2.fixed_point_set, ShiftMoment("p1", Fraction(1, 2))))
    corpus["cp4-negate-p2"] = Dataset(mutate(cp4.fixed_point_set, NegateWeight("p2", 0)))
    corpus["dip8"] = load_bundled("dip8")
    return corpus
