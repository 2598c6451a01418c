from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamcircle.fixed_points import (
    FixedPoint,
    FixedPointSet,
    betti,
    normalize_moment,
    relabel,
    reorder,
    validate,
)
from hamcircle.generators import NegateWeight, gen_cpn, mutate


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_betti_cp4(cp4):
    # point i of CP^4 has exactly i negative weights
    assert betti(cp4[0]).values == (1, 1, 1, 1, 1)


def test_betti_product(cp2xcp2):
    assert list(betti(cp2xcp2[0]).values) == convolve([1, 1, 1], [1, 1, 1]) == [1, 2, 3, 2, 1]


def test_b0_is_one_on_corpus(corpus):
    for name, ds in corpus.items():
        if validate(ds.fixed_point_set).passed:
            assert betti(ds.fixed_point_set).values[0] == 1, name


def test_validate_cp4_passes(cp4):
    assert validate(cp4[0]).passed


@pytest.mark.parametrize("slot, profile", [(2, (1, 1, 0, 2, 1)), (0, (1, 2, 0, 1, 1))])
def test_validate_negated_weight_breaks_duality(cp4, slot, profile):
    # p2 has weights (-2, -1, 1, 2); recount negatives after the flip
    bad = mutate(cp4[0], NegateWeight("p2", slot))
    assert betti(bad).values == profile
    cert = validate(bad)
    assert not cert.passed
    assert cert.message.startswith("duality")


def test_validate_zero_weight():
    fps = FixedPointSet(1, (FixedPoint("p0", -1, (0,)), FixedPoint("p1", 0, (-1,))))
    cert = validate(fps)
    assert not cert.passed
    assert "zero weight at p0" in cert.message
    assert cert.witness["label"] == "p0"


@pytest.mark.parametrize(
    "points, fragment",
    [
        ([FixedPoint("a", 0, (1,))], "at least two"),
        ([FixedPoint("a", -1, (1,)), FixedPoint("a", 0, (-1,))], "duplicate label"),
        ([FixedPoint("a", -1, (1, 2)), FixedPoint("b", 0, (-1,))], "weights, expected"),
        ([FixedPoint("a", -1, (1,)), FixedPoint("b", 0, (1,))], "all-negative"),
    ],
)
def test_structural_failures(points, fragment):
    cert = validate(FixedPointSet(1, tuple(points)))
    assert not cert.passed and fragment in cert.message


def test_extrema_must_be_strict():
    fps = FixedPointSet(1, (FixedPoint("p0", 0, (1,)), FixedPoint("p1", 0, (-1,))))
    cert = validate(fps)
    assert not cert.passed and cert.message.startswith("extrema")


def test_interior_ties_allowed():
    # CP^1 x CP^1 with equal weights has two interior points at the same level
    from hamcircle.corpus import generated_datasets

    tied = generated_datasets()["cp1xcp1-equal"][0]
    assert sorted(p.moment for p in tied.points) == [-2, -1, -1, 0]
    assert validate(tied).passed


@pytest.mark.parametrize(
    "moments, expected",
    [((3, 4), (-1, 0)), ((-1, 0), (-1, 0))],
)
def test_normalize_cp1(moments, expected):
    fps = FixedPointSet(1, (FixedPoint("p0", moments[0], (1,)), FixedPoint("p1", moments[1], (-1,))))
    assert tuple(p.moment for p in normalize_moment(fps).points) == expected


def test_normalize_cp4():
    fps, _ = gen_cpn(4)
    shifted = fps.with_points(FixedPoint(p.label, p.moment + 4, p.weights) for p in fps.points)
    assert [p.moment for p in shifted.points] == [0, 1, 2, 3, 4]
    assert [p.moment for p in normalize_moment(shifted).points] == [-4, -3, -2, -1, 0]


def test_normalize_is_idempotent_on_corpus(corpus):
    for ds in corpus.values():
        once = normalize_moment(ds.fixed_point_set)
        assert normalize_moment(once) == once


def test_betti_sum_counts_points(corpus):
    for ds in corpus.values():
        fps = ds.fixed_point_set
        if validate(fps).passed:
            assert sum(betti(fps).values) == len(fps.points)


def test_euler_sign_follows_index(corpus):
    for ds in corpus.values():
        for p in ds.fixed_point_set.points:
            if all(p.weights):
                assert (p.euler > 0) == ((p.index // 2) % 2 == 0)


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_betti_invariant_under_relabel_and_reorder(n, rnd):
    fps, _ = gen_cpn(n)
    order = list(range(len(fps.points)))
    rnd.shuffle(order)
    renamed = relabel(fps, {lab: f"q{lab}" for lab in fps.labels})
    assert betti(reorder(renamed, order)) == betti(fps)


def test_moment_is_exact():
    p = FixedPoint("a", Fraction(1, 3), (1,))
    assert isinstance(p.moment, Fraction)
