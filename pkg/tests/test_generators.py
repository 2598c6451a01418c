import random
from fractions import Fraction

import pytest

from hamcircle.canonical import verify_canonical
from hamcircle.cli import full_validate
from hamcircle.corpus import generated_datasets, generic_product
from hamcircle.fixed_points import betti, validate
from hamcircle.generators import (
    CollisionError,
    CpnSpec,
    DropPoint,
    NegateWeight,
    ShiftMoment,
    gen_cpn,
    gen_product,
    mutate,
    random_symmetric_profile,
    random_unimodal_profile,
    single_edit_mutations,
)
from hamcircle.localization import residue_check

F = Fraction


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_cpn_euler_classes(cp4):
    fps, _ = cp4
    assert [p.euler for p in fps.points] == [24, -6, 4, -6, 24]


def test_cpn_moments_and_weights(cp2):
    fps, _ = cp2
    assert [(p.label, p.moment, p.weights) for p in fps.points] == [
        ("p0", -2, (1, 2)),
        ("p1", -1, (-1, 1)),
        ("p2", 0, (-2, -1)),
    ]


def test_cpn_custom_weights():
    fps, basis = gen_cpn(CpnSpec(2, (0, 3, 7)))
    assert fps.point("p1").weights == (-3, 4)
    assert verify_canonical(fps, basis).passed
    assert residue_check(fps).passed


@pytest.mark.parametrize("bad", [(0, 0, 1), (2, 1, 0), (0, 1)])
def test_cpn_spec_rejects(bad):
    with pytest.raises(ValueError):
        CpnSpec(2, bad)


def test_cpn_spec_rejects_n0():
    with pytest.raises(ValueError):
        CpnSpec(0, (0,))


def test_product_cp1xcp1_equal():
    fps, basis = gen_product(gen_cpn(1), gen_cpn(1))
    assert betti(fps).values == (1, 2, 1)
    assert fps.point("p0.p1").moment == fps.point("p1.p0").moment == -1
    assert verify_canonical(fps, basis).passed


def test_product_betti_convolution():
    for i in range(1, 4):
        for j in range(i, 4):
            fps, _ = generic_product(i, j)
            assert list(betti(fps).values) == convolve([1] * (i + 1), [1] * (j + 1))


def test_product_generic_moments_distinct(cp2xcp2):
    fps, _ = cp2xcp2
    moments = [p.moment for p in fps.points]
    assert len(set(moments)) == len(moments)
    assert max(moments) == 0


def test_product_collision():
    # a zero weight in either factor is rejected
    fps, basis = gen_cpn(1)
    bad = fps.with_points(p.__class__(p.label, p.moment, (0,)) if p.label == "p0" else p for p in fps.points)
    with pytest.raises(CollisionError):
        gen_product((bad, basis), gen_cpn(1))


def test_mutate_examples(cp4, cp2):
    m = mutate(cp4[0], NegateWeight("p2", 2))
    assert m.point("p2").weights == (-2, -1, -1, 2)
    assert betti(m).values == (1, 1, 0, 2, 1)
    s = mutate(cp2[0], ShiftMoment("p1", F(1, 2)))
    assert s.point("p1").moment == F(-1, 2)
    d = mutate(cp4[0], DropPoint("p3"))
    assert d.labels == ("p0", "p1", "p2", "p4")


def test_mutate_does_not_touch_input(cp2):
    fps, _ = cp2
    mutate(fps, NegateWeight("p0", 0))
    assert fps.point("p0").weights == (1, 2)


@pytest.mark.parametrize("edit", [NegateWeight("zz", 0), NegateWeight("p1", 5), ShiftMoment("nope", 1), DropPoint("q")])
def test_mutate_errors(cp2, edit):
    with pytest.raises(ValueError):
        mutate(cp2[0], edit)


def test_single_edit_count(cp4):
    edits = single_edit_mutations(cp4[0])
    # 20 negations, 3 interior points x 2 shifts, 5 drops
    assert len(edits) == 20 + 6 + 5
    assert len({e.describe() for e in edits}) == len(edits)


@pytest.mark.parametrize("name", sorted(generated_datasets()))
def test_every_mutation_killed(name):
    fps, _ = generated_datasets()[name]
    assert all(c.passed for c in full_validate(fps))
    for edit in single_edit_mutations(fps):
        certs = full_validate(mutate(fps, edit))
        assert any(not c.passed for c in certs), (name, edit.describe())


def test_generated_valid():
    for name, (fps, _) in generated_datasets().items():
        assert validate(fps).passed, name


def test_random_profiles():
    rng = random.Random(7)
    for n in range(1, 21):
        u = random_unimodal_profile(rng, n)
        s = random_symmetric_profile(rng, n)
        for p in (u, s):
            assert p.half_dim == n
            assert p.is_symmetric
            assert p.values[0] == 1
        assert all(a <= b for a, b in zip(u.values, u.values[1 : n // 2 + 1]))


def test_random_profiles_seeded():
    a = [random_unimodal_profile(random.Random(3), 10).values for _ in range(2)]
    assert a[0] == a[1]
