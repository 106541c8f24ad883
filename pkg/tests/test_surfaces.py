"""Tests for the base-surface intersection lattices."""

import random
from fractions import Fraction

import pytest

from cybundle.surfaces import (
    DivisorClass,
    MINUS_ONE_COUNTS,
    make_base,
    minus_one_classes,
    signature,
)


def pad(coeffs, rank):
    return DivisorClass(tuple(coeffs) + (0,) * (rank - len(coeffs)))


def random_class(rng, rank, lo=-6, hi=6):
    return DivisorClass(tuple(rng.randint(lo, hi) for _ in range(rank)))


# ---------------------------------------------------------------------------
# constructors


def test_make_f0():
    f0 = make_base("F0")
    assert f0.gram == ((0, 1), (1, 0))
    assert f0.c1 == DivisorClass((2, 2))
    assert f0.c1_sq == 8
    assert f0.c2 == 4


def test_make_enriques():
    enr = make_base("enriques")
    assert enr.rank == 10
    assert enr.c1.free_is_zero() and enr.c1.torsion == 1
    assert enr.c1_sq == 0
    assert enr.c2 == 12


def test_make_dp0():
    dp0 = make_base("dP0")
    assert dp0.rank == 1
    assert dp0.gram == ((1,),)
    assert dp0.c1 == DivisorClass((3,))
    assert dp0.c1_sq == 9
    assert dp0.c2 == 3


def test_f1_aliases_dp1():
    assert make_base("F1") is make_base("dP1")
    assert make_base("F1").kind == "dP1"


@pytest.mark.parametrize("k", range(9))
def test_del_pezzo_numerics(k):
    s = make_base(f"dP{k}")
    assert s.rank == k + 1
    assert s.c1_sq == 9 - k
    assert s.c2 == 3 + k


@pytest.mark.parametrize("kind", ["F2", "F9", "dP9", "quadric", ""])
def test_unsupported_surface(kind):
    with pytest.raises(ValueError, match="unsupported surface"):
        make_base(kind)


@pytest.mark.parametrize("kind", ["F0", "dP0", "dP3", "dP8", "enriques"])
def test_gram_signature(kind):
    s = make_base(kind)
    assert signature(s.gram) == (1, s.rank - 1)


def test_enriques_gram_even():
    enr = make_base("enriques")
    rng = random.Random(7)
    for _ in range(200):
        c = random_class(rng, 10)
        assert enr.square(c) % 2 == 0


# ---------------------------------------------------------------------------
# intersection pairing


def test_intersect_enriques_example():
    enr = make_base("enriques")
    alpha = pad((1, -1), 10)
    h = pad((5, 6), 10)
    assert enr.intersect(alpha, h) == 1


def test_intersect_f0_example():
    f0 = make_base("F0")
    assert f0.intersect(DivisorClass((1, -11)), DivisorClass((3, 34))) == 1


def test_intersect_zero():
    for kind in ("F0", "dP4", "enriques"):
        s = make_base(kind)
        z = DivisorClass.zero(s.rank)
        c = DivisorClass(tuple(range(s.rank)))
        assert s.intersect(z, c) == 0


def test_intersect_symmetric_bilinear():
    rng = random.Random(11)
    for kind in ("F0", "dP5", "enriques"):
        s = make_base(kind)
        for _ in range(60):
            a = random_class(rng, s.rank)
            b = random_class(rng, s.rank)
            c = random_class(rng, s.rank)
            m, k = rng.randint(-4, 4), rng.randint(-4, 4)
            assert s.intersect(a, b) == s.intersect(b, a)
            assert s.intersect(a.scale(m) + b.scale(k), c) == m * s.intersect(
                a, c
            ) + k * s.intersect(b, c)


def test_intersect_rank_mismatch():
    f0 = make_base("F0")
    with pytest.raises(ValueError, match="rank mismatch"):
        f0.intersect(DivisorClass((1, 2, 3)), DivisorClass((1, 2)))


def test_torsion_pairs_to_zero():
    enr = make_base("enriques")
    c = pad((3, 5, 1, 0, 2, 0, 0, 0, -1, 4), 10)
    assert enr.intersect(enr.c1, c) == 0
    # adding torsion never changes a pairing
    ct = DivisorClass(c.coeffs, torsion=1)
    assert enr.intersect(ct, c) == enr.intersect(c, c)


def test_torsion_arithmetic():
    enr = make_base("enriques")
    two_c1 = enr.c1 + enr.c1
    assert two_c1.is_zero()
    assert enr.c1.scale(12).is_zero()
    assert enr.c1.scale(3).torsion == 1
    with pytest.raises(ValueError):
        enr.c1.scale(Fraction(1, 2))


# ---------------------------------------------------------------------------
# cone positions


def test_cone_f0_ruling():
    f0 = make_base("F0")
    v = f0.cone_position(DivisorClass((1, 0)))
    assert v.effective is True
    assert v.nef is True
    assert v.ample is False


def test_cone_enriques_torsion_not_effective():
    enr = make_base("enriques")
    assert enr.cone_position(enr.c1).effective is False


def test_cone_enriques_gamma11_nef():
    enr = make_base("enriques")
    for x, y in ((0, 0), (1, 0), (2, 3), (0, 5)):
        assert enr.cone_position(pad((x, y), 10)).nef is True
    assert enr.cone_position(pad((-1, 2), 10)).nef is False


def test_cone_enriques_effective_rule():
    enr = make_base("enriques")
    # C != 0, C^2 >= 0, C.H0 > 0
    assert enr.cone_position(pad((1, 1), 10)).effective is True
    assert enr.cone_position(pad((1, -2), 10)).effective is False  # C^2 = -4
    assert enr.cone_position(pad((-1, -1), 10)).effective is False  # C.H0 < 0


def test_cone_enriques_undecidable_outside_gamma11():
    enr = make_base("enriques")
    c = pad((1, 1, 1), 10)
    v = enr.cone_position(c)
    assert v.nef is None and v.ample is None
    assert "undecidable within bound" in v.notes


def test_cone_enriques_ample_needs_square_six():
    enr = make_base("enriques")
    assert enr.cone_position(pad((1, 1), 10)).ample is False  # C^2 = 2
    assert enr.cone_position(pad((2, 2), 10)).ample is True  # C^2 = 8


def test_cone_del_pezzo_effective_membership():
    dp2 = make_base("dP2")
    # l - e1 - e2 is a generator; l - 2e1 is not effective
    assert dp2.cone_position(DivisorClass((1, -1, -1))).effective is True
    assert dp2.cone_position(DivisorClass((1, -2, 0))).effective is False
    assert dp2.cone_position(dp2.c1).effective is True


def test_effective_combinations_random():
    rng = random.Random(23)
    for kind in ("dP2", "dP4", "F0"):
        s = make_base(kind)
        gens = s.cone_generators
        for _ in range(25):
            c = DivisorClass.zero(s.rank)
            for _ in range(rng.randint(1, 4)):
                c = c + rng.choice(gens).scale(rng.randint(0, 3))
            assert s.cone_position(c).effective is True


def test_effective_nonneg_on_nef():
    rng = random.Random(5)
    s = make_base("dP3")
    nef = s.c1  # -K is ample, in particular nef
    for _ in range(40):
        c = random_class(rng, s.rank, -4, 4)
        if s.cone_position(c).effective:
            assert s.intersect(c, nef) >= 0


# ---------------------------------------------------------------------------
# (-1)-classes


@pytest.mark.parametrize("k", range(1, 9))
def test_minus_one_counts(k):
    assert len(minus_one_classes(k)) == MINUS_ONE_COUNTS[k]


def test_minus_one_classes_satisfy_defining_equations():
    for k in (1, 2, 3, 5, 8):
        s = make_base(f"dP{k}")
        for e in minus_one_classes(k):
            assert s.square(e) == -1
            assert s.intersect(e, s.c1) == 1


def test_minus_one_dp2_explicit():
    found = {e.coeffs for e in minus_one_classes(2)}
    assert found == {(0, 1, 0), (0, 0, 1), (1, -1, -1)}


def test_low_k_extra_rays():
    assert make_base("dP0").cone_generators == (DivisorClass((1,)),)
    gens1 = make_base("dP1").cone_generators
    assert DivisorClass((1, -1)) in gens1 and DivisorClass((0, 1)) in gens1


# ---------------------------------------------------------------------------
# minimal positive degree


def test_min_degree_f0():
    f0 = make_base("F0")
    md = f0.min_positive_degree(DivisorClass((3, 34)))
    assert md.value == 3
    assert md.witness == DivisorClass((0, 1))
    assert not md.bound_limited


def test_min_degree_enriques():
    enr = make_base("enriques")
    md = enr.min_positive_degree(pad((5, 6), 10))
    assert md.value == 5
    assert md.witness == pad((0, 1), 10)


def test_min_degree_dp0():
    dp0 = make_base("dP0")
    md = dp0.min_positive_degree(dp0.c1)
    assert md.value == 3
    assert md.witness == DivisorClass((1,))


def test_min_degree_rejects_non_ample():
    f0 = make_base("F0")
    with pytest.raises(ValueError, match="polarization not ample"):
        f0.min_positive_degree(DivisorClass((1, 0)))


def test_min_degree_stable_in_bound():
    enr = make_base("enriques")
    h = pad((5, 6), 10)
    values = [enr.min_positive_degree(h, bound=b).value for b in (2, 10, 50)]
    assert values[0] == values[1] == values[2]
