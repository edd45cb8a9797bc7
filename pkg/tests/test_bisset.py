import pytest

from necklace_calculus import shapes, ops
from necklace_calculus.bisset import (BiMap, bnd, diag, discretize, external, find_bi_iso,
                                      horizontal, lf, lf_map, bi_pushout, vertical)
from necklace_calculus.ops import pi0
from necklace_calculus.sset import identity_map, nd

d = shapes.simplex


def test_external_product_bidegrees():
    W = external(d(1), d(2))
    assert W.nd_counts() == {(0, 0): 6, (0, 1): 6, (0, 2): 2,
                             (1, 0): 3, (1, 1): 3, (1, 2): 1}


def test_diag_of_external_is_product():
    W = external(d(1), d(1))
    assert ops.find_iso(diag(W).sset, ops.product(d(1), d(1)).sset) is not None
    assert ops.find_iso(diag(external(d(2), d(0))).sset, d(2)) is not None
    assert ops.find_iso(diag(vertical(shapes.spine(2))).sset, shapes.spine(2)) is not None


@pytest.mark.parametrize("m,Y", [(1, d(0)), (1, shapes.boundary(1)), (2, d(1)),
                                 (0, d(2))])
def test_discretize_row0(m, Y):
    L = lf(m, Y)
    assert L.W.row0_discrete()
    assert len(L.W.gens_at(0, 0)) == (m + 1) * len(pi0(Y)[0])


def test_discretize_point_target():
    # L(Delta[0] box X) is a point for connected X
    L = lf(0, d(2))
    assert L.W.nd_counts() == {(0, 0): 1}


def test_discretize_idempotent():
    L = lf(1, d(1)).W
    again = discretize(L)
    assert find_bi_iso(L, again.bisset) is not None


def test_levels_are_1_ordered():
    L = lf(2, d(1)).W
    for k in range(3):
        ok, _ = ops.is_1_ordered(L.level(k))
        assert ok


def test_lf_map_and_cone_identity():
    lf1, lf2 = lf(1, d(1)), lf(2, d(1))
    from necklace_calculus import delta

    face = lf_map(lf1, lf2, delta.coface(2, 2), identity_map(d(1)))
    assert face.is_mono()
    po = bi_pushout(face, BiMap(lf1.W, lf1.W, {g: bnd(g) for g in lf1.W.gens()},
                                validate=False))
    assert find_bi_iso(po.bisset, lf2.W) is not None


def test_row0_discreteness_check():
    W = vertical(d(1))
    assert not W.row0_discrete()
    assert horizontal(d(1)).row0_discrete()
