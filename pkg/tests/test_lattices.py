"""
整数格：平面类格、迷向十序列、嵌入与正交补、BB 矩阵
"""

import pytest

from core.errors import DimensionError
from core.lattices import (
    STATED_ALTERNATIVE_BB_DET,
    IntLattice,
    bb_derivations,
    bb_discriminant_compare,
    bb_matrix,
    e10_lattice,
    embed_and_complement,
    enriques_root_basis,
    i110,
    i110_twisted_by_two,
    i212,
    inertia,
    isotropic_report,
    k10_class,
    lemma_block_matches,
    m0_report,
    plane_class_det_formula,
    plane_class_gram,
    root_basis_report,
)


@pytest.mark.parametrize("n", range(1, 12))
def test_plane_class_det_formula(n):
    assert plane_class_gram(n).det() == plane_class_det_formula(n)


def test_plane_class_known_values():
    assert plane_class_gram(10).det() == 13312 == 2 ** 10 * 13
    assert plane_class_gram(11).det() == 2 ** 11 * 14
    assert plane_class_gram(1).gram == [[3, 1], [1, 3]]
    assert plane_class_gram(1).det() == 8


def test_plane_class_discriminant():
    snf = plane_class_gram(11).discriminant_group()
    assert snf.cokernel == (2,) * 10 + (28,)
    assert snf.cokernel_order == 2 ** 11 * 14


def test_plane_class_is_positive_definite():
    assert plane_class_gram(10).signature == (11, 0)


def test_plane_class_needs_a_plane():
    with pytest.raises(DimensionError):
        plane_class_gram(0)


def test_isotropic_ten():
    report = isotropic_report()
    assert report["f_squares_zero"]
    assert report["f_products_one"]
    assert report["sum_is_3_delta"]
    assert report["delta_square"] == 10
    assert report["delta_dot_f"] == [3]
    assert report["delta_dot_k10"] == 0


def test_root_basis():
    report = root_basis_report()
    assert report["squares"] == [-2]
    assert report["orthogonal_to_k10"]
    assert abs(report["gram_det"]) == 1
    # E_10 图：α_0 接在 α_3 上，其余为链
    assert len(report["dynkin_edges"]) == 9
    assert (0, 3) in report["dynkin_edges"]


def test_e10_is_unimodular_hyperbolic():
    e10 = e10_lattice()
    assert e10.signature == (1, 9)
    assert abs(e10.det()) == 1
    assert e10.discriminant_group().cokernel == ()


def test_k10_square():
    assert k10_class().square == -1
    assert all(r.dot(k10_class()) == 0 for r in enriques_root_basis())


def test_m0_sublattice():
    report = m0_report()
    assert report["rank"] == 10
    assert report["orthogonal_to_h2"]
    assert report["index"] == 3
    assert report["det_formula_holds"]
    assert report["det"] == 3 * 2 ** 10 * 13


def test_embedding_preserves_products():
    report = embed_and_complement()
    assert report.products_checked == 66
    assert report.preserves_products


def test_complement():
    report = embed_and_complement()
    assert len(report.complement) == 12
    assert report.orthogonality_checked == 132
    assert report.complement_orthogonal
    assert abs(report.complement_det) == 2 ** 10 * 13


def test_lemma_block_up_to_sign():
    report = embed_and_complement()
    assert report.lemma_block == [[2, -3], [-3, -2]]
    assert lemma_block_matches(report.lemma_block)
    assert not lemma_block_matches([[2, 3], [3, 2]])


def test_i212_signature():
    assert i212().signature == (21, 2)
    assert abs(i212().det()) == 1


def test_bb_matrix_shape():
    gram = bb_matrix().gram
    assert gram[0][0] == 6
    assert all(gram[i][i] == -2 for i in range(1, 11))
    assert all(gram[0][i] == gram[i][0] == 2 for i in range(1, 11))
    assert bb_matrix().signature == (1, 10)


def test_bb_is_not_i110_twisted():
    report = bb_discriminant_compare()
    assert report["det_bb"] == 2 ** 11 * 13
    assert report["det_reference"] == 2 ** 11
    assert report["cokernel_order_bb"] == 2 ** 11 * 13
    assert report["non_isometric"]
    # 另一处给出的数值与直接计算不一致，两者都报告
    assert report["stated_alternative"] == STATED_ALTERNATIVE_BB_DET
    assert not report["stated_alternative_matches"]


def test_i110_twisted_by_two():
    lat = i110_twisted_by_two()
    assert lat.gram[0][0] == 2
    assert lat.gram[5][5] == -2
    assert lat.discriminant_group().cokernel == (2,) * 11


def test_bb_derivations():
    report = bb_derivations()
    assert report["h_square"] == 2
    assert report["sigma_square"] == 6
    assert report["sigma_dot_D"] == 2
    assert report["D_square"] == -2
    assert report["fujiki_on_basis"]


def test_inertia():
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[1, 0], [0, 0]]) == (1, 0, 1)
    assert i110().signature == (1, 10)


def test_lattice_validation():
    with pytest.raises(DimensionError):
        IntLattice("bad", ((1, 2), (3, 1)))
    with pytest.raises(DimensionError):
        IntLattice("bad", ((1, 0), (0, 1)), expected_signature=(1, 1))


def test_twist_flips_signature():
    assert i110().twist(-1).signature == (10, 1)
