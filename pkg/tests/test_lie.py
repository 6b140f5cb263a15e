import pytest

from sp4whittaker.exact import ExactMatrix, GaussianRational as GR
from sp4whittaker.lie import (ELEMENTS, COMPACT_BASIS, NONCOMPACT_BASIS,
                              NONCOMPACT_ROOTS, Root, cartan_decomposition_report,
                              commutator, compact_root_vector,
                              eigenvalue_under_cartan, in_sp4,
                              involution_transport_report, root_vector,
                              sl2_triple_report, theta, verify_iwasawa_lemma)


def test_every_named_element_satisfies_defining_relation():
    for name, m in ELEMENTS.items():
        assert in_sp4(m), name


def test_commutator_h_x_is_2x():
    assert commutator(ELEMENTS["H"], ELEMENTS["X"]) == ELEMENTS["X"].scale(2)


def test_commutator_antisymmetry_on_diagonal():
    assert commutator(ELEMENTS["X"], ELEMENTS["X"]).is_zero()


def test_compact_cartan_is_abelian():
    # both generators are diagonalized by the same torus; direct product check
    assert commutator(ELEMENTS["T1"], ELEMENTS["T2"]).is_zero()


def test_root_vector_construction():
    i2 = GR(0, 1)
    expected = ExactMatrix([[1, 0, i2, 0], [0, 0, 0, 0],
                            [i2, 0, -1, 0], [0, 0, 0, 0]])
    assert root_vector(Root(2, 0)).matrix == expected
    minus = ExactMatrix([[0, 0, 0, 0], [0, 1, 0, -i2],
                         [0, 0, 0, 0], [0, -i2, 0, -1]])
    assert root_vector(Root(0, -2)).matrix == minus


def test_noncompact_root_vectors_are_theta_eigenvectors():
    m = root_vector(Root(1, 1)).matrix
    assert theta(m) == -m


def test_compact_roots_rejected_by_p_construction():
    with pytest.raises(ValueError):
        root_vector(Root(1, -1))
    assert compact_root_vector(Root(1, -1)).matrix == ELEMENTS["K12"]


def test_iwasawa_lemma_all_identities_pass():
    rows = verify_iwasawa_lemma()
    assert len(rows) == 4
    assert all(r["status"] == "PASS" for r in rows)


def test_iwasawa_negative_control():
    # perturbing one side must be detected by the exact comparison
    from sp4whittaker.lie import E_2E1, H1, K11
    lhs = root_vector(Root(2, 0)).matrix
    rhs = E_2E1.scale(GR(0, 2)) + H1 + K11
    assert (lhs - rhs).is_zero()
    bad = rhs + ExactMatrix([[0, 1, 0, 0]] + [[0] * 4] * 3)
    assert not (lhs - bad).is_zero()


def test_eigenvalue_under_cartan():
    assert eigenvalue_under_cartan(root_vector(Root(1, 1)).matrix) == Root(1, 1)
    assert eigenvalue_under_cartan(ELEMENTS["K12"]) == Root(1, -1)
    for a, b in NONCOMPACT_ROOTS:
        assert eigenvalue_under_cartan(root_vector(Root(a, b)).matrix) == Root(a, b)


def test_split_cartan_not_an_eigenvector():
    with pytest.raises(ValueError):
        eigenvalue_under_cartan(ELEMENTS["H1"])


def test_cartan_decomposition_dimensions():
    out = cartan_decomposition_report()
    assert out["compact_dimension"] == 4
    assert out["noncompact_dimension"] == 6
    assert out["compact_ok"] and out["noncompact_ok"]
    for name in COMPACT_BASIS:
        assert theta(ELEMENTS[name]) == ELEMENTS[name]
    for name in NONCOMPACT_BASIS:
        assert theta(ELEMENTS[name]) == -ELEMENTS[name]


def test_sl2_triple():
    assert all(r["status"] == "PASS" for r in sl2_triple_report())


def test_involution_transport_structure():
    assert all(r["status"] == "PASS" for r in involution_transport_report())
