import pytest

from lieposet.algebra import (DASHED, DIAG, LOOP, SOLID_C, SOLID_D, BasisElement, LieAlgebra,
                              basis, commutator, m_matrix, ones, realize, support)
from lieposet.errors import ClosureViolation, EvenDimension, UnsupportedPoset
from lieposet.exactla import determinant, rank
from lieposet.poset import from_generators
from lieposet.relgraph import build_relation_graph, m_rows


def test_figure_three_basis(fig3):
    assert [str(b) for b in basis(fig3)] == ["D_1", "D_2", "D_3", "R_{2,3}", "E_{-3,3}", "R±_{1,3}"]


def test_dimension_is_edges_plus_vertices(fig3, path3, edge_and_triangle):
    for p in (fig3, path3, edge_and_triangle):
        g = build_relation_graph(p)
        assert LieAlgebra(p).dim == len(g.edges) + len(g.vertices)


def test_one_edge_commutator(one_edge):
    alg = LieAlgebra(one_edge)
    assert alg.commutator_rows([1, 1, 1]) == [[0, 0, 1], [0, 0, 1], [-1, -1, 0]]


def test_one_edge_extended_matrix(one_edge):
    alg = LieAlgebra(one_edge)
    phi = {BasisElement(DIAG, 1): 1, BasisElement(SOLID_C, 1, 2): 1}
    m = alg.extended_matrix(phi)
    assert m.to_rows() == [[0, 1, 0, 1], [-1, 0, 0, 1], [0, 0, 0, 1], [-1, -1, -1, 0]]
    assert determinant(m) == 1


def test_type_d_solid_element():
    p = from_generators("D", 2, [(-1, 2)])
    assert basis(p)[-1] == BasisElement(SOLID_D, 2, 1)
    assert LieAlgebra(p).commutator_rows([1, 1, 1]) == [[0, 0, 1], [0, 0, 1], [-1, -1, 0]]


def test_loops_only_in_type_c():
    c = from_generators("C", 1, [(-1, 1)])
    assert basis(c) == (BasisElement(DIAG, 1), BasisElement(LOOP, 1))


def test_type_b_relating_zero_unsupported():
    p = from_generators("B", 1, [(-1, 0)])
    with pytest.raises(UnsupportedPoset):
        basis(p)


def test_phi_matrix_block_is_m_matrix(fig3):
    # with phi = 1 on every element, the (edge, diagonal) block of phi(C) is M(G)
    alg = LieAlgebra(fig3)
    rows = alg.commutator_rows([1] * alg.dim)
    n = fig3.n
    block = [row[:n] for row in rows[n:]]
    assert block == m_rows(build_relation_graph(fig3))
    assert rank(alg.commutator_matrix(ones(alg))) == 2 * rank(m_matrix(build_relation_graph(fig3)))


def test_realized_matrices_commute_like_structure(fig3):
    alg = LieAlgebra(fig3)
    size = 2 * fig3.n
    for a in range(alg.dim):
        for b in range(alg.dim):
            ma, mb = realize(alg.basis[a], "C", fig3.n), realize(alg.basis[b], "C", fig3.n)
            prod = [[sum(ma[i, k] * mb[k, j] - mb[i, k] * ma[k, j] for k in range(size))
                     for j in range(size)] for i in range(size)]
            expect = [[0] * size for _ in range(size)]
            for k, c in alg.bracket_coeffs(a, b).items():
                mk = realize(alg.basis[k], "C", fig3.n)
                for i in range(size):
                    for j in range(size):
                        expect[i][j] += c * mk[i, j]
            assert prod == expect


def test_realized_matrix_is_in_sp():
    # X^T J + J X = 0 for J antidiagonal with signs (+ on top half)
    n = 2
    size = 2 * n
    J = [[0] * size for _ in range(size)]
    for i in range(n):
        J[i][size - 1 - i] = 1
        J[size - 1 - i][i] = -1
    for e in (BasisElement(DIAG, 1), BasisElement(DASHED, 1, 2), BasisElement(LOOP, 2),
              BasisElement(SOLID_C, 1, 2)):
        X = realize(e, "C", n)
        lhs = [[sum(X[k, i] * J[k][j] + J[i][k] * X[k, j] for k in range(size)) for j in range(size)]
               for i in range(size)]
        assert all(v == 0 for row in lhs for v in row), e


def test_jacobi_on_examples(fig3, edge_and_triangle):
    assert LieAlgebra(fig3).jacobi_defects() == []
    assert LieAlgebra(edge_and_triangle).jacobi_defects() == []


def test_closure_violation_detected(one_edge):
    alg = LieAlgebra(one_edge)
    with pytest.raises(ClosureViolation):
        alg.decompose({(1, 1): 5})
    with pytest.raises(ClosureViolation):
        alg.decompose({(-1, -1): 1})  # half of D_1


def test_commutator_antisymmetric():
    a = support(BasisElement(DIAG, 1))
    b = support(BasisElement(SOLID_C, 1, 2))
    ab, ba = commutator(a, b), commutator(b, a)
    assert ab == {k: -v for k, v in ba.items()}


def test_even_dimension_has_no_extended_matrix(fig3):
    with pytest.raises(EvenDimension):
        LieAlgebra(fig3).extended_rows([1] * 6)
