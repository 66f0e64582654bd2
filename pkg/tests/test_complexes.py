from fractions import Fraction

import pytest

from rinehart.complexes import (CochainComplex, FilteredComplex, cohomology_at,
                                edge_maps, spectral_pages, total_cohomology_dims)
from rinehart.errors import (ConstructionInconsistent, DegreeOutOfRange,
                             IncompatibleFiltration)
from rinehart.fields import QQ
from rinehart.linalg import Matrix, Subspace


def qmat(rows):
    return Matrix.from_rows(QQ, [[Fraction(x) for x in r] for r in rows])


def single_space():
    return CochainComplex(QQ, [1], [])


def two_term_identity():
    return CochainComplex(QQ, [1, 1], [qmat([[1]])])


def abelian2_ce():
    # CE complex of the abelian 2-dim Lie algebra, trivial coefficients: all d = 0
    return CochainComplex(QQ, [1, 2, 1], [Matrix.zero(QQ, 2, 1), Matrix.zero(QQ, 1, 2)])


def test_cohomology_single_space():
    assert cohomology_at(single_space(), 0) == (1, [(Fraction(1),)])


def test_cohomology_exact_two_term():
    c = two_term_identity()
    assert total_cohomology_dims(c) == [0, 0]


def test_cohomology_abelian_binomials():
    assert total_cohomology_dims(abelian2_ce()) == [1, 2, 1]


def test_degree_out_of_range():
    with pytest.raises(DegreeOutOfRange):
        cohomology_at(single_space(), 1)


def test_dd_nonzero_rejected():
    with pytest.raises(ConstructionInconsistent):
        CochainComplex(QQ, [1, 1, 1], [qmat([[1]]), qmat([[1]])])


def trivial_filtration(c):
    return FilteredComplex(c, [[Subspace.full(QQ, d)] for d in c.dims])


def test_trivial_filtration_degenerates_at_e1():
    c = abelian2_ce()
    fc = trivial_filtration(c)
    pages, einf, report = spectral_pages(fc, 2)
    assert pages[0].dims() == {(0, 0): 1, (0, 1): 2, (0, 2): 1}
    assert pages[0].dims() == einf.dims()
    assert report.stable_at == 1
    assert report.converged


def test_two_step_filtration_of_exact_complex_collapses():
    c = two_term_identity()
    filt = [
        [Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
        [Subspace.full(QQ, 1), Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
    ]
    fc = FilteredComplex(c, filt)
    _, einf, report = spectral_pages(fc, 2)
    assert einf.dims() == {}
    assert report.converged


def test_incompatible_filtration_detected():
    c = two_term_identity()
    # F^1 = whole space in degree 0 but zero in degree 1: d does not preserve it
    filt = [
        [Subspace.full(QQ, 1), Subspace.full(QQ, 1)],
        [Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
    ]
    with pytest.raises(IncompatibleFiltration):
        FilteredComplex(c, filt)


def aff1_ce():
    # CE complex of the 2-dim solvable algebra [e1,e2] = e1, trivial coefficients:
    # d0 = 0, d1(e1*) = -e1*^e2*, d1(e2*) = 0
    return CochainComplex(QQ, [1, 2, 1], [Matrix.zero(QQ, 2, 1), qmat([[-1, 0]])])


def aff1_hs_filtration():
    # filtration of the aff(1) complex by number of e2*-factors (K = span e1)
    c = aff1_ce()
    one, zero = Fraction(1), Fraction(0)
    filt = [
        [Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
        [Subspace.full(QQ, 2), Subspace(QQ, 2, [(zero, one)]), Subspace.zero(QQ, 2)],
        [Subspace.full(QQ, 1), Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
    ]
    return FilteredComplex(c, filt)


def test_aff1_extension_pages():
    fc = aff1_hs_filtration()
    pages, einf, report = spectral_pages(fc, 2)
    assert pages[0].dims() == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    assert pages[1].dims() == {(0, 0): 1, (1, 0): 1}
    assert einf.dims() == {(0, 0): 1, (1, 0): 1}
    assert report.converged
    assert [a for a, _ in sorted(report.convergence.items())] is not None
    assert {n: ab for n, ab in report.convergence.items()} == {0: (1, 1), 1: (1, 1), 2: (0, 0)}


def test_pages_invariant_under_basis_permutation():
    fc = aff1_hs_filtration()
    c = fc.complex
    one, zero = Fraction(1), Fraction(0)
    filt2 = [
        [Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
        [Subspace(QQ, 2, [(zero, one), (one, zero)]), Subspace(QQ, 2, [(zero, one)]),
         Subspace.zero(QQ, 2)],
        [Subspace.full(QQ, 1), Subspace.full(QQ, 1), Subspace.zero(QQ, 1)],
    ]
    fc2 = FilteredComplex(c, filt2)
    p1, e1, _ = spectral_pages(fc, 3)
    p2, e2, _ = spectral_pages(fc2, 3)
    assert e1.dims() == e2.dims()
    assert all(a.dims() == b.dims() for a, b in zip(p1, p2))


def test_edge_maps_trivial_filtration_identity_shaped():
    c = aff1_ce()
    fc = trivial_filtration(c)
    em = edge_maps(fc)
    # restriction H^1 -> E2^{0,1} is the identity on the shared representatives
    assert em.restriction.rows == em.restriction.cols == 1
    assert em.restriction.entries[0][0] == Fraction(1)
    assert em.inflation1.cols == 0
    assert em.all_exact


def test_edge_maps_aff1_extension():
    em = edge_maps(aff1_hs_filtration())
    # 0 -> k -> k -> 0 -> 0 -> 0
    assert em.node_dims == (1, 1, 0, 0, 0)
    assert em.all_exact
