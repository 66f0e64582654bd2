from rinehart import catalog
from rinehart.cecomplex import ce_dims
from rinehart.extensions import extension_from_k_indices
from rinehart.hochschild import (check_e1, check_e2, five_term, hs_filtration,
                                 hs_pages, hs_report, k_cohomology_dims)


def make(name):
    for ext_name, entry, k_indices, sigma in catalog.extension_entries():
        if ext_name == name:
            return entry, extension_from_k_indices(entry.algebroid, k_indices, sigma)
    raise KeyError(name)


def test_filtration_k0_concentrates_on_diagonal():
    entry, E = make("ext_k0")
    hf = hs_filtration(E, entry.representation)
    # K = 0: gr concentrates on p = degree
    for (p, s), (got, _) in hf.graded.items():
        if got:
            assert p == s
    assert hf.graded_ok


def test_filtration_q0_concentrates_at_p0():
    entry, E = make("ext_q0")
    hf = hs_filtration(E, entry.representation)
    for (p, s), (got, _) in hf.graded.items():
        if got:
            assert p == 0
    assert hf.graded_ok


def test_filtration_aff1_degree_one_dims():
    entry, E = make("ext_aff1")
    hf = hs_filtration(E, entry.representation)
    chain = [hf.filtered.space(1, p).dim for p in range(3)]
    assert chain == [2, 1, 0]
    assert hf.graded_ok


def test_pages_aff1():
    entry, E = make("ext_aff1")
    hp = hs_pages(E, entry.representation, r_max=2)
    assert hp.page(1).dims() == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    assert hp.page(2).dims() == {(0, 0): 1, (1, 0): 1}
    assert hp.einf.dims() == {(0, 0): 1, (1, 0): 1}
    assert hp.converged
    assert hp.convergence == {0: (1, 1), 1: (1, 1), 2: (0, 0)}


def test_pages_k0_degenerate():
    entry, E = make("ext_k0")
    hp = hs_pages(E, entry.representation, r_max=2)
    assert hp.page(2).dims() == {(0, 0): 1, (1, 0): 1}
    assert hp.converged


def test_pages_q0_trivial_filtration():
    entry, E = make("ext_q0")
    hp = hs_pages(E, entry.representation)
    assert hp.einf.dims() == {(0, 0): 1, (0, 1): 2, (0, 2): 2, (0, 3): 1}
    assert hp.stable_at == 1
    assert hp.converged


def test_pages_heisenberg_transgression():
    entry, E = make("ext_heis_center")
    hp = hs_pages(E, entry.representation, r_max=3)
    e2 = {(0, 0): 1, (1, 0): 2, (2, 0): 1, (0, 1): 1, (1, 1): 2, (2, 1): 1}
    assert hp.page(2).dims() == e2
    # d2 transgresses K^* onto Lambda^2 Q^*: two classes die
    assert hp.einf.dims() == {(0, 0): 1, (1, 0): 2, (1, 1): 2, (2, 1): 1}
    d2 = hp.page(2).diffs[(0, 1)]
    from rinehart.linalg import rank
    assert rank(d2) == 1
    assert hp.convergence == {0: (1, 1), 1: (2, 2), 2: (2, 2), 3: (1, 1)}


def test_pages_fatpoint():
    entry, E = make("ext_fatpoint")
    hp = hs_pages(E, entry.representation, r_max=2)
    assert k_cohomology_dims(E, entry.representation) == [2, 2]
    assert hp.page(2).dims() == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert hp.converged
    assert ce_dims(entry.algebroid, entry.representation) == [1, 2, 1]


def test_e1_identification_whole_corpus():
    for name, entry, k_indices, sigma in catalog.extension_entries():
        E = extension_from_k_indices(entry.algebroid, k_indices, sigma)
        cert = check_e1(E, entry.representation)
        assert cert.ok, name


def test_e2_identification_whole_corpus():
    for name, entry, k_indices, sigma in catalog.extension_entries():
        E = extension_from_k_indices(entry.algebroid, k_indices, sigma)
        cert = check_e2(E, entry.representation)
        assert cert.ok, name


def test_e1_aff1_table():
    entry, E = make("ext_aff1")
    cert = check_e1(E, entry.representation)
    assert cert.table[(0, 0)] == (1, 1)
    assert cert.table[(1, 1)] == (1, 1)


def test_e2_aff1_table():
    entry, E = make("ext_aff1")
    cert = check_e2(E, entry.representation)
    assert {pq: got for pq, (got, _) in cert.table.items()} == \
        {(0, 0): 1, (1, 0): 1, (0, 1): 0, (1, 1): 0}


def test_five_term_whole_corpus():
    for name, entry, k_indices, sigma in catalog.extension_entries():
        E = extension_from_k_indices(entry.algebroid, k_indices, sigma)
        ft = five_term(E, entry.representation)
        assert ft.all_exact, name


def test_five_term_aff1_dims():
    entry, E = make("ext_aff1")
    ft = five_term(E, entry.representation)
    assert ft.node_dims == (1, 1, 0, 0, 0)


def test_five_term_heisenberg_dims():
    entry, E = make("ext_heis_center")
    ft = five_term(E, entry.representation)
    assert ft.node_dims == (2, 2, 1, 1, 2)
    from rinehart.linalg import rank
    assert rank(ft.maps.transgression) == 1


def test_hs_report_bundle():
    entry, E = make("ext_heis_center")
    hp, e1, e2, ft = hs_report(E, entry.representation)
    assert hp.converged and e1.ok and e2.ok and ft.all_exact


def test_full_spectral_machinery_over_f2():
    # same central extension, coefficients in F_2: the engine runs entirely mod 2
    entry = catalog.heisenberg3_f2()
    E = extension_from_k_indices(entry.algebroid, [2])
    hp = hs_pages(E, entry.representation, r_max=3)
    assert hp.filtration.graded_ok
    assert check_e1(E, entry.representation, precomputed=hp).ok
    assert check_e2(E, entry.representation, precomputed=hp).ok
    assert hp.converged
    assert five_term(E, entry.representation, precomputed=hp).all_exact
    assert hp.convergence == {0: (1, 1), 1: (2, 2), 2: (2, 2), 3: (1, 1)}
