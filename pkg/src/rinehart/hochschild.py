"""The spectral sequence of an extension of algebroids: filtration of the CE
complex, pages, page identifications, convergence, and the five-term sequence.

In the basis adapted to the splitting (kernel sections first), a coordinate
q-form lies in filtration level p exactly when every tuple carrying a nonzero
coordinate contains at least p quotient-block indices; this is the coordinate
form of "annihilated by the wedge of q-p+1 kernel sections" for free modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import AModule
from .algebroid import Representation
from .cecomplex import ce_complex, ce_dims
from .complexes import (EdgeMaps, FilteredComplex, SpectralPage, edge_maps,
                        spectral_pages)
from .errors import (DimMismatch, ExactnessFailure, FiltrationNotPreserved,
                     IncompatibleFiltration)
from .extensions import (AdaptedExtension, ExtensionTriple, adapt,
                         induced_q_rep_adapted, k_cohomology_data)
from .linalg import Matrix, Subspace


@dataclass
class HSFiltration:
    adapted: AdaptedExtension
    ce: object                    # CEComplex of the adapted algebroid
    filtered: FilteredComplex
    graded: dict                  # (p, degree) -> (dim gr_p, expected dim)

    @property
    def graded_ok(self) -> bool:
        return all(a == b for a, b in self.graded.values())


def hs_filtration(E: ExtensionTriple, R: Representation) -> HSFiltration:
    ad = adapt(E, R)
    ce = ce_complex(ad.L_ad, ad.R_ad)
    cx = ce.complex
    f = cx.field
    N = R.module.dim
    c, r = ad.c, ad.r
    n = ad.L_ad.n
    filtration = []
    for s in range(n + 1):
        tuples = ce.tuples[s]
        chain = []
        for p in range(r + 1):
            vecs = []
            for ti, T in enumerate(tuples):
                q_count = sum(1 for t in T if t >= c)
                if q_count >= p:
                    for mu in range(N):
                        idx = ti * N + mu
                        vecs.append(tuple(f.one if t == idx else f.zero
                                          for t in range(cx.dims[s])))
            chain.append(Subspace(f, cx.dims[s], vecs))
        filtration.append(chain)
    try:
        filtered = FilteredComplex(cx, filtration)
    except IncompatibleFiltration as e:
        raise FiltrationNotPreserved(str(e)) from e
    graded = {}
    for s in range(n + 1):
        for p in range(r + 1):
            got = filtered.space(s, p).dim - filtered.space(s, p + 1).dim
            expected = N * comb(r, p) * comb(c, s - p) if 0 <= s - p <= c else 0
            graded[(p, s)] = (got, expected)
            if got != expected:
                raise DimMismatch(("gr", p, s), got, expected)
    return HSFiltration(ad, ce, filtered, graded)


@dataclass
class HSPages:
    filtration: HSFiltration
    pages: list                   # [E_1, ..., E_{r_max}]
    einf: SpectralPage
    stable_at: int
    convergence: dict             # n -> (sum of E_inf dims, dim H^n(L; M))

    @property
    def converged(self) -> bool:
        return all(a == b for a, b in self.convergence.values())

    def page(self, r: int) -> SpectralPage:
        return self.pages[r - 1]


def hs_pages(E: ExtensionTriple, R: Representation, r_max: int | None = None) -> HSPages:
    hf = hs_filtration(E, R)
    if r_max is None:
        r_max = hf.filtered.top_index + 1
    pages, einf, report = spectral_pages(hf.filtered, r_max)
    # sanity: the adapted complex computes the same dims as the original basis
    original = ce_dims(E.L, R)
    adapted = [hn for _, (_, hn) in sorted(report.convergence.items())]
    if original != adapted:
        raise DimMismatch("adapted-vs-original CE dims", adapted, original)
    return HSPages(hf, pages, einf, report.stable_at, report.convergence)


def _module_tensor_forms(ad: AdaptedExtension, p: int) -> tuple[AModule, list]:
    """M (x) Lambda^p Q^* as a module with the K-action rho (x) id.

    The K-action on the quotient factor vanishes (the kernel is an ideal), so
    only the coefficient action remains; that vanishing is asserted from the
    adapted brackets.
    """
    f = ad.L_ad.field
    alg = ad.L_ad.algebra
    zero_vec = tuple(f.zero for _ in range(alg.dim))
    for i in range(ad.c):
        for j in range(ad.r):
            for l in range(ad.c, ad.L_ad.n):
                if ad.L_ad.bracket[i][ad.c + j][l] != zero_vec:
                    raise FiltrationNotPreserved(
                        "kernel action on the quotient does not vanish")
    copies = comb(ad.r, p)
    N = ad.rep.module.dim

    def blow_up(mat: Matrix) -> Matrix:
        rows = [[f.zero] * (copies * N) for _ in range(copies * N)]
        for t in range(copies):
            for a in range(N):
                for b in range(N):
                    v = mat.entries[a][b]
                    if v:
                        rows[t * N + a][t * N + b] = v
        return Matrix.from_rows(f, rows) if copies * N else Matrix.zero(f, 0, 0)

    mod = AModule(alg, copies * N, [blow_up(m) for m in ad.rep.module.action])
    rho = [blow_up(ad.rho_K.rho[i]) for i in range(ad.c)]
    return mod, rho


@dataclass
class PageCertificate:
    table: dict      # (p, q) -> (page dim, independently computed dim)

    @property
    def ok(self) -> bool:
        return all(a == b for a, b in self.table.values())


def check_e1(E: ExtensionTriple, R: Representation, precomputed: HSPages | None = None) -> PageCertificate:
    """E_1^{p,q} against H^q(K; M (x) Lambda^p Q^*) computed independently."""
    hp = precomputed or hs_pages(E, R, r_max=1)
    ad = hp.filtration.adapted
    e1 = hp.page(1)
    table = {}
    for p in range(ad.r + 1):
        mod, rho = _module_tensor_forms(ad, p)
        rep = Representation(mod, rho)
        dims = ce_dims(ad.K_sub, rep)
        for q in range(ad.c + 1):
            got = e1.dim(p, q)
            expected = dims[q]
            table[(p, q)] = (got, expected)
            if got != expected:
                raise DimMismatch(("E1", p, q), got, expected)
    return PageCertificate(table)


def check_e2(E: ExtensionTriple, R: Representation, precomputed: HSPages | None = None) -> PageCertificate:
    """E_2^{p,q} against H^p(Q; H^q(K; M)) via the induced representation."""
    hp = precomputed or hs_pages(E, R, r_max=2)
    ad = hp.filtration.adapted
    e2 = hp.page(2) if len(hp.pages) >= 2 else hp.pages[-1]
    if e2.r != 2:
        pages, _, _ = spectral_pages(hp.filtration.filtered, 2)
        e2 = pages[1]
    table = {}
    for q in range(ad.c + 1):
        rep_q = induced_q_rep_adapted(ad, q)
        dims = ce_dims(ad.Q_quot, rep_q)
        for p in range(ad.r + 1):
            got = e2.dim(p, q)
            expected = dims[p] if p <= ad.r else 0
            table[(p, q)] = (got, expected)
            if got != expected:
                raise DimMismatch(("E2", p, q), got, expected)
    return PageCertificate(table)


@dataclass
class FiveTerm:
    maps: EdgeMaps
    node_dims: tuple
    exact: tuple

    @property
    def all_exact(self):
        return all(self.exact)


def five_term(E: ExtensionTriple, R: Representation,
              precomputed: HSPages | None = None) -> FiveTerm:
    """Materialize 0 -> E2^{1,0} -> H^1 -> E2^{0,1} -> E2^{2,0} -> H^2 and
    verify exactness at each interior node."""
    hp = precomputed or hs_pages(E, R, r_max=2)
    em = edge_maps(hp.filtration.filtered)
    ft = FiveTerm(em, em.node_dims, em.exact)
    if not ft.all_exact:
        bad = [i for i, ok in enumerate(em.exact) if not ok]
        raise ExactnessFailure(f"five-term sequence fails at node(s) {bad}", witness=bad)
    return ft


def hs_report(E: ExtensionTriple, R: Representation, r_max: int | None = None):
    """One-stop structure for the CLI: filtration, pages, certificates, five-term."""
    hp = hs_pages(E, R, r_max)
    e1 = check_e1(E, R, precomputed=hp if len(hp.pages) >= 1 else None)
    e2 = check_e2(E, R, precomputed=hp if len(hp.pages) >= 2 else None)
    ft = five_term(E, R, precomputed=hp)
    return hp, e1, e2, ft


def k_cohomology_dims(E: ExtensionTriple, R: Representation) -> list[int]:
    """dims of H^q(K; M), radiating the data check_e2 builds on."""
    ad = adapt(E, R)
    out = []
    for q in range(ad.c + 1):
        _, _, _, reps = k_cohomology_data(ad, q)
        out.append(len(reps))
    return out
