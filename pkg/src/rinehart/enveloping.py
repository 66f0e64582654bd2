"""Truncated universal enveloping algebra with PBW straightening, the
homological complex U (x) Lambda^* L resolving A, and the transfer of its
U-linear dual onto the CE complex.

PBW normal form: algebra coefficients leftmost, then sections in ascending
index.  Products are rewritten with the two defining relation families

    s f - f s = a(s)(f)          s_i s_j - s_j s_i = [s_i, s_j]

by innermost-leftmost reduction with memoized monomial products.  Each rewrite
strictly lowers (degree, inversion count), so rewriting terminates.  Products
whose normal form would exceed the cutoff are flagged as overflow, never
silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .algebroid import LieRinehartAlgebroid, Representation
from .cecomplex import ce_complex, insert_index
from .complexes import CochainComplex, cohomology_at
from .errors import ExactnessFailure, MismatchAt
from .linalg import Matrix, Subspace, image_subspace, kernel_subspace, rank


def _monomials(n, dmax):
    """All exponent tuples with total degree <= dmax, ascending degree then lex."""
    out = []
    for deg in range(dmax + 1):
        out.extend(_monomials_of_degree(n, deg))
    return out


def _monomials_of_degree(n, deg):
    if n == 0:
        return [()] if deg == 0 else []
    out = []
    for first in range(deg, -1, -1):
        for rest in _monomials_of_degree(n - 1, deg - first):
            out.append((first,) + rest)
    return out


class TruncatedEnveloping:
    """U(L) up to PBW degree d: basis {e_a s^alpha : |alpha| <= d}."""

    def __init__(self, L: LieRinehartAlgebroid, cutoff: int):
        if cutoff < 1:
            raise ValueError("cutoff must be >= 1")
        self.L = L
        self.field = L.field
        self.cutoff = cutoff
        self.alg = L.algebra
        m, n = L.m, L.n
        self.basis = [(a, alpha) for alpha in _monomials(n, cutoff) for a in range(m)]
        self.index = {mono: i for i, mono in enumerate(self.basis)}
        assert len(self.basis) == m * comb(n + cutoff, cutoff)
        self._memo_s = {}
        self._memo_alg = {}

    @property
    def dim(self):
        return len(self.basis)

    def degree(self, mono):
        return sum(mono[1])

    # -- elements are dicts {monomial: coefficient} -------------------------

    def _add_into(self, acc, elem, scale=None):
        for mono, c in elem.items():
            v = c if scale is None else c * scale
            if mono in acc:
                acc[mono] = acc[mono] + v
            else:
                acc[mono] = v

    def _clean(self, acc):
        return {mono: c for mono, c in acc.items() if c}

    def unit(self):
        return {(a, (0,) * self.L.n): self.alg.unit[a]
                for a in range(self.L.m) if self.alg.unit[a]}

    def section(self, i):
        """s_i as an element (the unit coefficient spread over the A-basis)."""
        alpha = tuple(1 if t == i else 0 for t in range(self.L.n))
        return {(a, alpha): self.alg.unit[a] for a in range(self.L.m) if self.alg.unit[a]}

    def coefficient(self, f_coords):
        zero_alpha = (0,) * self.L.n
        return {(a, zero_alpha): c for a, c in enumerate(f_coords) if c}

    def rmul_alg_mono(self, mono, b):
        """Normal form of (e_a s^alpha) e_b; the degree never grows."""
        key = (mono, b)
        hit = self._memo_alg.get(key)
        if hit is not None:
            return hit
        a, alpha = mono
        if not any(alpha):
            out = self._clean({(k, alpha): c for k, c in enumerate(self.alg.mult[a][b]) if c})
        else:
            j = max(t for t in range(self.L.n) if alpha[t])
            alpha_prev = tuple(x - 1 if t == j else x for t, x in enumerate(alpha))
            head = self.rmul_alg_mono((a, alpha_prev), b)
            out_acc = {}
            t1, ov = self.rmul_s_elem(head, j)
            assert not ov
            self._add_into(out_acc, t1)
            deriv = self.L.anchors[j].apply(self.alg.basis_vector(b))
            for c_idx, cv in enumerate(deriv):
                if cv:
                    self._add_into(out_acc, self.rmul_alg_mono((a, alpha_prev), c_idx), cv)
            out = self._clean(out_acc)
        self._memo_alg[key] = out
        return out

    def rmul_s_mono(self, mono, j):
        """Normal form of (e_a s^alpha) s_j, with an overflow flag."""
        key = (mono, j)
        hit = self._memo_s.get(key)
        if hit is not None:
            return hit
        a, alpha = mono
        deg = sum(alpha)
        top = max((t for t in range(self.L.n) if alpha[t]), default=-1)
        if top <= j:
            if deg + 1 > self.cutoff:
                out = ({}, True)
            else:
                alpha_new = tuple(x + 1 if t == j else x for t, x in enumerate(alpha))
                out = ({(a, alpha_new): self.field.one}, False)
        else:
            l = top
            alpha_prev = tuple(x - 1 if t == l else x for t, x in enumerate(alpha))
            swapped, ov1 = self.rmul_s_mono((a, alpha_prev), j)
            t1, ov2 = self.rmul_s_elem(swapped, l)
            acc = {}
            self._add_into(acc, t1)
            # bracket correction [s_l, s_j], degree drops by one
            for t_idx in range(self.L.n):
                fl = self.L.bracket[l][j][t_idx]
                if not any(fl):
                    continue
                for c_idx, cv in enumerate(fl):
                    if cv:
                        lowered = self.rmul_alg_mono((a, alpha_prev), c_idx)
                        piece, ov3 = self.rmul_s_elem(lowered, t_idx)
                        assert not ov3
                        self._add_into(acc, piece, cv)
            out = (self._clean(acc), ov1 or ov2)
        self._memo_s[key] = out
        return out

    def rmul_s_elem(self, elem, j):
        acc = {}
        overflow = False
        for mono, c in elem.items():
            piece, ov = self.rmul_s_mono(mono, j)
            overflow = overflow or ov
            self._add_into(acc, piece, c)
        return self._clean(acc), overflow

    def rmul_alg_elem(self, elem, b):
        acc = {}
        for mono, c in elem.items():
            self._add_into(acc, self.rmul_alg_mono(mono, b), c)
        return self._clean(acc)

    def mul_mono(self, m1, m2):
        """Product of two PBW basis monomials, straightened."""
        b, beta = m2
        out = self.rmul_alg_mono(m1, b)
        overflow = False
        for j in range(self.L.n):
            for _ in range(beta[j]):
                out, ov = self.rmul_s_elem(out, j)
                overflow = overflow or ov
        return out, overflow

    def mul(self, u, v):
        acc = {}
        overflow = False
        for m1, c1 in u.items():
            for m2, c2 in v.items():
                piece, ov = self.mul_mono(m1, m2)
                overflow = overflow or ov
                self._add_into(acc, piece, c1 * c2)
        return self._clean(acc), overflow

    # -- actions, augmentation ----------------------------------------------

    def action_on_algebra(self, mono) -> Matrix:
        """g . f = g f and s . f = a(s)(f), composed along the monomial word."""
        a, alpha = mono
        out = self.alg.mult_matrix(self.alg.basis_vector(a))
        for i in range(self.L.n):
            for _ in range(alpha[i]):
                out = out.mul(self.L.anchors[i])
        return out

    def action_on_module(self, mono, R: Representation) -> Matrix:
        a, alpha = mono
        out = R.module.action[a]
        for i in range(self.L.n):
            for _ in range(alpha[i]):
                out = out.mul(R.rho[i])
        return out

    def element_action_on_module(self, elem, R: Representation) -> Matrix:
        out = Matrix.zero(self.field, R.module.dim, R.module.dim)
        for mono, c in elem.items():
            out = out.add(self.action_on_module(mono, R).scale(c))
        return out

    def augmentation_matrix(self) -> Matrix:
        """epsilon(u) = u . 1 as a map from U-coordinates to A-coordinates."""
        cols = [self.action_on_algebra(mono).apply(self.alg.unit) for mono in self.basis]
        return Matrix.from_rows(self.field, cols).transpose()

    def to_vector(self, elem):
        v = [self.field.zero] * self.dim
        for mono, c in elem.items():
            v[self.index[mono]] = v[self.index[mono]] + c
        return tuple(v)

    def table(self):
        """Deterministic multiplication table: expanded within the cutoff,
        overflow-flagged beyond it."""
        out = {}
        for i1, m1 in enumerate(self.basis):
            for i2, m2 in enumerate(self.basis):
                if self.degree(m1) + self.degree(m2) <= self.cutoff:
                    elem, ov = self.mul_mono(m1, m2)
                    terms = sorted(((self.index[mono], c) for mono, c in elem.items()))
                    out[(i1, i2)] = {"overflow": ov, "terms": terms}
                else:
                    out[(i1, i2)] = {"overflow": True, "terms": None}
        return out


def truncated_enveloping(L: LieRinehartAlgebroid, cutoff: int) -> TruncatedEnveloping:
    return TruncatedEnveloping(L, cutoff)


def augmentation(U: TruncatedEnveloping) -> Matrix:
    return U.augmentation_matrix()


@dataclass
class RinehartComplex:
    """C_i = U(L) (x)_A Lambda^i L with the Koszul-type differential, graded by
    total degree (PBW degree plus homological degree)."""
    U: TruncatedEnveloping
    bases: list      # bases[i] = [(monomial, tuple)] with deg + i <= cutoff
    partials: list   # partials[i]: C_i -> C_{i-1} for i >= 1
    epsilon: Matrix  # on C_0 = U

    def slice_indices(self, i, t):
        return [idx for idx, (mono, _) in enumerate(self.bases[i])
                if self.U.degree(mono) + i <= t]


def rinehart_complex(L: LieRinehartAlgebroid, cutoff: int,
                     U: TruncatedEnveloping | None = None):
    """Build the resolution and certify exactness on every total-degree level
    t <= cutoff; returns (complex, report) or raises ExactnessFailure."""
    U = U or truncated_enveloping(L, cutoff)
    f = L.field
    n = L.n
    bases = []
    for i in range(n + 1):
        monos = [mono for mono in U.basis if U.degree(mono) + i <= cutoff]
        bases.append([(mono, J) for J in combinations(range(n), i) for mono in monos])
    index_maps = [{bj: t for t, bj in enumerate(b)} for b in bases]
    partials = [None]
    for i in range(1, n + 1):
        rows = [[f.zero] * len(bases[i]) for _ in range(len(bases[i - 1]))]
        for col, (mono, J) in enumerate(bases[i]):
            for pos in range(i):
                jx = J[pos]
                rest = J[:pos] + J[pos + 1:]
                moved, ov = U.rmul_s_mono(mono, jx)
                assert not ov, "differential escaped the certified levels"
                sgn = 1 if pos % 2 == 0 else -1
                for m2, c in moved.items():
                    row = index_maps[i - 1][(m2, rest)]
                    rows[row][col] += c if sgn == 1 else -c
            for p1 in range(i):
                for p2 in range(p1 + 1, i):
                    sgn_ij = 1 if (p1 + p2) % 2 == 0 else -1
                    rest = tuple(x for k, x in enumerate(J) if k not in (p1, p2))
                    coeffs = L.bracket[J[p1]][J[p2]]
                    for l in range(n):
                        fl = coeffs[l]
                        if not any(fl):
                            continue
                        ins = insert_index(l, rest)
                        if ins is None:
                            continue
                        pos_l, sgn_sort = ins
                        merged = rest[:pos_l] + (l,) + rest[pos_l:]
                        for c_idx, cv in enumerate(fl):
                            if not cv:
                                continue
                            shifted = U.rmul_alg_mono(mono, c_idx)
                            s = sgn_ij * sgn_sort
                            for m2, c in shifted.items():
                                row = index_maps[i - 1][(m2, merged)]
                                val = c * cv
                                rows[row][col] += val if s == 1 else -val
        partials.append(Matrix.from_rows(f, rows) if rows else
                        Matrix.zero(f, 0, len(bases[i])))
    eps = U.augmentation_matrix()
    cx = RinehartComplex(U, bases, partials, eps)
    # complex identities
    for i in range(2, n + 1):
        if not partials[i - 1].mul(partials[i]).is_zero():
            raise ExactnessFailure("partial o partial != 0", witness=("dd", i))
    if n >= 1 and not eps.mul(partials[1]).is_zero():
        raise ExactnessFailure("epsilon o partial != 0 on C_1", witness=("eps", 1))
    report = check_exactness(cx)
    return cx, report


def _submatrix(m: Matrix, row_idx, col_idx) -> Matrix:
    return Matrix.from_rows(m.field, [[m.entries[r][c] for c in col_idx] for r in row_idx]) \
        if row_idx and col_idx else Matrix.zero(m.field, len(row_idx), len(col_idx))


@dataclass
class ExactnessReport:
    cutoff: int
    homology: dict       # (t, i) -> dim H_i of the level-t slice (i >= 1)
    augmented: dict      # t -> (dim ker eps|_t, rank partial_1|_t, rank eps|_t)

    @property
    def ok(self):
        if any(v for v in self.homology.values()):
            return False
        return all(kd == r1 for kd, r1, _ in self.augmented.values())


def check_exactness(cx: RinehartComplex) -> ExactnessReport:
    U = cx.U
    n = U.L.n
    f = U.field
    homology = {}
    augmented = {}
    for t in range(U.cutoff + 1):
        slices = [cx.slice_indices(i, t) for i in range(n + 1)]
        mats = {}
        for i in range(1, n + 1):
            sub = _submatrix(cx.partials[i], slices[i - 1], slices[i])
            # the differential must preserve the filtration level
            full_cols = slices[i]
            outside_rows = [r for r in range(len(cx.bases[i - 1])) if r not in set(slices[i - 1])]
            if outside_rows and full_cols:
                esc = _submatrix(cx.partials[i], outside_rows, full_cols)
                if not esc.is_zero():
                    raise ExactnessFailure("differential does not preserve the filtration",
                                           witness=("filtration", t, i))
            mats[i] = sub
        for i in range(1, n + 1):
            dim_i = len(slices[i])
            r_out = rank(mats[i]) if dim_i else 0
            r_in = rank(mats[i + 1]) if i + 1 <= n else 0
            h = dim_i - r_out - r_in
            homology[(t, i)] = h
            if h:
                raise ExactnessFailure(f"homology {h} at level t={t}, degree {i}",
                                       witness=(t, i))
        eps_slice = _submatrix(cx.epsilon, list(range(U.alg.dim)), slices[0])
        r_eps = rank(eps_slice)
        ker_eps = len(slices[0]) - r_eps
        r1 = rank(mats[1]) if n >= 1 else 0
        augmented[t] = (ker_eps, r1, r_eps)
        if ker_eps != r1:
            raise ExactnessFailure(f"augmented complex not exact at C_0, level {t}",
                                   witness=(t, 0))
    return ExactnessReport(U.cutoff, homology, augmented)


@dataclass
class HomIsoCertificate:
    cutoff: int
    degrees: list        # CE degrees compared
    transferred: list    # matrices obtained from the resolution side

    @property
    def ok(self):
        return True      # construction raises on any mismatch


def hom_complex_iso(L: LieRinehartAlgebroid, R: Representation, cutoff: int,
                    U: TruncatedEnveloping | None = None) -> HomIsoCertificate:
    """Transfer Hom_U(C_*, M) onto M (x) Lambda^* L^* along phi -> phi(1 (x) -)
    and check the transferred differential equals d_rho entry by entry."""
    U = U or truncated_enveloping(L, cutoff)
    n = L.n
    N = R.module.dim
    f = L.field
    ce = ce_complex(L, R)
    transferred = []
    for i in range(n):
        tuples_i = ce.tuples[i]
        tuples_next = ce.tuples[i + 1]
        index_i = {t: k for k, t in enumerate(tuples_i)}
        rows = [[f.zero] * (N * len(tuples_i)) for _ in range(N * len(tuples_next))]
        for ti, T in enumerate(tuples_next):
            # partial(1 (x) s_T) expanded into (monomial, tuple) pairs
            for pos in range(i + 1):
                jx = T[pos]
                rest = T[:pos] + T[pos + 1:]
                sgn = 1 if pos % 2 == 0 else -1
                col_t = index_i[rest]
                # u = s_jx acting on M through the module structure
                act = U.element_action_on_module(U.section(jx), R)
                for nu in range(N):
                    for mu in range(N):
                        v = act.entries[nu][mu]
                        if v:
                            rows[ti * N + nu][col_t * N + mu] += v if sgn == 1 else -v
            for p1 in range(i + 1):
                for p2 in range(p1 + 1, i + 1):
                    sgn_ij = 1 if (p1 + p2) % 2 == 0 else -1
                    rest = tuple(x for k, x in enumerate(T) if k not in (p1, p2))
                    coeffs = L.bracket[T[p1]][T[p2]]
                    for l in range(n):
                        fl = coeffs[l]
                        if not any(fl):
                            continue
                        ins = insert_index(l, rest)
                        if ins is None:
                            continue
                        pos_l, sgn_sort = ins
                        merged = rest[:pos_l] + (l,) + rest[pos_l:]
                        col_t = index_i[merged]
                        act = R.module.act_vec(fl)
                        s = sgn_ij * sgn_sort
                        for nu in range(N):
                            for mu in range(N):
                                v = act.entries[nu][mu]
                                if v:
                                    rows[ti * N + nu][col_t * N + mu] += v if s == 1 else -v
        got = Matrix.from_rows(f, rows)
        want = ce.complex.diff(i)
        if got.entries != want.entries:
            witness = next(((r, c) for r in range(got.rows) for c in range(got.cols)
                            if got.entries[r][c] != want.entries[r][c]), None)
            raise MismatchAt(i, witness)
        transferred.append(got)
    return HomIsoCertificate(cutoff, list(range(n + 1)), transferred)


def ext_dims(L: LieRinehartAlgebroid, R: Representation, cutoff: int):
    """Ext^i over U(L) of (A, M) through the resolution, checked against the
    CE pipeline dim-by-dim and as subquotients."""
    U = truncated_enveloping(L, cutoff)
    _, report = rinehart_complex(L, cutoff, U=U)
    assert report.ok
    cert = hom_complex_iso(L, R, cutoff, U=U)
    ce = ce_complex(L, R)
    hom_cx = CochainComplex(L.field, list(ce.complex.dims), cert.transferred)
    out = []
    for i in range(L.n + 1):
        dim_hom, _ = cohomology_at(hom_cx, i)
        dim_ce, _ = cohomology_at(ce.complex, i)
        if dim_hom != dim_ce:
            raise MismatchAt(i, ("ext-vs-ce", dim_hom, dim_ce))
        ker_h = kernel_subspace(hom_cx.diff(i))
        ker_c = kernel_subspace(ce.complex.diff(i))
        im_h = image_subspace(hom_cx.diff(i - 1)) if i else Subspace.zero(L.field, ce.complex.dims[0])
        im_c = image_subspace(ce.complex.diff(i - 1)) if i else Subspace.zero(L.field, ce.complex.dims[0])
        if not (ker_h.equals(ker_c) and im_h.equals(im_c)):
            raise MismatchAt(i, "subquotients differ")
        out.append((i, dim_hom))
    return out
