"""Extensions 0 -> K -> L -> Q -> 0 of Lie-Rinehart algebroids, the adapted
basis attached to a splitting, and the induced action of Q on H^q(K; M).

The kernel of any algebroid morphism has vanishing anchor, so K is an A-Lie
algebra and its CE differential is A-linear; H^q(K; M) therefore carries an
A-module structure, and the splitting transports the L-action to a
representation of Q on it.  Elements of K act null-homotopically on K-cochains
(Cartan formula), which is why the descended action is independent of the
splitting and flat even though neither holds at the cochain level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AModule, Violation
from .algebroid import (LieRinehartAlgebroid, Representation, build_bracket_tensor,
                        validate_algebroid, validate_representation)
from .cecomplex import ce_complex, insert_index
from .errors import EngineError, NotWellDefined
from .linalg import (Matrix, Subspace, complete_basis, image_subspace,
                     kernel_subspace, kernel_vectors, rank, rref, solve)


def amap_matrix(L_src: LieRinehartAlgebroid, L_dst: LieRinehartAlgebroid, acoords) -> Matrix:
    """k-matrix of the A-linear map s_j -> sum_l acoords[j][l] s'_l."""
    alg = L_src.algebra
    f = L_src.field
    if L_dst.kdim == 0 or L_src.kdim == 0:
        return Matrix.zero(f, L_dst.kdim, L_src.kdim)
    rows = [[f.zero] * L_src.kdim for _ in range(L_dst.kdim)]
    for j in range(L_src.n):
        for a in range(alg.dim):
            ea = alg.basis_vector(a)
            for l in range(L_dst.n):
                coeff = alg.mul_vec(ea, acoords[j][l])
                for t in range(alg.dim):
                    if coeff[t]:
                        rows[L_dst.kindex(l, t)][L_src.kindex(j, a)] = coeff[t]
    return Matrix.from_rows(f, rows)


@dataclass
class ExtensionTriple:
    K: LieRinehartAlgebroid
    L: LieRinehartAlgebroid
    Q: LieRinehartAlgebroid
    iota: list    # iota[j][l] in k^m: A-coords in L of the j-th K-basis element
    pi: list      # pi[j][l]: A-coords in Q of the image of the j-th L-basis element
    sigma: list   # sigma[j][l]: A-coords in L of the section of the j-th Q-basis element


def extension_from_k_indices(L: LieRinehartAlgebroid, k_indices, sigma_acoords=None) -> ExtensionTriple:
    """Extension data from a coordinate ideal: K spans the listed basis sections.

    Structure constants of K and Q are read off from L (restriction and
    projection); whether K really is an ideal etc. is left to validate_extension.
    """
    alg = L.algebra
    f = L.field
    m = alg.dim
    k_indices = list(k_indices)
    q_indices = [i for i in range(L.n) if i not in k_indices]
    c, r = len(k_indices), len(q_indices)
    zero_vec = tuple(f.zero for _ in range(m))

    def unit_vec():
        return tuple(alg.unit)

    k_bracket = [[[L.bracket[k_indices[i]][k_indices[j]][k_indices[l]] for l in range(c)]
                  for j in range(c)] for i in range(c)]
    K = LieRinehartAlgebroid(alg, c, [L.anchors[i] for i in k_indices], k_bracket)
    q_bracket = [[[L.bracket[q_indices[i]][q_indices[j]][q_indices[l]] for l in range(r)]
                  for j in range(r)] for i in range(r)]
    Q = LieRinehartAlgebroid(alg, r, [L.anchors[i] for i in q_indices], q_bracket)
    iota = [[unit_vec() if l == k_indices[j] else zero_vec for l in range(L.n)]
            for j in range(c)]
    pi = [[unit_vec() if q_indices[l] == j else zero_vec for l in range(r)]
          for j in range(L.n)]
    if sigma_acoords is None:
        sigma = [[unit_vec() if l == q_indices[j] else zero_vec for l in range(L.n)]
                 for j in range(r)]
    else:
        sigma = [[tuple(v) for v in row] for row in sigma_acoords]
    return ExtensionTriple(K, L, Q, iota, pi, sigma)


def validate_extension(E: ExtensionTriple) -> list[Violation]:
    """A-module exactness, bracket/anchor compatibility, zero anchor on K,
    and sigma being an A-linear section of pi."""
    out = []
    K, L, Q = E.K, E.L, E.Q
    if K.n + Q.n != L.n:
        out.append(Violation("rank-mismatch", (K.n, L.n, Q.n)))
        return out
    f = L.field
    im = amap_matrix(K, L, E.iota)
    pm = amap_matrix(L, Q, E.pi)
    sm = amap_matrix(Q, L, E.sigma)
    if rank(im) != K.kdim:
        out.append(Violation("iota-not-injective", ()))
    if rank(pm) != Q.kdim:
        out.append(Violation("pi-not-surjective", ()))
    img = image_subspace(im)
    ker = kernel_subspace(pm)
    if not img.equals(ker):
        out.append(Violation("not-exact-in-middle", ()))
    for i, d in enumerate(K.anchors):
        if not d.is_zero():
            out.append(Violation("kernel-anchor-nonzero", (i,)))
    tK, tL, tQ = (build_bracket_tensor(X) for X in (K, L, Q))

    def basis(dim, u):
        return tuple(f.one if t == u else f.zero for t in range(dim))

    for u in range(K.kdim):
        eu = basis(K.kdim, u)
        if not L.anchor_of_vector(im.apply(eu)).sub(K.anchor_of_vector(eu)).is_zero():
            out.append(Violation("iota-anchor", (u,)))
        for v in range(u + 1, K.kdim):
            ev = basis(K.kdim, v)
            lhs = im.apply(tK.of_basis(u, v))
            rhs = tL.of_vectors(im.apply(eu), im.apply(ev))
            if lhs != rhs:
                out.append(Violation("iota-bracket", (u, v)))
    for u in range(L.kdim):
        eu = basis(L.kdim, u)
        if not Q.anchor_of_vector(pm.apply(eu)).sub(L.anchor_of_vector(eu)).is_zero():
            out.append(Violation("pi-anchor", (u,)))
        for v in range(u + 1, L.kdim):
            ev = basis(L.kdim, v)
            lhs = pm.apply(tL.of_basis(u, v))
            rhs = tQ.of_vectors(pm.apply(eu), pm.apply(ev))
            if lhs != rhs:
                out.append(Violation("pi-bracket", (u, v)))
    comp = pm.mul(sm)
    if not comp.sub(Matrix.identity(f, Q.kdim)).is_zero():
        out.append(Violation("sigma-not-a-section", ()))
    return out


def _invert(m: Matrix) -> Matrix:
    aug = Matrix.from_rows(m.field, [row + tuple(m.field.one if i == j else m.field.zero
                                                 for j in range(m.rows))
                                     for i, row in enumerate(m.entries)])
    red, pivots = rref(aug)
    if pivots != list(range(m.rows)):
        raise EngineError("matrix is not invertible")
    return Matrix.from_rows(m.field, [row[m.rows:] for row in red])


@dataclass
class AdaptedExtension:
    """The extension rewritten on the basis (iota(K-basis), sigma(Q-basis))."""
    ext: ExtensionTriple
    rep: Representation
    L_ad: LieRinehartAlgebroid      # same L, adapted A-basis
    R_ad: Representation            # transported representation
    K_sub: LieRinehartAlgebroid     # first c adapted sections
    rho_K: Representation           # restriction of R_ad to K_sub
    Q_quot: LieRinehartAlgebroid    # last r adapted sections mod K
    c: int
    r: int


def adapt(E: ExtensionTriple, R: Representation) -> AdaptedExtension:
    bad = validate_extension(E)
    if bad:
        raise EngineError("invalid extension: " + "; ".join(v.describe() for v in bad))
    L = E.L
    alg = L.algebra
    f = L.field
    m = alg.dim
    c, r = E.K.n, E.Q.n
    n = L.n
    new_acoords = [[tuple(v) for v in row] for row in E.iota] + \
                  [[tuple(v) for v in row] for row in E.sigma]
    T = amap_matrix(L, L, new_acoords)
    if rank(T) != L.kdim:
        raise EngineError("adapted family is not an A-basis")
    T_inv = _invert(T)
    for b in range(m):
        act = L.algebra_action_on_sections(b)
        if not T_inv.mul(act).sub(act.mul(T_inv)).is_zero():
            raise EngineError("inverse change of basis is not A-linear")
    kvecs = []
    for t in range(n):
        v = [f.zero] * L.kdim
        for l in range(n):
            for a in range(m):
                v[L.kindex(l, a)] = new_acoords[t][l][a]
        kvecs.append(tuple(v))
    tL = build_bracket_tensor(L)
    anchors_ad = [L.anchor_of_vector(v) for v in kvecs]
    rho_ad = [R.rho_of_vector(L, v) for v in kvecs]
    bracket_ad = []
    for i in range(n):
        plane = []
        for j in range(n):
            w = tL.of_vectors(kvecs[i], kvecs[j])
            acoords = L.k_to_acoords(T_inv.apply(w))
            plane.append([tuple(v) for v in acoords])
        bracket_ad.append(plane)
    L_ad = LieRinehartAlgebroid(alg, n, anchors_ad, bracket_ad)
    R_ad = Representation(R.module, rho_ad)
    if validate_algebroid(L_ad) or validate_representation(L_ad, R_ad):
        raise EngineError("adapted structure failed validation")
    zero_vec = tuple(f.zero for _ in range(m))
    for i in range(c):
        for j in range(c):
            for l in range(c, n):
                if L_ad.bracket[i][j][l] != zero_vec:
                    raise EngineError("kernel sections are not closed under the bracket")
    K_sub = LieRinehartAlgebroid(
        alg, c, anchors_ad[:c],
        [[[L_ad.bracket[i][j][l] for l in range(c)] for j in range(c)] for i in range(c)])
    rho_K = Representation(R.module, rho_ad[:c])
    Q_quot = LieRinehartAlgebroid(
        alg, r, anchors_ad[c:],
        [[[L_ad.bracket[c + i][c + j][c + l] for l in range(r)] for j in range(r)]
         for i in range(r)])
    return AdaptedExtension(E, R, L_ad, R_ad, K_sub, rho_K, Q_quot, c, r)


def _descend_operator(op: Matrix, reps, cocycles: Subspace, boundaries: Subspace, field):
    """Matrix of an operator on chosen cohomology representatives.

    Requires op(Z) inside Z and op(B) inside B; raises NotWellDefined otherwise.
    """
    for z in cocycles.basis:
        if not cocycles.contains(op.apply(z)):
            raise NotWellDefined("operator does not preserve cocycles")
    for b in boundaries.basis:
        if not boundaries.contains(op.apply(b)):
            raise NotWellDefined("operator does not preserve coboundaries")
    cols = [list(v) for v in reps] + [list(v) for v in boundaries.basis]
    h = len(reps)
    out_cols = []
    for z in reps:
        w = op.apply(z)
        if not cols:
            out_cols.append(())
            continue
        x = solve(Matrix.from_rows(field, cols).transpose(), w)
        if x is None:
            raise NotWellDefined("operator image leaves the cocycle space")
        out_cols.append(x[:h])
    if h == 0:
        return Matrix.zero(field, 0, 0)
    return Matrix.from_rows(field, out_cols).transpose()


def k_cohomology_data(ad: AdaptedExtension, q: int):
    """(CE complex of K, cocycles, boundaries, representatives) in degree q."""
    ceK = ce_complex(ad.K_sub, ad.rho_K)
    cx = ceK.complex
    if not (0 <= q <= ad.c):
        empty = Subspace.zero(ad.L_ad.field, 0)
        return ceK, empty, empty, []
    Z = kernel_subspace(cx.diff(q))
    B = image_subspace(cx.diff(q - 1)) if q > 0 else Subspace.zero(ad.L_ad.field, cx.dims[q])
    reps = complete_basis(B, kernel_vectors(cx.diff(q)))
    return ceK, Z, B, reps


def _module_action_on_cochains(ad: AdaptedExtension, ceK, q: int, b: int) -> Matrix:
    """Multiplication by e_b on K-cochains (A-linear because K has zero anchor)."""
    f = ad.L_ad.field
    N = ad.rep.module.dim
    tuples = ceK.tuples[q]
    size = len(tuples) * N
    act = ad.rep.module.action[b]
    rows = [[f.zero] * size for _ in range(size)]
    for t in range(len(tuples)):
        for nu in range(N):
            for mu in range(N):
                v = act.entries[nu][mu]
                if v:
                    rows[t * N + nu][t * N + mu] = v
    return Matrix.from_rows(f, rows)


def _lie_operator_on_k_cochains(ad: AdaptedExtension, ceK, q: int, section_index: int) -> Matrix:
    """The action of an adapted L-section on K-q-cochains:

        (u . c)(k_T) = rho(u)(c(k_T)) - sum_pos c(.., [u, k_pos], ..)
    """
    L_ad = ad.L_ad
    f = L_ad.field
    N = ad.rep.module.dim
    tuples = ceK.tuples[q]
    index_q = {t: i for i, t in enumerate(tuples)}
    size = len(tuples) * N
    rho_u = ad.R_ad.rho[section_index]
    rows = [[f.zero] * size for _ in range(size)]
    for ti, T in enumerate(tuples):
        for nu in range(N):
            for mu in range(N):
                v = rho_u.entries[nu][mu]
                if v:
                    rows[ti * N + nu][index_q[T] * N + mu] += v
        for pos in range(q):
            i_k = T[pos]
            coeffs = L_ad.bracket[section_index][i_k]
            for l in range(ad.c, L_ad.n):
                if any(coeffs[l]):
                    raise NotWellDefined("bracket with the kernel leaves the kernel")
            rest = T[:pos] + T[pos + 1:]
            for l in range(ad.c):
                fl = coeffs[l]
                if not any(fl):
                    continue
                ins = insert_index(l, rest)
                if ins is None:
                    continue
                pos_l, sgn_sort = ins
                merged = rest[:pos_l] + (l,) + rest[pos_l:]
                src = index_q[merged]
                act = ad.rep.module.act_vec(fl)
                # sorting l from slot `pos` to slot `pos_l` costs (-1)^(pos - pos_l)
                sgn = sgn_sort if pos % 2 == 0 else -sgn_sort
                for nu in range(N):
                    for mu in range(N):
                        v = act.entries[nu][mu]
                        if v:
                            val = v if sgn == 1 else -v
                            rows[ti * N + nu][src * N + mu] -= val
    return Matrix.from_rows(f, rows)


def induced_q_rep(E: ExtensionTriple, R: Representation, q: int) -> Representation:
    """The representation of Q on H^q(K; M) induced through the splitting."""
    ad = adapt(E, R)
    return induced_q_rep_adapted(ad, q)


def induced_q_rep_adapted(ad: AdaptedExtension, q: int) -> Representation:
    f = ad.L_ad.field
    alg = ad.L_ad.algebra
    if not (0 <= q <= ad.c):
        modH = AModule(alg, 0, [Matrix.zero(f, 0, 0)] * alg.dim)
        return Representation(modH, [Matrix.zero(f, 0, 0)] * ad.r)
    ceK, Z, B, reps = k_cohomology_data(ad, q)
    h = len(reps)
    act_mats = []
    for b in range(alg.dim):
        op = _module_action_on_cochains(ad, ceK, q, b)
        # A-linearity of the K-differential (zero anchor): op must commute with d
        if q < ad.c:
            op_next = _module_action_on_cochains(ad, ceK, q + 1, b)
            dq = ceK.complex.diff(q)
            if not dq.mul(op).sub(op_next.mul(dq)).is_zero():
                raise NotWellDefined("algebra action does not commute with the K-differential")
        act_mats.append(_descend_operator(op, reps, Z, B, f))
    modH = AModule(alg, h, act_mats)
    bad = modH.validate()
    if bad:
        raise NotWellDefined("induced A-module structure is invalid: "
                             + "; ".join(v.describe() for v in bad))
    rho_mats = []
    for j in range(ad.r):
        theta = _lie_operator_on_k_cochains(ad, ceK, q, ad.c + j)
        rho_mats.append(_descend_operator(theta, reps, Z, B, f))
    induced = Representation(modH, rho_mats)
    bad = validate_representation(ad.Q_quot, induced)
    if bad:
        raise NotWellDefined("induced action is not a representation of Q: "
                             + "; ".join(v.describe() for v in bad))
    return induced


def with_splitting(E: ExtensionTriple, delta_acoords) -> ExtensionTriple:
    """Replace sigma by sigma + delta for an A-linear delta: Q -> K (inside L)."""
    sigma = []
    for j in range(E.Q.n):
        row = []
        for l in range(E.L.n):
            row.append(tuple(a + b for a, b in zip(E.sigma[j][l], delta_acoords[j][l])))
        sigma.append(row)
    return ExtensionTriple(E.K, E.L, E.Q, E.iota, E.pi, sigma)
