"""Lie-Rinehart algebroids: a free A-module L = A s_1 + ... + A s_n with an
anchor into Der_k(A) and a bracket declared on the A-basis.

The full k-bilinear bracket on the nm-dimensional space underlying L is always
derived from the declared data through the Leibniz rule

    [f s_i, g s_j] = f g [s_i, s_j] + f a(s_i)(g) s_j - g a(s_j)(f) s_i

never input directly.  Validation checks antisymmetry, the Jacobi identity on
every k-basis triple of that closure, and that the anchor is a morphism of
k-Lie algebras.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AModule, FiniteAlgebra, Violation, is_derivation, validate_algebra
from .linalg import Matrix, Subspace, kernel_subspace


class LieRinehartAlgebroid:
    def __init__(self, algebra: FiniteAlgebra, rank: int, anchors, bracket):
        self.algebra = algebra
        self.field = algebra.field
        self.n = rank
        self.m = algebra.dim
        self.anchors = list(anchors)           # one m x m Matrix per basis section
        # bracket[i][j][l] in k^m: the A-coefficient of s_l in [s_i, s_j]
        self.bracket = [[[tuple(v) for v in row] for row in plane] for plane in bracket]
        if len(self.anchors) != rank:
            raise ValueError("one anchor matrix per basis section")
        for d in self.anchors:
            if (d.rows, d.cols) != (self.m, self.m):
                raise ValueError("anchor matrix of wrong shape")
        if len(self.bracket) != rank or any(len(p) != rank for p in self.bracket):
            raise ValueError("bracket table must be rank x rank")
        for plane in self.bracket:
            for row in plane:
                if len(row) != rank or any(len(v) != self.m for v in row):
                    raise ValueError("bracket entries must be rank x dim coefficient arrays")
        self._mult = [algebra.mult_matrix(algebra.basis_vector(a)) for a in range(self.m)]
        self._tensor = None

    @property
    def kdim(self) -> int:
        return self.n * self.m

    def kindex(self, i, a) -> int:
        """Flat index of the k-basis element e_a s_i."""
        return i * self.m + a

    def acoords_to_k(self, acoords):
        """k-coordinates of sum_i f_i s_i from the A-coefficient vectors f_i."""
        out = []
        for f in acoords:
            out.extend(f)
        return tuple(out)

    def k_to_acoords(self, v):
        return [tuple(v[i * self.m:(i + 1) * self.m]) for i in range(self.n)]

    def anchor_hat(self, i, a) -> Matrix:
        """Anchor of e_a s_i as a derivation matrix (A-linearity of the anchor)."""
        return self._mult[a].mul(self.anchors[i])

    def anchor_of_vector(self, v) -> Matrix:
        out = Matrix.zero(self.field, self.m, self.m)
        for i in range(self.n):
            for a in range(self.m):
                c = v[self.kindex(i, a)]
                if c:
                    out = out.add(self.anchor_hat(i, a).scale(c))
        return out

    def algebra_action_on_sections(self, b) -> Matrix:
        """Multiplication by e_b on L in k-coordinates (block diagonal)."""
        f = self.field
        blk = self._mult[b]
        size = self.kdim
        rows = [[f.zero] * size for _ in range(size)]
        for i in range(self.n):
            for r in range(self.m):
                for c in range(self.m):
                    rows[i * self.m + r][i * self.m + c] = blk.entries[r][c]
        return Matrix.from_rows(f, rows)


@dataclass
class BracketTensor:
    """The k-bilinear closure of the bracket: table[u][v] is [b_u, b_v] in k-coordinates."""
    field: object
    dim: int
    table: list

    def of_basis(self, u, v):
        return self.table[u][v]

    def of_vectors(self, x, y):
        z = self.field.zero
        out = [z] * self.dim
        for u, xu in enumerate(x):
            if not xu:
                continue
            for v, yv in enumerate(y):
                if not yv:
                    continue
                c = xu * yv
                for t, w in enumerate(self.table[u][v]):
                    if w:
                        out[t] = out[t] + c * w
        return tuple(out)


def build_bracket_tensor(L: LieRinehartAlgebroid) -> BracketTensor:
    """Expand the declared A-basis bracket to the whole k-basis via Leibniz."""
    if L._tensor is not None:
        return L._tensor
    alg = L.algebra
    f = L.field
    size = L.kdim
    table = [[None] * size for _ in range(size)]
    for i in range(L.n):
        for a in range(L.m):
            ea = alg.basis_vector(a)
            for j in range(L.n):
                for b in range(L.m):
                    eb = alg.basis_vector(b)
                    out = [f.zero] * size
                    ab = alg.mult[a][b]
                    for l in range(L.n):
                        coeff = alg.mul_vec(ab, L.bracket[i][j][l])
                        for t in range(L.m):
                            if coeff[t]:
                                out[L.kindex(l, t)] = out[L.kindex(l, t)] + coeff[t]
                    # + e_a a(s_i)(e_b) s_j  -  e_b a(s_j)(e_a) s_i
                    dg = alg.mul_vec(ea, L.anchors[i].apply(eb))
                    for t in range(L.m):
                        if dg[t]:
                            out[L.kindex(j, t)] = out[L.kindex(j, t)] + dg[t]
                    dh = alg.mul_vec(eb, L.anchors[j].apply(ea))
                    for t in range(L.m):
                        if dh[t]:
                            out[L.kindex(i, t)] = out[L.kindex(i, t)] - dh[t]
                    table[L.kindex(i, a)][L.kindex(j, b)] = tuple(out)
    L._tensor = BracketTensor(f, size, table)
    return L._tensor


def validate_algebroid(L: LieRinehartAlgebroid) -> list[Violation]:
    """Antisymmetry, exhaustive Jacobi and anchor compatibility on the k-closure."""
    out = []
    out.extend(Violation(f"algebra-{v.axiom}", v.indices, v.detail)
               for v in validate_algebra(L.algebra))
    for i, d in enumerate(L.anchors):
        if not is_derivation(L.algebra, d):
            out.append(Violation("anchor-derivation", (i,)))
    if out:
        return out
    t = build_bracket_tensor(L)
    size = L.kdim
    zero = tuple(L.field.zero for _ in range(size))
    for u in range(size):
        if t.of_basis(u, u) != zero:
            out.append(Violation("alternating", (u,)))
        for v in range(u + 1, size):
            plus = tuple(x + y for x, y in zip(t.of_basis(u, v), t.of_basis(v, u)))
            if plus != zero:
                out.append(Violation("antisymmetry", (u, v)))
    for u in range(size):
        for v in range(u + 1, size):
            for w in range(v + 1, size):
                jac = [L.field.zero] * size
                for x, y, z in ((u, v, w), (v, w, u), (w, u, v)):
                    inner = t.of_basis(x, y)
                    term = t.of_vectors(inner, tuple(L.field.one if s == z else L.field.zero
                                                     for s in range(size)))
                    jac = [p + q for p, q in zip(jac, term)]
                if any(jac):
                    out.append(Violation("jacobi", (u, v, w)))
    for u in range(size):
        au = L.anchor_of_vector(tuple(L.field.one if s == u else L.field.zero
                                      for s in range(size)))
        for v in range(u + 1, size):
            av = L.anchor_of_vector(tuple(L.field.one if s == v else L.field.zero
                                          for s in range(size)))
            abr = L.anchor_of_vector(t.of_basis(u, v))
            comm = au.mul(av).sub(av.mul(au))
            if not abr.sub(comm).is_zero():
                out.append(Violation("anchor-morphism", (u, v)))
    return out


@dataclass
class Representation:
    """An A-module M with an action of L by scalar-symbol operators."""
    module: AModule
    rho: list   # one dim x dim Matrix per basis section of L

    def rho_hat(self, L: LieRinehartAlgebroid, i, a) -> Matrix:
        """Action of e_a s_i, extended A-linearly."""
        return self.module.action[a].mul(self.rho[i])

    def rho_of_vector(self, L: LieRinehartAlgebroid, v) -> Matrix:
        out = Matrix.zero(self.module.field, self.module.dim, self.module.dim)
        for i in range(L.n):
            for a in range(L.m):
                c = v[L.kindex(i, a)]
                if c:
                    out = out.add(self.rho_hat(L, i, a).scale(c))
        return out


def trivial_representation(L: LieRinehartAlgebroid) -> Representation:
    """The classical trivial representation k with rho = 0, for A = k only."""
    if L.m != 1:
        raise ValueError("trivial representation needs A = k; use anchor_representation")
    f = L.field
    mod = AModule(L.algebra, 1, [Matrix.identity(f, 1)])
    zero = Matrix.zero(f, 1, 1)
    return Representation(mod, [zero] * L.n)


def anchor_representation(L: LieRinehartAlgebroid) -> Representation:
    """A as a representation of L, acting through the anchor."""
    from .algebra import regular_module
    return Representation(regular_module(L.algebra), list(L.anchors))


def validate_representation(L: LieRinehartAlgebroid, R: Representation) -> list[Violation]:
    """Scalar-symbol condition over the anchor plus flatness on the k-basis."""
    out = [Violation(f"module-{v.axiom}", v.indices, v.detail) for v in R.module.validate()]
    if len(R.rho) != L.n:
        return out + [Violation("rho-shape", (len(R.rho), L.n))]
    mod = R.module
    for i in range(L.n):
        for b in range(L.m):
            lhs = R.rho[i].mul(mod.action[b]).sub(mod.action[b].mul(R.rho[i]))
            rhs = mod.act_vec(L.anchors[i].apply(L.algebra.basis_vector(b)))
            if not lhs.sub(rhs).is_zero():
                out.append(Violation("symbol", (i, b)))
    t = build_bracket_tensor(L)
    size = L.kdim
    hats = [R.rho_hat(L, u // L.m, u % L.m) for u in range(size)]
    for u in range(size):
        for v in range(u + 1, size):
            lhs = R.rho_of_vector(L, t.of_basis(u, v))
            comm = hats[u].mul(hats[v]).sub(hats[v].mul(hats[u]))
            if not lhs.sub(comm).is_zero():
                out.append(Violation("flatness", (u, v)))
    return out


def invariants(L: LieRinehartAlgebroid, R: Representation) -> Subspace:
    """{m in M : rho(u)(m) = 0 for every k-basis element u of L}."""
    f = R.module.field
    rows = []
    for u in range(L.kdim):
        mat = R.rho_hat(L, u // L.m, u % L.m)
        rows.extend(mat.entries)
    if not rows:
        return Subspace.full(f, R.module.dim)
    return kernel_subspace(Matrix.from_rows(f, rows))
