"""Finite-dimensional commutative unital algebras, their derivations, modules,
and the algebra of scalar-symbol operators on a module.

An algebra is raw data: structure constants mult[i][j] (the coordinates of
e_i e_j) plus the coordinates of 1.  All axioms are checked exhaustively on
basis triples; target sizes are tiny (m <= ~8).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, Subspace, kernel_subspace


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple
    detail: str = ""

    def describe(self) -> str:
        return f"{self.axiom} at {self.indices}" + (f": {self.detail}" if self.detail else "")


class FiniteAlgebra:
    def __init__(self, field, dim, mult, unit):
        self.field = field
        self.dim = dim
        self.mult = [[tuple(v) for v in row] for row in mult]   # mult[i][j] in k^dim
        self.unit = tuple(unit)
        if len(self.mult) != dim or any(len(row) != dim for row in self.mult):
            raise ValueError("mult table must be dim x dim")
        for row in self.mult:
            for v in row:
                if len(v) != dim:
                    raise ValueError("mult entries must be coordinate vectors of length dim")
        if len(self.unit) != dim:
            raise ValueError("unit vector of wrong length")

    def mul_vec(self, x, y):
        """Product of two elements given by coordinates."""
        z = self.field.zero
        out = [z] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(self.mult[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    def mult_matrix(self, x) -> Matrix:
        """Matrix of multiplication by the element x."""
        cols = []
        for j in range(self.dim):
            e_j = tuple(self.field.one if t == j else self.field.zero for t in range(self.dim))
            cols.append(self.mul_vec(x, e_j))
        return Matrix.from_rows(self.field, cols).transpose()

    def basis_vector(self, i):
        return tuple(self.field.one if t == i else self.field.zero for t in range(self.dim))


def validate_algebra(a: FiniteAlgebra) -> list[Violation]:
    """Commutativity, associativity and the unit law, checked on all basis tuples."""
    out = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if a.mult[i][j] != a.mult[j][i]:
                out.append(Violation("commutativity", (i, j)))
    for i in range(a.dim):
        ei = a.basis_vector(i)
        for j in range(a.dim):
            ej = a.basis_vector(j)
            for k in range(a.dim):
                ek = a.basis_vector(k)
                left = a.mul_vec(a.mul_vec(ei, ej), ek)
                right = a.mul_vec(ei, a.mul_vec(ej, ek))
                if left != right:
                    out.append(Violation("associativity", (i, j, k)))
    for i in range(a.dim):
        if a.mul_vec(a.unit, a.basis_vector(i)) != a.basis_vector(i):
            out.append(Violation("unit", (i,)))
    return out


def is_derivation(a: FiniteAlgebra, d: Matrix) -> bool:
    """Leibniz rule D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on all basis pairs."""
    for i in range(a.dim):
        ei = a.basis_vector(i)
        dei = d.apply(ei)
        for j in range(a.dim):
            ej = a.basis_vector(j)
            lhs = d.apply(a.mult[i][j])
            rhs = tuple(x + y for x, y in zip(a.mul_vec(dei, ej), a.mul_vec(ei, d.apply(ej))))
            if lhs != rhs:
                return False
    return True


def _flatten(mat_rows):
    return tuple(x for row in mat_rows for x in row)


def matrix_from_flat(field, flat, rows, cols) -> Matrix:
    return Matrix.from_rows(field, [flat[r * cols:(r + 1) * cols] for r in range(rows)])


def derivation_space(a: FiniteAlgebra) -> Subspace:
    """All Leibniz matrices, as a subspace of flattened m x m matrices.

    The Leibniz constraints are one linear system in the m^2 unknown entries
    D[r][c]; its kernel is Der_k(A).
    """
    m = a.dim
    f = a.field
    rows = []
    # constraint per (i, j, output coordinate t):
    #   sum_c D[t][c] mult[i][j]_c - sum_r D[r][i] mult[r][j]_t - sum_r D[r][j] mult[i][r]_t = 0
    for i in range(m):
        for j in range(m):
            for t in range(m):
                row = [f.zero] * (m * m)
                for c in range(m):
                    row[t * m + c] = row[t * m + c] + a.mult[i][j][c]
                for r in range(m):
                    row[r * m + i] = row[r * m + i] - a.mult[r][j][t]
                    row[r * m + j] = row[r * m + j] - a.mult[i][r][t]
                rows.append(tuple(row))
    return kernel_subspace(Matrix.from_rows(f, rows))


class AModule:
    """A finite-dimensional module over a FiniteAlgebra, given by action matrices."""

    def __init__(self, algebra: FiniteAlgebra, dim, action):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = dim
        self.action = list(action)   # one dim x dim Matrix per algebra basis element
        if len(self.action) != algebra.dim:
            raise ValueError("one action matrix per algebra basis element")
        for mtx in self.action:
            if (mtx.rows, mtx.cols) != (dim, dim):
                raise ValueError("action matrix of wrong shape")

    def act_vec(self, f) -> Matrix:
        """Action matrix of the algebra element with coordinates f."""
        out = Matrix.zero(self.field, self.dim, self.dim)
        for c, mtx in zip(f, self.action):
            if c:
                out = out.add(mtx.scale(c))
        return out

    def validate(self) -> list[Violation]:
        out = []
        a = self.algebra
        if not self.act_vec(a.unit).sub(Matrix.identity(self.field, self.dim)).is_zero():
            out.append(Violation("module-unit", ()))
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.action[i].mul(self.action[j])
                if not lhs.sub(self.act_vec(a.mult[i][j])).is_zero():
                    out.append(Violation("module-multiplicativity", (i, j)))
        return out


def regular_module(a: FiniteAlgebra) -> AModule:
    """A acting on itself by multiplication."""
    return AModule(a, a.dim, [a.mult_matrix(a.basis_vector(i)) for i in range(a.dim)])


def endomorphism_space(mod: AModule) -> Subspace:
    """A-linear endomorphisms: matrices commuting with every action matrix."""
    n = mod.dim
    f = mod.field
    rows = []
    for act in mod.action:
        # [D, act] = 0, entrywise in the unknown D
        for r in range(n):
            for c in range(n):
                row = [f.zero] * (n * n)
                for t in range(n):
                    row[r * n + t] = row[r * n + t] + act.entries[t][c]
                    row[t * n + c] = row[t * n + c] - act.entries[r][t]
                rows.append(tuple(row))
    if not rows:
        return Subspace.full(f, n * n)
    return kernel_subspace(Matrix.from_rows(f, rows))


@dataclass
class AtiyahObject:
    """Scalar-symbol operators on a module: pairs (D, Dbar) with
    D(x m) = x D(m) + Dbar(x) m and Dbar a derivation of the algebra.

    Vectors of `space` are flattened (D | Dbar) pairs of length N^2 + m^2.
    """
    space: Subspace
    symbol_image: Subspace       # subspace of flattened m x m matrices
    kernel: Subspace             # operators with zero symbol, as flattened N x N matrices
    endomorphisms: Subspace      # End_A(M), computed independently
    derivations: Subspace        # Der_k(A), for the surjectivity comparison

    @property
    def exact_at_middle(self) -> bool:
        return self.space.dim == self.kernel.dim + self.symbol_image.dim

    @property
    def kernel_is_end(self) -> bool:
        return self.kernel.equals(self.endomorphisms)

    @property
    def symbol_surjective(self) -> bool:
        return self.symbol_image.equals(self.derivations)


def atiyah_object(a: FiniteAlgebra, mod: AModule) -> AtiyahObject:
    """Solve the joint linear system for (D, Dbar) and package the symbol sequence."""
    m = a.dim
    n = mod.dim
    f = a.field
    nn = n * n
    unknowns = nn + m * m
    rows = []
    # pair Leibniz: D act(e_b) - act(e_b) D - sum_c Dbar[c][b] act(e_c) = 0
    for b in range(m):
        act = mod.action[b]
        for r in range(n):
            for c in range(n):
                row = [f.zero] * unknowns
                for t in range(n):
                    row[r * n + t] = row[r * n + t] + act.entries[t][c]
                    row[t * n + c] = row[t * n + c] - act.entries[r][t]
                for cc in range(m):
                    row[nn + cc * m + b] = row[nn + cc * m + b] - mod.action[cc].entries[r][c]
                rows.append(tuple(row))
    # Dbar Leibniz
    for i in range(m):
        for j in range(m):
            for t in range(m):
                row = [f.zero] * unknowns
                for c in range(m):
                    row[nn + t * m + c] = row[nn + t * m + c] + a.mult[i][j][c]
                for r in range(m):
                    row[nn + r * m + i] = row[nn + r * m + i] - a.mult[r][j][t]
                    row[nn + r * m + j] = row[nn + r * m + j] - a.mult[i][r][t]
                rows.append(tuple(row))
    space = kernel_subspace(Matrix.from_rows(f, rows))
    symbol_image = Subspace.span(f, m * m, [v[nn:] for v in space.basis])
    # zero-symbol slice of the solution space, projected to the operator block
    sym_rows = [tuple((f.one if idx == nn + t else f.zero) for idx in range(unknowns))
                for t in range(m * m)]
    zero_symbol = kernel_subspace(Matrix.from_rows(f, sym_rows)).intersect(space)
    kernel = Subspace.span(f, nn, [v[:nn] for v in zero_symbol.basis])
    return AtiyahObject(space, symbol_image, kernel, endomorphism_space(mod), derivation_space(a))
