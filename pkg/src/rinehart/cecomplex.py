"""The Chevalley-Eilenberg-de Rham complex M (x) Lambda^* L^* and its
cohomology, plus the total complex of a bounded complex of representations.

Cochains are coordinatized by their values on increasing tuples of the A-basis
of L; evaluation on anything else goes through A-multilinear expansion.  The
differential is

    (d xi)(s_1..s_{p+1}) = sum_i (-1)^{i-1} rho(s_i)(xi(.. ^s_i ..))
                         + sum_{i<j} (-1)^{i+j} xi([s_i,s_j], .. ^s_i .. ^s_j ..)

with the bracket inserted in the first slot.  d^2 = 0 is asserted on
construction and fails only if invalid input slipped past validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .algebroid import LieRinehartAlgebroid, Representation
from .complexes import CochainComplex, cohomology_at
from .errors import ConstructionInconsistent, NotEquivariant
from .linalg import Matrix


def insert_index(l, rest):
    """Position and sign for sorting l into the increasing tuple rest; None if present."""
    if l in rest:
        return None
    pos = 0
    while pos < len(rest) and rest[pos] < l:
        pos += 1
    return pos, -1 if pos % 2 else 1


@dataclass
class CEComplex:
    algebroid: LieRinehartAlgebroid
    representation: Representation
    complex: CochainComplex
    tuples: list    # tuples[p] = increasing p-tuples of basis indices, lex order

    def coord_index(self, p, t, mu) -> int:
        return self.tuples[p].index(t) * self.representation.module.dim + mu


def ce_complex(L: LieRinehartAlgebroid, R: Representation) -> CEComplex:
    n = L.n
    N = R.module.dim
    f = L.field
    tuples = [list(combinations(range(n), p)) for p in range(n + 1)]
    dims = [N * comb(n, p) for p in range(n + 1)]
    diffs = []
    for p in range(n):
        index_p = {t: i for i, t in enumerate(tuples[p])}
        rows = [[f.zero] * dims[p] for _ in range(dims[p + 1])]
        for ti, T in enumerate(tuples[p + 1]):
            for pos in range(p + 1):
                sub = T[:pos] + T[pos + 1:]
                src = index_p[sub]
                sgn = -1 if pos % 2 else 1
                rho = R.rho[T[pos]]
                for nu in range(N):
                    for mu in range(N):
                        v = rho.entries[nu][mu]
                        if v:
                            val = v if sgn == 1 else -v
                            rows[ti * N + nu][src * N + mu] += val
            for p1 in range(p + 1):
                for p2 in range(p1 + 1, p + 1):
                    sgn_ij = -1 if (p1 + p2) % 2 else 1
                    rest = tuple(x for idx, x in enumerate(T) if idx not in (p1, p2))
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
                        src = index_p[merged]
                        act = R.module.act_vec(fl)
                        s = sgn_ij * sgn_sort
                        for nu in range(N):
                            for mu in range(N):
                                v = act.entries[nu][mu]
                                if v:
                                    val = v if s == 1 else -v
                                    rows[ti * N + nu][src * N + mu] += val
        diffs.append(Matrix.from_rows(f, rows))
    try:
        cx = CochainComplex(f, dims, diffs)
    except ConstructionInconsistent as e:
        raise ConstructionInconsistent(f"CE differential is not a complex: {e}") from e
    return CEComplex(L, R, cx, tuples)


def ce_cohomology(L: LieRinehartAlgebroid, R: Representation):
    """[(degree, dim, representatives)] over the whole degree range."""
    ce = ce_complex(L, R)
    out = []
    for p in range(L.n + 1):
        dim, reps = cohomology_at(ce.complex, p)
        out.append((p, dim, reps))
    return out


def ce_dims(L: LieRinehartAlgebroid, R: Representation) -> list[int]:
    return [dim for _, dim, _ in ce_cohomology(L, R)]


@dataclass
class RepComplex:
    """A bounded complex of representations with A-linear, L-equivariant maps."""
    representations: list
    maps: list   # maps[a]: M^a -> M^{a+1}

    def validate(self, L: LieRinehartAlgebroid):
        from .algebra import Violation
        out = []
        reps = self.representations
        if len(self.maps) != max(len(reps) - 1, 0):
            return [Violation("complex-shape", (len(self.maps), len(reps)))]
        for a, delta in enumerate(self.maps):
            src, dst = reps[a], reps[a + 1]
            if (delta.rows, delta.cols) != (dst.module.dim, src.module.dim):
                out.append(Violation("map-shape", (a,)))
                continue
            for b in range(L.m):
                if not delta.mul(src.module.action[b]).sub(dst.module.action[b].mul(delta)).is_zero():
                    out.append(Violation("map-not-A-linear", (a, b)))
            for i in range(L.n):
                if not delta.mul(src.rho[i]).sub(dst.rho[i].mul(delta)).is_zero():
                    out.append(Violation("map-not-equivariant", (a, i)))
        for a in range(len(self.maps) - 1):
            if not self.maps[a + 1].mul(self.maps[a]).is_zero():
                out.append(Violation("composite-nonzero", (a,)))
        return out


def total_complex(L: LieRinehartAlgebroid, C: RepComplex) -> CochainComplex:
    """Total complex of M^* (x) Lambda^* L^*, with (-1)^a on the vertical leg."""
    bad = C.validate(L)
    if bad:
        raise NotEquivariant("; ".join(v.describe() for v in bad))
    f = L.field
    n = L.n
    ces = [ce_complex(L, R) for R in C.representations]
    height = len(ces)
    top = height - 1 + n
    # block layout per total degree: (a, b = k - a) with a ascending
    offsets = []
    dims = []
    for k in range(top + 1):
        off = {}
        total = 0
        for a in range(height):
            b = k - a
            if 0 <= b <= n:
                off[a] = total
                total += ces[a].complex.dims[b]
        offsets.append(off)
        dims.append(total)
    diffs = []
    for k in range(top):
        rows = [[f.zero] * dims[k] for _ in range(dims[k + 1])]
        for a, src_off in offsets[k].items():
            b = k - a
            src_dim = ces[a].complex.dims[b]
            # vertical: (-1)^a d_rho into block (a, b+1)
            if b + 1 <= n and a in offsets[k + 1]:
                dst_off = offsets[k + 1][a]
                d = ces[a].complex.diff(b)
                for r in range(d.rows):
                    for c in range(src_dim):
                        v = d.entries[r][c]
                        if v:
                            rows[dst_off + r][src_off + c] += v if a % 2 == 0 else -v
            # horizontal: delta (x) identity into block (a+1, b)
            if a + 1 < height and (a + 1) in offsets[k + 1]:
                dst_off = offsets[k + 1][a + 1]
                delta = C.maps[a]
                nt = len(ces[a].tuples[b])
                ns, nd = delta.cols, delta.rows
                for t in range(nt):
                    for r in range(nd):
                        for c in range(ns):
                            v = delta.entries[r][c]
                            if v:
                                rows[dst_off + t * nd + r][src_off + t * ns + c] += v
        diffs.append(Matrix.from_rows(f, rows))
    return CochainComplex(f, dims, diffs)
