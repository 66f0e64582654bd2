"""The built-in corpus: small algebroids with hand-checkable cohomology.

Every entry carries a default representation; extension entries add the data
of an ideal and a splitting.  Deliberately broken variants live in
`negative_entries` and are used to exercise the validators.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .algebra import AModule, FiniteAlgebra
from .algebroid import (LieRinehartAlgebroid, Representation,
                        anchor_representation, trivial_representation)
from .fields import GF, QQ, Field
from .linalg import Matrix


def base_field_algebra(field: Field) -> FiniteAlgebra:
    return FiniteAlgebra(field, 1, [[(field.one,)]], (field.one,))


def dual_numbers(field: Field) -> FiniteAlgebra:
    """k[x]/(x^2) on the basis {1, x}."""
    o, z = field.one, field.zero
    return FiniteAlgebra(field, 2, [[(o, z), (z, o)], [(z, o), (z, z)]], (o, z))


def split_algebra(field: Field) -> FiniteAlgebra:
    o, z = field.one, field.zero
    return FiniteAlgebra(field, 2, [[(o, z), (z, z)], [(z, z), (z, o)]], (o, o))


def lie_algebra(field: Field, n: int, pairs: dict) -> LieRinehartAlgebroid:
    """A Lie algebra over A = k from sparse structure constants.

    `pairs[(i, j)]` for i < j lists (l, coefficient) terms of [s_i, s_j];
    antisymmetry fills in the rest.
    """
    alg = base_field_algebra(field)
    zero_anchor = Matrix.zero(field, 1, 1)
    bracket = [[[(field.zero,) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (i, j), terms in pairs.items():
        for l, c in terms:
            cc = field.from_int(c) if isinstance(c, int) else c
            bracket[i][j][l] = (bracket[i][j][l][0] + cc,)
            bracket[j][i][l] = (bracket[j][i][l][0] - cc,)
    return LieRinehartAlgebroid(alg, n, [zero_anchor] * n, bracket)


@dataclass
class CorpusEntry:
    name: str
    algebroid: LieRinehartAlgebroid
    representation: Representation
    ce_dims: list | None = None          # frozen expected CE dims, where hand-derived
    extension: dict | None = None        # {"k_indices": [...], "splitting": acoords}
    extra_representations: dict = dfield(default_factory=dict)


def abelian2(field=QQ) -> CorpusEntry:
    L = lie_algebra(field, 2, {})
    return CorpusEntry("abelian2", L, trivial_representation(L), ce_dims=[1, 2, 1])


def sl2(field=QQ) -> CorpusEntry:
    # basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    L = lie_algebra(field, 3, {(0, 1): [(2, 1)], (2, 0): [(0, 2)], (2, 1): [(1, -2)]})
    entry = CorpusEntry("sl2", L, trivial_representation(L),
                        ce_dims=[1, 0, 0, 1] if field.kind == "rational" else None)
    # adjoint representation: ad matrices in the (e, f, h) basis
    f_ = field
    ad_e = Matrix.from_rows(f_, [[f_.from_int(x) for x in r]
                                 for r in [[0, 0, -2], [0, 0, 0], [0, 1, 0]]])
    ad_f = Matrix.from_rows(f_, [[f_.from_int(x) for x in r]
                                 for r in [[0, 0, 0], [0, 0, 2], [-1, 0, 0]]])
    ad_h = Matrix.from_rows(f_, [[f_.from_int(x) for x in r]
                                 for r in [[2, 0, 0], [0, -2, 0], [0, 0, 0]]])
    mod = AModule(L.algebra, 3, [Matrix.identity(f_, 3)])
    entry.extra_representations["adjoint"] = Representation(mod, [ad_e, ad_f, ad_h])
    return entry


def heisenberg3(field=QQ) -> CorpusEntry:
    # basis (x, y, z): [x,y] = z, z central
    L = lie_algebra(field, 3, {(0, 1): [(2, 1)]})
    entry = CorpusEntry("heisenberg3", L, trivial_representation(L), ce_dims=[1, 2, 2, 1])
    entry.extension = {"k_indices": [2]}
    return entry


def aff1(field=QQ) -> CorpusEntry:
    # basis (e1, e2): [e2, e1] = -e1
    L = lie_algebra(field, 2, {(0, 1): [(0, 1)]})
    entry = CorpusEntry("aff1", L, trivial_representation(L), ce_dims=[1, 1, 0])
    entry.extension = {"k_indices": [0]}
    return entry


def fatpoint_rank1(field=QQ) -> CorpusEntry:
    # A = k[x]/(x^2), L = A s with a(s) = x d/dx, [s,s] = 0; M = A via the anchor
    alg = dual_numbers(field)
    o, z = field.one, field.zero
    x_ddx = Matrix.from_rows(field, [[z, z], [z, o]])
    bracket = [[[(z, z)]]]
    L = LieRinehartAlgebroid(alg, 1, [x_ddx], bracket)
    return CorpusEntry("fatpoint_rank1", L, anchor_representation(L), ce_dims=[1, 1])


def fatpoint_rank2(field=QQ) -> CorpusEntry:
    # A = k[x]/(x^2), rank 2: a(s1) = x d/dx, a(s2) = 0, [s1, s2] = s2
    alg = dual_numbers(field)
    o, z = field.one, field.zero
    x_ddx = Matrix.from_rows(field, [[z, z], [z, o]])
    zero_anchor = Matrix.zero(field, 2, 2)
    zv = (z, z)
    ov = (o, z)
    bracket = [
        [[zv, zv], [zv, ov]],
        [[zv, tuple(-c for c in ov)], [zv, zv]],
    ]
    L = LieRinehartAlgebroid(alg, 2, [x_ddx, zero_anchor], bracket)
    entry = CorpusEntry("fatpoint_rank2", L, anchor_representation(L))
    entry.extension = {"k_indices": [1]}
    return entry


def split_example(field=QQ) -> CorpusEntry:
    # A = k + k, zero anchor, A-bilinear bracket [s1, s2] = e1 s2:
    # componentwise this is aff(1) over the first factor, abelian over the second
    alg = split_algebra(field)
    o, z = field.one, field.zero
    zero_anchor = Matrix.zero(field, 2, 2)
    zv = (z, z)
    e1v = (o, z)
    bracket = [
        [[zv, zv], [zv, e1v]],
        [[zv, tuple(-c for c in e1v)], [zv, zv]],
    ]
    L = LieRinehartAlgebroid(alg, 2, [zero_anchor, zero_anchor], bracket)
    return CorpusEntry("split_example", L, anchor_representation(L))


def heisenberg3_f2() -> CorpusEntry:
    entry = heisenberg3(GF(2))
    entry.name = "heisenberg3_f2"
    return entry


def sl2_f2() -> CorpusEntry:
    # same structure constants as sl2; over F_2 the table degenerates ([h,e] = 0)
    entry = sl2(GF(2))
    entry.name = "sl2_f2"
    entry.ce_dims = None
    return entry


def positive_entries() -> list[CorpusEntry]:
    return [abelian2(), sl2(), heisenberg3(), aff1(), fatpoint_rank1(),
            fatpoint_rank2(), split_example(), heisenberg3_f2(), sl2_f2()]


def extension_entries() -> list[tuple[str, CorpusEntry, list, object]]:
    """(name, entry, k_indices, splitting_acoords or None) for the HS suite."""
    out = []
    a = aff1()
    out.append(("ext_k0", a, [], None))
    h = heisenberg3()
    out.append(("ext_q0", h, [0, 1, 2], None))
    out.append(("ext_aff1", a, [0], None))
    out.append(("ext_heis_center", h, [2], None))
    fp = fatpoint_rank2()
    out.append(("ext_fatpoint", fp, [1], None))
    return out


def bad_jacobi_sl2(field=QQ) -> LieRinehartAlgebroid:
    # sign flip on [h,f]: Jacobi fails on (e, f, h)
    return lie_algebra(field, 3, {(0, 1): [(2, 1)], (2, 0): [(0, 2)], (2, 1): [(1, 2)]})


def bad_unit_algebra(field=QQ) -> FiniteAlgebra:
    # 1*1 deliberately set to x: the unit law fails at the (0,) triple
    o, z = field.one, field.zero
    return FiniteAlgebra(field, 2, [[(z, o), (z, o)], [(z, o), (z, z)]], (o, z))


def bad_flatness_rep(field=QQ) -> tuple[LieRinehartAlgebroid, Representation]:
    entry = sl2(field)
    rep = entry.extra_representations["adjoint"]
    broken = Representation(rep.module, [rep.rho[0], rep.rho[1], rep.rho[2].scale(field.from_int(2))])
    return entry.algebroid, broken
