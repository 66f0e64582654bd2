"""Independent brute-force oracles used only by the test suite.

Deliberately written against different machinery than the engine: the CE
differential is assembled entry-by-entry from the defining formula with an
explicit permutation-sign evaluator, and ranks come from sympy over Q or a
local RREF over F_p.  Only the Lie-algebra case (A = k) is covered; that is
what the classical expected values are frozen from.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

import sympy


def perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def evaluate_dual(inc, t):
    """Value of the alternating dual of the increasing tuple `inc` on tuple `t`."""
    if sorted(t) != list(inc):
        return 0
    return perm_sign(tuple(inc.index(x) for x in t))


def lie_ce_dims_bruteforce(n, bracket_coeffs, rho, mod_p=None):
    """CE cohomology dims of a Lie algebra: dense evaluation + external ranks.

    bracket_coeffs[i][j][l]: coefficient of s_l in [s_i, s_j] (int/Fraction).
    rho[i]: matrix of s_i as nested lists.  mod_p switches to F_p ranks.
    """
    N = len(rho[0]) if rho else 1

    def differential(p):
        src = [(inc, mu) for inc in combinations(range(n), p) for mu in range(N)]
        dst = [(inc, nu) for inc in combinations(range(n), p + 1) for nu in range(N)]
        rows = []
        for inc_t, nu in dst:
            row = []
            for inc_s, mu in src:
                val = Fraction(0)
                for i in range(p + 1):
                    rest = inc_t[:i] + inc_t[i + 1:]
                    e = evaluate_dual(inc_s, rest)
                    if e:
                        sgn = 1 if i % 2 == 0 else -1
                        val += sgn * e * Fraction(rho[inc_t[i]][nu][mu])
                if nu == mu:
                    for i in range(p + 1):
                        for j in range(i + 1, p + 1):
                            rest = tuple(x for k, x in enumerate(inc_t) if k not in (i, j))
                            for l in range(n):
                                c = Fraction(bracket_coeffs[inc_t[i]][inc_t[j]][l])
                                if not c:
                                    continue
                                e = evaluate_dual(inc_s, (l,) + rest)
                                if e:
                                    sgn = 1 if (i + j) % 2 == 0 else -1
                                    val += sgn * e * c
                row.append(val)
            rows.append(row)
        return rows

    def rank_of(rows):
        if not rows or not rows[0]:
            return 0
        if mod_p is None:
            return sympy.Matrix(rows).rank()
        return rank_mod_p(rows, mod_p)

    ds = [differential(p) for p in range(n)]
    sizes = [N * comb(n, p) for p in range(n + 1)]
    ranks = [rank_of(d) for d in ds]
    dims = []
    for p in range(n + 1):
        r_out = ranks[p] if p < n else 0
        r_in = ranks[p - 1] if p > 0 else 0
        dims.append(sizes[p] - r_out - r_in)
    return dims


def rank_mod_p(rows, p):
    m = [[int(Fraction(x)) % p for x in row] for row in rows]
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r
