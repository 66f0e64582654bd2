"""The spectral sequence of an algebroid extension, end to end.

The Heisenberg algebra with its center as the kernel is the smallest example
with a nonzero transgression: two classes die between the second page and the
limit.  Every identification is cross-checked against an independent
computation (E1 against kernel cohomology with form coefficients, E2 against
quotient cohomology with the induced action).
"""

from rinehart import catalog
from rinehart.extensions import extension_from_k_indices, induced_q_rep
from rinehart.hochschild import check_e1, check_e2, five_term, hs_pages
from rinehart.linalg import rank

entry = catalog.heisenberg3()
E = extension_from_k_indices(entry.algebroid, [2])   # center as the kernel
rep = entry.representation

hp = hs_pages(E, rep, r_max=3)
print("Heisenberg / center extension, trivial coefficients")
print("graded pieces match the predicted dims:", hp.filtration.graded_ok)
for page in hp.pages:
    print(f"  E_{page.r} dims:", page.dims())
print("  E_oo dims:", hp.einf.dims())
print("  stable from page:", hp.stable_at)

d2 = hp.page(2).diffs[(0, 1)]
print("transgression d2 at (0,1) has rank", rank(d2),
      "(the dual of the bracket, K* -> Lambda^2 Q*)")

print("convergence per total degree (E_oo sum vs H^n):", hp.convergence)

e1 = check_e1(E, rep, precomputed=hp)
e2 = check_e2(E, rep, precomputed=hp)
print("E1 identification:", "ok" if e1.ok else e1.table)
print("E2 identification:", "ok" if e2.ok else e2.table)

ft = five_term(E, rep, precomputed=hp)
print("five-term node dims:", ft.node_dims, "exact:", ft.all_exact)

print("\ninduced action of the quotient on kernel cohomology:")
for q in (0, 1):
    r = induced_q_rep(E, rep, q)
    mats = [[str(x) for row in m.entries for x in row] for m in r.rho]
    print(f"  H^{q}(K;k): dim {r.module.dim}, action matrices {mats} (central kernel: trivial)")

print("\nfat-point extension over k[x]/(x^2):")
fp = catalog.fatpoint_rank2()
Ef = extension_from_k_indices(fp.algebroid, [1])
hpf = hs_pages(Ef, fp.representation, r_max=2)
print("  E_2 dims:", hpf.page(2).dims(), " converged:", hpf.converged)
