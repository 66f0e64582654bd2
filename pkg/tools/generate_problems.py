"""Regenerate the shipped problem corpus under problems/ from the catalog."""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from rinehart import catalog
from rinehart.problems import ProblemFile, to_dict

ROOT = Path(__file__).resolve().parents[1]
OUT = ROOT / "problems"


def write(path: Path, data: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


def problem_for(entry, module=None, extension=None, options=None):
    return to_dict(ProblemFile(entry.algebroid.field, entry.algebroid.algebra,
                               entry.algebroid, module, None, extension, options or {}))


def main():
    for entry in catalog.positive_entries():
        write(OUT / f"{entry.name}.json", problem_for(entry))
    sl2 = catalog.sl2()
    write(OUT / "sl2_adjoint.json",
          problem_for(sl2, module=sl2.extra_representations["adjoint"]))
    for name, entry, k_indices, sigma in catalog.extension_entries():
        ext = {"k_indices": k_indices, "splitting": sigma}
        write(OUT / f"{name}.json", problem_for(entry, extension=ext))
    # a complex-of-representations input: identity cone over the Heisenberg algebra
    h = catalog.heisenberg3()
    from rinehart.problems import _module_dict
    base = problem_for(h)
    mod = _module_dict(h.algebroid.field, h.representation)
    base["complex"] = {"modules": [mod, mod], "maps": [[[1]]]}
    write(OUT / "total_identity_cone.json", base)

    # negative corpus
    neg = OUT / "negative"
    bad_jacobi = catalog.bad_jacobi_sl2()
    entry = catalog.CorpusEntry("bad", bad_jacobi, None)
    write(neg / "bad_jacobi_sl2.json",
          problem_for(entry))
    bad_alg = catalog.bad_unit_algebra()
    from rinehart.algebroid import LieRinehartAlgebroid
    from rinehart.fields import QQ
    from rinehart.linalg import Matrix
    z = QQ.zero
    L_bad = LieRinehartAlgebroid(bad_alg, 1, [Matrix.zero(QQ, 2, 2)], [[[(z, z)]]])
    entry = catalog.CorpusEntry("bad", L_bad, None)
    write(neg / "bad_unit_algebra.json", problem_for(entry))
    L, rep = catalog.bad_flatness_rep()
    entry = catalog.CorpusEntry("bad", L, None)
    write(neg / "bad_rep_flatness.json", problem_for(entry, module=rep))
    aff = catalog.aff1()
    write(neg / "bad_extension_not_ideal.json",
          problem_for(aff, extension={"k_indices": [1], "splitting": None}))
    # malformed shape: bracket plane of the wrong length
    good = problem_for(catalog.aff1())
    good["algebroid"]["bracket"][0] = good["algebroid"]["bracket"][0][:1]
    write(neg / "bad_bracket_shape.json", good)


if __name__ == "__main__":
    main()
