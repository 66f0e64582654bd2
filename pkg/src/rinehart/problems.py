"""JSON problem files: parsing, validation, canonical serialization, hashing.

Schema (all scalars are ints or "a/b" strings; matrices are row-major):

    {"field":     {"type": "rational"} | {"type": "prime", "p": 5},
     "algebra":   {"dim": m, "unit": [m], "mult": [m][m][m]},
     "algebroid": {"rank": n, "anchor": [n](m x m), "bracket": [n][n][n][m]},
     "module":    {"dim": N, "action": [m](N x N), "rho": [n](N x N)},   # optional
     "complex":   {"modules": [module...], "maps": [matrix...]},          # optional
     "extension": {"k_indices": [...], "splitting": [r][n] of scalar|[m]},# optional
     "options":   {"degree": 3, "max_page": 2}}                           # optional

When no module is given, commands that need coefficients use A acting on
itself through the anchor (for A = k this is the trivial representation).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dfield

from .algebra import AModule, FiniteAlgebra
from .algebroid import LieRinehartAlgebroid, Representation, anchor_representation
from .cecomplex import RepComplex
from .errors import ParseError, ShapeError
from .fields import GF, QQ, Field
from .linalg import Matrix


def _expect(cond, msg):
    if not cond:
        raise ShapeError(msg)


def _parse_scalar(field, x, where):
    try:
        return field.parse(x)
    except ParseError as e:
        raise ParseError(f"{where}: {e}") from e


def _parse_vector(field, data, length, where):
    _expect(isinstance(data, list) and len(data) == length,
            f"{where} must be a list of length {length}")
    return tuple(_parse_scalar(field, x, f"{where}[{i}]") for i, x in enumerate(data))


def _parse_matrix(field, data, rows, cols, where):
    _expect(isinstance(data, list) and len(data) == rows,
            f"{where} must have {rows} rows, got {len(data) if isinstance(data, list) else type(data).__name__}")
    return Matrix.from_rows(field, [_parse_vector(field, row, cols, f"{where}[{r}]")
                                    for r, row in enumerate(data)])


@dataclass
class ProblemFile:
    field: Field
    algebra: FiniteAlgebra
    algebroid: LieRinehartAlgebroid
    module: Representation | None = None
    complex: RepComplex | None = None
    extension: dict | None = None
    options: dict = dfield(default_factory=dict)

    def representation(self) -> Representation:
        return self.module if self.module is not None else anchor_representation(self.algebroid)


def _parse_field(data) -> Field:
    _expect(isinstance(data, dict) and "type" in data, "field must carry a type")
    if data["type"] == "rational":
        return QQ
    if data["type"] == "prime":
        _expect("p" in data, "field.p is required for prime fields")
        return GF(data["p"])
    raise ParseError(f"field.type {data['type']!r} is not rational|prime")


def _parse_algebra(field, data) -> FiniteAlgebra:
    _expect(isinstance(data, dict), "algebra must be an object")
    for key in ("dim", "unit", "mult"):
        _expect(key in data, f"algebra.{key} is required")
    m = data["dim"]
    _expect(isinstance(m, int) and m >= 1, "algebra.dim must be a positive int")
    unit = _parse_vector(field, data["unit"], m, "algebra.unit")
    _expect(isinstance(data["mult"], list) and len(data["mult"]) == m,
            f"algebra.mult must have length {m}")
    mult = []
    for i, row in enumerate(data["mult"]):
        _expect(isinstance(row, list) and len(row) == m, f"algebra.mult[{i}] must have length {m}")
        mult.append([_parse_vector(field, v, m, f"algebra.mult[{i}][{j}]")
                     for j, v in enumerate(row)])
    return FiniteAlgebra(field, m, mult, unit)


def _parse_algebroid(field, alg, data) -> LieRinehartAlgebroid:
    _expect(isinstance(data, dict), "algebroid must be an object")
    for key in ("rank", "anchor", "bracket"):
        _expect(key in data, f"algebroid.{key} is required")
    n = data["rank"]
    m = alg.dim
    _expect(isinstance(n, int) and n >= 0, "algebroid.rank must be a non-negative int")
    _expect(isinstance(data["anchor"], list) and len(data["anchor"]) == n,
            f"algebroid.anchor must have length {n}")
    anchors = [_parse_matrix(field, a, m, m, f"algebroid.anchor[{i}]")
               for i, a in enumerate(data["anchor"])]
    _expect(isinstance(data["bracket"], list) and len(data["bracket"]) == n,
            f"algebroid.bracket must have length {n}")
    bracket = []
    for i, plane in enumerate(data["bracket"]):
        _expect(isinstance(plane, list) and len(plane) == n,
                f"algebroid.bracket[{i}] must have length {n}")
        rows = []
        for j, row in enumerate(plane):
            _expect(isinstance(row, list) and len(row) == n,
                    f"algebroid.bracket[{i}][{j}] must have length {n}")
            rows.append([_parse_vector(field, v, m, f"algebroid.bracket[{i}][{j}][{l}]")
                         for l, v in enumerate(row)])
        bracket.append(rows)
    return LieRinehartAlgebroid(alg, n, anchors, bracket)


def _parse_module(field, alg, L, data, where="module") -> Representation:
    _expect(isinstance(data, dict), f"{where} must be an object")
    for key in ("dim", "action", "rho"):
        _expect(key in data, f"{where}.{key} is required")
    N = data["dim"]
    _expect(isinstance(N, int) and N >= 0, f"{where}.dim must be a non-negative int")
    _expect(isinstance(data["action"], list) and len(data["action"]) == alg.dim,
            f"{where}.action must have length {alg.dim}")
    action = [_parse_matrix(field, a, N, N, f"{where}.action[{i}]")
              for i, a in enumerate(data["action"])]
    _expect(isinstance(data["rho"], list) and len(data["rho"]) == L.n,
            f"{where}.rho must have length {L.n}")
    rho = [_parse_matrix(field, a, N, N, f"{where}.rho[{i}]")
           for i, a in enumerate(data["rho"])]
    return Representation(AModule(alg, N, action), rho)


def _parse_extension(field, alg, L, data) -> dict:
    _expect(isinstance(data, dict), "extension must be an object")
    _expect("k_indices" in data, "extension.k_indices is required")
    ks = data["k_indices"]
    _expect(isinstance(ks, list) and all(isinstance(i, int) and 0 <= i < L.n for i in ks)
            and len(set(ks)) == len(ks),
            "extension.k_indices must be distinct indices into the algebroid basis")
    out = {"k_indices": list(ks), "splitting": None}
    if data.get("splitting") is not None:
        r = L.n - len(ks)
        sp = data["splitting"]
        _expect(isinstance(sp, list) and len(sp) == r,
                f"extension.splitting must have {r} rows")
        rows = []
        for j, row in enumerate(sp):
            _expect(isinstance(row, list) and len(row) == L.n,
                    f"extension.splitting[{j}] must have length {L.n}")
            entries = []
            for l, x in enumerate(row):
                if isinstance(x, list):
                    entries.append(_parse_vector(field, x, alg.dim,
                                                 f"extension.splitting[{j}][{l}]"))
                else:
                    c = _parse_scalar(field, x, f"extension.splitting[{j}][{l}]")
                    entries.append(tuple(c * u for u in alg.unit))
            rows.append(entries)
        out["splitting"] = rows
    return out


def from_dict(data) -> ProblemFile:
    _expect(isinstance(data, dict), "problem must be a JSON object")
    for key in ("field", "algebra", "algebroid"):
        _expect(key in data, f"{key} is required")
    field = _parse_field(data["field"])
    alg = _parse_algebra(field, data["algebra"])
    L = _parse_algebroid(field, alg, data["algebroid"])
    module = None
    if data.get("module") is not None:
        module = _parse_module(field, alg, L, data["module"])
    complex_ = None
    if data.get("complex") is not None:
        cdata = data["complex"]
        _expect(isinstance(cdata, dict) and "modules" in cdata and "maps" in cdata,
                "complex needs modules and maps")
        mods = [_parse_module(field, alg, L, md, where=f"complex.modules[{i}]")
                for i, md in enumerate(cdata["modules"])]
        _expect(len(cdata["maps"]) == max(len(mods) - 1, 0),
                "complex.maps must have one entry per consecutive pair")
        maps = [_parse_matrix(field, mp, mods[i + 1].module.dim, mods[i].module.dim,
                              f"complex.maps[{i}]")
                for i, mp in enumerate(cdata["maps"])]
        complex_ = RepComplex(mods, maps)
    extension = None
    if data.get("extension") is not None:
        extension = _parse_extension(field, alg, L, data["extension"])
    options = data.get("options") or {}
    _expect(isinstance(options, dict), "options must be an object")
    return ProblemFile(field, alg, L, module, complex_, extension, options)


def parse(path) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e
    return from_dict(data)


def _fmt_vector(field, v):
    return [field.fmt(x) for x in v]


def _fmt_matrix(field, m: Matrix):
    return [[field.fmt(x) for x in row] for row in m.entries]


def _module_dict(field, R: Representation):
    return {
        "dim": R.module.dim,
        "action": [_fmt_matrix(field, a) for a in R.module.action],
        "rho": [_fmt_matrix(field, r) for r in R.rho],
    }


def to_dict(p: ProblemFile) -> dict:
    f = p.field
    data = {
        "field": {"type": f.kind} if f.kind == "rational" else {"type": f.kind, "p": f.p},
        "algebra": {
            "dim": p.algebra.dim,
            "unit": _fmt_vector(f, p.algebra.unit),
            "mult": [[_fmt_vector(f, v) for v in row] for row in p.algebra.mult],
        },
        "algebroid": {
            "rank": p.algebroid.n,
            "anchor": [_fmt_matrix(f, a) for a in p.algebroid.anchors],
            "bracket": [[[_fmt_vector(f, v) for v in row] for row in plane]
                        for plane in p.algebroid.bracket],
        },
    }
    if p.module is not None:
        data["module"] = _module_dict(f, p.module)
    if p.complex is not None:
        data["complex"] = {
            "modules": [_module_dict(f, r) for r in p.complex.representations],
            "maps": [_fmt_matrix(f, m) for m in p.complex.maps],
        }
    if p.extension is not None:
        ext = {"k_indices": list(p.extension["k_indices"])}
        if p.extension.get("splitting") is not None:
            ext["splitting"] = [[_fmt_vector(f, v) for v in row]
                                for row in p.extension["splitting"]]
        else:
            ext["splitting"] = None
        data["extension"] = ext
    if p.options:
        data["options"] = dict(sorted(p.options.items()))
    return data


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def problem_hash(p: ProblemFile) -> str:
    return hashlib.sha256(canonical_json(to_dict(p)).encode()).hexdigest()
