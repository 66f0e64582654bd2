"""Problem files and deterministic reports.

Problems are plain JSON (structure constants, anchors, brackets, optional
module / extension blocks); reports are canonical JSON whose bytes are
reproducible run to run.  The same commands are available on the command line
as `rinehart <command> <file>`.
"""

import json
from pathlib import Path

from rinehart.cli import render_json, run
from rinehart.problems import parse, problem_hash

problems = Path(__file__).resolve().parents[1] / "problems"

p = parse(problems / "ext_aff1.json")
print("input hash:", problem_hash(p))

report, code = run("hs", p)
print("exit code:", code)
print("second page:", report["results"]["pages"]["2"])
print("five-term:", report["results"]["five_term"])

again, _ = run("hs", parse(problems / "ext_aff1.json"))
print("byte-identical reports across runs:", render_json(report) == render_json(again))

bad = problems / "negative" / "bad_jacobi_sl2.json"
report, code = run("validate", parse(bad))
print("\nnegative entry exits with", code, "and localizes the failure:")
print(json.dumps(report["validation"]["algebroid"][:1], indent=2))
