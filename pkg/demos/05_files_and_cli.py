"""Bundle descriptions on disk and the command-line front end.

Bundles serialize to a small JSON document (TOML is accepted for
hand-authored files); every rational travels as the string "p/q", so no
binary float ever enters the pipeline.  The same documents drive the
CLI:

    parchern compute  <file> [--method=...] [--emit=json|text]
    parchern verify   <file>
    parchern selftest [--seed N] [--cases K]

Exit codes: 0 agreement, 2 exact disagreement, 1 malformed input.

Run:  python3 demos/05_files_and_cli.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from parchern import (BundleSpecError, bundle_from_dict, bundle_from_toml, bundle_to_dict,
                      load_bundle)

DOCUMENT = {
    "divisors": 2,
    "truncation_degree": 4,
    "extra_classes": ["H"],
    "ladders": [["-1/2", "-1/4"], ["-2/3"]],
    "summands": [
        {"c1": {"H": "2"}, "jumps": [1, 0]},
        {"c1": {"D1": "-1/3"}, "jumps": [0, 0]},
    ],
}

workdir = Path(tempfile.mkdtemp(prefix="parchern-demo-"))
path = workdir / "bundle.json"
path.write_text(json.dumps(DOCUMENT, indent=2))
print("wrote", path)

# --- parse, round-trip ---------------------------------------------------------

bundle = load_bundle(str(path))
print(f"parsed: n={bundle.num_divisors}, rank={bundle.rank}, "
      f"d={bundle.model.truncation_degree}")
assert bundle_from_dict(bundle_to_dict(bundle)) == bundle
print("dict round trip: exact")

# the same data as TOML
toml_text = """\
divisors = 2
truncation_degree = 4
extra_classes = ["H"]
ladders = [["-1/2", "-1/4"], ["-2/3"]]

[[summands]]
c1 = {H = "2"}
jumps = [1, 0]

[[summands]]
c1 = {D1 = "-1/3"}
jumps = [0, 0]
"""
assert bundle_from_toml(toml_text) == bundle
print("TOML form parses to the same bundle")

# --- malformed input fails loudly, with a position -----------------------------

broken = dict(DOCUMENT, ladders=[["-1/2", "-3/4"], ["-2/3"]])  # decreasing
try:
    bundle_from_dict(broken)
except BundleSpecError as exc:
    print(f"\nrejected as expected -> {type(exc).__name__}: {exc}")

# --- the CLI on the same file ---------------------------------------------------

print("\n$ parchern compute bundle.json --method=lowdegree --emit=text")
result = subprocess.run(
    [sys.executable, "-m", "parchern", "compute", str(path),
     "--method=lowdegree", "--emit=text"],
    capture_output=True, text=True)
print(result.stdout, end="")
assert result.returncode == 0

print("$ parchern verify bundle.json   (exit code)")
result = subprocess.run([sys.executable, "-m", "parchern", "verify", str(path)],
                        capture_output=True, text=True)
print("  ->", result.returncode)
assert result.returncode == 0
assert json.loads(result.stdout)["agreement"] is True

print("$ parchern selftest --cases 5 --seed 42")
result = subprocess.run(
    [sys.executable, "-m", "parchern", "selftest", "--cases", "5", "--seed", "42"],
    capture_output=True, text=True)
for line in result.stdout.splitlines():
    row = json.loads(line)
    print(f"  seed {row['seed']}: agreement {row['agreement']}")
print(" ", result.stderr.strip())
assert result.returncode == 0
