"""Run the CLI over a spread of commands and validate every JSON report."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["oracle", "--target", "1/E4", "--n-to", "5"],
    ["oracle", "--target", "E2*E4^2/E6^2", "--n-from", "3", "--n-to", "4"],
    ["compare", "--target", "1/E6", "--n-to", "3", "--cutoff", "1500"],
    ["compare", "--target", "E4/E6", "--n-to", "2", "--cutoff", "50"],
    ["compare", "--target", "E8/E4"],
    ["convergence", "--target", "1/E4", "--n-from", "15", "--n-to", "15", "--cutoff", "16"],
    ["poincare-check", "--target", "decay_H12", "--box-bound", "10", "--precision-bits", "96"],
    ["poincare-check", "--target", "residue_H6", "--samples", ""],
    ["pole-family", "--tau0", "2i", "--n-to", "2", "--cutoff", "300", "--precision-bits", "96"],
    ["pole-family", "--tau0", "i"],
]

failures = 0
for args in runs:
    proc = subprocess.run([exe, *args], capture_output=True, text=True)
    try:
        report = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        print(f"FAIL {args}: not JSON ({e})")
        failures += 1
        continue
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    if errors:
        failures += 1
        for e in errors:
            print(f"FAIL {args}: {'/'.join(map(str, e.path))}: {e.message}")
    else:
        print(f"ok   {' '.join(args)} (exit {proc.returncode})")

# byte-identical output apart from the timing field
a = json.loads(subprocess.run([exe, *runs[2]], capture_output=True, text=True).stdout)
b = json.loads(subprocess.run([exe, *runs[2]], capture_output=True, text=True).stdout)
for r in (a, b):
    r["metadata"].pop("wall_time_seconds")
if json.dumps(a) != json.dumps(b):
    print("FAIL repeated run differs")
    failures += 1

sys.exit(1 if failures else 0)
