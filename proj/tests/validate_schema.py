"""Run the CLI in JSON mode for each report type and validate against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["spectrum"],
    ["spectrum", "--A", "30", "--B", "32", "--stamp"],
    ["spectrum", "--A", "1", "--B", "12.5"],
    ["verify"],
    ["verify", "--A", "30", "--B", "32"],
    ["verify", "--select", "leftmost"],
    ["verify", "--select", "rightmost", "--scheme", "central3"],
    ["natanzon"],
    ["natanzon", "--h1", "2", "--c1", "1.5", "--n-max", "1"],
]


def main(exe, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(
        schema, format_checker=jsonschema.Draft202012Validator.FORMAT_CHECKER)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([exe, *args, "--output", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
