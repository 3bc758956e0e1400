"""Runs a representative set of CLI invocations and validates every JSON
report against the published schema. CSV output is checked for a header and
consistent column counts."""

import csv
import io
import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["mult", "--lambda", "4,1", "--r", "3", "--alg", "all"],
    ["mult", "--lambda", "6,2,1", "--r", "4", "--alg", "updown"],
    ["moments", "commutator-random", "--n", "10", "--r-max", "3"],
    ["moments", "commutator-fixed", "--n", "8", "--x", "2^4", "--r-max", "3"],
    ["moments", "walk", "--n", "300", "--i", "3", "--c", "0.5", "--r-max", "3"],
    ["moments", "walk", "--n", "7", "--i", "2", "--k", "5", "--exact", "--r-max", "2"],
    ["simulate", "--model", "walk", "--n", "40", "--i", "2", "--k", "60", "--samples", "2e4", "--seed", "3"],
    ["simulate", "--model", "commutator", "--n", "6", "--x", "3,3", "--samples", "2e4"],
    ["simulate", "--model", "uniform", "--n", "9", "--samples", "1e4"],
    ["ratio", "--lambda", "5,2,1", "--i", "3"],
    ["ratio", "--i", "2", "--t", "2", "--n-list", "40,80"],
    ["dist", "walk", "--n", "5", "--i", "3", "--k", "4"],
    ["dist", "commutator", "--n", "4", "--x", "2,2"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    validator.check_schema(schema)
    failures = 0

    def check(doc, label):
        nonlocal failures
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message}")

    for args in RUNS:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            failures += 1
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            continue
        check(json.loads(proc.stdout), " ".join(args))

        csv_proc = subprocess.run([binary, "--format", "csv", *args], capture_output=True, text=True, check=False)
        rows = list(csv.reader(io.StringIO(csv_proc.stdout)))
        if csv_proc.returncode != 0 or len(rows) < 2 or any(len(r) != len(rows[0]) for r in rows):
            failures += 1
            print(f"FAIL csv {' '.join(args)}")

    proc = subprocess.run([binary, "verify", "identities"], capture_output=True, text=True, check=False)
    for line in proc.stdout.splitlines():
        check(json.loads(line), "verify line")

    print(f"{len(RUNS)} commands checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
