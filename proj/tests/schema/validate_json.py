#!/usr/bin/env python3
"""Validate nilalg JSON output against docs/report.schema.json.

Usage: validate_json.py <cli> <schema> <file.alg>...
Runs `report --format json`, `invariants --format json` on each file, and
`invariants --alpha 2` on each parametric file.
"""

import json
import subprocess
import sys

import jsonschema


def run(cli, *args):
    done = subprocess.run([cli, *args], capture_output=True, text=True)
    if done.returncode not in (0, 1):
        sys.exit(f"{' '.join(args)}: exit {done.returncode}\n{done.stderr}")
    return json.loads(done.stdout)


def main():
    cli, schema_path, *files = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    documents = [("report", run(cli, "report", "--format", "json"))]
    for path in files:
        doc = run(cli, "invariants", path, "--format", "json")
        documents.append((path, doc))
        if doc["parametric"]:
            documents.append((path + " at a = 2", run(cli, "invariants", path, "--alpha", "2", "--format", "json")))
    failed = 0
    for label, doc in documents:
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"{label}: {'/'.join(map(str, e.path))}: {e.message}")
        failed += bool(errors)
    print(f"{len(documents) - failed} of {len(documents)} documents valid")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
