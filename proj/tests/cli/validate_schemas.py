#!/usr/bin/env python3
"""Runs the CLI in JSON mode and validates each output against its schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("normal_form", ["nf", "3: 1 1 2"]),
    ("normal_form", ["nf", "3: 1 2 1"]),
    ("normal_form", ["nf", "5:"]),
    ("normal_form", ["inv", "4: 1 -2 3 3"]),
    ("sliding_circuit", ["sc", "3: -2 1 1 2"]),
    ("sliding_circuit", ["sc", "4: D^2"]),
    ("uss_graph", ["uss", "3: 1 1"]),
    ("uss_graph", ["uss", "3: 1 2 2 1"]),
    ("uss_graph", ["uss", "3: D^2"]),
    ("centralizer", ["centralizer", "3: 1 1"]),
    ("centralizer", ["centralizer", "3: 1 2 2 1"]),
    ("centralizer", ["centralizer", "4: 2 2"]),
    ("centralizer", ["centralizer", "3:"]),
    ("experiment", ["experiment", "--n", "3", "--lengths", "2,4", "--trials", "4", "--seed", "9"]),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(s)) for name, s in schemas.items()
    )
    failures = 0
    for schema_name, args in CASES:
        schema = schemas[f"{schema_name}.schema.json"]
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {args}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schema, registry=registry)
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        for e in errors:
            print(f"FAIL {args}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {schema_name:16} {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
