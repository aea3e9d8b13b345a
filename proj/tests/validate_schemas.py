"""Runs every JSON-producing CLI command and validates the output against docs/*.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("identity_reports", ["verify", "--json"]),
    ("identity_reports", ["verify", "--only", "schlafli_probe", "--json"]),
    ("identity_reports", ["lattice", "--check", "all", "--json"]),
    ("powers", ["powers", "-n", "4", "--json"]),
    ("powers", ["powers", "-n", "7", "--json"]),
    ("roots", ["roots", "--matrix", "cmE8", "--max-height", "30", "--json"]),
    ("roots", ["roots", "--matrix", "cmU", "--mode", "serre-free", "--max-height", "8", "--json"]),
    ("roots", ["roots", "--matrix", "J", "--mode", "raw", "--max-height", "3", "--no-dedup", "--json"]),
    ("project", ["project", "--dims", "2,3,4", "--json"]),
    ("project", ["project", "--all", "--basis", "cmU", "--json"]),
]


def main() -> int:
    cli, docs = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in docs.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(schema)) for name, schema in schemas.items()
    )
    failed = 0
    for schema_name, args in CASES:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode not in (0, 1):
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        schema = schemas[f"{schema_name}.schema.json"]
        validator = jsonschema.Draft202012Validator(schema, registry=registry)
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        if errors:
            failed += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {label}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
