"""Runs CLI commands with --format json and validates each output against
its schema in schemas/."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator

CASES = [
    ("count.schema.json", ["count", "--d", "3", "--n", "2", "--format", "json"]),
    ("count.schema.json", ["count", "--d", "5", "--n", "0", "--format", "json"]),
    ("oracle.schema.json", ["oracle", "--d", "2", "--n", "1"]),
    ("oracle.schema.json", ["oracle", "--d", "3", "--n", "1", "--constraint", "mmdf"]),
    ("ratios.schema.json", ["ratios", "--d", "3", "--max-n", "4", "--format", "json"]),
    ("ratios.schema.json", ["ratios", "--d", "2", "--max-n", "1", "--digits", "3", "--format", "json"]),
    ("entropy.schema.json", ["entropy", "--d", "3", "--k", "6", "--format", "json"]),
    ("entropy.schema.json", ["entropy", "--d", "5", "--k", "2", "--precision", "30", "--format", "json"]),
    ("appendix.schema.json", ["appendix-check", "--d", "3", "--format", "json"]),
    ("appendix.schema.json", ["appendix-check", "--d", "3", "--which", "contraction", "--term-budget", "50",
                              "--format", "json"]),
]


def main() -> int:
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / name).read_text())
        Draft202012Validator.check_schema(schema)
        proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        if proc.returncode not in (0, 3):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(Draft202012Validator(schema).iter_errors(json.loads(proc.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)} against {name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
