"""Validate problem files against schema/problem.schema.json.

Usage: check_schema.py SCHEMA HOPFACT_BINARY FILE...
Each FILE is validated, and so is every sample that `enumerate --sample 2` prints for it.
"""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    schema_path, binary, *files = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft7Validator.check_schema(schema)
    validator = jsonschema.Draft7Validator(schema)
    bad = 0
    for path in files:
        with open(path) as f:
            docs = [("file", json.load(f))]
        run = subprocess.run([binary, "enumerate", path, "--sample", "2"], capture_output=True, text=True)
        if run.returncode == 0:
            docs += [(f"sample {k}", s["problem"]) for k, s in enumerate(json.loads(run.stdout).get("samples", []))]
        for tag, doc in docs:
            errors = list(validator.iter_errors(doc))
            for e in errors:
                print(f"{path} ({tag}): /{'/'.join(map(str, e.path))}: {e.message}")
            bad += bool(errors)
        print(f"{path}: {len(docs)} document(s) checked")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
