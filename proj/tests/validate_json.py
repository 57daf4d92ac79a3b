"""Validate rpart JSON output read from stdin against a schema file."""

import json
import sys

import jsonschema


def main() -> int:
    with open(sys.argv[1]) as f:
        schema = json.load(f)
    doc = json.load(sys.stdin)
    jsonschema.validate(doc, schema)
    if len(doc["counts"]) != doc["n"] + 1:
        print("counts has the wrong length", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
