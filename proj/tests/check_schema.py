"""Validate `k3cubic verify --json` against the published schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
run = subprocess.run([cli, "verify", "--json"], capture_output=True, text=True)
if run.returncode != 0:
    sys.exit(f"verify exited with {run.returncode}\n{run.stderr}")
with open(schema_path) as f:
    schema = json.load(f)
doc = json.loads(run.stdout)
jsonschema.validate(doc, schema)

timed = subprocess.run([cli, "verify", "--json", "--timing", "--group", "census"], capture_output=True, text=True)
jsonschema.validate(json.loads(timed.stdout), schema)
print(f"{len(doc['result']['checks'])} checks validated")
