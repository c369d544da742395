"""
Writing and checking a certificate
==================================

A certificate carries the group description and the coset ordering, so a
verifier can rebuild the Jacobian from scratch.  Tampering with any
number makes verification fail.
"""

import json
import tempfile
from pathlib import Path

from tracecert.cli import main

spec = Path(__file__).resolve().parent.parent / "specs" / "s3_regular_listed_order.json"
workdir = Path(tempfile.mkdtemp())
out = workdir / "s3.json"

code = main(["certify", "--group", str(spec), "--k", "3", "--seed", "3", "--out", str(out)])
print("certify exit code:", code)
print("verify exit code:", main(["verify", str(out)]))

report = json.loads(out.read_text())
report["certificate"]["det_value"] = str(int(report["certificate"]["det_value"]) - 1)
tampered = workdir / "tampered.json"
tampered.write_text(json.dumps(report))
print("tampered verify exit code:", main(["verify", str(tampered)]))
