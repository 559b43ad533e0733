import json
import subprocess
import sys
import tempfile
from pathlib import Path

cli = sys.argv[1]

out = subprocess.run([cli, "run", "cone-planes", "--json"], capture_output=True, text=True)
assert out.returncode == 0, out.stderr
doc = json.loads(out.stdout)
assert doc["schema"] == 1
assert doc["scenario"] == "cone-planes"
assert doc["verdict"] == "pass"
assert set(doc["tables"]) == {"betti", "hilbert", "certificates"}
assert all(c["passed"] for s in doc["steps"] for c in s["checks"])
assert json.dumps(json.loads(json.dumps(doc))) == json.dumps(doc)

with tempfile.TemporaryDirectory() as d:
    out = subprocess.run([cli, "run", "skew-lines", "lesperance", "--report-dir", d], capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    files = sorted(p.name for p in Path(d).iterdir())
    assert files == ["lesperance.json", "skew-lines.json"], files
    rao = json.loads((Path(d) / "lesperance.json").read_text())["tables"]["hilbert"]["rao C"]
    assert rao == {"0": 1, "1": 1}, rao
print("ok")
