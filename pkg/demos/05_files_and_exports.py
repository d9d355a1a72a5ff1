"""
Files, exports and the command line
===================================

The SHD text format is a character matrix that diffs well.  DOT and JSON
exports are for drawing and for other tools.
"""

import io
import os
import tempfile

from sethom import build
from sethom.cli import run
from sethom.formats import from_shd, to_dot, to_json, to_shd

e6 = build("E6")
text = to_shd(e6)
print(text)
assert from_shd(text) == e6

print(to_dot(e6))
print(to_json(e6))

# The console script ``sethom`` wraps the same calls; ``run`` is its entry
# point and returns the exit status.
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "d5.shd")
    run(["build", "D(5)", "-o", path])
    out = io.StringIO()
    status = run(["check", "hom", path], out)
    print(f"sethom check hom d5.shd -> exit {status}: {out.getvalue().strip()}")

out = io.StringIO()
run(["aut", "expr:C(5)"], out)
print(out.getvalue())
