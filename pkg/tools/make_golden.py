"""Regenerate src/basiclocus/data/golden.json from basiclocus.expected."""

import json
from pathlib import Path

from basiclocus.expected import golden_document

out = Path(__file__).resolve().parents[1] / "src" / "basiclocus" / "data" / "golden.json"
out.write_text(json.dumps(golden_document(7), indent=1, sort_keys=True) + "\n")
print(out)
