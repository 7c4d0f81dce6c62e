"""Access to the bundled Gram-matrix fixture files."""

from __future__ import annotations

import json
from importlib import resources


def fixture_names() -> list[str]:
    root = resources.files(__package__) / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_gram(name: str) -> list[list[int]]:
    payload = json.loads(
        (resources.files(__package__) / "fixtures" / f"{name}.json").read_text()
    )
    return payload["gram"]
