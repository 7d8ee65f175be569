"""Corpus scoping: carve UI/data-access/model/utility layers off the business layer."""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field

from archrec.ingest.model import CodeEntity

LAYERS = ("UI", "DA", "Models", "Utils")

# Package-segment heuristics per layer; user rules override.
DEFAULT_LAYER_SEGMENTS = {
    "UI": {"ui", "view", "web"},
    "DA": {"dao", "persistence", "repository"},
    "Models": {"model", "dto", "entity"},
    "Utils": {"util", "utils", "common", "helper"},
}


class ScopingError(Exception):
    """Nothing left to cluster after scoping."""


@dataclass
class ScopingRules:
    """Glob patterns per layer over 'package.ClassName', plus explicit id lists."""

    layer_patterns: dict[str, list[str]] = field(default_factory=dict)
    include_names: set[str] = field(default_factory=set)
    exclude_names: set[str] = field(default_factory=set)
    use_default_heuristics: bool = True

    def __post_init__(self):
        overlap = self.include_names & self.exclude_names
        if overlap:
            raise ValueError(f"include/exclude overlap: {sorted(overlap)}")

    @classmethod
    def from_file(cls, path: str) -> "ScopingRules":
        """Parse the key-value rules file.

        Lines are `key = v1, v2, ...`; keys: ui, da, models, utils (glob
        patterns over package.ClassName), include, exclude (class names),
        heuristics (on/off). '#' starts a comment.
        """
        key_to_layer = {"ui": "UI", "da": "DA", "models": "Models", "utils": "Utils"}
        rules = cls()
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"bad rules line: {raw.rstrip()}")
                key, _, value = line.partition("=")
                key = key.strip().lower()
                values = [v.strip() for v in value.split(",") if v.strip()]
                if key in key_to_layer:
                    rules.layer_patterns.setdefault(key_to_layer[key], []).extend(values)
                elif key == "include":
                    rules.include_names.update(values)
                elif key == "exclude":
                    rules.exclude_names.update(values)
                elif key == "heuristics":
                    rules.use_default_heuristics = values[0].lower() not in ("off", "false", "0")
                else:
                    raise ValueError(f"unknown rules key: {key}")
        overlap = rules.include_names & rules.exclude_names
        if overlap:
            raise ValueError(f"include/exclude overlap: {sorted(overlap)}")
        return rules


def _layer_of(e: CodeEntity, rules: ScopingRules) -> str | None:
    if e.name in rules.include_names:
        return None
    qualified = f"{e.packaging}.{e.name}" if e.packaging else e.name
    for layer in LAYERS:
        for pattern in rules.layer_patterns.get(layer, ()):
            if fnmatch.fnmatchcase(qualified, pattern) or fnmatch.fnmatchcase(e.name, pattern):
                return layer
    if e.name in rules.exclude_names:
        return "Utils"
    if rules.use_default_heuristics:
        segments = {s.lower() for s in e.packaging.split(".") if s}
        for layer in LAYERS:
            if segments & DEFAULT_LAYER_SEGMENTS[layer]:
                return layer
    return None


def scope_corpus(
    entities: list[CodeEntity], rules: ScopingRules
) -> tuple[list[CodeEntity], dict[str, list[CodeEntity]], dict[int, int]]:
    """Split the corpus into the business layer and excluded layers.

    Business entities are re-indexed densely; the returned map carries
    original id -> new id so cross-layer edges stay resolvable.
    """
    if not entities:
        raise ScopingError("empty corpus")
    business: list[CodeEntity] = []
    excluded: dict[str, list[CodeEntity]] = {layer: [] for layer in LAYERS}
    id_map: dict[int, int] = {}
    for e in entities:
        layer = _layer_of(e, rules)
        if layer is None:
            id_map[e.id] = len(business)
            business.append(e)
        else:
            excluded[layer].append(e)
    if not business:
        raise ScopingError("nothing to cluster: scoping excluded every entity")
    for e in business:
        e.id = id_map[e.id]
    return business, {k: v for k, v in excluded.items() if v}, id_map
