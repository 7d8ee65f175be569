"""Code entities and per-entity raw feature extraction."""

from __future__ import annotations

from dataclasses import dataclass, field

from archrec.ingest.tokens import (
    TokenBag,
    extract_name_concepts,
    extract_package_path,
    ir_tokens,
)
from archrec.lang import JAVA_PROFILE, LanguageProfile


@dataclass
class MethodSig:
    name: str
    param_types: tuple[str, ...] = ()
    return_type: str = "void"

    def signature(self) -> str:
        return f"{self.name}({','.join(self.param_types)}):{self.return_type}"


@dataclass
class CodeEntity:
    """One analyzed class: identity plus the raw material features are cut from."""

    id: int
    name: str
    packaging: str = ""
    public_methods: list[MethodSig] = field(default_factory=list)
    public_variables: list[str] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)
    inheritance_raw: set[str] = field(default_factory=set)
    source_path: str = ""

    def __post_init__(self):
        self.inheritance_raw.discard(self.name)

    @property
    def package_path(self) -> list[str]:
        return extract_package_path(self.packaging)

    def public_method_names(self) -> set[str]:
        return {m.name for m in self.public_methods}


def extract_textual_features(
    e: CodeEntity, profile: LanguageProfile = JAVA_PROFILE
) -> TokenBag:
    """IR tokens over the entity's comments and public variable identifiers."""
    return ir_tokens(list(e.comments) + list(e.public_variables), profile)


def extract_class_concepts(e: CodeEntity) -> list[str]:
    return extract_name_concepts(e.name)


def extract_method_concepts(e: CodeEntity) -> list[str]:
    concepts: list[str] = []
    for m in e.public_methods:
        concepts.extend(extract_name_concepts(m.name))
    return concepts


def extract_inheritance_list(e: CodeEntity) -> set[str]:
    """Type names extended/implemented, as written, excluding the entity itself."""
    return set(e.inheritance_raw) - {e.name}
