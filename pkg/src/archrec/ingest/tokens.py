"""Identifier tokenization and IR-token normalization.

Two distinct pipelines share the splitter:

* IR tokens (comments + public variable identifiers): split, lowercase,
  drop reserved/stop words, stem, count.
* Concept words (class/method names): split only; surface form is kept and
  matching happens case-insensitively downstream.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from archrec.lang import LanguageProfile, Stemmer

# One alphanumeric chunk at a time; camel/acronym/digit boundaries inside.
_CHUNK_RE = re.compile(r"[A-Za-z0-9]+")
_PIECE_RE = re.compile(r"[0-9]+|[A-Z]+(?![a-z])|[A-Z][a-z]*|[a-z]+")


@dataclass
class TokenBag:
    """Multiset of normalized IR tokens."""

    counts: Counter = field(default_factory=Counter)

    def add(self, token: str, n: int = 1) -> None:
        if n:
            self.counts[token] += n

    def merge(self, other: "TokenBag") -> "TokenBag":
        self.counts.update(other.counts)
        return self

    def total(self) -> int:
        return sum(self.counts.values())

    def __bool__(self) -> bool:
        return bool(self.counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, TokenBag):
            return self.counts == other.counts
        return NotImplemented


def tokenize_identifier(s: str) -> list[str]:
    """Split a string on whitespace/punctuation, then on camel-case,
    acronym (HTTPResponse -> HTTP, Response), and digit boundaries.

    Order of appearance is preserved; no filtering happens here.
    """
    words: list[str] = []
    for chunk in _CHUNK_RE.findall(s):
        words.extend(_PIECE_RE.findall(chunk))
    return words


def normalize_tokens(
    words: list[str],
    reserved: frozenset[str] | set[str],
    stop: frozenset[str] | set[str],
    stemmer: Stemmer,
) -> TokenBag:
    """Lowercase, drop reserved/stop/numeric words, stem, and count."""
    bag = TokenBag()
    for word in words:
        low = word.lower()
        if low in reserved or low in stop or low.isdigit():
            continue
        bag.add(stemmer(low))
    return bag


def extract_name_concepts(s: str) -> list[str]:
    """Concept words from a class or method identifier: split only,
    no stop/reserved filtering, no stemming."""
    return tokenize_identifier(s)


def extract_package_path(packaging: str) -> list[str]:
    """Split a dotted packaging string into segments, camel-splitting each."""
    if not packaging:
        return []
    segments: list[str] = []
    for part in packaging.split("."):
        segments.extend(tokenize_identifier(part))
    return segments


def ir_tokens(texts: list[str], profile: LanguageProfile) -> TokenBag:
    """IR-token bag over raw strings under a language profile."""
    bag = TokenBag()
    for text in texts:
        bag.merge(
            normalize_tokens(
                tokenize_identifier(text),
                profile.reserved,
                profile.stop_words,
                profile.stemmer,
            )
        )
    return bag
