"""Lexical scanner over `.java` sources.

Deliberately not a Java parser: it recognizes comments, the package
declaration, `class/interface/enum ... extends ... implements ...` headers,
`public` member declarations at class-body depth, and `receiver.method(...)`
call expressions with best-effort receiver-type resolution (fields, params,
locals, and static `Type.method` calls). That is all the feature pipeline
needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from archrec.ingest.model import CodeEntity, MethodSig

_COMMENT_RE = re.compile(r"/\*.*?\*/|//[^\n]*", re.DOTALL)
_STRING_RE = re.compile(r'"(?:\\.|[^"\\])*"')
_PACKAGE_RE = re.compile(r"^\s*package\s+([\w.]+)\s*;", re.MULTILINE)
_CLASS_RE = re.compile(
    r"\b(?:class|interface|enum)\s+(\w+)"
    r"(?:\s+extends\s+([\w.,\s<>]+?))?"
    r"(?:\s+implements\s+([\w.,\s<>]+?))?"
    r"\s*\{",
)
_PUBLIC_METHOD_RE = re.compile(
    r"\bpublic\s+(?:static\s+|final\s+|synchronized\s+|abstract\s+)*"
    r"([\w.<>\[\]]+)\s+(\w+)\s*\(([^)]*)\)"
)
_PUBLIC_FIELD_RE = re.compile(
    r"\bpublic\s+(?:static\s+|final\s+|transient\s+|volatile\s+)*"
    r"([\w.<>\[\]]+)\s+(\w+)\s*(?:=[^;]*)?;"
)
_VAR_DECL_RE = re.compile(r"\b([A-Z]\w*)\s+(\w+)\s*(?:=|;|,|\))")
_CALL_RE = re.compile(r"\b(\w+)\s*\.\s*(\w+)\s*\(")


@dataclass
class CallFact:
    """One resolved call site: caller class -> callee class.method."""

    caller: str
    callee: str
    method: str


@dataclass
class ScannedFile:
    path: str
    package: str
    entities: list[CodeEntity]
    calls: list[CallFact]


def _strip_generics(name: str) -> str:
    return re.sub(r"<[^<>]*>", "", name).strip()


def _type_names(clause: str | None) -> list[str]:
    if not clause:
        return []
    names = []
    for part in _strip_generics(clause).split(","):
        part = part.strip()
        if part:
            names.append(part.split(".")[-1])
    return names


def _body_span(text: str, open_brace: int) -> tuple[int, int]:
    """Return (start, end) offsets of the brace-balanced body at open_brace."""
    depth = 0
    for i in range(open_brace, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return open_brace + 1, i
    return open_brace + 1, len(text)


def scan_source(text: str, path: str = "<memory>") -> ScannedFile:
    """Scan one compilation unit into entities plus unresolved-name call facts."""
    comments = [_clean_comment(c) for c in _COMMENT_RE.findall(text)]
    code = _COMMENT_RE.sub(" ", text)
    code = _STRING_RE.sub('""', code)

    pkg_match = _PACKAGE_RE.search(code)
    package = pkg_match.group(1) if pkg_match else ""

    entities: list[CodeEntity] = []
    calls: list[CallFact] = []
    spans: list[tuple[str, int, int]] = []
    for m in _CLASS_RE.finditer(code):
        name = m.group(1)
        body_start, body_end = _body_span(code, m.end() - 1)
        # skip nested classes; only top-level spans become entities
        if any(s <= m.start() < e for _, s, e in spans):
            continue
        spans.append((name, body_start, body_end))
        inherits = set(_type_names(m.group(2)) + _type_names(m.group(3)))
        body = code[body_start:body_end]
        methods = [
            MethodSig(
                name=mm.group(2),
                param_types=tuple(
                    _strip_generics(p.rsplit(None, 1)[0])
                    for p in mm.group(3).split(",")
                    if p.strip()
                ),
                return_type=_strip_generics(mm.group(1)),
            )
            for mm in _PUBLIC_METHOD_RE.finditer(body)
        ]
        fields = [
            mm.group(2)
            for mm in _PUBLIC_FIELD_RE.finditer(body)
            if "(" not in mm.group(0)
        ]
        entities.append(
            CodeEntity(
                id=-1,
                name=name,
                packaging=package,
                public_methods=methods,
                public_variables=fields,
                comments=[],
                inheritance_raw=inherits,
                source_path=path,
            )
        )
        calls.extend(_extract_calls(name, body))

    _attach_comments(text, comments, spans, entities)
    return ScannedFile(path=path, package=package, entities=entities, calls=calls)


def _clean_comment(comment: str) -> str:
    body = comment.strip()
    if body.startswith("/*"):
        body = body[2:-2]
    elif body.startswith("//"):
        body = body[2:]
    lines = [ln.strip().lstrip("*").strip() for ln in body.splitlines()]
    return " ".join(ln for ln in lines if ln)


def _attach_comments(text, comments, spans, entities):
    """Assign each comment to the class whose body contains it; leading
    comments go to the first class that follows them."""
    if not entities:
        return
    by_name = {e.name: e for e in entities}
    positions = [m.start() for m in _COMMENT_RE.finditer(text)]
    for pos, comment in zip(positions, comments):
        if not comment:
            continue
        owner = None
        for name, start, end in spans:
            if start <= pos < end:
                owner = by_name[name]
                break
        if owner is None:
            following = [(s, n) for n, s, _ in spans if s > pos]
            owner = by_name[min(following)[1]] if following else entities[0]
        owner.comments.append(comment)


def _extract_calls(class_name: str, body: str) -> list[CallFact]:
    """Best-effort receiver resolution: declared variable types and
    capitalized receivers treated as type names."""
    var_types: dict[str, str] = {}
    for m in _VAR_DECL_RE.finditer(body):
        var_types[m.group(2)] = m.group(1)
    facts = []
    for m in _CALL_RE.finditer(body):
        receiver, method = m.group(1), m.group(2)
        if receiver in ("this", "super"):
            continue
        callee = var_types.get(receiver)
        if callee is None and receiver[:1].isupper():
            callee = receiver
        if callee is None:
            continue
        facts.append(CallFact(caller=class_name, callee=callee, method=method))
    return facts


def scan_directory(root: str | Path) -> tuple[list[CodeEntity], list[CallFact]]:
    """Scan every `.java` file under root; ids follow sorted path order."""
    root = Path(root)
    entities: list[CodeEntity] = []
    calls: list[CallFact] = []
    for path in sorted(root.rglob("*.java")):
        scanned = scan_source(path.read_text(encoding="utf-8"), str(path))
        entities.extend(scanned.entities)
        calls.extend(scanned.calls)
    for i, e in enumerate(entities):
        e.id = i
    return entities, calls


def read_call_edge_file(path: str | Path) -> list[CallFact]:
    """Read pre-extracted call edges: caller<TAB>callee<TAB>method<TAB>sig."""
    facts = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 3:
                raise ValueError(f"{path}:{lineno}: expected caller<TAB>callee<TAB>method[<TAB>sig]")
            facts.append(CallFact(caller=parts[0], callee=parts[1], method=parts[2]))
    return facts
