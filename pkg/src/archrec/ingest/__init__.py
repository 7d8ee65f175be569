from archrec.ingest.corpus import (
    Corpus,
    build_corpus,
    corpus_from_dict,
    corpus_to_dict,
    ingest_directory,
    load_corpus,
    save_corpus,
)
from archrec.ingest.depgraph import CallEdge, DependencyGraph, SideEdge, build_dependency_graph
from archrec.ingest.model import (
    CodeEntity,
    MethodSig,
    extract_class_concepts,
    extract_inheritance_list,
    extract_method_concepts,
    extract_textual_features,
)
from archrec.ingest.scanner import CallFact, read_call_edge_file, scan_directory, scan_source
from archrec.ingest.scoping import ScopingError, ScopingRules, scope_corpus
from archrec.ingest.tokens import (
    TokenBag,
    extract_name_concepts,
    extract_package_path,
    normalize_tokens,
    tokenize_identifier,
)
