from archrec.architecture.borderline import BorderlineEntry, borderline_classes
from archrec.architecture.hierarchy import (
    Hierarchy,
    build_hierarchy,
    cluster_pair_similarity,
    super_graph,
)
from archrec.architecture.interfaces import (
    ClusterInterface,
    InteractionEdge,
    InteractionGraph,
    InterfaceMethod,
    compute_interactions,
    compute_interfaces,
)
from archrec.architecture.labels import ClusterLabel, auto_label, cluster_centroid
from archrec.architecture.snapshot import (
    ArchitectureSnapshot,
    ReassignOutcome,
    build_snapshot,
    load_snapshot,
    reassign_and_refresh,
    save_snapshot,
    snapshot_from_dict,
    snapshot_to_dict,
)
from archrec.architecture.viz import bucket_edge, cross_layer_usage, viz_edges
