from archrec.retrieval.rank import (
    EntityMappingEntry,
    QueryResult,
    RankedList,
    UnanswerableQuery,
    map_entities,
    query_classes,
)
from archrec.retrieval.vectors import (
    ClusterVectors,
    IdfTable,
    cluster_vectors,
    sparse_cosine,
    stemmed_projection,
    text_to_vector,
)
