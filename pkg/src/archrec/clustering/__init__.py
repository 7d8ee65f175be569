from archrec.clustering.anneal import AnnealingState, sn_accept
from archrec.clustering.outliers import (
    OutlierResult,
    eliminate_outliers,
    next_alpha,
    skewness_g1,
    stoer_wagner_min_cut,
)
from archrec.clustering.partition import (
    NEW_CLUSTER,
    Move,
    Partition,
    QualityReport,
    mq,
    mq_after_move,
    mqc,
)
from archrec.clustering.search import (
    SearchConfig,
    SearchResult,
    TraceEntry,
    climb_hill,
    initiation_test,
    search,
    search_seed,
)
from archrec.clustering.seeds import (
    SEED_STRATEGIES,
    cc_partition,
    clique_strength,
    generate_seed,
)
