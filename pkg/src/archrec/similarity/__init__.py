from archrec.similarity.combine import (
    DEFAULT_FACTORS,
    FEATURE_NAMES,
    ExtendedDependenceGraph,
    SignificanceFactors,
    SimilarityBundle,
    build_similarity_bundle,
    combined_similarity,
    compute_similarities,
    save_similarity_bundle,
    semantic_richness,
    suggest_significance_factors,
)
from archrec.similarity.matrices import (
    FeatureMatrices,
    FeatureMatrix,
    apply_tf_idf,
    build_feature_matrices,
    idf_vector,
    matrix_from_bags,
    matrix_from_concepts,
)
from archrec.similarity.measures import (
    cosine_matrix,
    cosine_similarity,
    inheritance_closure,
    jaccard_matrix,
    jaccard_similarity,
    minmax_matrix,
    minmax_similarity,
    structural_similarity,
)
