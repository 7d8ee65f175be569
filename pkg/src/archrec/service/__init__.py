from archrec.service.config import ConfigError, RunConfig
from archrec.service.graphml import export_graphml, graphml_text
from archrec.service.pipeline import (
    AnalysisSession,
    IngestionError,
    analyze,
    load_session,
    run_pipeline,
    strip_timestamp,
)
