"""n-gram scorer for grammatical error correction outputs.

Scores system corrections against randomly sampled human references and
meta-evaluates metric rankings against a gold ranking. The heavy lifting
lives in the compiled ``gleu._core`` extension; this package just re-exports
its surface.
"""

from ._core import (
    CorpusScore,
    CorrelationReport,
    EvalCorpus,
    MetricConfig,
    MetricKind,
    PrecisionStats,
    RankingEntry,
    RankingTable,
    SamplerConfig,
    Smoothing,
    bleu_precision_stats,
    brevity_penalty,
    build_eval_corpus,
    compose_score,
    correlate_rankings,
    evaluate,
    extract_ngrams,
    gleu_precision_stats,
    mean_rank_displacement,
    pearson,
    rank_systems,
    sample_assignment,
    score_corpus,
    spearman,
    sum_stats,
    tokenize,
)

__all__ = [
    "CorpusScore",
    "CorrelationReport",
    "EvalCorpus",
    "MetricConfig",
    "MetricKind",
    "PrecisionStats",
    "RankingEntry",
    "RankingTable",
    "SamplerConfig",
    "Smoothing",
    "bleu_precision_stats",
    "brevity_penalty",
    "build_eval_corpus",
    "compose_score",
    "correlate_rankings",
    "evaluate",
    "extract_ngrams",
    "gleu_precision_stats",
    "mean_rank_displacement",
    "pearson",
    "rank_systems",
    "sample_assignment",
    "score_corpus",
    "spearman",
    "sum_stats",
    "tokenize",
]

__version__ = "0.1.0"
