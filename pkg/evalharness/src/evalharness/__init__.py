"""Train-on-one-corpus, test-on-another POS tagging evaluation harness."""

from .aggregate import Aggregate, aggregate_runs, format_markdown
from .conllu import (
    ID2LABEL,
    LABEL2ID,
    UPOS_TAGS,
    LabeledSentence,
    UnknownLabel,
    read_conllu,
    read_conllu_file,
)
from .encoding import IGNORE_INDEX, encode_corpus, encode_sentence, pad_batch
from .harness import EvalResult, TrainConfig, train_and_eval

__version__ = "0.1.0"

__all__ = [
    "Aggregate",
    "EvalResult",
    "ID2LABEL",
    "IGNORE_INDEX",
    "LABEL2ID",
    "LabeledSentence",
    "TrainConfig",
    "UPOS_TAGS",
    "UnknownLabel",
    "aggregate_runs",
    "encode_corpus",
    "encode_sentence",
    "format_markdown",
    "pad_batch",
    "read_conllu",
    "read_conllu_file",
    "train_and_eval",
    "__version__",
]
