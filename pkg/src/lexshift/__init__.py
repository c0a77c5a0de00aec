"""Corpus-transformation toolkit: turn an edited-text POS corpus into a
synthetic social-media-style corpus with aligned labels.

The four transformations (emoji insertion, inverse lexical normalization,
proper-noun mention/hashtag conversion, platform-token injection) all carry
per-token provenance, so every run is reversible and fully reproducible from
a single master seed.
"""

from .config import config_to_dict, load_config
from .conllu import (
    Corpus,
    ORIGINAL,
    Provenance,
    ProvenanceKind,
    Sentence,
    Token,
    TransformId,
    UposTag,
    ValidationReport,
    parse_conllu,
    serialize_conllu,
    validate,
)
from .errors import (
    InvalidConfig,
    LexshiftError,
    MalformedJson,
    MalformedLine,
    MissingField,
    MissingProvenance,
    NoObservations,
    NoVariants,
    UnknownUpos,
)
from .normdict import (
    LexnormRecord,
    NormalizationDictionary,
    VariantEntry,
    build_dictionary,
    parse_lexnorm,
)
from .stats import (
    FeatureRateReport,
    LengthStats,
    PlacementModel,
    feature_rate_report,
    fit_location_gaussian,
    is_emoji_token,
    relative_positions,
    sample_position,
    sentence_length_stats,
)
from .transforms import (
    EmojiConfig,
    IlnConfig,
    PropnConfig,
    SeededStreams,
    TransformConfig,
    XConfig,
    apply_iln,
    concat,
    convert_propn,
    inject_emojis,
    inject_x,
    load_inventory_file,
    parse_inventory,
    restore_original,
    transform_all,
)

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "EmojiConfig",
    "FeatureRateReport",
    "IlnConfig",
    "InvalidConfig",
    "LengthStats",
    "LexnormRecord",
    "LexshiftError",
    "MalformedJson",
    "MalformedLine",
    "MissingField",
    "MissingProvenance",
    "NoObservations",
    "NoVariants",
    "NormalizationDictionary",
    "ORIGINAL",
    "PlacementModel",
    "PropnConfig",
    "Provenance",
    "ProvenanceKind",
    "SeededStreams",
    "Sentence",
    "Token",
    "TransformConfig",
    "TransformId",
    "UnknownUpos",
    "UposTag",
    "ValidationReport",
    "VariantEntry",
    "XConfig",
    "apply_iln",
    "build_dictionary",
    "concat",
    "config_to_dict",
    "convert_propn",
    "feature_rate_report",
    "fit_location_gaussian",
    "inject_emojis",
    "inject_x",
    "is_emoji_token",
    "load_config",
    "load_inventory_file",
    "parse_conllu",
    "parse_inventory",
    "parse_lexnorm",
    "relative_positions",
    "restore_original",
    "sample_position",
    "sentence_length_stats",
    "serialize_conllu",
    "transform_all",
    "validate",
]
