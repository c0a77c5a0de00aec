"""Command-line entry point for reproducible corpus-transformation batch runs.

Subcommands: fit-placement, build-dict, transform, stats, concat, diff-report.
Exit codes: 0 success, 1 input/config error, 2 empty-observation error.
All file outputs are written to a temp file and renamed on success, so no
command leaves a partial output behind.
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .config import config_to_dict, load_config
from .conllu import Corpus, parse_conllu, serialize_conllu, validate
from .errors import LexshiftError, NoObservations
from .normdict import NormalizationDictionary, build_dictionary, parse_lexnorm
from .stats import (
    PlacementModel,
    feature_rate_report,
    fit_location_gaussian,
    is_emoji_token,
    relative_positions,
    sentence_length_stats,
)
from .transforms import transform_all

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NO_OBSERVATIONS = 2


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as f:
        return f.read()


def _write_atomic(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".lexshift-")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _label_for(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _load_corpus(path: str) -> tuple[Corpus, bytes]:
    data = _read_bytes(path)
    corpus = parse_conllu(data.decode("utf-8"), source_label=_label_for(path))
    return corpus, data


def _print_json(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, indent=2))


def cmd_fit_placement(args) -> int:
    corpus, _ = _load_corpus(args.corpus)
    if args.feature == "emoji":
        predicate = lambda token: is_emoji_token(token.form)
    else:
        predicate = lambda token: token.form.startswith("#") and len(token.form) >= 2
    model = fit_location_gaussian(relative_positions(corpus, predicate))
    _write_atomic(
        args.out, (json.dumps(model.to_json_dict(), indent=2) + "\n").encode("utf-8")
    )
    _print_json(model.to_json_dict())
    return EXIT_OK


def cmd_build_dict(args) -> int:
    text = _read_bytes(args.lexnorm).decode("utf-8")
    parsed = parse_lexnorm(text, input_key=args.input_key, output_key=args.output_key)
    dictionary = build_dictionary(parsed.records)
    _write_atomic(
        args.out,
        (json.dumps(dictionary.to_json_dict(), ensure_ascii=False, indent=2) + "\n").encode("utf-8"),
    )
    _print_json(
        {
            "entries": dictionary.total_entries,
            "variants": sum(len(v) for v in dictionary.entries.values()),
            "dropped_records": parsed.dropped,
        }
    )
    return EXIT_OK


def _load_model_file(path: str) -> tuple[PlacementModel, bytes]:
    data = _read_bytes(path)
    try:
        model = PlacementModel.from_json_dict(json.loads(data.decode("utf-8")))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise LexshiftError(f"bad placement model file {path}: {e}") from None
    return model, data


def cmd_transform(args) -> int:
    import dataclasses

    config = load_config(args.config, overrides=args.set or (), seed=args.seed)
    input_digests: dict[str, str] = {}

    corpus, corpus_bytes = _load_corpus(args.input)
    input_digests[args.input] = _sha256(corpus_bytes)

    dictionary = None
    if args.dict:
        dict_bytes = _read_bytes(args.dict)
        try:
            dictionary = NormalizationDictionary.from_json_dict(
                json.loads(dict_bytes.decode("utf-8"))
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise LexshiftError(f"bad dictionary file {args.dict}: {e}") from None
        input_digests[args.dict] = _sha256(dict_bytes)

    if args.emoji_model:
        model, data = _load_model_file(args.emoji_model)
        config = dataclasses.replace(
            config, emoji=dataclasses.replace(config.emoji, placement=model)
        )
        input_digests[args.emoji_model] = _sha256(data)
    if args.hashtag_model:
        model, data = _load_model_file(args.hashtag_model)
        config = dataclasses.replace(
            config, x=dataclasses.replace(config.x, hashtag_placement=model)
        )
        input_digests[args.hashtag_model] = _sha256(data)

    transformed = transform_all(corpus, config, dictionary)
    output_text = serialize_conllu(transformed).encode("utf-8")
    _write_atomic(args.out, output_text)

    manifest = {
        "tool_version": __version__,
        "master_seed": config.master_seed,
        "config": config_to_dict(config),
        "inputs": input_digests,
        "outputs": {args.out: _sha256(output_text)},
        "created_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    manifest_path = args.manifest or args.out + ".manifest.json"
    _write_atomic(
        manifest_path,
        (json.dumps(manifest, ensure_ascii=False, indent=2) + "\n").encode("utf-8"),
    )
    print(f"wrote {args.out} ({len(transformed.sentences)} sentences)", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args) -> int:
    corpus, _ = _load_corpus(args.corpus)
    report = validate(corpus)
    lengths = sentence_length_stats(corpus)
    features = feature_rate_report(corpus)
    _print_json(
        {
            "sentences": report.n_sentences,
            "tokens": report.n_tokens,
            "length": {
                "mean_tokens": lengths.mean_tokens,
                "std_tokens": lengths.std_tokens,
                "n_sentences": lengths.n_sentences,
            },
            "upos_histogram": report.upos_histogram,
            "features": features.to_json_dict(),
            "violations": list(report.violations),
        }
    )
    return EXIT_OK


def cmd_concat(args) -> int:
    if len(args.inputs) < 1:
        raise LexshiftError("concat needs at least one input file")
    corpora = [_load_corpus(path)[0] for path in args.inputs]
    combined = corpora[0]
    for corpus in corpora[1:]:
        combined = Corpus(
            sentences=combined.sentences + corpus.sentences,
            source_label=f"{combined.source_label}+{corpus.source_label}",
        )
    _write_atomic(args.out, serialize_conllu(combined).encode("utf-8"))
    print(f"wrote {args.out} ({len(combined.sentences)} sentences)", file=sys.stderr)
    return EXIT_OK


def cmd_diff_report(args) -> int:
    corpus_a, _ = _load_corpus(args.corpus_a)
    corpus_b, _ = _load_corpus(args.corpus_b)
    report_a = feature_rate_report(corpus_a).to_json_dict()
    report_b = feature_rate_report(corpus_b).to_json_dict()
    _print_json(
        {
            "a": {"label": corpus_a.source_label, "path": args.corpus_a},
            "b": {"label": corpus_b.source_label, "path": args.corpus_b},
            "features": {
                name: {"a": report_a[name], "b": report_b[name]} for name in report_a
            },
        }
    )
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # Input/config mistakes on the command line are exit-code-1 errors, not
    # argparse's default 2 (reserved for the empty-observation case).
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexshift", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, help="master seed (overrides the config file)")
    parser.add_argument("--config", help="JSON transform config file")
    parser.add_argument(
        "--set",
        action="append",
        metavar="KEY=VALUE",
        help="dotted config override, e.g. --set emoji.sentence_prob=0.5 (repeatable)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit-placement", help="fit a positional Gaussian to a feature in a target corpus")
    p.add_argument("corpus", help="CoNLL-U file of the target corpus")
    p.add_argument("--feature", choices=("emoji", "hashtag"), required=True)
    p.add_argument("--out", required=True, help="output placement-model JSON")
    p.set_defaults(func=cmd_fit_placement)

    p = sub.add_parser("build-dict", help="build the inverse-normalization dictionary")
    p.add_argument("lexnorm", help="lexical-normalization shared-task JSON")
    p.add_argument("--out", required=True, help="output dictionary JSON")
    p.add_argument("--input-key", default="input")
    p.add_argument("--output-key", default="output")
    p.set_defaults(func=cmd_build_dict)

    p = sub.add_parser("transform", help="apply the lexical transformations to a corpus")
    p.add_argument("input", help="input CoNLL-U file")
    p.add_argument("--out", required=True, help="output CoNLL-U file")
    p.add_argument("--dict", help="normalization dictionary JSON")
    p.add_argument("--emoji-model", help="placement model JSON for emoji insertion")
    p.add_argument("--hashtag-model", help="placement model JSON for hashtag insertion")
    p.add_argument("--manifest", help="run-manifest path (default: OUT.manifest.json)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("stats", help="print corpus statistics as JSON")
    p.add_argument("corpus", help="CoNLL-U file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("concat", help="concatenate corpora in argument order")
    p.add_argument("inputs", nargs="+", help="input CoNLL-U files")
    p.add_argument("--out", required=True, help="output CoNLL-U file")
    p.set_defaults(func=cmd_concat)

    p = sub.add_parser("diff-report", help="side-by-side feature-rate report for two corpora")
    p.add_argument("corpus_a")
    p.add_argument("corpus_b")
    p.set_defaults(func=cmd_diff_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except NoObservations as e:
        print(f"lexshift: {e}", file=sys.stderr)
        return EXIT_NO_OBSERVATIONS
    except LexshiftError as e:
        print(f"lexshift: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        print(f"lexshift: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
