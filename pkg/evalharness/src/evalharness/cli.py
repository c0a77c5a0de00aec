"""Command-line front end: one training run per invocation, plus aggregation."""

from __future__ import annotations

import argparse
import json
import sys

from .aggregate import format_markdown
from .harness import EvalResult, TrainConfig, train_and_eval

EXIT_OK = 0
EXIT_ERROR = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def cmd_run(args) -> int:
    config = TrainConfig(
        model=args.model,
        train_path=args.train,
        dev_path=args.dev,
        test_path=args.test,
        batch_size=args.batch_size,
        learning_rate=args.learning_rate,
        max_sequence_length=args.max_sequence_length,
        epochs=args.epochs,
        seed=args.seed,
    )

    def progress(epoch, dev_accuracy):
        print(f"epoch {epoch}: dev accuracy {dev_accuracy:.4f}", file=sys.stderr)

    result = train_and_eval(config, progress=progress if args.verbose else None)
    payload = {
        "accuracy": result.accuracy,
        "per_tag_f1": result.per_tag_f1,
        "n_correct": result.n_correct,
        "n_labeled": result.n_labeled,
        "seed": result.seed,
        "config": result.config,
    }
    with open(args.out, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    print(json.dumps({"accuracy": result.accuracy, "out": args.out}))
    return EXIT_OK


def cmd_aggregate(args) -> int:
    from .aggregate import aggregate_runs

    results = []
    for path in args.results:
        with open(path, encoding="utf-8") as f:
            payload = json.load(f)
        results.append(
            EvalResult(
                accuracy=payload["accuracy"],
                per_tag_f1=payload["per_tag_f1"],
                n_correct=payload["n_correct"],
                n_labeled=payload["n_labeled"],
                seed=payload["seed"],
                config=payload.get("config", {}),
            )
        )
    aggregate = aggregate_runs(results)
    report = format_markdown(aggregate)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(report)
    if args.json_out:
        payload = {
            "accuracy_mean": aggregate.accuracy_mean,
            "accuracy_std": aggregate.accuracy_std,
            "per_tag_f1_mean": aggregate.per_tag_f1_mean,
            "per_tag_f1_std": aggregate.per_tag_f1_std,
            "n_runs": aggregate.n_runs,
        }
        with open(args.json_out, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
    print(report, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="evalharness", description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", help="train on one corpus, score on another")
    run.add_argument("--model", required=True, help="model name or local checkpoint dir")
    run.add_argument("--train", required=True, help="training corpus (.conllu)")
    run.add_argument("--dev", required=True, help="dev corpus for checkpoint selection")
    run.add_argument("--test", required=True, help="held-out corpus to score")
    run.add_argument("--out", required=True, help="where to write the result JSON")
    run.add_argument("--seed", type=int, default=1)
    run.add_argument("--batch-size", type=int, default=32)
    run.add_argument("--learning-rate", type=float, default=1e-5)
    run.add_argument("--max-sequence-length", type=int, default=256)
    run.add_argument("--epochs", type=int, default=25)
    run.add_argument("--verbose", action="store_true", help="print per-epoch dev accuracy")
    run.set_defaults(func=cmd_run)

    aggregate = subparsers.add_parser("aggregate", help="summarize several run results")
    aggregate.add_argument("results", nargs="+", help="result JSON files from run")
    aggregate.add_argument("--out", help="optional markdown report path")
    aggregate.add_argument("--json-out", help="optional aggregate JSON path")
    aggregate.set_defaults(func=cmd_aggregate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as e:
        return int(e.code or 0)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as e:
        print(f"evalharness: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
