"""Aggregate several seeded runs into mean and spread per metric."""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from .conllu import UPOS_TAGS
from .harness import EvalResult


@dataclass(frozen=True)
class Aggregate:
    accuracy_mean: float
    accuracy_std: float
    per_tag_f1_mean: dict[str, float]
    per_tag_f1_std: dict[str, float]
    n_runs: int


def aggregate_runs(results: list[EvalResult]) -> Aggregate:
    if not results:
        raise ValueError("no runs to aggregate")
    accuracies = [result.accuracy for result in results]
    f1_mean = {}
    f1_std = {}
    for tag in UPOS_TAGS:
        values = [result.per_tag_f1[tag] for result in results]
        f1_mean[tag] = statistics.fmean(values)
        f1_std[tag] = statistics.pstdev(values)
    return Aggregate(
        accuracy_mean=statistics.fmean(accuracies),
        accuracy_std=statistics.pstdev(accuracies),
        per_tag_f1_mean=f1_mean,
        per_tag_f1_std=f1_std,
        n_runs=len(results),
    )


def format_markdown(aggregate: Aggregate) -> str:
    lines = [
        f"Runs: {aggregate.n_runs}",
        "",
        f"Accuracy: {aggregate.accuracy_mean:.4f} (std {aggregate.accuracy_std:.4f})",
        "",
        "| Tag | F1 mean | F1 std |",
        "| --- | ------- | ------ |",
    ]
    for tag in UPOS_TAGS:
        lines.append(
            f"| {tag} | {aggregate.per_tag_f1_mean[tag]:.4f}"
            f" | {aggregate.per_tag_f1_std[tag]:.4f} |"
        )
    return "\n".join(lines) + "\n"
