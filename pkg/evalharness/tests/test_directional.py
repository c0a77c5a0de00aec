"""Directional checks: variant-aware training data helps on variant-heavy text.

The in-sandbox check exercises the whole chain end to end: the upstream CLI
rewrites a toy corpus with noisy spelling variants, and a model trained on the
rewritten corpus must beat a model trained on the clean one when both are
scored on rewritten text.  The larger checks need a real pretrained
checkpoint and the public datasets, so they are gated behind environment
variables and skipped otherwise.
"""

from __future__ import annotations

import json
import os
import shutil
import subprocess

import pytest

from evalharness import TrainConfig, train_and_eval

LEXSHIFT = shutil.which("lexshift")

CHECKPOINT = os.environ.get("EVALHARNESS_CHECKPOINT")
DATA_DIR = os.environ.get("LEXSHIFT_DATA_DIR")
FULL = os.environ.get("EVALHARNESS_FULL") == "1"


def _train(model_dir, train_path, dev_path, test_path, epochs=12, seed=1):
    return train_and_eval(
        TrainConfig(
            model=model_dir,
            train_path=train_path,
            dev_path=dev_path,
            test_path=test_path,
            batch_size=16,
            learning_rate=5e-4,
            max_sequence_length=32,
            epochs=epochs,
            seed=seed,
        )
    )


@pytest.mark.skipif(LEXSHIFT is None, reason="lexshift CLI not on PATH")
def test_variant_training_beats_clean_training_on_variant_text(
    tiny_model_dir, transformed_toy_dir
):
    paths = transformed_toy_dir
    clean = _train(
        tiny_model_dir,
        train_path=paths["clean_train"],
        dev_path=paths["clean_dev"],
        test_path=paths["variant_test"],
    )
    variant = _train(
        tiny_model_dir,
        train_path=paths["variant_train"],
        dev_path=paths["variant_dev"],
        test_path=paths["variant_test"],
    )
    assert variant.n_labeled == clean.n_labeled
    assert variant.accuracy >= clean.accuracy + 0.05


@pytest.mark.skipif(LEXSHIFT is None, reason="lexshift CLI not on PATH")
def test_self_domain_beats_cross_domain(tiny_model_dir, transformed_toy_dir):
    paths = transformed_toy_dir
    cross = _train(
        tiny_model_dir,
        train_path=paths["clean_train"],
        dev_path=paths["clean_dev"],
        test_path=paths["variant_test"],
    )
    self_domain = _train(
        tiny_model_dir,
        train_path=paths["variant_train"],
        dev_path=paths["variant_dev"],
        test_path=paths["variant_test"],
    )
    assert self_domain.accuracy > cross.accuracy


def _first_sentences(text: str, n: int) -> str:
    blocks = [block for block in text.split("\n\n") if block.strip()]
    return "\n\n".join(blocks[:n]) + "\n"


@pytest.mark.skipif(
    not (CHECKPOINT and DATA_DIR and LEXSHIFT),
    reason="needs EVALHARNESS_CHECKPOINT, LEXSHIFT_DATA_DIR and the lexshift CLI",
)
def test_desk_scale_directional(tmp_path):
    """1,000 source sentences, 3 epochs: the transformed-trained model should
    win on the tweet test set by at least 5 accuracy points, led by X."""
    gum = os.path.join(DATA_DIR, "gum-train.conllu")
    tweebank_dev = os.path.join(DATA_DIR, "tweebank-dev.conllu")
    tweebank_test = os.path.join(DATA_DIR, "tweebank-test.conllu")
    lexnorm = os.path.join(DATA_DIR, "lexnorm-train.json")
    for path in (gum, tweebank_dev, tweebank_test, lexnorm):
        if not os.path.isfile(path):
            pytest.skip(f"missing dataset file: {path}")

    with open(gum, encoding="utf-8") as f:
        head = _first_sentences(f.read(), 1000)
    source = tmp_path / "source.conllu"
    source.write_text(head, encoding="utf-8")

    dictionary = tmp_path / "dict.json"
    subprocess.run(
        [LEXSHIFT, "build-dict", lexnorm, "--out", str(dictionary)], check=True
    )
    transformed = tmp_path / "source-t.conllu"
    subprocess.run(
        [
            LEXSHIFT,
            "--seed", "42",
            "transform", str(source),
            "--dict", str(dictionary),
            "--out", str(transformed),
        ],
        check=True,
    )

    def run(train_path):
        return train_and_eval(
            TrainConfig(
                model=CHECKPOINT,
                train_path=train_path,
                dev_path=tweebank_dev,
                test_path=tweebank_test,
                epochs=3,
                seed=1,
            )
        )

    plain = run(str(source))
    shifted = run(str(transformed))
    assert shifted.accuracy >= plain.accuracy + 0.05
    assert shifted.per_tag_f1["X"] > plain.per_tag_f1["X"]


@pytest.mark.skipif(
    not (FULL and CHECKPOINT and DATA_DIR and LEXSHIFT),
    reason="full-budget reproduction; set EVALHARNESS_FULL=1 with checkpoint and "
    "data to run (hours of GPU time, excluded from routine test runs)",
)
def test_full_budget_reproduction(tmp_path):
    """Five 25-epoch runs per condition; compares mean cross-domain accuracy
    for clean vs transformed training data at full budget.

    Asserts the directional gap only: absolute accuracies depend on which
    checkpoint revision EVALHARNESS_CHECKPOINT points at (see the reference
    table in the README for expected neighborhoods)."""
    from evalharness import aggregate_runs

    gum = os.path.join(DATA_DIR, "gum-train.conllu")
    tweebank_dev = os.path.join(DATA_DIR, "tweebank-dev.conllu")
    tweebank_test = os.path.join(DATA_DIR, "tweebank-test.conllu")
    lexnorm = os.path.join(DATA_DIR, "lexnorm-train.json")

    dictionary = tmp_path / "dict.json"
    subprocess.run(
        [LEXSHIFT, "build-dict", lexnorm, "--out", str(dictionary)], check=True
    )
    transformed = tmp_path / "gum-t.conllu"
    subprocess.run(
        [
            LEXSHIFT,
            "--seed", "42",
            "transform", gum,
            "--dict", str(dictionary),
            "--out", str(transformed),
        ],
        check=True,
    )

    def runs(train_path):
        results = []
        for seed in range(1, 6):
            results.append(
                train_and_eval(
                    TrainConfig(
                        model=CHECKPOINT,
                        train_path=train_path,
                        dev_path=tweebank_dev,
                        test_path=tweebank_test,
                        seed=seed,
                    )
                )
            )
        return aggregate_runs(results)

    plain = runs(gum)
    shifted = runs(str(transformed))
    report = {
        "clean": {"mean": plain.accuracy_mean, "std": plain.accuracy_std},
        "transformed": {"mean": shifted.accuracy_mean, "std": shifted.accuracy_std},
    }
    (tmp_path / "full-report.json").write_text(json.dumps(report, indent=2))
    assert shifted.accuracy_mean >= plain.accuracy_mean + 0.05
