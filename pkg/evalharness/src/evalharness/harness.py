"""Fine-tune a token-classification model on one corpus and score another.

One call to train_and_eval is one run: seed everything, train with a fixed
hyperparameter set, keep the checkpoint with the best dev accuracy, report
test accuracy and per-tag F1 for that checkpoint.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from .conllu import ID2LABEL, LABEL2ID, UPOS_TAGS, read_conllu_file
from .encoding import IGNORE_INDEX, encode_corpus, pad_batch


@dataclass(frozen=True)
class TrainConfig:
    model: str
    train_path: str
    dev_path: str
    test_path: str
    batch_size: int = 32
    learning_rate: float = 1e-5
    max_sequence_length: int = 256
    epochs: int = 25
    seed: int = 1

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError("batch_size must be at least 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if self.max_sequence_length < 2:
            raise ValueError("max_sequence_length must be at least 2")
        if self.epochs < 1:
            raise ValueError("epochs must be at least 1")
        for label, path in (
            ("train_path", self.train_path),
            ("dev_path", self.dev_path),
            ("test_path", self.test_path),
        ):
            if not os.path.isfile(path):
                raise FileNotFoundError(f"{label}: no such file: {path}")


@dataclass(frozen=True)
class EvalResult:
    accuracy: float
    per_tag_f1: dict[str, float]
    n_correct: int
    n_labeled: int
    seed: int
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        if sorted(self.per_tag_f1) != sorted(UPOS_TAGS):
            raise ValueError("per_tag_f1 must have exactly one entry per tag")
        if self.n_labeled > 0:
            expected = self.n_correct / self.n_labeled
            if abs(expected - self.accuracy) > 1e-9:
                raise ValueError("accuracy does not match n_correct / n_labeled")
        elif self.accuracy != 0.0:
            raise ValueError("accuracy must be 0 when nothing was labeled")


def _evaluate(model, batches, device):
    import torch

    model.eval()
    n_correct = 0
    n_labeled = 0
    # confusion counts per tag id: true positive, predicted, actual
    tp = [0] * len(UPOS_TAGS)
    predicted = [0] * len(UPOS_TAGS)
    actual = [0] * len(UPOS_TAGS)
    with torch.no_grad():
        for batch in batches:
            input_ids = batch["input_ids"].to(device)
            attention_mask = batch["attention_mask"].to(device)
            labels = batch["labels"]
            logits = model(input_ids=input_ids, attention_mask=attention_mask).logits
            guesses = logits.argmax(dim=-1).cpu()
            mask = labels != IGNORE_INDEX
            for guess, gold in zip(guesses[mask].tolist(), labels[mask].tolist()):
                n_labeled += 1
                actual[gold] += 1
                predicted[guess] += 1
                if guess == gold:
                    n_correct += 1
                    tp[gold] += 1
    per_tag_f1 = {}
    for tag_id, tag in enumerate(UPOS_TAGS):
        denominator = predicted[tag_id] + actual[tag_id]
        per_tag_f1[tag] = 2 * tp[tag_id] / denominator if denominator else 0.0
    accuracy = n_correct / n_labeled if n_labeled else 0.0
    return accuracy, per_tag_f1, n_correct, n_labeled


def _batches(examples, batch_size, pad_token_id, order=None):
    indices = order if order is not None else range(len(examples))
    chunk: list[dict] = []
    out = []
    for index in indices:
        chunk.append(examples[index])
        if len(chunk) == batch_size:
            out.append(pad_batch(chunk, pad_token_id))
            chunk = []
    if chunk:
        out.append(pad_batch(chunk, pad_token_id))
    return out


def train_and_eval(config: TrainConfig, progress=None) -> EvalResult:
    import torch
    from transformers import AutoModelForTokenClassification, AutoTokenizer

    torch.manual_seed(config.seed)
    random.seed(config.seed)

    tokenizer = AutoTokenizer.from_pretrained(config.model)
    model = AutoModelForTokenClassification.from_pretrained(
        config.model,
        num_labels=len(UPOS_TAGS),
        id2label=ID2LABEL,
        label2id=LABEL2ID,
    )
    device = torch.device("cuda" if torch.cuda.is_available() else "cpu")
    model.to(device)

    train = encode_corpus(
        tokenizer, read_conllu_file(config.train_path), config.max_sequence_length
    )
    dev = encode_corpus(
        tokenizer, read_conllu_file(config.dev_path), config.max_sequence_length
    )
    test = encode_corpus(
        tokenizer, read_conllu_file(config.test_path), config.max_sequence_length
    )
    if not train:
        raise ValueError(f"train corpus is empty: {config.train_path}")

    pad_token_id = tokenizer.pad_token_id
    dev_batches = _batches(dev, config.batch_size, pad_token_id)
    test_batches = _batches(test, config.batch_size, pad_token_id)

    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)

    best_dev = -1.0
    best_state = None
    for epoch in range(config.epochs):
        order = list(range(len(train)))
        # separate stream per epoch so resuming a run cannot shift later epochs
        random.Random(config.seed * 1000 + epoch).shuffle(order)
        model.train()
        for batch in _batches(train, config.batch_size, pad_token_id, order):
            optimizer.zero_grad()
            loss = model(
                input_ids=batch["input_ids"].to(device),
                attention_mask=batch["attention_mask"].to(device),
                labels=batch["labels"].to(device),
            ).loss
            loss.backward()
            optimizer.step()
        dev_accuracy, _, _, _ = _evaluate(model, dev_batches, device)
        if dev_accuracy > best_dev:
            best_dev = dev_accuracy
            best_state = {
                key: value.detach().cpu().clone()
                for key, value in model.state_dict().items()
            }
        if progress is not None:
            progress(epoch, dev_accuracy)

    if best_state is not None:
        model.load_state_dict(best_state)
        model.to(device)
    accuracy, per_tag_f1, n_correct, n_labeled = _evaluate(model, test_batches, device)
    return EvalResult(
        accuracy=accuracy,
        per_tag_f1=per_tag_f1,
        n_correct=n_correct,
        n_labeled=n_labeled,
        seed=config.seed,
        config={
            "model": config.model,
            "train_path": config.train_path,
            "dev_path": config.dev_path,
            "test_path": config.test_path,
            "batch_size": config.batch_size,
            "learning_rate": config.learning_rate,
            "max_sequence_length": config.max_sequence_length,
            "epochs": config.epochs,
        },
    )
