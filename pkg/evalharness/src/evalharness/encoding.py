"""Subword encoding with first-piece label alignment.

Each word's first subword carries the label id; continuation pieces and
special tokens get -100 so the loss ignores them.
"""

from __future__ import annotations

from .conllu import LABEL2ID, LabeledSentence

IGNORE_INDEX = -100


def encode_sentence(tokenizer, sentence: LabeledSentence, max_length: int):
    encoded = tokenizer(
        list(sentence.forms),
        is_split_into_words=True,
        truncation=True,
        max_length=max_length,
    )
    labels: list[int] = []
    previous_word = None
    for word_index in encoded.word_ids():
        if word_index is None or word_index == previous_word:
            labels.append(IGNORE_INDEX)
        else:
            labels.append(LABEL2ID[sentence.tags[word_index]])
        previous_word = word_index
    encoded["labels"] = labels
    return encoded


def encode_corpus(tokenizer, sentences: list[LabeledSentence], max_length: int) -> list[dict]:
    batch = []
    for sentence in sentences:
        encoded = encode_sentence(tokenizer, sentence, max_length)
        batch.append(
            {
                "input_ids": encoded["input_ids"],
                "attention_mask": encoded["attention_mask"],
                "labels": encoded["labels"],
            }
        )
    return batch


def pad_batch(examples: list[dict], pad_token_id: int) -> dict:
    import torch

    width = max(len(example["input_ids"]) for example in examples)
    input_ids = []
    attention_mask = []
    labels = []
    for example in examples:
        n = len(example["input_ids"])
        pad = width - n
        input_ids.append(example["input_ids"] + [pad_token_id] * pad)
        attention_mask.append(example["attention_mask"] + [0] * pad)
        labels.append(example["labels"] + [IGNORE_INDEX] * pad)
    return {
        "input_ids": torch.tensor(input_ids, dtype=torch.long),
        "attention_mask": torch.tensor(attention_mask, dtype=torch.long),
        "labels": torch.tensor(labels, dtype=torch.long),
    }
