"""Fixtures: a tiny randomly initialized checkpoint and toy labeled corpora.

The checkpoint is built locally (vocab via the tokenizers library, weights via
a seeded config) so tests need no network and no pretrained download.  Every
toy word maps to exactly one tag, which makes tagging memorizable by a model
this small within a handful of epochs.
"""

from __future__ import annotations

import pytest

# one tag per word, all 17 tags covered; lowercase because the tokenizer folds case
WORD_TAGS = {
    "dog": "NOUN",
    "cat": "NOUN",
    "house": "NOUN",
    "run": "VERB",
    "walk": "VERB",
    "see": "VERB",
    "blue": "ADJ",
    "good": "ADJ",
    "quickly": "ADV",
    "really": "ADV",
    "the": "DET",
    "a": "DET",
    "and": "CCONJ",
    "in": "ADP",
    "for": "ADP",
    "she": "PRON",
    "you": "PRON",
    "it": "PRON",
    "paris": "PROPN",
    "tokyo": "PROPN",
    ".": "PUNCT",
    ",": "PUNCT",
    "five": "NUM",
    "oh": "INTJ",
    "must": "AUX",
    "are": "AUX",
    "that": "SCONJ",
    "#": "SYM",
    "to": "PART",
    "rt": "X",
    # noisy variants produced by the upstream normalization stage; same tags
    # as their canonical forms so a variant-aware model can learn them
    "u": "PRON",
    "r": "AUX",
    "gud": "ADJ",
    "2": "PART",
    "4": "ADP",
}

EXTRA_PIECES = ("walk", "##ing", "##s", "##ed")


def toy_sentences(n: int, seed: int, words=None):
    """Deterministic (forms, tags) pairs drawn from the word inventory."""
    import random

    rng = random.Random(seed)
    inventory = sorted(words if words is not None else WORD_TAGS)
    out = []
    for _ in range(n):
        length = rng.randint(4, 9)
        forms = [rng.choice(inventory) for _ in range(length)] + ["."]
        tags = [WORD_TAGS[form] for form in forms]
        out.append((forms, tags))
    return out


def write_conllu(path, sentences):
    lines = []
    for index, (forms, tags) in enumerate(sentences):
        lines.append(f"# sent_id = toy-{index}")
        for position, (form, tag) in enumerate(zip(forms, tags), start=1):
            lines.append(f"{position}\t{form}\t_\t{tag}\t_\t_\t_\t_\t_\t_")
        lines.append("")
    path.write_text("\n".join(lines), encoding="utf-8")


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    import torch
    from tokenizers import Tokenizer
    from tokenizers.models import WordPiece
    from tokenizers.normalizers import BertNormalizer
    from tokenizers.pre_tokenizers import BertPreTokenizer
    from tokenizers.processors import TemplateProcessing
    from transformers import (
        BertConfig,
        BertForTokenClassification,
        PreTrainedTokenizerFast,
    )

    from evalharness import ID2LABEL, LABEL2ID, UPOS_TAGS

    target = tmp_path_factory.mktemp("tiny-model")

    specials = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]
    words = sorted(set(WORD_TAGS) | set(EXTRA_PIECES))
    vocab = {piece: index for index, piece in enumerate(specials + words)}
    backend = Tokenizer(WordPiece(vocab, unk_token="[UNK]"))
    backend.normalizer = BertNormalizer(lowercase=True)
    backend.pre_tokenizer = BertPreTokenizer()
    backend.post_processor = TemplateProcessing(
        single="[CLS] $A [SEP]",
        pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", vocab["[CLS]"]), ("[SEP]", vocab["[SEP]"])],
    )
    tokenizer = PreTrainedTokenizerFast(
        tokenizer_object=backend,
        unk_token="[UNK]",
        pad_token="[PAD]",
        cls_token="[CLS]",
        sep_token="[SEP]",
        mask_token="[MASK]",
    )
    tokenizer.save_pretrained(target)

    torch.manual_seed(7)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=64,
        num_labels=len(UPOS_TAGS),
        id2label=ID2LABEL,
        label2id=LABEL2ID,
    )
    BertForTokenClassification(config).save_pretrained(target)
    return str(target)


@pytest.fixture(scope="session")
def toy_corpus_dir(tmp_path_factory):
    target = tmp_path_factory.mktemp("toy-corpus")
    write_conllu(target / "train.conllu", toy_sentences(50, seed=11))
    write_conllu(target / "dev.conllu", toy_sentences(20, seed=12))
    write_conllu(target / "test.conllu", toy_sentences(20, seed=13))
    return target


@pytest.fixture(scope="session")
def word_tags():
    return dict(WORD_TAGS)


# words the toy normalization dictionary rewrites, plus plain filler
DIRECTIONAL_WORDS = ("you", "are", "good", "to", "for", "the", "dog", "run", "in", "and")

TOY_LEXNORM = [
    {"input": ["u"], "output": ["you"]},
    {"input": ["r"], "output": ["are"]},
    {"input": ["gud"], "output": ["good"]},
    {"input": ["2"], "output": ["to"]},
    {"input": ["4"], "output": ["for"]},
]


@pytest.fixture(scope="session")
def transformed_toy_dir(tmp_path_factory):
    """Clean toy splits plus variant-rewritten versions built through the
    upstream CLI (its noisy-spelling stage only)."""
    import json
    import shutil
    import subprocess

    lexshift = shutil.which("lexshift")
    if lexshift is None:
        pytest.skip("lexshift CLI not on PATH")

    target = tmp_path_factory.mktemp("directional")
    splits = {
        "train": toy_sentences(60, seed=21, words=DIRECTIONAL_WORDS),
        "dev": toy_sentences(20, seed=22, words=DIRECTIONAL_WORDS),
        "test": toy_sentences(30, seed=23, words=DIRECTIONAL_WORDS),
    }
    paths = {}
    for name, sentences in splits.items():
        clean = target / f"clean-{name}.conllu"
        write_conllu(clean, sentences)
        paths[f"clean_{name}"] = str(clean)

    lexnorm = target / "lexnorm.json"
    lexnorm.write_text(json.dumps(TOY_LEXNORM), encoding="utf-8")
    dictionary = target / "dict.json"
    subprocess.run(
        [lexshift, "build-dict", str(lexnorm), "--out", str(dictionary)], check=True
    )

    for name in splits:
        variant = target / f"variant-{name}.conllu"
        subprocess.run(
            [
                lexshift,
                "--seed", "97",
                "--set", "emoji.enabled=false",
                "--set", "propn.enabled=false",
                "--set", "x.enabled=false",
                "transform", paths[f"clean_{name}"],
                "--dict", str(dictionary),
                "--out", str(variant),
            ],
            check=True,
        )
        paths[f"variant_{name}"] = str(variant)
    return paths
