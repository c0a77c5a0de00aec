"""TransformConfig JSON loading with dotted-path overrides.

The config file is plain JSON; every leaf is addressable from the command line
as ``--set section.key=value`` (values parsed as JSON, falling back to a bare
string). Inventories may be inline arrays or references to one-form-per-line
text files, resolved relative to the config file.
"""

from __future__ import annotations

import json
import os
from typing import Any

from .errors import InvalidConfig
from .stats import PlacementModel
from .transforms import (
    DEFAULT_EMOJI_INVENTORY,
    DEFAULT_HASHTAG_PLACEMENT,
    DEFAULT_X_HASHTAG_INVENTORY,
    EmojiConfig,
    IlnConfig,
    PropnConfig,
    TransformConfig,
    XConfig,
    load_inventory_file,
)


def default_config_dict() -> dict:
    """The built-in defaults as a plain JSON-compatible dict (without a seed)."""
    return {
        "emoji": {
            "enabled": True,
            "sentence_prob": 0.25,
            "placement": "random",
        },
        "iln": {"enabled": True, "token_prob": 0.75, "weighting": "uniform"},
        "propn": {"enabled": True, "p_mention": 0.50, "p_hashtag": 0.20},
        "x": {
            "enabled": True,
            "p_rt": 0.30,
            "p_url": 0.60,
            "p_hashtag": 0.10,
            "url_style": "placeholder",
            "hashtag_placement": DEFAULT_HASHTAG_PLACEMENT.to_json_dict(),
        },
    }


def parse_override(text: str) -> tuple[list[str], Any]:
    """Split ``section.key=value`` into a key path and a parsed value."""
    if "=" not in text:
        raise InvalidConfig(f"override {text!r} is not of the form key=value")
    key, raw_value = text.split("=", 1)
    path = [part for part in key.strip().split(".") if part]
    if not path:
        raise InvalidConfig(f"override {text!r} has an empty key")
    try:
        value = json.loads(raw_value)
    except json.JSONDecodeError:
        value = raw_value
    return path, value


def apply_overrides(config: dict, overrides: list[str] | tuple[str, ...]) -> dict:
    for text in overrides:
        path, value = parse_override(text)
        node = config
        for part in path[:-1]:
            nxt = node.setdefault(part, {})
            if not isinstance(nxt, dict):
                raise InvalidConfig(f"override {text!r}: {part} is not a section")
            node = nxt
        node[path[-1]] = value
    return config


def _reject_unknown(section: str, d: dict, known: set[str]) -> None:
    for key in d:
        if key not in known:
            dotted = f"{section}.{key}" if section else key
            raise InvalidConfig(f"unknown config field {dotted}")


def _placement(value: Any, field_name: str) -> PlacementModel | None:
    if value is None or value == "random":
        return None
    if isinstance(value, dict):
        try:
            return PlacementModel.from_json_dict(value)
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidConfig(f"{field_name}: bad placement model ({e})") from None
    raise InvalidConfig(f"{field_name} must be \"random\" or a {{mean, std, n}} object")


def _inventory(
    d: dict, section: str, inline_key: str, file_key: str, default: tuple[str, ...], base_dir: str | None
) -> tuple[str, ...]:
    if inline_key in d and d[inline_key] is not None:
        value = d[inline_key]
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise InvalidConfig(f"{section}.{inline_key} must be an array of strings")
        return tuple(value)
    if file_key in d and d[file_key] is not None:
        path = d[file_key]
        if not isinstance(path, str):
            raise InvalidConfig(f"{section}.{file_key} must be a path string")
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        try:
            return load_inventory_file(path)
        except OSError as e:
            raise InvalidConfig(f"{section}.{file_key}: cannot read {path} ({e})") from None
    return default


def _bool(d: dict, section: str, key: str, default: bool) -> bool:
    value = d.get(key, default)
    if not isinstance(value, bool):
        raise InvalidConfig(f"{section}.{key} must be true or false")
    return value


def config_from_dict(
    d: dict, seed: int | None = None, base_dir: str | None = None
) -> TransformConfig:
    """Build a validated TransformConfig; ``seed`` overrides any master_seed in ``d``.

    Raises InvalidConfig naming the offending dotted field.
    """
    _reject_unknown("", d, {"master_seed", "emoji", "iln", "propn", "x"})
    for section in ("emoji", "iln", "propn", "x"):
        if not isinstance(d.get(section, {}), dict):
            raise InvalidConfig(f"{section} must be a JSON object")

    e = d.get("emoji", {})
    _reject_unknown("emoji", e, {"enabled", "sentence_prob", "placement", "inventory", "inventory_file"})
    emoji = EmojiConfig(
        enabled=_bool(e, "emoji", "enabled", True),
        sentence_prob=e.get("sentence_prob", 0.25),
        placement=_placement(e.get("placement"), "emoji.placement"),
        inventory=_inventory(e, "emoji", "inventory", "inventory_file", DEFAULT_EMOJI_INVENTORY, base_dir),
    )

    i = d.get("iln", {})
    _reject_unknown("iln", i, {"enabled", "token_prob", "weighting"})
    iln = IlnConfig(
        enabled=_bool(i, "iln", "enabled", True),
        token_prob=i.get("token_prob", 0.75),
        weighting=i.get("weighting", "uniform"),
    )

    p = d.get("propn", {})
    _reject_unknown("propn", p, {"enabled", "p_mention", "p_hashtag"})
    propn = PropnConfig(
        enabled=_bool(p, "propn", "enabled", True),
        p_mention=p.get("p_mention", 0.50),
        p_hashtag=p.get("p_hashtag", 0.20),
    )

    x = d.get("x", {})
    _reject_unknown(
        "x",
        x,
        {"enabled", "p_rt", "p_url", "p_hashtag", "hashtag_inventory",
         "hashtag_inventory_file", "url_style", "hashtag_placement"},
    )
    hashtag_placement = _placement(x.get("hashtag_placement"), "x.hashtag_placement")
    xcfg = XConfig(
        enabled=_bool(x, "x", "enabled", True),
        p_rt=x.get("p_rt", 0.30),
        p_url=x.get("p_url", 0.60),
        p_hashtag=x.get("p_hashtag", 0.10),
        hashtag_inventory=_inventory(
            x, "x", "hashtag_inventory", "hashtag_inventory_file", DEFAULT_X_HASHTAG_INVENTORY, base_dir
        ),
        url_style=x.get("url_style", "placeholder"),
        hashtag_placement=hashtag_placement if hashtag_placement is not None else DEFAULT_HASHTAG_PLACEMENT,
    )

    master_seed = seed if seed is not None else d.get("master_seed")
    if master_seed is None:
        raise InvalidConfig("master_seed is required (set it in the config file or pass --seed)")
    return TransformConfig(master_seed=master_seed, emoji=emoji, iln=iln, propn=propn, x=xcfg)


def load_config(
    path: str | None,
    overrides: list[str] | tuple[str, ...] = (),
    seed: int | None = None,
) -> TransformConfig:
    """Load a config file (or the defaults when ``path`` is None), apply dotted
    overrides, and validate."""
    if path is None:
        d = default_config_dict()
        base_dir = None
    else:
        try:
            with open(path, encoding="utf-8") as f:
                d = json.load(f)
        except OSError as e:
            raise InvalidConfig(f"cannot read config file {path} ({e})") from None
        except json.JSONDecodeError as e:
            raise InvalidConfig(f"config file {path} is not valid JSON ({e})") from None
        if not isinstance(d, dict):
            raise InvalidConfig(f"config file {path} must hold a JSON object")
        base_dir = os.path.dirname(os.path.abspath(path))
    apply_overrides(d, overrides)
    return config_from_dict(d, seed=seed, base_dir=base_dir)


def config_to_dict(config: TransformConfig) -> dict:
    """Snapshot a resolved config as a JSON-compatible dict (for run manifests)."""
    return {
        "master_seed": config.master_seed,
        "emoji": {
            "enabled": config.emoji.enabled,
            "sentence_prob": config.emoji.sentence_prob,
            "placement": "random"
            if config.emoji.placement is None
            else config.emoji.placement.to_json_dict(),
            "inventory": list(config.emoji.inventory),
        },
        "iln": {
            "enabled": config.iln.enabled,
            "token_prob": config.iln.token_prob,
            "weighting": config.iln.weighting,
        },
        "propn": {
            "enabled": config.propn.enabled,
            "p_mention": config.propn.p_mention,
            "p_hashtag": config.propn.p_hashtag,
        },
        "x": {
            "enabled": config.x.enabled,
            "p_rt": config.x.p_rt,
            "p_url": config.x.p_url,
            "p_hashtag": config.x.p_hashtag,
            "hashtag_inventory": list(config.x.hashtag_inventory),
            "url_style": config.x.url_style,
            "hashtag_placement": config.x.hashtag_placement.to_json_dict(),
        },
    }
