"""Paths to the bundled demo fixtures and environment-based overrides."""

from __future__ import annotations

import os
from importlib.resources import files
from pathlib import Path
from typing import Optional

LEXICON_ENV_VAR = "PICTOSEM_LEXICON"


def packaged_data(name: str) -> Path:
    return Path(str(files("pictosem").joinpath("data", name)))


def demo_lexicon_path() -> Path:
    return packaged_data("demo_lexicon.json")


def demo_dictionary_path() -> Path:
    return packaged_data("french_dictionary.json")


def demo_templates_path() -> Path:
    return packaged_data("french_templates.json")


def mini_corpus_path() -> Path:
    return packaged_data("mini_corpus.jsonl")


def resolve_lexicon_path(explicit: Optional[str] = None) -> Path:
    """Explicit argument, then $PICTOSEM_LEXICON, then the bundled demo."""
    if explicit:
        return Path(explicit)
    from_env = os.environ.get(LEXICON_ENV_VAR)
    if from_env:
        return Path(from_env)
    return demo_lexicon_path()
