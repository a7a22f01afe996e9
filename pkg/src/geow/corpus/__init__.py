"""Builtin recipes (``*.gw``) and group files (``*.pres``)."""
from __future__ import annotations

from importlib import resources
from pathlib import Path


def corpus_dir() -> Path:
    return Path(str(resources.files(__name__)))


def corpus_path(name: str) -> Path:
    path = corpus_dir() / name
    if not path.is_file():
        raise FileNotFoundError(f"no corpus file {name!r}")
    return path


def recipes() -> list[Path]:
    return sorted(corpus_dir().glob("*.gw"))


def group_files() -> list[Path]:
    return sorted(corpus_dir().glob("*.pres"))
