"""Bundled example links and Seifert pairs."""

from __future__ import annotations

import json
from importlib.resources import files

from .linkdiag import LinkDiagram, load_diagram
from .seifert import SeifertPair

_DATA = files(__package__) / "data"


def _names(kind: str) -> list[str]:
    return sorted(p.name[:-5] for p in (_DATA / kind).iterdir() if p.name.endswith(".json"))


def link_names() -> list[str]:
    return _names("links")


def pair_names() -> list[str]:
    return _names("seifert")


def link_document(name: str) -> dict:
    return json.loads((_DATA / "links" / f"{name}.json").read_text())


def load_link(name: str) -> LinkDiagram:
    return load_diagram(link_document(name))


def pair_document(name: str) -> dict:
    return json.loads((_DATA / "seifert" / f"{name}.json").read_text())


def load_pair(name: str) -> SeifertPair:
    """The pair itself; the document's ``link`` key names the link it belongs to."""
    return SeifertPair.from_document(pair_document(name))
