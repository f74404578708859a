"""Named reference maps with frozen expected values.

The data lives in ``data/corpus.json``.  Each entry records its expected
Markov data and classification together with a provenance tag per field
(``published``, ``derived`` or ``trivial``; untagged fields are
``derived``).  The two worked piecewise-linear examples are reconstructions
chosen to reproduce the published partitions, matrices and densities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Union

from .boolean import BoolSubst, bool_subst_from_text
from .mcnaughton import PLFunc, from_points
from .product import FracMap

__all__ = ["NamedMap", "corpus", "get", "names"]


@dataclass(frozen=True)
class NamedMap:
    name: str
    kind: str  # "pl", "frac" or "boolean"
    map: Union[PLFunc, FracMap, BoolSubst]
    expected: dict
    provenance: dict = field(default_factory=dict)
    term: str | None = None

    def source(self, key: str) -> str:
        return self.provenance.get(key, "derived")


def _build(entry: dict) -> NamedMap:
    kind = entry["kind"]
    if kind == "pl":
        obj = from_points((Fraction(x), Fraction(y)) for x, y in entry["points"])
    elif kind == "frac":
        obj = FracMap(entry["a"], entry["b"])
    elif kind == "boolean":
        obj = bool_subst_from_text(entry["n"], entry["terms"])
    else:
        raise ValueError(f"unknown corpus kind {kind!r}")
    return NamedMap(entry["name"], kind, obj, entry["expected"],
                    entry.get("provenance", {}), entry.get("term"))


@lru_cache(maxsize=None)
def _load() -> tuple[NamedMap, ...]:
    text = resources.files(__package__).joinpath("data/corpus.json").read_text("utf-8")
    return tuple(_build(e) for e in json.loads(text)["maps"])


def corpus() -> list[NamedMap]:
    return list(_load())


def names() -> list[str]:
    return [m.name for m in _load()]


def get(name: str) -> NamedMap:
    for m in _load():
        if m.name == name:
            return m
    raise KeyError(f"no corpus map named {name!r}")
