"""JSON form of posets: element labels plus cover pairs."""

from __future__ import annotations

from typing import Callable, Hashable

from .poset import FinitePoset, from_covers


def poset_to_json(P: FinitePoset, label: Callable[[Hashable], object] = str) -> dict:
    return {
        "size": len(P),
        "elements": [label(e) for e in P.elements],
        "covers": [[i, j] for i, j in P.cover_pairs()],
    }


def poset_from_json(data: dict) -> FinitePoset:
    """Rebuild a poset from :func:`poset_to_json` output; labels become whatever the JSON held."""
    elements = [tuple(e) if isinstance(e, list) else e for e in data["elements"]]
    covers = [(elements[i], elements[j]) for i, j in data["covers"]]
    return from_covers(elements, covers)
