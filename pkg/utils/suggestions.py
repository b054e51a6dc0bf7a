"""Did-you-mean lookups for learner, construction and adversary names."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from rapidfuzz import fuzz, process
from rapidfuzz.utils import default_process

from api.exceptions import ValidationError

SUGGESTION_CUTOFF = 60.0


def suggest(query: str, choices: Iterable[str], limit: int = 2) -> list[str]:
    """Closest known names to query, best first."""
    matches = process.extract(
        query,
        list(choices),
        scorer=fuzz.WRatio,
        processor=default_process,
        limit=limit,
        score_cutoff=SUGGESTION_CUTOFF,
    )
    return [name for name, _score, _index in matches]


def lookup[T](kind: str, name: str, table: Mapping[str, T]) -> T:
    """table[name], or a ValidationError naming the closest alternatives."""
    try:
        return table[name]
    except KeyError:
        close = suggest(name, table)
        hint = f" Did you mean: {', '.join(close)}?" if close else ""
        known = ", ".join(sorted(table))
        raise ValidationError(
            f"Unknown {kind} {name!r}",
            user_message=f"Unknown {kind} '{name}'.{hint} Known: {known}",
        ) from None
