"""Learning out-neighborhoods from recommendation clicks.

A user x is shown a set of items and clicks one item they like, if any; the
liked items are their out-neighbors in the unknown graph.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from enum import StrEnum

from ..constructions.models import AnyGraphClass
from ..exceptions import RealizabilityViolationError, ValidationError
from ..graphs import ManipulationGraph
from .models import ClickObservation, LabeledObservation
from .unknown_graph import empirical_proxy_loss

logger = logging.getLogger(__name__)


class NeighborhoodMode(StrEnum):
    REALIZABLE = "realizable"
    AGNOSTIC = "agnostic"


def explains_clicks(graph: ManipulationGraph, clicks: Sequence[ClickObservation]) -> bool:
    """Clicked items are neighbors; a silent round shows no neighbor was offered."""
    for click in clicks:
        if click.clicked is not None:
            if not graph.has_arc(click.x, click.clicked):
                return False
        elif graph.neighbor_set(click.x) & click.recommended:
            return False
    return True


def _as_observations(
    n: int, clicks: Sequence[ClickObservation]
) -> list[LabeledObservation]:
    observations: list[LabeledObservation] = []
    for click in clicks:
        if len(click.recommended) != n - 1:
            raise ValidationError(
                "Agnostic neighborhood learning needs full probes "
                f"(user {click.x} saw {len(click.recommended)} of {n - 1} items)"
            )
        seen = click.x if click.clicked is None else click.clicked
        observations.append(LabeledObservation(click.x, seen, 0))
    return observations


def learn_neighborhoods(
    graph_class: AnyGraphClass,
    clicks: Sequence[ClickObservation],
    mode: NeighborhoodMode = NeighborhoodMode.REALIZABLE,
    k_bound: int | None = None,
) -> int:
    """Index of the selected graph.

    Realizable mode picks the click-consistent graph of least empirical
    degree; agnostic mode minimizes the empirical proxy loss.
    """
    if not clicks:
        raise ValidationError("Neighborhood learning needs at least one click round")
    match mode:
        case NeighborhoodMode.REALIZABLE:
            best: tuple[int, int] | None = None
            for index, graph in enumerate(graph_class):
                if not explains_clicks(graph, clicks):
                    continue
                key = (sum(graph.out_degree(c.x) for c in clicks), index)
                if best is None or key < best:
                    best = key
            if best is None:
                raise RealizabilityViolationError(
                    "No candidate graph explains the click stream"
                )
            logger.debug("learn_neighborhoods: graph %d, degree %d", best[1], best[0])
            return best[1]
        case NeighborhoodMode.AGNOSTIC:
            k = graph_class.declared_k if k_bound is None else k_bound
            observations = _as_observations(graph_class.n, clicks)
            losses = [empirical_proxy_loss(g, observations, k) for g in graph_class]
            return losses.index(min(losses))
