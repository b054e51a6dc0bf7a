"""The round-by-round learner/agent interaction."""

from __future__ import annotations

import logging
import time

from ..exceptions import ProtocolError, RealizabilityViolationError, ValidationError
from ..feedback import FeedbackSetting, RoundFeedback
from ..graphs import ManipulationGraph, VertexId
from ..hypotheses import Agent, Hypothesis, HypothesisClass
from ..online.protocols import StrategicOnlineLearner
from ..strategic import best_response, cumulative_strategic_loss, induced_labeling
from ..tie_break import LEX_MIN, TieBreakRule
from .sources import AgentSource
from .transcript import RoundRecord, Transcript

logger = logging.getLogger(__name__)


def check_compatible(
    learner: StrategicOnlineLearner, source: AgentSource, setting: FeedbackSetting
) -> None:
    if setting not in learner.supported_settings:
        supported = ", ".join(sorted(s.value for s in learner.supported_settings))
        raise ProtocolError(
            f"{type(learner).__name__} does not support setting {setting.value!r}",
            user_message=f"This learner runs under: {supported}",
        )
    if setting not in source.supported_settings:
        supported = ", ".join(sorted(s.value for s in source.supported_settings))
        raise ProtocolError(
            f"Source {source.name!r} does not support setting {setting.value!r}",
            user_message=f"Source {source.name!r} runs under: {supported}",
        )


def _feedback(
    setting: FeedbackSetting,
    t: int,
    h: Hypothesis,
    graph: ManipulationGraph,
    x: VertexId,
    v: VertexId,
    y: int,
) -> RoundFeedback:
    yhat = h(v)
    neighborhood = (
        graph.closed_neighbors(v) if yhat == 0 and y == 1 and setting.graph_known else None
    )
    match setting:
        case FeedbackSetting.PMF_X:
            return RoundFeedback(t, h, yhat, y, x=x, neighborhood=neighborhood)
        case FeedbackSetting.PMF_V:
            return RoundFeedback(t, h, yhat, y, v=v, neighborhood=neighborhood)
        case FeedbackSetting.FULLY_INFORMATIVE:
            return RoundFeedback(t, h, yhat, y, x=x, v=v, neighborhood=neighborhood)
        case FeedbackSetting.UG_X_THEN_V | FeedbackSetting.UG_PAIR_AFTER:
            return RoundFeedback(t, h, yhat, y, x=x, v=v)


def best_in_hindsight(
    cls: HypothesisClass, graph: ManipulationGraph, agents: list[Agent]
) -> tuple[Hypothesis, int, int]:
    """The class member with least cumulative strategic loss: (h, index, loss).

    Ties go to the smallest index.
    """
    if len(cls) == 0:
        raise ValidationError("Best in hindsight needs a non-empty class")
    best_index, best_loss = 0, len(agents) + 1
    for i, h in enumerate(cls):
        loss = cumulative_strategic_loss(graph, h, agents)
        if loss < best_loss:
            best_index, best_loss = i, loss
            if loss == 0:
                break
    return cls[best_index], best_index, best_loss


def _replay(transcript: Transcript, source: AgentSource) -> None:
    """Check the source's final commitment against every recorded round."""
    graph = source.final_graph()
    for record in transcript.records:
        if record.hypothesis(record.v) != record.yhat:
            raise ProtocolError(f"Round {record.t}: ŷ does not equal h_t(v_t)")
        if induced_labeling(graph, record.hypothesis)[record.x] != record.yhat:
            raise RealizabilityViolationError(
                f"Round {record.t}: final graph of {source.name!r} contradicts v_t"
            )
    target = source.final_target()
    if target is None:
        return
    transcript.target_loss = cumulative_strategic_loss(graph, target, transcript.agents)
    if source.realizable and transcript.target_loss:
        raise RealizabilityViolationError(
            f"Declared target of {source.name!r} has loss {transcript.target_loss}"
        )


def run_online(
    learner: StrategicOnlineLearner,
    source: AgentSource,
    setting: FeedbackSetting,
    rounds: int,
    *,
    cls: HypothesisClass | None = None,
    rule: TieBreakRule = LEX_MIN,
    fixture: str = "",
    learner_name: str = "",
    seed: int = 0,
) -> Transcript:
    """Play `rounds` rounds and account for mistakes and regret.

    With `cls` given, the best fixed member in hindsight is computed on the
    source's final graph.
    """
    if rounds < 0:
        raise ValidationError("Round count must be non-negative")
    check_compatible(learner, source, setting)
    breaker = rule.breaker()
    transcript = Transcript(
        fixture=fixture,
        learner=learner_name or type(learner).__name__,
        setting=setting,
        seed=seed,
        tie_break=rule.name,
        source=source.name,
    )
    logger.info(
        "Run %s vs %s (%s, T=%d, seed=%d)",
        transcript.learner,
        source.name,
        setting.value,
        rounds,
        seed,
    )
    started = time.perf_counter()
    for t in range(1, rounds + 1):
        disclosed = source.disclose(t) if setting.discloses_x_first else None
        h = learner.propose(disclosed)
        move = source.respond(t, h, disclosed)
        x = move.agent.x
        if disclosed is not None and x != disclosed:
            raise ProtocolError(f"Round {t}: agent {x} differs from disclosed {disclosed}")
        v = best_response(move.graph, h, x, breaker)
        feedback = _feedback(setting, t, h, move.graph, x, v, move.agent.y)
        learner.observe(feedback)
        stats = learner.diagnostics()
        transcript.records.append(
            RoundRecord(
                t=t,
                x=x,
                v=v,
                hypothesis=h,
                yhat=feedback.yhat,
                y=move.agent.y,
                experts=stats.experts,
                total_weight=stats.total_weight,
                expected_loss=stats.expected_loss,
            )
        )
    transcript.wall_time = time.perf_counter() - started
    _replay(transcript, source)
    if cls is not None:
        _, transcript.best_index, transcript.best_loss = best_in_hindsight(
            cls, source.final_graph(), transcript.agents
        )
    logger.info(
        "Run finished: %d mistakes in %d rounds (regret %s)",
        transcript.mistakes,
        rounds,
        transcript.regret,
    )
    return transcript
