"""Case-filling analysis of unordered, agrammatical symbol sequences.

Every (predicate, case, filler) triple is scored by the compatibility of
the filler's intrinsic features with the case's selectional features.
The score is damped by a locality factor decaying with linear distance in
the sequence, and attachments whose damped score does not exceed the
acceptability threshold are rejected. For each predicative symbol
independently, the analyser then searches the injective partial
assignment of fillers to cases with the maximal summed score, and the
winning bindings become the typed arcs of a semantic network.

Compatibility is asymmetric: it counts how many selectional features the
filler satisfies (+1 agreeing, -1 disagreeing, 0 absent) over the number
of selectional features, so it measures fitness of the intrinsic set *to*
the selectional set and lies in [-1, +1].

Two search routes are provided. `best_assignment` enumerates every
injective partial assignment (the oracle, fine for the short utterances
this system targets); `best_assignment_matching` reduces the same
optimisation to maximum-weight bipartite matching, valid because the
assignment value is an additive sum. Both routes share one preference
order - higher value, then more bound cases, then smaller total distance,
then earlier slots bound to earlier positions - evaluated in exact
arithmetic (IEEE scores reinterpreted as rationals), so they return
identical bindings.

All operations are pure functions of (lexicon, utterance, config).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .assignment import max_weight_assignment
from .errors import (
    EmptySelectionalError,
    EmptyUtteranceError,
    NotPredicativeError,
    UnknownCaseError,
)
from .lexicon import FeatureSet, Lexicon
from .network import Arc, SemanticNetwork, Vertex

_EXPONENT_MODES = ("distance", "distance-minus-1")

#: Tolerance used when comparing scores reported as floats (tests, clients).
SCORE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class AnalyzerConfig:
    """Analysis constants.

    threshold: minimal damped score an attachment must strictly exceed.
    locality: per-distance-unit attenuation factor, in (0, 1].
    distance_exponent: "distance" damps adjacent symbols by locality**1;
        "distance-minus-1" leaves adjacent symbols undamped.
    """

    threshold: float = 0.25
    locality: float = 0.8
    distance_exponent: str = "distance"

    def __post_init__(self) -> None:
        if not 0.0 < self.locality <= 1.0:
            raise ValueError(f"locality must be in (0, 1], got {self.locality}")
        if self.distance_exponent not in _EXPONENT_MODES:
            raise ValueError(
                f"distance_exponent must be one of {_EXPONENT_MODES}, "
                f"got {self.distance_exponent!r}"
            )


DEFAULT_CONFIG = AnalyzerConfig()


@dataclass(frozen=True)
class UnificationCandidate:
    """One surviving case-filling hypothesis for a predicate.

    `case_index` is the slot's position in the frame's document order;
    it makes the deterministic tie rule computable from candidates alone.
    """

    predicate_pos: int
    case_label: str
    case_index: int
    filler_pos: int
    raw_value: float
    distance: int
    damped_value: float


@dataclass(frozen=True)
class CaseAssignment:
    """An injective partial map from a predicate's cases to filler positions."""

    predicate_pos: int
    bindings: tuple[tuple[str, int], ...]
    value: float

    def binding_map(self) -> dict[str, int]:
        return dict(self.bindings)


def compatibility(selectional: FeatureSet, intrinsic: FeatureSet) -> float:
    """Fitness of an intrinsic feature set to a selectional one, in [-1, 1].

    Each selectional attribute contributes +1 when the intrinsic set holds
    the same value, -1 when it holds a different one, and 0 when absent;
    the sum is normalised by the selectional set's size.
    """
    if not selectional:
        raise EmptySelectionalError("cannot score against an empty selectional set")
    score = 0
    for attribute, wanted in selectional.items():
        if attribute in intrinsic:
            score += 1 if intrinsic[attribute] == wanted else -1
    return score / len(selectional)


def _damping_exponent(distance: int, config: AnalyzerConfig) -> int:
    return distance if config.distance_exponent == "distance" else distance - 1


def unification_value(
    lexicon: Lexicon,
    utterance: Sequence[str],
    config: AnalyzerConfig,
    predicate_pos: int,
    case_label: str,
    filler_pos: int,
) -> Optional[UnificationCandidate]:
    """Score one case-filling hypothesis; None when the threshold rejects it."""
    if predicate_pos == filler_pos:
        raise ValueError("a predicate cannot fill its own case")
    frame = lexicon.case_frame(utterance[predicate_pos])
    if frame is None:
        raise NotPredicativeError(
            f"symbol {utterance[predicate_pos]!r} at position {predicate_pos} has no case frame"
        )
    try:
        slot = frame.slot(case_label)
        case_index = frame.index(case_label)
    except KeyError:
        raise UnknownCaseError(
            f"symbol {utterance[predicate_pos]!r} has no case {case_label!r}"
        ) from None

    raw = compatibility(slot.selectional, lexicon.intrinsic_features(utterance[filler_pos]))
    distance = abs(predicate_pos - filler_pos)
    damped = raw * config.locality ** _damping_exponent(distance, config)
    if damped <= config.threshold:
        return None
    return UnificationCandidate(
        predicate_pos=predicate_pos,
        case_label=case_label,
        case_index=case_index,
        filler_pos=filler_pos,
        raw_value=raw,
        distance=distance,
        damped_value=damped,
    )


def _check_candidates(predicate_pos: int, candidates: Sequence[UnificationCandidate]) -> None:
    for candidate in candidates:
        if candidate.predicate_pos != predicate_pos:
            raise ValueError(
                f"candidate for predicate {candidate.predicate_pos} passed to "
                f"predicate {predicate_pos}"
            )


def _surviving(
    candidates: Sequence[UnificationCandidate], config: AnalyzerConfig
) -> list[UnificationCandidate]:
    return [c for c in candidates if c.damped_value > config.threshold]


def enumerate_assignments(
    predicate_pos: int, candidates: Sequence[UnificationCandidate]
) -> list[CaseAssignment]:
    """Every injective partial assignment buildable from the candidates.

    Includes the empty assignment. Intended as the exhaustive oracle for
    small instances; the count grows combinatorially.
    """
    _check_candidates(predicate_pos, candidates)
    by_case: dict[str, list[UnificationCandidate]] = {}
    for candidate in sorted(candidates, key=lambda c: (c.case_index, c.filler_pos)):
        by_case.setdefault(candidate.case_label, []).append(candidate)
    labels = sorted(by_case, key=lambda label: by_case[label][0].case_index)

    results: list[CaseAssignment] = []

    def extend(i: int, used: set[int], chosen: list[UnificationCandidate]) -> None:
        if i == len(labels):
            results.append(
                CaseAssignment(
                    predicate_pos=predicate_pos,
                    bindings=tuple((c.case_label, c.filler_pos) for c in chosen),
                    value=math.fsum(c.damped_value for c in chosen),
                )
            )
            return
        extend(i + 1, used, chosen)  # leave this case unbound
        for candidate in by_case[labels[i]]:
            if candidate.filler_pos not in used:
                chosen.append(candidate)
                used.add(candidate.filler_pos)
                extend(i + 1, used, chosen)
                used.remove(candidate.filler_pos)
                chosen.pop()

    extend(0, set(), [])
    return results


def _instance_geometry(
    candidates: Sequence[UnificationCandidate],
) -> tuple[int, int]:
    """Position base and effective frame size shared by both search routes."""
    top_pos = max(max(c.filler_pos, c.predicate_pos) for c in candidates)
    base = top_pos + 2  # digits stay strictly below the base
    slots = max(c.case_index for c in candidates) + 1
    return base, slots


def _preference_key(
    chosen: Sequence[UnificationCandidate], base: int, slots: int
) -> tuple[Fraction, int, int, int]:
    """Maximisation key implementing the deterministic preference order.

    Value is compared exactly (floats reinterpreted as the rationals they
    are); mathematically tied assignments then prefer more bound cases,
    smaller total distance, and finally earlier slots bound to earlier
    positions (encoded positionally so the comparison is lexicographic).
    """
    total = Fraction(0)
    distance = 0
    digits = 0
    for candidate in chosen:
        total += Fraction(candidate.damped_value)
        distance += candidate.distance
        digits += (base - 1 - candidate.filler_pos) * base ** (
            slots - 1 - candidate.case_index
        )
    return (total, len(chosen), -distance, digits)


def best_assignment(
    predicate_pos: int,
    candidates: Sequence[UnificationCandidate],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> CaseAssignment:
    """Highest-value assignment by exhaustive search (the oracle route)."""
    _check_candidates(predicate_pos, candidates)
    surviving = _surviving(candidates, config)
    if not surviving:
        return CaseAssignment(predicate_pos=predicate_pos, bindings=(), value=0.0)
    base, slots = _instance_geometry(surviving)
    lookup = {(c.case_label, c.filler_pos): c for c in surviving}
    best = max(
        enumerate_assignments(predicate_pos, surviving),
        key=lambda a: _preference_key([lookup[b] for b in a.bindings], base, slots),
    )
    return best


def best_assignment_matching(
    predicate_pos: int,
    candidates: Sequence[UnificationCandidate],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> CaseAssignment:
    """Highest-value assignment via maximum-weight bipartite matching.

    Packs the four preference levels into one exact integer weight per
    edge (value, bound-case bonus, distance penalty, slot/position digits)
    with scale factors chosen so no lower level can overturn a higher one,
    then solves one assignment problem. Returns the same bindings as
    `best_assignment`.
    """
    _check_candidates(predicate_pos, candidates)
    surviving = _surviving(candidates, config)
    if not surviving:
        return CaseAssignment(predicate_pos=predicate_pos, bindings=(), value=0.0)

    base, slots = _instance_geometry(surviving)
    rows = sorted({c.case_index for c in surviving})
    row_label = {}
    by_edge: dict[tuple[int, int], UnificationCandidate] = {}
    for candidate in surviving:
        row_label[candidate.case_index] = candidate.case_label
        by_edge[(candidate.case_index, candidate.filler_pos)] = candidate
    fillers = sorted({c.filler_pos for c in surviving})

    denominator = math.lcm(
        *(Fraction(c.damped_value).denominator for c in surviving)
    )
    scale_digit = base**slots
    scale_distance = scale_digit
    scale_count = scale_distance * (len(rows) * base + 1)
    scale_value = scale_count * (len(rows) + 1)

    def edge_weight(candidate: UnificationCandidate) -> int:
        value_int = int(Fraction(candidate.damped_value) * denominator)
        digit = (base - 1 - candidate.filler_pos) * base ** (
            slots - 1 - candidate.case_index
        )
        return (
            value_int * scale_value
            + scale_count
            - candidate.distance * scale_distance
            + digit
        )

    n_rows, n_fillers = len(rows), len(fillers)
    top = max(abs(edge_weight(c)) for c in surviving)
    forbidden = -((2 * n_rows + 1) * top + 1)

    weights = [[forbidden] * (n_fillers + n_rows) for _ in range(n_rows)]
    for i, case_index in enumerate(rows):
        for j, filler_pos in enumerate(fillers):
            candidate = by_edge.get((case_index, filler_pos))
            if candidate is not None:
                weights[i][j] = edge_weight(candidate)
        weights[i][n_fillers + i] = 0  # leaving this case unbound

    columns = max_weight_assignment(weights)

    chosen: list[UnificationCandidate] = []
    for i, case_index in enumerate(rows):
        j = columns[i]
        if j < n_fillers:
            candidate = by_edge.get((case_index, fillers[j]))
            if candidate is not None and edge_weight(candidate) > forbidden:
                chosen.append(candidate)
    chosen.sort(key=lambda c: c.case_index)
    return CaseAssignment(
        predicate_pos=predicate_pos,
        bindings=tuple((c.case_label, c.filler_pos) for c in chosen),
        value=math.fsum(c.damped_value for c in chosen),
    )


def scan_candidates(
    lexicon: Lexicon,
    utterance: Sequence[str],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> tuple[list[UnificationCandidate], list[UnificationCandidate]]:
    """Score every (predicate, case, filler) pair of the utterance.

    Returns (surviving, rejected): rejected entries carry the damped value
    that failed the threshold, for explainability.
    """
    if not utterance:
        raise EmptyUtteranceError("cannot analyse an empty utterance")
    for symbol_id in utterance:
        lexicon.entry(symbol_id)  # raises UnknownSymbolError early

    surviving: list[UnificationCandidate] = []
    rejected: list[UnificationCandidate] = []
    for predicate_pos, symbol_id in enumerate(utterance):
        frame = lexicon.case_frame(symbol_id)
        if frame is None:
            continue
        for case_index, slot in enumerate(frame.slots):
            for filler_pos in range(len(utterance)):
                if filler_pos == predicate_pos:
                    continue
                raw = compatibility(
                    slot.selectional, lexicon.intrinsic_features(utterance[filler_pos])
                )
                distance = abs(predicate_pos - filler_pos)
                damped = raw * config.locality ** _damping_exponent(distance, config)
                candidate = UnificationCandidate(
                    predicate_pos=predicate_pos,
                    case_label=slot.label,
                    case_index=case_index,
                    filler_pos=filler_pos,
                    raw_value=raw,
                    distance=distance,
                    damped_value=damped,
                )
                if damped > config.threshold:
                    surviving.append(candidate)
                else:
                    rejected.append(candidate)
    return surviving, rejected


def analyze(
    lexicon: Lexicon,
    utterance: Sequence[str],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> SemanticNetwork:
    """Interpret an utterance as a semantic network.

    Each predicative symbol is solved independently over all other
    positions (predicative symbols may themselves be fillers), and every
    winning binding becomes one typed arc. The vertex order preserves the
    utterance order.
    """
    surviving, _ = scan_candidates(lexicon, utterance, config)

    arcs: list[Arc] = []
    for predicate_pos in range(len(utterance)):
        mine = [c for c in surviving if c.predicate_pos == predicate_pos]
        if not mine:
            continue
        chosen = best_assignment_matching(predicate_pos, mine, config)
        damped = {(c.case_label, c.filler_pos): c.damped_value for c in mine}
        for case_label, filler_pos in chosen.bindings:
            arcs.append(
                Arc(
                    head=predicate_pos,
                    case=case_label,
                    dep=filler_pos,
                    value=damped[(case_label, filler_pos)],
                )
            )

    vertices = tuple(
        Vertex(pos=pos, symbol_id=symbol_id, features=lexicon.intrinsic_features(symbol_id))
        for pos, symbol_id in enumerate(utterance)
    )
    return SemanticNetwork(vertices=vertices, arcs=tuple(arcs))
