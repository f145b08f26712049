"""French surface realisation of semantic networks.

Lexical choice picks, for every vertex, the dictionary lemma whose
features best cover the vertex's intrinsic features, reusing the
analyzer's compatibility score with the vertex features on the
selectional side. The main predicate (most arcs, earliest on ties) then
instantiates its slot template: bound slots render as noun phrases,
unbound ones are dropped with their attached literals.

Surface French is deliberately fixture-driven: definite articles agree
with the lemma's recorded gender, vowel-initial lemmas elide the article
(l'animal), "a le" contracts to "au", and "je" elides before a vowel.
There is no morphology engine; verb forms live in the templates.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

from .analyzer import AnalyzerConfig, DEFAULT_CONFIG, analyze, compatibility
from .errors import (
    EmptyNetworkError,
    MissingTemplateError,
    NoLemmaError,
    NoPredicateError,
)
from .lexicon import FeatureSet, Lexicon
from .network import SemanticNetwork, Vertex

_VOWELS = "aeiouyàâäéèêëîïôöûüù"

_SLOT_RE = re.compile(r"^(?P<prefix>[^<]*)<(?P<case>\w+)(?::(?P<form>\w+))?>(?P<opt>\?)?$")


@dataclass(frozen=True)
class LemmaEntry:
    """One natural-language word described with the icon feature system."""

    lemma: str
    part_of_speech: str  # noun | verb | pronoun | proper
    features: FeatureSet
    gender: Optional[str] = None  # masc | fem
    determiner: str = "none"  # definite | none


@dataclass(frozen=True)
class SlotToken:
    """A template slot: optional literal prefix, case label, surface form."""

    prefix: str
    case: str
    form: str  # def | bare | inf
    optional: bool


TemplateToken = Union[str, SlotToken]


@dataclass(frozen=True)
class RealizationTemplate:
    predicate: str
    tokens: tuple[TemplateToken, ...]

    def slot_cases(self) -> tuple[str, ...]:
        return tuple(t.case for t in self.tokens if isinstance(t, SlotToken))


def _parse_token(raw: str) -> TemplateToken:
    match = _SLOT_RE.match(raw)
    if match is None:
        return raw
    return SlotToken(
        prefix=match.group("prefix").strip(),
        case=match.group("case"),
        form=match.group("form") or "bare",
        optional=match.group("opt") is not None,
    )


def load_dictionary(path: Union[str, Path]) -> tuple[LemmaEntry, ...]:
    """Load lemma entries; file order is the tie-breaking order."""
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    entries = []
    for node in document["entries"]:
        entries.append(
            LemmaEntry(
                lemma=node["lemma"],
                part_of_speech=node["pos"],
                features=dict(node["features"]),
                gender=node.get("gender"),
                determiner=node.get("determiner", "none"),
            )
        )
    return tuple(entries)


def load_templates(path: Union[str, Path]) -> dict[str, RealizationTemplate]:
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    return {
        predicate: RealizationTemplate(
            predicate=predicate, tokens=tuple(_parse_token(t) for t in tokens)
        )
        for predicate, tokens in document.items()
    }


def lexical_choice(
    network: SemanticNetwork, dictionary: Sequence[LemmaEntry]
) -> dict[int, LemmaEntry]:
    """Best-covering lemma per vertex; dictionary order breaks ties.

    A vertex with no lemma scoring strictly above zero raises NoLemmaError.
    """
    chosen: dict[int, LemmaEntry] = {}
    for vertex in network.vertices:
        best: Optional[LemmaEntry] = None
        best_score = 0.0
        for entry in dictionary:
            score = compatibility(vertex.features, entry.features)
            if score > best_score:
                best, best_score = entry, score
        if best is None:
            raise NoLemmaError(
                f"no dictionary lemma covers vertex {vertex.symbol_id!r} "
                f"at position {vertex.pos}"
            )
        chosen[vertex.pos] = best
    return chosen


def _definite_article(entry: LemmaEntry) -> str:
    if entry.lemma[:1].lower() in _VOWELS:
        return "l'"
    return "la " if entry.gender == "fem" else "le "


def _noun_phrase(entry: LemmaEntry, form: str) -> str:
    if form == "def" and entry.determiner == "definite":
        return _definite_article(entry) + entry.lemma
    return entry.lemma


def _polish(text: str) -> str:
    text = re.sub(r"\bà le ", "au ", text)
    text = re.sub(r"\bje (?=[" + _VOWELS + "])", "j'", text)
    return text[:1].upper() + text[1:]


def _main_predicate(network: SemanticNetwork) -> Optional[Vertex]:
    heads = [v for v in network.vertices if network.arcs_from(v.pos)]
    if not heads:
        return None
    return max(heads, key=lambda v: (len(network.arcs_from(v.pos)), -v.pos))


def realize(
    network: SemanticNetwork,
    dictionary: Sequence[LemmaEntry],
    templates: dict[str, RealizationTemplate],
) -> str:
    """Linearise a network as one French sentence.

    Works on networks with at least one arc-bearing predicate, or on a
    single isolated vertex (rendered as a bare noun phrase). A secondary
    predicate filling a slot of the main one renders as an infinitive,
    extended with its own bound patient when it has one.
    """
    if not network.vertices:
        raise EmptyNetworkError("cannot realise an empty network")

    lemmas = lexical_choice(network, dictionary)
    main = _main_predicate(network)
    if main is None:
        if len(network.vertices) == 1:
            only = network.vertices[0]
            return _polish(_noun_phrase(lemmas[only.pos], "def"))
        raise NoPredicateError("network has several vertices but no arcs")

    template = templates.get(main.symbol_id)
    if template is None:
        raise MissingTemplateError(f"no template for predicate {main.symbol_id!r}")

    bindings = {arc.case: arc.dep for arc in network.arcs_from(main.pos)}

    def render_slot(token: SlotToken) -> Optional[str]:
        filler_pos = bindings.get(token.case)
        if filler_pos is None:
            return None
        entry = lemmas[filler_pos]
        if token.form == "inf":
            phrase = entry.lemma
            inner = {a.case: a.dep for a in network.arcs_from(filler_pos)}
            if "patient" in inner:
                phrase += " " + _noun_phrase(lemmas[inner["patient"]], "def")
        else:
            phrase = _noun_phrase(entry, token.form)
        return f"{token.prefix} {phrase}" if token.prefix else phrase

    words: list[str] = []
    for token in template.tokens:
        if isinstance(token, str):
            words.append(token)
        else:
            rendered = render_slot(token)
            if rendered is not None:
                words.append(rendered)
    return _polish(" ".join(words))


def transfer(
    lexicon: Lexicon,
    dictionary: Sequence[LemmaEntry],
    templates: dict[str, RealizationTemplate],
    sequence: Sequence[str],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> str:
    """End-to-end pipeline: analyse a symbol sequence, realise the network."""
    return realize(analyze(lexicon, sequence, config), dictionary, templates)
