"""Benchmark harness: run a gold corpus through analysis and transfer.

Every produced network/sentence pair is sorted into one of four verdict
categories and the acceptability rate is the share of the first two:

    I   produced arcs equal the gold arcs and the sentence matches
        (sentence comparison is skipped when no gold sentence is given);
    II  arcs equal the gold arcs, sentence differs;
    III arcs differ but share at least one arc with the gold;
    IV  produced arcs are disjoint from the gold arcs.

The category judgements are mechanical proxies (set equality on arcs,
string equality on sentences), so the harness runs unattended.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .analyzer import AnalyzerConfig, DEFAULT_CONFIG, analyze
from .errors import CorpusFormatError, PictosemError
from .lexicon import Lexicon
from .network import SemanticNetwork
from .realizer import LemmaEntry, RealizationTemplate, realize

GoldArc = tuple[int, str, int]

CATEGORIES = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class GoldItem:
    """One annotated sequence: expected arcs and optionally the sentence."""

    sequence: tuple[str, ...]
    gold_arcs: frozenset[GoldArc]
    gold_sentence: Optional[str] = None

    def __post_init__(self) -> None:
        for head, _case, dep in self.gold_arcs:
            if not (0 <= head < len(self.sequence) and 0 <= dep < len(self.sequence)):
                raise CorpusFormatError(
                    f"gold arc endpoints outside sequence {self.sequence}"
                )


@dataclass(frozen=True)
class ItemVerdict:
    item: GoldItem
    category: str
    produced_arcs: frozenset[GoldArc]
    produced_sentence: Optional[str]


@dataclass
class BenchReport:
    counts: dict[str, int]
    verdicts: list[ItemVerdict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def acceptability_rate(self) -> float:
        return (self.counts["I"] + self.counts["II"]) / self.total if self.total else 0.0

    def to_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "total": self.total,
            "acceptability_rate": self.acceptability_rate,
            "items": [
                {
                    "seq": list(v.item.sequence),
                    "category": v.category,
                    "arcs": sorted(list(a) for a in v.produced_arcs),
                    "sentence": v.produced_sentence,
                }
                for v in self.verdicts
            ],
        }

    def table(self) -> str:
        lines = ["category  count", "--------  -----"]
        for category in CATEGORIES:
            lines.append(f"{category:<8}  {self.counts[category]:>5}")
        lines.append(f"total     {self.total:>5}")
        lines.append(f"acceptability (I+II)/total = {self.acceptability_rate:.3f}")
        return "\n".join(lines)


def categorize(
    item: GoldItem,
    produced_network: SemanticNetwork,
    produced_sentence: Optional[str],
) -> str:
    """Verdict category for one item; total over all inputs."""
    produced = frozenset((a.head, a.case, a.dep) for a in produced_network.arcs)
    if produced == item.gold_arcs:
        if item.gold_sentence is None or produced_sentence == item.gold_sentence:
            return "I"
        return "II"
    if produced & item.gold_arcs:
        return "III"
    return "IV"


def run_benchmark(
    lexicon: Lexicon,
    dictionary: Sequence[LemmaEntry],
    templates: dict[str, RealizationTemplate],
    corpus: Iterable[GoldItem],
    config: AnalyzerConfig = DEFAULT_CONFIG,
) -> BenchReport:
    """Categorise every corpus item. Items are independent of each other."""
    report = BenchReport(counts={c: 0 for c in CATEGORIES})
    for item in corpus:
        network = analyze(lexicon, item.sequence, config)
        try:
            sentence: Optional[str] = realize(network, dictionary, templates)
        except PictosemError:
            sentence = None
        category = categorize(item, network, sentence)
        report.counts[category] += 1
        report.verdicts.append(
            ItemVerdict(
                item=item,
                category=category,
                produced_arcs=frozenset((a.head, a.case, a.dep) for a in network.arcs),
                produced_sentence=sentence,
            )
        )
    return report


def _item_from_dict(node: dict, where: str) -> GoldItem:
    if not isinstance(node, dict) or "seq" not in node:
        raise CorpusFormatError(f"{where}: expected an object with a 'seq' list")
    sequence = node["seq"]
    if not isinstance(sequence, list) or not all(isinstance(s, str) for s in sequence):
        raise CorpusFormatError(f"{where}: 'seq' must be a list of symbol ids")
    raw_arcs = node.get("arcs", [])
    arcs = set()
    for raw in raw_arcs:
        if not (isinstance(raw, list) and len(raw) == 3):
            raise CorpusFormatError(f"{where}: arcs must be [head, case, dep] triples")
        head, case, dep = raw
        arcs.add((int(head), str(case), int(dep)))
    sentence = node.get("sentence")
    if sentence is not None and not isinstance(sentence, str):
        raise CorpusFormatError(f"{where}: 'sentence' must be text")
    return GoldItem(
        sequence=tuple(sequence), gold_arcs=frozenset(arcs), gold_sentence=sentence
    )


def load_corpus(path: Union[str, Path]) -> list[GoldItem]:
    """Load a JSON-lines corpus, one gold item per line."""
    items = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        try:
            node = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"line {lineno}: invalid JSON: {exc.msg}") from exc
        items.append(_item_from_dict(node, f"line {lineno}"))
    return items
