"""Differential-semantics lexicon: domains, taxemes, symbols, case frames.

A vocabulary is a three-layer hierarchy: every symbol belongs to a taxeme
(a minimal category of symbols usable in the same contexts) and every
taxeme to a semantic domain. Feature sets are flat attribute -> atom maps;
a symbol's full intrinsic content is the layered union of domain, taxeme
and specific features, with the more specific layer winning on collisions.
Predicative symbols additionally carry a case frame: an ordered list of
case slots, each stating the selectional features a filler must satisfy.

Lexica are immutable after loading and safe to share between concurrent
analyses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .errors import (
    DuplicateIdentifierError,
    LexiconFormatError,
    UnknownSymbolError,
    UnresolvedReferenceError,
)

Atom = Union[int, float, str]
FeatureSet = dict[str, Atom]


@dataclass(frozen=True)
class Domain:
    """A broad consistency frame grouping taxemes."""

    name: str
    features: FeatureSet


@dataclass(frozen=True)
class Taxeme:
    """A minimal semantic category; `domain` names its enclosing domain."""

    name: str
    domain: str
    features: FeatureSet


@dataclass(frozen=True)
class CaseSlot:
    """One case of a frame with the selectional features it imposes."""

    label: str
    selectional: FeatureSet


@dataclass(frozen=True)
class CaseFrame:
    """Ordered case slots of a predicative symbol.

    Document order of the slots is preserved; it is used downstream for
    deterministic tie-breaking.
    """

    slots: tuple[CaseSlot, ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(slot.label for slot in self.slots)

    def slot(self, label: str) -> CaseSlot:
        for slot in self.slots:
            if slot.label == label:
                return slot
        raise KeyError(label)

    def index(self, label: str) -> int:
        for i, slot in enumerate(self.slots):
            if slot.label == label:
                return i
        raise KeyError(label)


@dataclass(frozen=True)
class SymbolEntry:
    """A lexicon terminal: taxeme membership, specific content, frame."""

    symbol_id: str
    taxeme: str
    specific: FeatureSet
    gloss: str
    frame: Optional[CaseFrame] = None
    icon_ref: Optional[str] = None

    @property
    def predicative(self) -> bool:
        return self.frame is not None


@dataclass
class Lexicon:
    """Fully cross-resolved vocabulary, keyed by identifier."""

    domains: dict[str, Domain]
    taxemes: dict[str, Taxeme]
    symbols: dict[str, SymbolEntry]
    _intrinsic: dict[str, FeatureSet] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        for taxeme in self.taxemes.values():
            if taxeme.domain not in self.domains:
                raise UnresolvedReferenceError(
                    f"taxeme {taxeme.name!r} references unknown domain {taxeme.domain!r}"
                )
        for symbol in self.symbols.values():
            if symbol.taxeme not in self.taxemes:
                raise UnresolvedReferenceError(
                    f"symbol {symbol.symbol_id!r} references unknown taxeme {symbol.taxeme!r}"
                )
        for symbol_id, symbol in self.symbols.items():
            taxeme = self.taxemes[symbol.taxeme]
            domain = self.domains[taxeme.domain]
            merged: FeatureSet = dict(domain.features)
            merged.update(taxeme.features)
            merged.update(symbol.specific)
            self._intrinsic[symbol_id] = merged

    def __contains__(self, symbol_id: str) -> bool:
        return symbol_id in self.symbols

    def entry(self, symbol_id: str) -> SymbolEntry:
        try:
            return self.symbols[symbol_id]
        except KeyError:
            raise UnknownSymbolError(f"unknown symbol {symbol_id!r}") from None

    def intrinsic_features(self, symbol_id: str) -> FeatureSet:
        """Layered feature union for a symbol: specific > taxeme > domain."""
        self.entry(symbol_id)
        return dict(self._intrinsic[symbol_id])

    def case_frame(self, symbol_id: str) -> Optional[CaseFrame]:
        """The case frame of a predicative symbol, or None."""
        return self.entry(symbol_id).frame

    def domain_of(self, symbol_id: str) -> Domain:
        entry = self.entry(symbol_id)
        return self.domains[self.taxemes[entry.taxeme].domain]


@dataclass
class ValidationReport:
    """Lexicon lint findings. Errors break analysis; warnings do not."""

    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def _check_feature_set(raw: object, where: str) -> FeatureSet:
    if not isinstance(raw, dict):
        raise LexiconFormatError(f"{where}: features must be an object")
    features: FeatureSet = {}
    for attribute, value in raw.items():
        if not isinstance(attribute, str) or not attribute:
            raise LexiconFormatError(f"{where}: empty or non-text attribute name")
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            raise LexiconFormatError(
                f"{where}: attribute {attribute!r} has non-atomic value {value!r}"
            )
        features[attribute] = value
    return features


def _reject_duplicate_keys(pairs: list[tuple[str, object]]) -> dict:
    out: dict = {}
    for key, value in pairs:
        if key in out:
            raise DuplicateIdentifierError(f"duplicate identifier {key!r}")
        out[key] = value
    return out


def lexicon_from_dict(document: dict) -> Lexicon:
    """Build a lexicon from a parsed document (see the JSON file format)."""
    if not isinstance(document, dict):
        raise LexiconFormatError("lexicon document must be a JSON object")
    for key in document:
        if key not in ("domains", "taxemes", "symbols"):
            raise LexiconFormatError(f"unexpected top-level key {key!r}")

    domains: dict[str, Domain] = {}
    for name, node in (document.get("domains") or {}).items():
        if not isinstance(node, dict):
            raise LexiconFormatError(f"domain {name!r} must be an object")
        features = _check_feature_set(node.get("features", {}), f"domain {name!r}")
        domains[name] = Domain(name=name, features=features)

    taxemes: dict[str, Taxeme] = {}
    for name, node in (document.get("taxemes") or {}).items():
        if not isinstance(node, dict):
            raise LexiconFormatError(f"taxeme {name!r} must be an object")
        domain = node.get("domain")
        if not isinstance(domain, str):
            raise LexiconFormatError(f"taxeme {name!r}: missing domain name")
        features = _check_feature_set(node.get("features", {}), f"taxeme {name!r}")
        taxemes[name] = Taxeme(name=name, domain=domain, features=features)

    symbols: dict[str, SymbolEntry] = {}
    for name, node in (document.get("symbols") or {}).items():
        if not isinstance(node, dict):
            raise LexiconFormatError(f"symbol {name!r} must be an object")
        taxeme = node.get("taxeme")
        if not isinstance(taxeme, str):
            raise LexiconFormatError(f"symbol {name!r}: missing taxeme name")
        specific = _check_feature_set(node.get("features", {}), f"symbol {name!r}")
        frame: Optional[CaseFrame] = None
        if "cases" in node:
            cases = node["cases"]
            if not isinstance(cases, dict):
                raise LexiconFormatError(f"symbol {name!r}: cases must be an object")
            slots = []
            for label, case_node in cases.items():
                if not isinstance(case_node, dict):
                    raise LexiconFormatError(
                        f"symbol {name!r} case {label!r} must be an object"
                    )
                selectional = _check_feature_set(
                    case_node.get("features", {}), f"symbol {name!r} case {label!r}"
                )
                slots.append(CaseSlot(label=label, selectional=selectional))
            frame = CaseFrame(slots=tuple(slots))
        gloss = node.get("gloss", name)
        if not isinstance(gloss, str):
            raise LexiconFormatError(f"symbol {name!r}: gloss must be text")
        icon = node.get("icon")
        if icon is not None and not isinstance(icon, str):
            raise LexiconFormatError(f"symbol {name!r}: icon must be a path")
        symbols[name] = SymbolEntry(
            symbol_id=name,
            taxeme=taxeme,
            specific=specific,
            gloss=gloss,
            frame=frame,
            icon_ref=icon,
        )

    return Lexicon(domains=domains, taxemes=taxemes, symbols=symbols)


def lexicon_from_json(text: str) -> Lexicon:
    """Parse a lexicon from JSON text; duplicate identifiers are rejected."""
    try:
        document = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise LexiconFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return lexicon_from_dict(document)


def load_lexicon(path: Union[str, Path]) -> Lexicon:
    """Load a lexicon file (UTF-8 JSON). Loading is deterministic."""
    return lexicon_from_json(Path(path).read_text(encoding="utf-8"))


def lexicon_to_dict(lexicon: Lexicon) -> dict:
    """Inverse of `lexicon_from_dict`, preserving declaration order."""
    document: dict = {"domains": {}, "taxemes": {}, "symbols": {}}
    for name, domain in lexicon.domains.items():
        document["domains"][name] = {"features": dict(domain.features)}
    for name, taxeme in lexicon.taxemes.items():
        document["taxemes"][name] = {
            "domain": taxeme.domain,
            "features": dict(taxeme.features),
        }
    for name, symbol in lexicon.symbols.items():
        node: dict = {
            "taxeme": symbol.taxeme,
            "features": dict(symbol.specific),
            "gloss": symbol.gloss,
        }
        if symbol.icon_ref is not None:
            node["icon"] = symbol.icon_ref
        if symbol.frame is not None:
            node["cases"] = {
                slot.label: {"features": dict(slot.selectional)}
                for slot in symbol.frame.slots
            }
        document["symbols"][name] = node
    return document


def lexicon_to_json(lexicon: Lexicon) -> str:
    return json.dumps(lexicon_to_dict(lexicon), ensure_ascii=False, indent=2)


def validate_lexicon(lexicon: Lexicon) -> ValidationReport:
    """Lint a loaded lexicon.

    Errors: empty selectional sets, predicative symbols with zero slots.
    Warnings: cross-layer attribute collisions (resolved silently by
    precedence at lookup time), taxemes with fewer than two members.
    """
    report = ValidationReport()

    for symbol_id, symbol in lexicon.symbols.items():
        if symbol.frame is not None:
            if not symbol.frame.slots:
                report.errors.append(
                    f"symbol {symbol_id!r}: predicative but its frame has no slots"
                )
            seen: set[str] = set()
            for slot in symbol.frame.slots:
                if slot.label in seen:
                    report.errors.append(
                        f"symbol {symbol_id!r}: duplicate case {slot.label!r}"
                    )
                seen.add(slot.label)
                if not slot.selectional:
                    report.errors.append(
                        f"symbol {symbol_id!r} case {slot.label!r}: empty selectional feature set"
                    )

        taxeme = lexicon.taxemes[symbol.taxeme]
        domain = lexicon.domains[taxeme.domain]
        layers = (
            ("domain", domain.features),
            ("taxeme", taxeme.features),
            ("specific", symbol.specific),
        )
        for i, (low_name, low) in enumerate(layers):
            for high_name, high in layers[i + 1 :]:
                for attribute in low:
                    if attribute in high:
                        kind = (
                            "overridden"
                            if low[attribute] != high[attribute]
                            else "repeated"
                        )
                        report.warnings.append(
                            f"symbol {symbol_id!r}: attribute {attribute!r} from the "
                            f"{low_name} layer is {kind} by the {high_name} layer"
                        )

    members: dict[str, int] = {name: 0 for name in lexicon.taxemes}
    for symbol in lexicon.symbols.values():
        members[symbol.taxeme] += 1
    for name, count in members.items():
        if count < 2:
            report.warnings.append(
                f"taxeme {name!r} groups {count} symbol(s); expected at least two"
            )

    return report
