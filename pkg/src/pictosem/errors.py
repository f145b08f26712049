"""Exception types shared across the package."""


class PictosemError(Exception):
    """Base class for every domain error raised by this package."""


class LexiconFormatError(PictosemError):
    """The lexicon document is not well formed (syntax or structure)."""


class DuplicateIdentifierError(PictosemError):
    """The same identifier is declared twice in one namespace."""


class UnresolvedReferenceError(PictosemError):
    """A symbol or taxeme points at an identifier that does not exist."""


class UnknownSymbolError(PictosemError):
    """A symbol id is not present in the lexicon."""


class EmptySelectionalError(PictosemError):
    """Compatibility was asked to score against an empty selectional set."""


class EmptyUtteranceError(PictosemError):
    """Analysis needs at least one symbol occurrence."""


class NotPredicativeError(PictosemError):
    """A case-frame operation was applied to a symbol without a frame."""


class UnknownCaseError(PictosemError):
    """The named case label is not part of the predicate's frame."""


class EmptyNetworkError(PictosemError):
    """The semantic network has no vertices."""


class NoLemmaError(PictosemError):
    """No dictionary lemma covers a vertex with positive compatibility."""


class NoPredicateError(PictosemError):
    """The network has several vertices but no arc to realise from."""


class MissingTemplateError(PictosemError):
    """No realisation template is registered for the main predicate."""


class CorpusFormatError(PictosemError):
    """A benchmark corpus line is not a valid gold item."""
