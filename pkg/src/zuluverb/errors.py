from __future__ import annotations


class VerbalizerError(Exception):
    """Base class for every error raised by zuluverb."""


class LexiconError(VerbalizerError):
    """Malformed or inconsistent lexicon data.

    ``line`` is the 1-based source line when the error came from a file.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.reason = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnknownLemma(VerbalizerError):
    def __init__(self, lemma: str):
        self.lemma = lemma
        super().__init__(f"unknown lemma {lemma!r}")


class UnknownProperty(VerbalizerError):
    def __init__(self, key: str):
        self.key = key
        super().__init__(f"unknown property {key!r}")


class NoPluralError(VerbalizerError):
    def __init__(self, lemma: str):
        self.lemma = lemma
        super().__init__(f"no plural form for {lemma!r}")


class ConcordUnavailable(VerbalizerError):
    def __init__(self, cls: str, what: str):
        self.cls = cls
        self.what = what
        super().__init__(f"concord not available: no {what} for class {cls}")


class MorphologyError(VerbalizerError):
    pass


class AxiomSyntaxError(VerbalizerError):
    """Located parse failure; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int,
                 expected: frozenset[str] = frozenset()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        text = f"{line}:{column}: {message}"
        if expected:
            text += f" (expected {', '.join(sorted(expected))})"
        super().__init__(text)


class UnsupportedAxiom(VerbalizerError):
    def __init__(self, node: str, reason: str = "unsupported axiom shape"):
        self.node = node
        super().__init__(f"{reason}: {node}")


class ProfileError(VerbalizerError):
    pass
