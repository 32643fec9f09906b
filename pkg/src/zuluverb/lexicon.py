"""Noun/verb lexicon and the per-class concord table.

Every piece of agreement morphology is looked up here by noun class; nothing
is guessed from a noun's surface form. Files are line-oriented, tab-separated
UTF-8 (see ``data/default.lex`` for a commented example).
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping, TextIO

from .errors import ConcordUnavailable, LexiconError, NoPluralError, UnknownLemma, UnknownProperty

VOWELS = frozenset("aiou")
ABSENT = "-"


class NounClass(str, Enum):
    C1 = "1"
    C2 = "2"
    C1A = "1a"
    C2A = "2a"
    C3A = "3a"
    C3 = "3"
    C4 = "4"
    C5 = "5"
    C6 = "6"
    C7 = "7"
    C8 = "8"
    C9A = "9a"
    C9 = "9"
    C10 = "10"
    C11 = "11"
    C14 = "14"
    C15 = "15"
    C17 = "17"

    def __str__(self) -> str:
        return self.value


# singular -> plural couplings of the class table; 14, 15 and 17 have none
DEFAULT_PLURAL = MappingProxyType({
    NounClass.C1: NounClass.C2,
    NounClass.C1A: NounClass.C2A,
    NounClass.C3A: NounClass.C2A,
    NounClass.C3: NounClass.C4,
    NounClass.C5: NounClass.C6,
    NounClass.C7: NounClass.C8,
    NounClass.C9A: NounClass.C6,
    NounClass.C9: NounClass.C10,
    NounClass.C11: NounClass.C10,
})


@dataclass(frozen=True)
class NounEntry:
    lemma: str
    cls: NounClass
    plural_lemma: str | None = None
    plural_cls: NounClass | None = None
    living: bool = False
    person: bool = False
    gloss: str = ""

    def __post_init__(self):
        if not self.lemma or self.lemma[0] not in VOWELS:
            raise LexiconError(f"noun {self.lemma!r} must begin with one of a, i, o, u")
        if (self.plural_lemma is None) != (self.plural_cls is None):
            raise LexiconError(f"noun {self.lemma!r}: plural form and plural class must be given together")
        if self.plural_lemma is not None and (not self.plural_lemma or self.plural_lemma[0] not in VOWELS):
            raise LexiconError(f"plural {self.plural_lemma!r} must begin with one of a, i, o, u")
        if self.person and not self.living:
            raise LexiconError(f"noun {self.lemma!r}: a person must be living")

    @property
    def has_plural(self) -> bool:
        return self.plural_lemma is not None


@dataclass(frozen=True)
class VerbEntry:
    key: str
    stem: str
    agent_prefix: bool = False
    gloss: str = ""

    def __post_init__(self):
        if not self.stem or self.stem[0] in "aeiou":
            raise LexiconError(f"verb {self.key!r}: stem {self.stem!r} must be non-empty and consonant-initial")


@dataclass(frozen=True)
class ConcordSet:
    """One row of agreement material for a noun class.

    Strings keep their join hyphens (``"azi-"``, ``"-lo-"``); composition
    strips them. ``neg_sc``/``pron`` are None only for class 17, the other
    optional cells are None wherever the form is not attested.
    """
    cls: NounClass
    augment: str
    prefix: str
    neg_sc: str | None
    pron: str | None
    all_concord: str
    subj_concord: str | None
    rel_concord: str | None = None
    quant_concord: str | None = None
    enum_copula: str | None = None
    enum_prefix: str | None = None

    def __post_init__(self):
        if self.neg_sc is not None and not self.neg_sc.startswith("a"):
            raise LexiconError(f"class {self.cls}: NEG SC {self.neg_sc!r} must begin with 'a'")
        if not self.all_concord.endswith("onke"):
            raise LexiconError(f"class {self.cls}: all-concord {self.all_concord!r} must end in 'onke'")

    def require(self, field: str) -> str:
        value = getattr(self, field)
        if value is None:
            raise ConcordUnavailable(str(self.cls), field)
        return value


@dataclass(frozen=True)
class Lexicon:
    nouns: Mapping[str, NounEntry]
    verbs: Mapping[str, VerbEntry]
    concords: Mapping[NounClass, ConcordSet]

    def __post_init__(self):
        object.__setattr__(self, "nouns", MappingProxyType(dict(self.nouns)))
        object.__setattr__(self, "verbs", MappingProxyType(dict(self.verbs)))
        object.__setattr__(self, "concords", MappingProxyType(dict(self.concords)))
        for entry in self.nouns.values():
            for cls in (entry.cls, entry.plural_cls):
                if cls is not None and cls not in self.concords:
                    raise LexiconError(f"noun {entry.lemma!r} uses class {cls} which has no concord row")

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return (dict(self.nouns) == dict(other.nouns) and dict(self.verbs) == dict(other.verbs)
                and dict(self.concords) == dict(other.concords))

    __hash__ = None

    def lookup_noun(self, lemma: str) -> NounEntry:
        try:
            return self.nouns[lemma]
        except KeyError:
            raise UnknownLemma(lemma) from None

    def lookup_verb(self, key: str) -> VerbEntry:
        try:
            return self.verbs[key]
        except KeyError:
            raise UnknownProperty(key) from None

    def pluralize(self, entry: NounEntry) -> tuple[str, NounClass]:
        """Stored plural of ``entry``. Plurals are never synthesized."""
        if entry.plural_lemma is None:
            raise NoPluralError(entry.lemma)
        return entry.plural_lemma, entry.plural_cls

    def concords_for(self, cls: NounClass | str) -> ConcordSet:
        cls = NounClass(cls)
        try:
            return self.concords[cls]
        except KeyError:
            raise ConcordUnavailable(str(cls), "concord row") from None


def parse_class(label: str, line: int | None = None) -> NounClass:
    try:
        return NounClass(label)
    except ValueError:
        raise LexiconError(f"unknown noun class {label!r}", line) from None


def _opt(cell: str) -> str | None:
    return None if cell == ABSENT else cell


def _morpheme(cell: str) -> str:
    # "-" in the augment/prefix columns is an empty morpheme, not a missing one
    return "" if cell == ABSENT else cell


_ARITY = {"N": 7, "V": 5, "C": 12}


def _read_lines(source: str | TextIO) -> Iterable[tuple[int, str]]:
    if isinstance(source, str):
        source = io.StringIO(source)
    for lineno, raw in enumerate(source, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


def _noun(fields: list[str], lineno: int) -> NounEntry:
    _, lemma, cls, plural, plural_cls, flags, gloss = fields
    cls = parse_class(cls, lineno)
    plural = _opt(plural)
    plural_cls = _opt(plural_cls)
    if plural is not None and plural_cls is None:
        plural_cls = DEFAULT_PLURAL.get(cls)
        if plural_cls is None:
            raise LexiconError(f"class {cls} has no default plural class; give one explicitly", lineno)
    elif plural_cls is not None:
        plural_cls = parse_class(plural_cls, lineno)
    flag_set = set(flags.split(","))
    if not flag_set & {"living", "nonliving"} or flag_set >= {"living", "nonliving"}:
        raise LexiconError(f"flags {flags!r} must contain exactly one of living/nonliving", lineno)
    unknown = flag_set - {"living", "nonliving", "person"}
    if unknown:
        raise LexiconError(f"unknown noun flag(s) {', '.join(sorted(unknown))}", lineno)
    try:
        return NounEntry(lemma, cls, plural, plural_cls, "living" in flag_set, "person" in flag_set, gloss)
    except LexiconError as e:
        raise LexiconError(e.reason, lineno) from None


def _verb(fields: list[str], lineno: int) -> VerbEntry:
    _, key, stem, agent, gloss = fields
    if agent not in ("agent", "noagent"):
        raise LexiconError(f"expected 'agent' or 'noagent', got {agent!r}", lineno)
    try:
        return VerbEntry(key, stem, agent == "agent", gloss)
    except LexiconError as e:
        raise LexiconError(e.reason, lineno) from None


def _concord(fields: list[str], lineno: int) -> ConcordSet:
    _, cls, augment, prefix, neg_sc, pron, all_c, subj, rel, quant, enum_cop, enum_pre = fields
    try:
        return ConcordSet(parse_class(cls, lineno), _morpheme(augment), _morpheme(prefix), _opt(neg_sc),
                          _opt(pron), all_c, _opt(subj), _opt(rel), _opt(quant), _opt(enum_cop), _opt(enum_pre))
    except LexiconError as e:
        raise LexiconError(e.reason, lineno) from None


def load_lexicon(source: str | TextIO) -> Lexicon:
    """Parse a lexicon file. Raises LexiconError carrying the offending line."""
    nouns: dict[str, NounEntry] = {}
    verbs: dict[str, VerbEntry] = {}
    concords: dict[NounClass, ConcordSet] = {}
    noun_lines: dict[str, int] = {}
    for lineno, line in _read_lines(source):
        fields = line.split("\t")
        kind = fields[0]
        if kind not in _ARITY:
            raise LexiconError(f"record type must be N, V or C, got {kind!r}", lineno)
        if len(fields) != _ARITY[kind]:
            raise LexiconError(f"{kind} record needs {_ARITY[kind]} tab-separated fields, got {len(fields)}", lineno)
        if kind == "N":
            entry = _noun(fields, lineno)
            if entry.lemma in nouns:
                raise LexiconError(f"duplicate lemma {entry.lemma!r}", lineno)
            nouns[entry.lemma] = entry
            noun_lines[entry.lemma] = lineno
        elif kind == "V":
            verb = _verb(fields, lineno)
            if verb.key in verbs:
                raise LexiconError(f"duplicate verb {verb.key!r}", lineno)
            verbs[verb.key] = verb
        else:
            row = _concord(fields, lineno)
            if row.cls in concords:
                raise LexiconError(f"duplicate concord row for class {row.cls}", lineno)
            concords[row.cls] = row
    if not (nouns or verbs or concords):
        raise LexiconError("empty lexicon")
    for lemma, entry in nouns.items():
        for cls in (entry.cls, entry.plural_cls):
            if cls is not None and cls not in concords:
                raise LexiconError(f"noun {lemma!r} uses class {cls} which has no concord row", noun_lines[lemma])
    return Lexicon(nouns, verbs, concords)


def _cell(value: str | None) -> str:
    return ABSENT if value is None else value


def dump_lexicon(lex: Lexicon) -> str:
    """Serialize ``lex`` in the file format; ``load_lexicon`` reads it back unchanged."""
    out = []
    for cls in NounClass:
        row = lex.concords.get(cls)
        if row is None:
            continue
        out.append("\t".join([
            "C", cls.value, row.augment or ABSENT, row.prefix or ABSENT, _cell(row.neg_sc), _cell(row.pron),
            row.all_concord, _cell(row.subj_concord), _cell(row.rel_concord), _cell(row.quant_concord),
            _cell(row.enum_copula), _cell(row.enum_prefix),
        ]))
    for e in lex.nouns.values():
        flags = "living" if e.living else "nonliving"
        if e.person:
            flags += ",person"
        plural_cls = ABSENT if e.plural_cls is None else e.plural_cls.value
        out.append("\t".join(["N", e.lemma, e.cls.value, _cell(e.plural_lemma), plural_cls, flags, e.gloss]))
    for v in lex.verbs.values():
        out.append("\t".join(["V", v.key, v.stem, "agent" if v.agent_prefix else "noagent", v.gloss]))
    return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    text = resources.files("zuluverb").joinpath("data/default.lex").read_text(encoding="utf-8")
    return load_lexicon(text)
