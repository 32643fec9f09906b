"""Sentence assembly: one pattern per axiom shape, variants chosen by a profile.

Renderers never edit strings themselves. Each word of a sentence is the output
of a chain of lexicon lookups and morphology operations, recorded as ``Step``s,
so a sentence can always be re-derived from its trace.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from . import morphology as morph
from .axiom import And, Axiom, ClassExpr, DisjointWith, Named, Not, Or, Phrase, Some, SubClassOf, format_axiom, format_expr
from .errors import ProfileError, UnsupportedAxiom, VerbalizerError
from .lexicon import Lexicon, NounClass, NounEntry, VerbEntry


class SubsumptionNumber(str, Enum):
    SINGULAR = "singular"        # ikhambi ngumuthi
    PLURAL = "plural"            # amakhambi yimithi
    ALL_PLURAL = "all_plural"    # wonke amakhambi ngumuthi


class NegationNumber(str, Enum):
    SINGULAR_IMPERSONAL = "singular_impersonal"      # indebe akuyona ingilazi
    SINGULAR_CONCORDIAL = "singular_concordial"      # ihebhivo alilona ikhanivo
    PLURAL_CONCORDIAL = "plural_concordial"          # amahebhivo awalona ikhanivo
    ALL_PLURAL_CONCORDIAL = "all_plural_concordial"  # zonke izindebe aziyona ingilazi


class ExistStyle(str, Enum):
    GENERIC_PLURAL = "generic_plural"
    DWA = "dwa"
    NOMA_PHI = "noma_phi"
    THIZE = "thize"


class Number(str, Enum):
    SINGULAR = "singular"
    PLURAL = "plural"


class AndStyle(str, Enum):
    ENUMERATION_NA = "enumeration_na"
    KANYE = "kanye"
    FUTHI = "futhi"


class OrStyle(str, Enum):
    OKANYE = "okanye"
    NOMA = "noma"


@dataclass(frozen=True)
class PreferenceProfile:
    """Every variant choice the grammar leaves open.

    There are no hard-coded defaults; ``default_profile()`` reads them from
    the shipped ``data/default.profile``.
    """
    subsumption_number: SubsumptionNumber
    negation_number: NegationNumber
    exist_style: ExistStyle
    exist_number: Number
    and_style: AndStyle
    or_style: OrStyle
    capitalize: bool = False

    def replace(self, **changes) -> "PreferenceProfile":
        return dataclasses.replace(self, **changes)


_PROFILE_FIELDS = {f.name: f for f in dataclasses.fields(PreferenceProfile)}
_PROFILE_TYPES = {
    "subsumption_number": SubsumptionNumber,
    "negation_number": NegationNumber,
    "exist_style": ExistStyle,
    "exist_number": Number,
    "and_style": AndStyle,
    "or_style": OrStyle,
}


def _profile_value(key: str, value: str, where: str):
    if key not in _PROFILE_FIELDS:
        raise ProfileError(f"{where}unknown profile key {key!r} (known: {', '.join(_PROFILE_FIELDS)})")
    if key == "capitalize":
        if value.lower() in ("true", "yes", "1"):
            return True
        if value.lower() in ("false", "no", "0"):
            return False
        raise ProfileError(f"{where}capitalize must be true or false, got {value!r}")
    enum = _PROFILE_TYPES[key]
    try:
        return enum(value)
    except ValueError:
        allowed = ", ".join(m.value for m in enum)
        raise ProfileError(f"{where}bad value {value!r} for {key} (allowed: {allowed})") from None


def _split_assignment(item: str, where: str) -> tuple[str, str]:
    key, sep, value = item.partition("=")
    if not sep:
        raise ProfileError(f"{where}expected key=value, got {item!r}")
    return key.strip(), value.strip()


def apply_overrides(profile: PreferenceProfile, assignments: Iterable[str], source: str = "") -> PreferenceProfile:
    """Apply ``key=value`` strings in order; later assignments win."""
    changes = {}
    for i, item in enumerate(assignments, 1):
        where = f"{source}:{i}: " if source else ""
        key, value = _split_assignment(item, where)
        changes[key] = _profile_value(key, value, where)
    return profile.replace(**changes)


def load_profile(text: str, base: PreferenceProfile | None = None, source: str = "profile") -> PreferenceProfile:
    """Read a ``key=value`` profile file; keys it omits keep their value from ``base``."""
    base = default_profile() if base is None else base
    changes = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"{source}:{lineno}: "
        key, value = _split_assignment(line, where)
        changes[key] = _profile_value(key, value, where)
    return base.replace(**changes)


@lru_cache(maxsize=None)
def default_profile() -> PreferenceProfile:
    text = resources.files("zuluverb").joinpath("data/default.profile").read_text(encoding="utf-8")
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            key, value = _split_assignment(line, f"default.profile:{lineno}: ")
            values[key] = _profile_value(key, value, f"default.profile:{lineno}: ")
    missing = set(_PROFILE_FIELDS) - set(values) - {"capitalize"}
    if missing:
        raise ProfileError(f"default.profile lacks {', '.join(sorted(missing))}")
    return PreferenceProfile(**values)


# ---------------------------------------------------------------------------
# sentences and traces


@dataclass(frozen=True)
class Step:
    op: str
    args: tuple[str, ...]
    output: str

    def __str__(self) -> str:
        return f"{self.op}({', '.join(self.args)}) -> {self.output}"


@dataclass(frozen=True)
class Word:
    role: str
    steps: tuple[Step, ...]

    @property
    def text(self) -> str:
        return self.steps[-1].output


@dataclass(frozen=True)
class Sentence:
    text: str
    pattern: str
    words: tuple[Word, ...]
    capitalized: bool = False

    @property
    def trace(self) -> list[tuple[str, list[str]]]:
        return [(self.pattern, [str(s) for w in self.words for s in w.steps])]

    def trace_lines(self) -> list[str]:
        lines = [f"pattern {self.pattern}"]
        for w in self.words:
            lines.append(f"{w.role}: " + "; ".join(str(s) for s in w.steps))
        if self.capitalized:
            lines.append("capitalize sentence-initial letter")
        return lines

    def __str__(self) -> str:
        return self.text


def _sentence(pattern: str, words: Sequence[Word], capitalize: bool) -> Sentence:
    text = " ".join(w.text for w in words)
    if capitalize:
        text = text[:1].upper() + text[1:]
    return Sentence(text, pattern, tuple(words), capitalize)


class _Words:
    """Builders for the steps that make up one word."""

    def __init__(self, lex: Lexicon):
        self.lex = lex

    @staticmethod
    def lemma(entry: NounEntry) -> Step:
        return Step("lemma", (entry.lemma,), entry.lemma)

    def plural(self, entry: NounEntry) -> Step:
        return Step("pluralize", (entry.lemma,), self.lex.pluralize(entry)[0])

    def all_concord(self, cls: NounClass) -> Step:
        return Step("all_concord", (str(cls),), morph.all_concord_word(self.lex.concords_for(cls)))

    @staticmethod
    def copulative(prev: Step) -> Step:
        return Step("copulative", (prev.output,), morph.copulative(prev.output))

    @staticmethod
    def coalesce_na(prev: Step) -> Step:
        return Step("coalesce_na", (prev.output,), morph.coalesce_na(prev.output))

    @staticmethod
    def thize(prev: Step) -> Step:
        return Step("clitic_thize", (prev.output,), morph.clitic_thize(prev.output))

    def negative_copula(self, subj: NounClass, obj: NounClass, impersonal: bool) -> Step:
        out = morph.negative_copula(self.lex.concords_for(subj), self.lex.concords_for(obj), impersonal)
        return Step("negative_copula", (str(subj), str(obj), "impersonal" if impersonal else "concordial"), out)

    def conjugate(self, cls: NounClass, verb: VerbEntry) -> Step:
        return Step("conjugate", (str(cls), verb.key), morph.conjugate(self.lex.concords_for(cls), verb))

    def quant_dwa(self, cls: NounClass) -> Step:
        return Step("quant_dwa", (str(cls),), morph.quant_dwa(self.lex.concords_for(cls)))

    def enum_phi(self, cls: NounClass) -> Step:
        return Step("enum_phi", (str(cls),), morph.enum_phi(self.lex.concords_for(cls)))

    @staticmethod
    def connective(word: str) -> Step:
        return Step("connective", (word,), word)


def _noun_form(w: _Words, entry: NounEntry, plural: bool) -> tuple[Step, NounClass]:
    if plural:
        return w.plural(entry), entry.plural_cls
    return w.lemma(entry), entry.cls


def render_subsumption(sub: NounEntry, sup: NounEntry, variant: SubsumptionNumber | str, lex: Lexicon,
                       capitalize: bool = False) -> Sentence:
    variant = SubsumptionNumber(variant)
    w = _Words(lex)
    if variant is SubsumptionNumber.SINGULAR:
        words = [Word("subject", (w.lemma(sub),)),
                 Word("predicate", (sup_step := w.lemma(sup), w.copulative(sup_step)))]
    elif variant is SubsumptionNumber.PLURAL:
        words = [Word("subject", (w.plural(sub),)),
                 Word("predicate", (sup_step := w.plural(sup), w.copulative(sup_step)))]
    else:
        subj, cls = _noun_form(w, sub, plural=True)
        # the superclass stays singular here ("wonke amakhambi ngumuthi")
        words = [Word("quantifier", (w.all_concord(cls),)),
                 Word("subject", (subj,)),
                 Word("predicate", (sup_step := w.lemma(sup), w.copulative(sup_step)))]
    return _sentence(f"subsumption.{variant.value}", words, capitalize)


def render_negated_subsumption(sub: NounEntry, sup: NounEntry, variant: NegationNumber | str, lex: Lexicon,
                               capitalize: bool = False) -> Sentence:
    """Negated subsumption / disjointness. No copulative prefix; superclass singular."""
    variant = NegationNumber(variant)
    w = _Words(lex)
    plural = variant in (NegationNumber.PLURAL_CONCORDIAL, NegationNumber.ALL_PLURAL_CONCORDIAL)
    subj, cls = _noun_form(w, sub, plural)
    impersonal = variant is NegationNumber.SINGULAR_IMPERSONAL
    words = [Word("subject", (subj,)),
             Word("negation", (w.negative_copula(cls, sup.cls, impersonal),)),
             Word("object", (w.lemma(sup),))]
    if variant is NegationNumber.ALL_PLURAL_CONCORDIAL:
        words.insert(0, Word("quantifier", (w.all_concord(cls),)))
    return _sentence(f"negation.{variant.value}", words, capitalize)


def _check_arity(parts: Sequence, what: str) -> None:
    if len(parts) < 2:
        raise VerbalizerError(f"{what} needs at least 2 parts, got {len(parts)}")


def render_conjunction(parts: Sequence[NounEntry], style: AndStyle | str, lex: Lexicon,
                       capitalize: bool = False) -> Sentence:
    style = AndStyle(style)
    _check_arity(parts, "conjunction")
    w = _Words(lex)
    words = [Word("conjunct", (w.lemma(parts[0]),))]
    for entry in parts[1:]:
        if style is AndStyle.ENUMERATION_NA:
            first = w.lemma(entry)
            words.append(Word("conjunct", (first, w.coalesce_na(first))))
        else:
            words.append(Word("connective", (w.connective(style.value),)))
            words.append(Word("conjunct", (w.lemma(entry),)))
    return _sentence(f"conjunction.{style.value}", words, capitalize)


def render_disjunction(parts: Sequence[NounEntry], style: OrStyle | str, capitalize: bool = False) -> Sentence:
    style = OrStyle(style)
    _check_arity(parts, "disjunction")
    words = [Word("disjunct", (_Words.lemma(parts[0]),))]
    for entry in parts[1:]:
        words.append(Word("connective", (_Words.connective(style.value),)))
        words.append(Word("disjunct", (_Words.lemma(entry),)))
    return _sentence(f"disjunction.{style.value}", words, capitalize)


def render_existential(subj: NounEntry, prop: VerbEntry, obj: NounEntry, style: ExistStyle | str,
                       number: Number | str, lex: Lexicon, capitalize: bool = False) -> Sentence:
    """Subject is-related-to-some Object, e.g. giraffes eat twigs.

    ``number`` picks the subject's number for dwa and noma_phi; generic_plural
    is always plural and thize always singular. The object is singular in
    every quantified style.
    """
    style, number = ExistStyle(style), Number(number)
    if style is ExistStyle.THIZE:
        number = Number.SINGULAR
    elif style is ExistStyle.GENERIC_PLURAL:
        number = Number.PLURAL
    w = _Words(lex)
    subj_step, cls = _noun_form(w, subj, number is Number.PLURAL)
    verb = Word("verb", (w.conjugate(cls, prop),))

    obj_steps = [w.plural(obj) if style is ExistStyle.GENERIC_PLURAL else w.lemma(obj)]
    if prop.agent_prefix:
        obj_steps.append(w.copulative(obj_steps[-1]))
    if style is ExistStyle.THIZE:
        obj_steps.append(w.thize(obj_steps[-1]))
    obj_word = Word("object", tuple(obj_steps))

    if style is ExistStyle.GENERIC_PLURAL:
        words = [Word("subject", (subj_step,)), verb, obj_word]
        return _sentence("existential.generic_plural", words, capitalize)
    words = [Word("quantifier", (w.all_concord(cls),)), Word("subject", (subj_step,)), verb]
    if style is ExistStyle.DWA:
        words += [obj_word, Word("quantity", (w.quant_dwa(obj.cls),))]
    elif style is ExistStyle.NOMA_PHI:
        words += [Word("quantity", (w.enum_phi(obj.cls),)), obj_word]
    else:
        words.append(obj_word)
    return _sentence(f"existential.{style.value}.{number.value}", words, capitalize)


# ---------------------------------------------------------------------------
# dispatch over axiom shapes


def _named(e: ClassExpr, ax: Axiom) -> str:
    if not isinstance(e, Named):
        raise UnsupportedAxiom(format_expr(e), f"unsupported axiom shape in {format_axiom(ax)}")
    return e.lemma


def _shape(ax: Axiom):
    """Classify ``ax`` into (kind, payload) or raise UnsupportedAxiom naming the offending node."""
    if isinstance(ax, DisjointWith):
        return "negation", (_named(ax.a, ax), _named(ax.b, ax))
    if isinstance(ax, SubClassOf):
        sub = _named(ax.sub, ax)
        sup = ax.sup
        if isinstance(sup, Named):
            return "subsumption", (sub, sup.lemma)
        if isinstance(sup, Not):
            return "negation", (sub, _named(sup.inner, ax))
        if isinstance(sup, Some):
            return "existential", (sub, sup.property, _named(sup.filler, ax))
        raise UnsupportedAxiom(format_expr(sup), f"unsupported axiom shape in {format_axiom(ax)}")
    if isinstance(ax, Phrase):
        kind = "conjunction" if isinstance(ax.expr, And) else "disjunction"
        return kind, tuple(_named(p, ax) for p in ax.expr.parts)
    raise UnsupportedAxiom(repr(ax))


def render(ax: Axiom, lex: Lexicon, prof: PreferenceProfile | None = None) -> Sentence:
    prof = default_profile() if prof is None else prof
    kind, args = _shape(ax)
    cap = prof.capitalize
    if kind == "subsumption":
        sub, sup = (lex.lookup_noun(a) for a in args)
        return render_subsumption(sub, sup, prof.subsumption_number, lex, cap)
    if kind == "negation":
        sub, sup = (lex.lookup_noun(a) for a in args)
        return render_negated_subsumption(sub, sup, prof.negation_number, lex, cap)
    if kind == "existential":
        subj, prop, obj = lex.lookup_noun(args[0]), lex.lookup_verb(args[1]), lex.lookup_noun(args[2])
        return render_existential(subj, prop, obj, prof.exist_style, prof.exist_number, lex, cap)
    parts = [lex.lookup_noun(a) for a in args]
    if kind == "conjunction":
        return render_conjunction(parts, prof.and_style, lex, cap)
    return render_disjunction(parts, prof.or_style, cap)


EXISTENTIAL_GRID = (
    (ExistStyle.GENERIC_PLURAL, Number.PLURAL),
    (ExistStyle.DWA, Number.SINGULAR),
    (ExistStyle.DWA, Number.PLURAL),
    (ExistStyle.NOMA_PHI, Number.SINGULAR),
    (ExistStyle.NOMA_PHI, Number.PLURAL),
    (ExistStyle.THIZE, Number.SINGULAR),
)


def variants(ax: Axiom, lex: Lexicon, capitalize: bool = False) -> list[tuple[str, Sentence]]:
    """Every applicable (variant label, sentence) pair for ``ax``.

    Variants the lexicon cannot support (no plural, unattested concord) are
    left out; unknown lemmas and unsupported shapes still raise.
    """
    kind, args = _shape(ax)
    if kind == "existential":
        subj, prop, obj = lex.lookup_noun(args[0]), lex.lookup_verb(args[1]), lex.lookup_noun(args[2])
        attempts = [(f"{s.value}/{n.value}" if s in (ExistStyle.DWA, ExistStyle.NOMA_PHI) else s.value,
                     lambda s=s, n=n: render_existential(subj, prop, obj, s, n, lex, capitalize))
                    for s, n in EXISTENTIAL_GRID]
    elif kind in ("subsumption", "negation"):
        sub, sup = (lex.lookup_noun(a) for a in args)
        fn, options = ((render_subsumption, SubsumptionNumber) if kind == "subsumption"
                       else (render_negated_subsumption, NegationNumber))
        attempts = [(v.value, lambda v=v: fn(sub, sup, v, lex, capitalize)) for v in options]
    else:
        parts = [lex.lookup_noun(a) for a in args]
        if kind == "conjunction":
            attempts = [(s.value, lambda s=s: render_conjunction(parts, s, lex, capitalize)) for s in AndStyle]
        else:
            attempts = [(s.value, lambda s=s: render_disjunction(parts, s, capitalize)) for s in OrStyle]
    out = []
    for label, attempt in attempts:
        try:
            out.append((label, attempt()))
        except VerbalizerError:
            continue
    return out
