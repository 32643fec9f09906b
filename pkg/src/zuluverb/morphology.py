"""Word-building rules that verbalization patterns are assembled from.

All functions are pure string composition over lexicon data. Stored concords
carry hyphens as join markers (``eli-``, ``-lo-``); they are stripped here.
"""
from __future__ import annotations

from .errors import MorphologyError
from .lexicon import ConcordSet, VerbEntry

NOUN_VOWELS = "aiou"


def _strip(morpheme: str) -> str:
    return morpheme.strip("-")


def _check_noun(noun: str, op: str) -> None:
    if not noun:
        raise MorphologyError(f"{op}: empty word")
    if noun[0] not in NOUN_VOWELS:
        raise MorphologyError(f"{op}: {noun!r} does not begin with a noun augment vowel (a, i, o, u)")


def copulative(noun: str) -> str:
    """Prefix the copulative: ``y`` before i-initial nouns, ``ng`` before a/o/u."""
    _check_noun(noun, "copulative")
    return ("y" if noun[0] == "i" else "ng") + noun


# a+i -> e, a+u -> o, a+a -> a; a+o -> o is not attested but follows a+u
_NA_COALESCENCE = {"i": "ne", "u": "no", "a": "na", "o": "no"}


def coalesce_na(noun: str) -> str:
    """Attach the enumerative 'and' (na) to ``noun``, fusing it with the augment."""
    _check_noun(noun, "coalesce_na")
    return _NA_COALESCENCE[noun[0]] + noun[1:]


def all_concord_word(cs: ConcordSet) -> str:
    return cs.all_concord


def negative_copula(subj: ConcordSet, obj: ConcordSet, impersonal: bool = False) -> str:
    """NEG SC of the subject's class (or impersonal aku-) + PRON of the object's class."""
    neg = "aku" if impersonal else _strip(subj.require("neg_sc"))
    return neg + obj.require("pron")


def quant_dwa(cs: ConcordSet) -> str:
    """'at least one': relative concord + quantitative concord + -dwa."""
    return _strip(cs.require("rel_concord")) + _strip(cs.require("quant_concord")) + "dwa"


def enum_phi(cs: ConcordSet) -> str:
    """'some': noma + copulative + enumerative prefix + -phi."""
    return "noma " + _strip(cs.require("enum_copula")) + _strip(cs.require("enum_prefix")) + "phi"


def clitic_thize(noun: str) -> str:
    if not noun:
        raise MorphologyError("clitic_thize: empty word")
    return noun + "thize"


def conjugate(cs: ConcordSet, verb: VerbEntry) -> str:
    """Present-tense form: subject concord of the subject's class + verb stem."""
    return _strip(cs.require("subj_concord")) + _strip(verb.stem)
