"""isiZulu verbalization of description-logic axioms."""
from .axiom import And, DisjointWith, Named, Not, Or, Phrase, Some, SubClassOf, format_axiom, parse_axioms
from .errors import VerbalizerError
from .lexicon import Lexicon, NounClass, default_lexicon, load_lexicon
from .renderer import PreferenceProfile, Sentence, default_profile, load_profile, render, variants

__all__ = [
    "And", "DisjointWith", "Named", "Not", "Or", "Phrase", "Some", "SubClassOf", "format_axiom", "parse_axioms",
    "VerbalizerError", "Lexicon", "NounClass", "default_lexicon", "load_lexicon",
    "PreferenceProfile", "Sentence", "default_profile", "load_profile", "render", "variants",
]
