#!/usr/bin/env python3
"""Regenerate the answer options of the verbalization preference survey.

Each question pits variants of one axiom against each other; this prints the
options the engine produces for them, sentence-initial capitalized as they
were shown to respondents. With --check, every option is compared with the
sentence as it was printed in the questionnaire. Only questions 1, 4 and 7
have published wording; the rest use the closest attested axiom as a stand-in
(question 9 offered a plural -thize option, but -thize is rendered singular).

    python scripts/survey_stimuli.py [--check] [--lexicon PATH]
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from zuluverb import default_lexicon, load_lexicon, parse_axioms
from zuluverb.renderer import variants

# question -> (axiom, [(variant label, sentence as printed or None)])
QUESTIONS = {
    "1 isa": ("sub(ikhambi, umuthi)", [
        ("singular", "Ikhambi ngumuthi"),
        ("plural", "Amakhambi yimithi"),
        ("all_plural", "Wonke amakhambi ngumuthi"),
    ]),
    "2 isa": ("sub(indlulamithi, isilwane)", [
        ("singular", None), ("plural", None), ("all_plural", None),
    ]),
    "3 disj.": ("disjoint(indebe, ingilazi)", [
        ("singular_impersonal", None), ("all_plural_concordial", None),
    ]),
    "4 disj.": ("disjoint(ihebhivo, ikhanivo)", [
        ("singular_concordial", "Ihebhivo alilona ikhanivo"),
        ("plural_concordial", "Amahebhivo awalona ikhanivo"),
    ]),
    "5 exists": ("sub(indlulamithi, some(eats, ihlamvana))", [
        ("dwa/plural", None), ("noma_phi/plural", None),
    ]),
    "6 exists": ("sub(indlulamithi, some(eats, ihlamvana))", [
        ("noma_phi/singular", None), ("noma_phi/plural", None),
    ]),
    "7 exists": ("sub(isifundo, some(taughtBy, uSolwazi))", [
        ("dwa/singular", "Sonke isifundo sifundiswa nguSolwazi oyedwa"),
        ("dwa/plural", "Zonke izifundo zifundiswa nguSolwazi oyedwa"),
    ]),
    "8 exists": ("sub(indlulamithi, some(eats, ihlamvana))", [
        ("dwa/singular", None), ("noma_phi/singular", None), ("noma_phi/plural", None),
    ]),
    "9 exists": ("sub(indlulamithi, some(eats, ihlamvana))", [
        ("noma_phi/plural", None), ("thize", None),
    ]),
    "10 and": ("and(ibhotela, ubisi)", [
        ("kanye", None), ("futhi", None),
    ]),
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lexicon", type=Path)
    ap.add_argument("--check", action="store_true", help="compare against the printed sentences")
    args = ap.parse_args(argv)
    lex = load_lexicon(args.lexicon.read_text(encoding="utf-8")) if args.lexicon else default_lexicon()

    mismatches = 0
    for question, (axiom, options) in QUESTIONS.items():
        rendered = dict(variants(parse_axioms(axiom)[0], lex, capitalize=True))
        print(f"Question {question}: {axiom}")
        for letter, (label, printed) in zip("abcdefg", options):
            sentence = rendered[label].text if label in rendered else "<not available>"
            mark = ""
            if args.check and printed is not None:
                ok = sentence == printed
                mismatches += not ok
                mark = "  [ok]" if ok else f"  [MISMATCH: printed {printed!r}]"
            print(f"  {letter}) {sentence:<55} {label}{mark}")
    if args.check:
        print(f"\n{mismatches} mismatch(es)")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
