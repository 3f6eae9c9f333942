"""A tiny lexicon tagger for producing test corpora.

Real deployments feed the feature extractors pre-tagged corpora; this
tagger exists so the test suite can build them hermetically.  It tags
closed classes from fixed lists, verbs/adjectives/adverbs from caller
supplied vocabularies, and defaults everything else to noun.

Tagset: N noun, V verb, J adjective, R adverb, P preposition,
D determiner, C coordinating conjunction, W complementizer, M modal,
A auxiliary (be/have/do forms), PRO pronoun, S subordinator, O other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .morphology import MorphLexicon, lemma

PREPOSITIONS = frozenset(
    """of in on at by for with from to into onto about over under between
    among through during against across behind beyond near toward towards
    without within along around off up down out upon per via""".split()
)

DETERMINERS = frozenset(
    """a an the this that these those all each every some any no his her
    its my your our their""".split()
)

COORDINATORS = frozenset({"and", "or", "but", "nor"})

COMPLEMENTIZERS = frozenset({"that", "which", "who", "whom", "whose"})

SUBORDINATORS = frozenset(
    """because although though while when whenever if unless since until
    after before whereas""".split()
)

MODALS = frozenset(
    "can could may might must shall should will would".split()
)

AUXILIARIES = frozenset(
    """be is are was were am been being have has had having do does did""".split()
)

PRONOUNS = frozenset(
    """i you he she it we they me him her us them himself herself itself
    themselves myself ourselves yourself""".split()
)


@dataclass
class TinyTagger:
    """Closed-class lists plus caller vocabularies, noun default."""

    verbs: frozenset[str] = frozenset()
    adjectives: frozenset[str] = frozenset()
    adverbs: frozenset[str] = frozenset()
    lex: MorphLexicon = field(default_factory=MorphLexicon)

    def tag_word(self, word: str, prev: str | None = None) -> str:
        w = word.lower()
        if w in MODALS:
            return "M"
        if w in AUXILIARIES:
            return "A"
        # "that" is a complementizer when clause-initial after a noun;
        # treat it as W except when used as a determiner before a noun.
        if w in COMPLEMENTIZERS and w not in ("that",):
            return "W"
        if w == "that":
            return "W"
        if w in COORDINATORS:
            return "C"
        if w in SUBORDINATORS:
            return "S"
        if w in PRONOUNS:
            return "PRO"
        if w in DETERMINERS:
            return "D"
        if w in PREPOSITIONS:
            return "P"
        base = lemma(self.lex, w)
        if w in self.verbs or base in self.verbs:
            return "V"
        if w in self.adjectives or base in self.adjectives:
            return "J"
        if w in self.adverbs or w.endswith("ly"):
            return "R"
        return "N"

    def tag_sentence(self, sentence: str) -> list[tuple[str, str]]:
        out = []
        prev: str | None = None
        for word in sentence.split():
            tag = self.tag_word(word, prev)
            out.append((word, tag))
            prev = tag
        return out

    def tag_line(self, sentence: str) -> str:
        """Render one sentence in the corpus ``word_TAG`` format."""
        return " ".join(f"{w}_{t}" for w, t in self.tag_sentence(sentence))


def write_tagged_corpus(
    sentences: list[str], tagger: TinyTagger, path: str | Path
) -> None:
    """Tag plain sentences and write a tagged corpus file."""
    lines = [tagger.tag_line(s) for s in sentences]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
