"""Prepositional, copular, and verbal paraphrases for compound bracketing.

A writer can expand ``brain stem cells`` as ``cells from the brain
stem`` (keeping the first two words together, so left bracketing) or as
``stem cells from the brain`` (right bracketing).  This module
instantiates every such rewriting over a fixed inventory of
prepositions, determiners, complementizers, and copulas, counts both
families in the corpus, and votes for the larger sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .assoc import NounTriple
from .corpus import CountProvider, CountQuery
from .decisions import LEFT, RIGHT, Decision, compare
from .morphology import MorphLexicon, inflections, is_plural

NONVERBAL_PREPOSITIONS = (
    "about", "across", "after", "against", "all over", "along", "alongside",
    "amid", "amidst", "among", "around", "as", "as to", "aside", "at",
    "before", "behind", "beside", "besides", "between", "beyond", "by",
    "close to", "concerning", "considering", "down", "due to", "during",
    "except", "except for", "excluding", "following", "for", "from", "in",
    "in addition to", "in front of", "including", "inside", "instead of",
    "into", "like", "near", "of", "off", "on", "onto", "other than", "out",
    "out of", "outside", "over", "per", "regarding", "respecting",
    "similar to", "through", "throughout", "to", "toward", "towards",
    "under", "underneath", "unlike", "until", "up", "upon", "versus", "via",
    "with", "within", "without",
)

VERBAL_PREPOSITIONS = (
    "associated with", "caused by", "contained in", "derived from",
    "focusing on", "found in", "involved in", "located at", "located in",
    "made of", "performed by", "preventing", "related to", "used by",
    "used in", "used for",
)

DETERMINERS = (
    "a", "an", "the",
    "all", "each", "every", "some",
    "his", "her", "their",
    "this", "these",
)

COMPLEMENTIZERS = ("that", "which", "who")

COPULAS = ("are", "is", "was", "were")

SINGULAR_COPULAS = frozenset({"is", "was"})
PLURAL_COPULAS = frozenset({"are", "were"})


@dataclass(frozen=True)
class ParaphraseInventory:
    """Closed word lists that instantiate the paraphrase patterns."""

    prepositions: tuple[str, ...] = NONVERBAL_PREPOSITIONS + VERBAL_PREPOSITIONS
    determiners: tuple[str, ...] = DETERMINERS
    complementizers: tuple[str, ...] = COMPLEMENTIZERS
    copulas: tuple[str, ...] = COPULAS

    @classmethod
    def load(cls, path: str | Path) -> "ParaphraseInventory":
        """Read a sectioned inventory file.

        Sections are headed ``[prep]``, ``[verbal-prep]``, ``[det]``,
        ``[compl]``, ``[be]``; one item per line.
        """
        sections: dict[str, list[str]] = {}
        current: list[str] | None = None
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = sections.setdefault(line[1:-1], [])
            elif current is not None:
                current.append(line.lower())
            else:
                raise ValueError(f"inventory item {line!r} outside any section")
        preps = tuple(sections.get("prep", ())) + tuple(sections.get("verbal-prep", ()))
        return cls(
            prepositions=preps or NONVERBAL_PREPOSITIONS + VERBAL_PREPOSITIONS,
            determiners=tuple(sections.get("det", DETERMINERS)),
            complementizers=tuple(sections.get("compl", COMPLEMENTIZERS)),
            copulas=tuple(sections.get("be", COPULAS)),
        )


def _copula_agrees(copula: str, head: str, lex: MorphLexicon) -> bool:
    if copula in SINGULAR_COPULAS:
        return not is_plural(lex, head)
    if copula in PLURAL_COPULAS:
        return is_plural(lex, head)
    return True


def generate_bracketing_queries(
    triple: NounTriple,
    inv: ParaphraseInventory,
    lex: MorphLexicon,
) -> tuple[list[tuple[str, ...]], list[tuple[str, ...]]]:
    """All left- and right-predicting paraphrases of a triple, as token tuples.

    Left patterns keep ``w1 w2`` together (``cells from the bone
    marrow``); right patterns keep ``w2 w3`` (``marrow cells of the
    bone``).  Multiword prepositions are split into tokens; the empty
    determiner realizes the optional slot; the copula must agree in
    number with the clause head (the inflected ``w3``).
    """
    w1, w2, _w3 = triple.words()
    i1 = sorted(inflections(lex, triple.w1))
    i2 = sorted(inflections(lex, triple.w2))
    i3 = sorted(inflections(lex, triple.w3))
    dets: list[tuple[str, ...]] = [()] + [tuple(d.split()) for d in inv.determiners]
    preps = [tuple(p.split()) for p in inv.prepositions]

    def build(side: str) -> list[tuple[str, ...]]:
        queries: list[tuple[str, ...]] = []
        seen: set[tuple[str, ...]] = set()

        def emit(tokens: tuple[str, ...]) -> None:
            if tokens not in seen:
                seen.add(tokens)
                queries.append(tokens)

        for t3 in i3:
            if side == "left":
                head = (t3,)
                tails = [(w1, t2) for t2 in i2]
            else:
                head = (w2, t3)
                tails = [(t1,) for t1 in i1]
            for tail in tails:
                for prep in preps:
                    for det in dets:
                        emit(head + prep + det + tail)
                for compl in inv.complementizers:
                    for cop in inv.copulas:
                        if not _copula_agrees(cop, t3, lex):
                            continue
                        for det in dets:
                            emit(head + (compl, cop) + det + tail)
                        for prep in preps:
                            for det in dets:
                                emit(head + (compl, cop) + prep + det + tail)
        return queries

    return build("left"), build("right")


@dataclass
class ParaphraseTally:
    """Summed corpus hits of the two paraphrase families."""

    left_hits: int = 0
    right_hits: int = 0
    matched: dict[str, int] = field(default_factory=dict)


def paraphrase_decision(
    provider: CountProvider,
    triple: NounTriple,
    inv: ParaphraseInventory,
    lex: MorphLexicon,
) -> Decision:
    """Compare total corpus hits of left- vs right-predicting paraphrases."""
    left_queries, right_queries = generate_bracketing_queries(triple, inv, lex)
    left = right = 0
    for q in left_queries:
        left += provider.count(CountQuery.of(*q))
    for q in right_queries:
        right += provider.count(CountQuery.of(*q))
    return compare(left, right, LEFT, RIGHT, "paraphrases")
