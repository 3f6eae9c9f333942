"""Coordination scope: is ``n1 c n2 h`` one NP or two?

``bar and pie graph`` coordinates the modifiers bar/pie under the
shared head graph (noun coordination, with the first head elided);
``president and chief executive`` coordinates two full NPs.  The
voters compare head collocations, look for disambiguating rewrites,
apply determiner and same-word heuristics, check number agreement,
and scan raw snippets for separating punctuation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import CountProvider, CountQuery
from .decisions import (
    ABSTAIN,
    NOUN_COORD,
    NP_COORD,
    Decision,
    abstain,
    compare,
    majority_vote,
)
from .morphology import MorphLexicon, inflections, is_plural

CONJUNCTIONS = ("and", "or")

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class CoordQuad:
    """A coordination instance with optional determiner context flags."""

    n1: str
    c: str
    n2: str
    h: str
    n1_determined: str = UNKNOWN
    n2_determined: str = UNKNOWN

    def __post_init__(self) -> None:
        if self.c.lower() not in CONJUNCTIONS:
            raise ValueError("conjunction must be 'and' or 'or'")
        for w in (self.n1, self.n2, self.h):
            if not w:
                raise ValueError("quad fields must be nonempty")
        object.__setattr__(self, "c", self.c.lower())


def _opposite(label: str) -> str:
    return NP_COORD if label == NOUN_COORD else NOUN_COORD


@dataclass(frozen=True)
class CoordMappings:
    """Label assignment for the two n-gram comparisons.

    The comparisons are fixed; which side indicates which reading is a
    modeling choice, so both mappings are configurable.
    """

    model_i_n1h_label: str = NOUN_COORD
    model_ii_trigram_label: str = NOUN_COORD


def coord_ngram_decision(
    provider: CountProvider,
    lex: MorphLexicon,
    quad: CoordQuad,
    model: str,
    mappings: CoordMappings = CoordMappings(),
) -> Decision:
    """Collocation models (i) #(n1,h) vs #(n2,h) and (ii) #(n1,h) vs #(n1,c,n2).

    Conjunction counts pool both ``and`` and ``or``.
    """
    if model not in ("i", "ii"):
        raise ValueError("model must be 'i' or 'ii'")
    ih = inflections(lex, quad.h)
    n1h = provider.count(CountQuery.of(quad.n1, ih))
    name = f"ngram-{model}"
    if model == "i":
        n2h = provider.count(CountQuery.of(quad.n2, ih))
        label = mappings.model_i_n1h_label
        return compare(n1h, n2h, label, _opposite(label), name)
    i2 = inflections(lex, quad.n2)
    trigram = provider.count(CountQuery.of(quad.n1, CONJUNCTIONS, i2))
    label = mappings.model_ii_trigram_label
    return compare(trigram, n1h, label, _opposite(label), name)


def coord_paraphrase_decision(
    provider: CountProvider,
    lex: MorphLexicon,
    quad: CoordQuad,
    pattern: int,
    threshold: int = 1,
) -> Decision:
    """Rewriting patterns 1-4; enough matches confirm, too few invert.

    (1) ``n2 c n1 h`` noun-coord; (2) ``n2 h c n1`` NP-coord; (3)
    ``n1 h c n2 h`` noun-coord; (4) ``n2 h c n1 h`` noun-coord.  A
    count below the threshold yields the opposite label.
    """
    if pattern not in (1, 2, 3, 4):
        raise ValueError("pattern must be 1..4")
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    ih = inflections(lex, quad.h)
    c = quad.c
    if pattern == 1:
        query = CountQuery.of(quad.n2, c, quad.n1, ih)
        label = NOUN_COORD
    elif pattern == 2:
        query = CountQuery.of(quad.n2, ih, c, quad.n1)
        label = NP_COORD
    elif pattern == 3:
        query = CountQuery.of(quad.n1, ih, c, quad.n2, ih)
        label = NOUN_COORD
    else:
        query = CountQuery.of(quad.n2, ih, c, quad.n1, ih)
        label = NOUN_COORD
    count = provider.count(query)
    name = f"coord-paraphrase-{pattern}"
    if count >= threshold:
        return Decision(label, count, 0, name)
    return Decision(_opposite(label), 0, count, name, note="below threshold")


def coord_heuristic(quad: CoordQuad, kind: str) -> Decision:
    """Same-word and determiner-context heuristics."""
    if kind == "h1":
        if quad.n1.lower() == quad.n2.lower():
            return Decision(NP_COORD, model=kind)
        return abstain(kind)
    if kind not in ("h4", "h5", "h6"):
        raise ValueError(f"unknown heuristic {kind!r}")
    d1, d2 = quad.n1_determined, quad.n2_determined
    if UNKNOWN in (d1, d2):
        return abstain(kind, "determiner context unknown")
    if kind == "h4" and d1 == YES and d2 == YES:
        return Decision(NP_COORD, model=kind)
    if kind == "h5" and quad.c == "or" and d1 == YES and d2 == NO:
        return Decision(NOUN_COORD, model=kind)
    if kind == "h6" and d1 == NO and d2 == YES:
        return Decision(NP_COORD, model=kind)
    return abstain(kind)


def number_agreement_decision(quad: CoordQuad, lex: MorphLexicon) -> Decision:
    """Agreement in grammatical number between n1, n2, and the head.

    If n1 and n2 agree but differ from the head, the head cannot be
    shared directly with n1's number, so the modifiers coordinate; if
    n1 disagrees with n2 but matches the head, two NPs coordinate.
    """
    p1 = is_plural(lex, quad.n1)
    p2 = is_plural(lex, quad.n2)
    ph = is_plural(lex, quad.h)
    if p1 == p2 and p1 != ph:
        return Decision(NOUN_COORD, model="number-agreement")
    if p1 != p2 and p1 == ph:
        return Decision(NP_COORD, model="number-agreement")
    return abstain("number-agreement")


def coord_surface_vote(
    snippets: list[str], quad: CoordQuad, lex: MorphLexicon
) -> Decision:
    """Separating punctuation and brackets in raw text.

    Most separators between n2 and the head, and a dash suspending n1,
    indicate noun coordination; separators isolating n1 indicate NP
    coordination.
    """

    def alt(word: str) -> str:
        forms = sorted(inflections(lex, word), key=len, reverse=True)
        return "(?:" + "|".join(re.escape(f) for f in forms) + ")"

    n1, n2, h = alt(quad.n1), alt(quad.n2), alt(quad.h)
    c = re.escape(quad.c)
    flags = re.IGNORECASE
    sep = r"[,:;.!?/\\\]\[{}\"']"
    noun_votes = np_votes = 0
    for text in snippets:
        noun_votes += len(re.findall(rf"\b{n1}-\s+{c}\s+{n2}\s+{h}\b", text, flags))
        noun_votes += len(re.findall(rf"\(\s*{n1}\s+{c}\s+{n2}\s*\)\s+{h}\b", text, flags))
        noun_votes += len(re.findall(rf"\b{n1}\s+{c}\s+{n2}\s+\(\s*{h}\s*\)", text, flags))
        noun_votes += len(re.findall(rf"\b{n1}\s+{c}\s+{n2}\s*{sep}\s*{h}\b", text, flags))
        np_votes += len(re.findall(rf"\(\s*{n1}\s*\)\s+{c}\s+{n2}\s+{h}\b", text, flags))
        np_votes += len(re.findall(rf"\b{n1}\s+\(\s*{c}\s+{n2}\s+{h}\s*\)", text, flags))
        np_votes += len(re.findall(rf"\b{n1}\s*{sep}\s*{c}\s+{n2}\s+{h}\b", text, flags))
    return compare(noun_votes, np_votes, NOUN_COORD, NP_COORD, "surface")


DEFAULT_COORD_VOTERS = (
    "ngram-i",
    "coord-paraphrase-1", "coord-paraphrase-2",
    "coord-paraphrase-3", "coord-paraphrase-4",
    "h1",
    "h6",
    "number-agreement",
    "surface",
)


@dataclass(frozen=True)
class CoordVoteConfig:
    """Voter set and defaulting for the coordination vote."""

    voters: tuple[str, ...] = DEFAULT_COORD_VOTERS
    default: str | None = NP_COORD
    threshold: int = 1
    snippet_limit: int = 1000
    mappings: CoordMappings = CoordMappings()


def quad_snippets(
    provider: CountProvider, lex: MorphLexicon, quad: CoordQuad, limit: int
) -> list[str]:
    """Raw sentences containing ``n1 c n2 h``."""
    query = CountQuery.of(
        quad.n1, quad.c, quad.n2, inflections(lex, quad.h)
    )
    return provider.snippets(query, limit)


def run_coord_voter(
    name: str,
    quad: CoordQuad,
    provider: CountProvider,
    lex: MorphLexicon,
    config: CoordVoteConfig,
) -> Decision:
    if name.startswith("ngram-"):
        return coord_ngram_decision(
            provider, lex, quad, name.split("-")[1], config.mappings
        )
    if name.startswith("coord-paraphrase-"):
        return coord_paraphrase_decision(
            provider, lex, quad, int(name.rsplit("-", 1)[1]), config.threshold
        )
    if name in ("h1", "h4", "h5", "h6"):
        return coord_heuristic(quad, name)
    if name == "number-agreement":
        return number_agreement_decision(quad, lex)
    if name == "surface":
        snippets = quad_snippets(provider, lex, quad, config.snippet_limit)
        return coord_surface_vote(snippets, quad, lex)
    raise ValueError(f"unknown voter {name!r}")


@dataclass
class CoordResult:
    quad: CoordQuad
    votes: dict[str, Decision] = field(default_factory=dict)
    final: Decision = field(default_factory=lambda: Decision(ABSTAIN))


def coord_pipeline(
    quad: CoordQuad,
    provider: CountProvider,
    lex: MorphLexicon,
    config: CoordVoteConfig = CoordVoteConfig(),
) -> CoordResult:
    """Vote the enabled voters and combine by majority."""
    result = CoordResult(quad)
    for name in config.voters:
        result.votes[name] = run_coord_voter(name, quad, provider, lex, config)
    result.final = majority_vote(list(result.votes.values()), config.default)
    return result


LABEL_BY_TAG = {"noun": NOUN_COORD, "NP": NP_COORD}
TAG_BY_LABEL = {v: k for k, v in LABEL_BY_TAG.items()}


def load_coord_dataset(path: str | Path) -> list[tuple[CoordQuad, str]]:
    """Read a TSV of ``n1 c n2 h label`` rows with label noun or NP."""
    rows = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 5 or parts[4] not in LABEL_BY_TAG:
            raise ValueError(f"bad dataset row on line {lineno}")
        n1, c, n2, h, label = parts
        rows.append((CoordQuad(n1, c, n2, h), LABEL_BY_TAG[label]))
    return rows
