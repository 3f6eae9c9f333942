"""Orthographic and direct-count bracketing voters for noun compounds.

Authors often reveal the grouping of a three-word compound through
punctuation (``cell-cycle analysis``), genitives (``brain's stem
cells``), capitalization, concatenated spellings, or word order.  The
scanners here tally such cues in raw snippets, and the direct-count
models compare corpus frequencies of rewritten variants of the triple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .assoc import NounTriple
from .corpus import CountProvider, CountQuery
from .decisions import ABSTAIN, LEFT, RIGHT, Decision, compare
from .morphology import MorphLexicon, inflections

_ROMAN_RE = re.compile(r"^[ivxlcdm]+$", re.IGNORECASE)

# Short everyday words that can collide with two-letter abbreviations.
COMMON_SHORT_WORDS = frozenset(
    """a i an as at be by do go he hi if in is it me my no of on or ox so to
    up us we am ah ok tv no ms mr""".split()
)

# Two-letter uppercase postal-style state codes.
STATE_CODES = frozenset(
    """AL AK AZ AR CA CO CT DE FL GA HI ID IL IN IA KS KY LA ME MD MA MI MN
    MS MO MT NE NV NH NJ NM NY NC ND OH OK OR PA RI SC SD TN TX UT VT VA WA
    WV WI WY DC""".split()
)


@dataclass
class SurfaceFeatureTally:
    """Per-feature left/right vote counts from snippet scanning."""

    features: dict[str, tuple[int, int]] = field(default_factory=dict)

    def add(self, feature: str, left: int, right: int) -> None:
        l0, r0 = self.features.get(feature, (0, 0))
        self.features[feature] = (l0 + left, r0 + right)

    @property
    def left_total(self) -> int:
        return sum(l for l, _ in self.features.values())

    @property
    def right_total(self) -> int:
        return sum(r for _, r in self.features.values())


def _alt(lex: MorphLexicon, word: str) -> str:
    forms = sorted(inflections(lex, word), key=len, reverse=True)
    return "(?:" + "|".join(re.escape(f) for f in forms) + ")"


def capitalization_excluded(word: str) -> bool:
    """Capitalization is uninformative for single letters and Roman digits."""
    return len(word) == 1 or bool(_ROMAN_RE.match(word))


def _scan_features(
    text: str, triple: NounTriple, lex: MorphLexicon, tally: SurfaceFeatureTally
) -> None:
    w1, w2, w3 = (_alt(lex, w) for w in triple.words())
    flags = re.IGNORECASE

    def hits(pattern: str, use_flags: int = flags) -> int:
        return len(re.findall(pattern, text, use_flags))

    gen = "(?:'s|’s)"
    punct = "[,.:]"

    tally.add(
        "dash",
        hits(rf"\b{w1}-{w2}\s+{w3}\b"),
        hits(rf"\b{w1}\s+{w2}-{w3}\b"),
    )
    tally.add(
        "genitive",
        hits(rf"\b{w1}\s+{w2}{gen}\s+{w3}\b"),
        hits(rf"\b{w1}{gen}\s+{w2}\s+{w3}\b"),
    )
    tally.add(
        "slash",
        hits(rf"\b{w1}\s+{w2}/{w3}\b"),
        hits(rf"\b{w1}/{w2}\s+{w3}\b"),
    )
    tally.add(
        "parentheses",
        hits(rf"\(\s*{w1}\s+{w2}\s*\)\s+{w3}\b") + hits(rf"\b{w1}\s+{w2}\s+\(\s*{w3}\s*\)"),
        hits(rf"\(\s*{w1}\s*\)\s+{w2}\s+{w3}\b") + hits(rf"\b{w1}\s+\(\s*{w2}\s+{w3}\s*\)"),
    )
    tally.add(
        "external-dash",
        hits(rf"\b{w1}\s+{w2}\s+{w3}-[A-Za-z0-9]"),
        hits(rf"[A-Za-z0-9]-{w1}\s+{w2}\s+{w3}\b"),
    )
    tally.add(
        "punctuation",
        hits(rf"\b{w1}\s+{w2}{punct}\s+{w3}\b"),
        hits(rf"\b{w1}{punct}\s+{w2}\s+{w3}\b"),
    )

    cap_left = cap_right = 0
    for m in re.finditer(rf"\b({w1})\s+({w2})\s+({w3})\b", text, flags):
        t2, t3 = m.group(2), m.group(3)
        if t2[0].isupper() and not capitalization_excluded(t2):
            cap_right += 1
        elif t3[0].isupper() and not capitalization_excluded(t3):
            cap_left += 1
    tally.add("capitalization", cap_left, cap_right)


def surface_vote(
    snippets: list[str], triple: NounTriple, lex: MorphLexicon
) -> tuple[Decision, SurfaceFeatureTally]:
    """Sum unweighted surface-feature votes over raw snippets."""
    tally = SurfaceFeatureTally()
    for snippet in snippets:
        _scan_features(snippet, triple, lex, tally)
    decision = compare(
        tally.left_total, tally.right_total, LEFT, RIGHT, "surface-features"
    )
    return decision, tally


CONCAT_VARIANTS = ("adjacency", "dependency", "triple")
WILDCARD_VARIANTS = (
    "adjacency",
    "dependency",
    "adjacency-reversed",
    "dependency-reversed",
)
MISC_KINDS = ("genitive", "abbreviation", "reorder", "inflection-variability", "swap")


def _glue(first: str, seconds: frozenset[str]) -> frozenset[str]:
    return frozenset(first + s for s in seconds)


def concatenation_decision(
    provider: CountProvider, lex: MorphLexicon, triple: NounTriple, variant: str
) -> Decision:
    """Compare frequencies of concatenated spellings of the two groupings."""
    if variant not in CONCAT_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    w1, w2, w3 = triple.words()
    i1, i2, i3 = (inflections(lex, w) for w in triple.words())
    name = f"concat-{variant}"
    if variant == "adjacency":
        left = provider.count(CountQuery.of(_glue(w1, i2)))
        right = provider.count(CountQuery.of(_glue(w2, i3)))
    elif variant == "dependency":
        left = provider.count(CountQuery.of(_glue(w1, i2)))
        right = provider.count(CountQuery.of(_glue(w1, i3)))
    else:
        left = provider.count(CountQuery.of(_glue(w1, i2), i3))
        right = provider.count(CountQuery.of(i1, _glue(w2, i3)))
    return compare(left, right, LEFT, RIGHT, name)


def wildcard_decision(
    provider: CountProvider,
    lex: MorphLexicon,
    triple: NounTriple,
    variant: str,
    stars: int = 1,
) -> Decision:
    """Compare gap-query frequencies of the two groupings.

    The left-predicting pattern is ``w1 w2 * w3`` (or ``w3 * w1 w2``
    for the reversed variants); the right-predicting pattern keeps the
    head next to ``w2``.
    """
    if variant not in WILDCARD_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if not 1 <= stars <= 3:
        raise ValueError("stars must be in 1..3")
    w1, w2, _w3 = triple.words()
    i1, i2, i3 = (inflections(lex, w) for w in triple.words())
    gap = (stars, stars)

    def gapped(left_part: list, right_part: list) -> int:
        return provider.count(CountQuery.gapped(left_part, right_part, *gap))

    if variant == "adjacency":
        left = gapped([w1, i2], [i3])
        right = gapped([i1], [w2, i3])
    elif variant == "dependency":
        left = gapped([w1, i2], [i3])
        right = gapped([i2], [w1, i3])
    elif variant == "adjacency-reversed":
        left = gapped([i3], [w1, i2])
        right = gapped([w2, i3], [i1])
    else:
        left = gapped([i3], [w1, i2])
        right = gapped([w1, i3], [i2])
    return compare(left, right, LEFT, RIGHT, f"wildcard-{variant}-{stars}")


def _abbreviation_usable(abbr: str, lex: MorphLexicon) -> bool:
    if abbr in COMMON_SHORT_WORDS or abbr in lex.lemma_by_form:
        return False
    if _ROMAN_RE.match(abbr):
        return False
    if abbr.upper() in STATE_CODES:
        return False
    return True


def misc_decision(
    kind: str, provider: CountProvider, lex: MorphLexicon, triple: NounTriple
) -> Decision:
    """Remaining direct-count voters over rewritten triples."""
    if kind not in MISC_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    w1, w2, w3 = triple.words()
    i1, i2, i3 = (inflections(lex, w) for w in triple.words())

    if kind == "genitive":
        left = provider.count(CountQuery.of(w1, "s", w2, i3))
        right = provider.count(CountQuery.of(w1, w2, "s", i3))
        return compare(left, right, LEFT, RIGHT, "genitive-marker")

    if kind == "abbreviation":
        abbr12 = w1[0] + w2[0]
        abbr23 = w2[0] + w3[0]
        left = right = 0
        if _abbreviation_usable(abbr12, lex):
            left = provider.count(CountQuery.of(w1, w2, abbr12, i3))
        if _abbreviation_usable(abbr23, lex):
            right = provider.count(CountQuery.of(w1, w2, i3, abbr23))
        return compare(left, right, LEFT, RIGHT, "abbreviation")

    if kind == "reorder":
        left = provider.count(CountQuery.of(i3, w1, i2))
        right = provider.count(CountQuery.of(w2, i3, i1))
        return compare(left, right, LEFT, RIGHT, "reorder")

    if kind == "inflection-variability":
        var1 = i1 - {w1}
        var2 = i2 - {w2}
        left = provider.count(CountQuery.of(w1, var2, i3)) if var2 else 0
        right = provider.count(CountQuery.of(var1, w2, i3)) if var1 else 0
        return compare(left, right, LEFT, RIGHT, "inflection-variability")

    count = provider.count(CountQuery.of(w2, i1, i3))
    if count > 0:
        return Decision(RIGHT, 0, count, "swap")
    return Decision(ABSTAIN, model="swap")
