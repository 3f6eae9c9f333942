"""Prepositional-phrase attachment: does the PP modify n1 or the verb?

Given a quadruple (v, n1, p, n2) such as (meet, demands, from,
customers), the voters here compare corpus associations of the
preposition with the noun versus the verb, look for unambiguous
paraphrases of either attachment, apply closed-class heuristics, scan
raw snippets for orthographic cues, and finally combine everything in
a majority vote backed by a count-table classifier trained on the
vote's own output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import CountProvider, CountQuery
from .decisions import ABSTAIN, NOUN, VERB, Decision, abstain, compare, majority_vote
from .morphology import MorphLexicon, inflections, lemma

PRONOUNS = frozenset(
    """i you he she it we they me him her us them
    myself yourself himself herself itself ourselves yourselves themselves""".split()
)

ARTICLES = frozenset({"a", "an", "the"})

OTHER_DETERMINERS = frozenset(
    """this that these those all each every some any no
    his her its my your our their""".split()
)

DETERMINERS = ARTICLES | OTHER_DETERMINERS

BE_FORMS = frozenset(
    "be is are was were am been being".split()
)

_YEAR_RE = re.compile(r"^\d{4}s?$")
_NUM_RE = re.compile(r"^[\d.,]*\d[\d.,]*%?$|^%$")


@dataclass(frozen=True)
class PPQuad:
    """An attachment instance: verb, first noun, preposition, second noun."""

    v: str
    n1: str
    p: str
    n2: str

    def __post_init__(self) -> None:
        for w in (self.v, self.n1, self.p, self.n2):
            if not w:
                raise ValueError("quad fields must be nonempty")
        object.__setattr__(self, "p", self.p.lower())


def _noun_like(word: str) -> bool:
    w = word.lower()
    return (
        w not in PRONOUNS
        and w not in DETERMINERS
        and not _YEAR_RE.match(w)
        and not _NUM_RE.match(w)
    )


def pp_ngram_decision(
    provider: CountProvider,
    lex: MorphLexicon,
    quad: PPQuad,
    model: int,
) -> Decision:
    """Corpus-association models 1-4.

    (1) #(n1,p) vs #(v,p); (2) Pr(p|n1) vs Pr(p|v); (3) #(n1,p,n2) vs
    #(v,p,n2); (4) Pr(p,n2|n1) vs Pr(p,n2|v).  A determiner may
    intervene between p and n2.  The noun-side score winning predicts
    noun attachment.  Disabled when either noun is a pronoun.
    """
    if model not in (1, 2, 3, 4):
        raise ValueError("model must be 1..4")
    name = f"ngram-{model}"
    if quad.n1.lower() in PRONOUNS or quad.n2.lower() in PRONOUNS:
        return abstain(name, "pronoun argument")
    iv = inflections(lex, quad.v)
    i1 = inflections(lex, quad.n1)
    i2 = inflections(lex, quad.n2)
    p = quad.p

    def pair(head: frozenset[str]) -> int:
        return provider.count(CountQuery.of(head, p))

    def triple(head: frozenset[str]) -> int:
        direct = provider.count(CountQuery.of(head, p, i2))
        det = provider.count(CountQuery.of(head, p, DETERMINERS, i2))
        return direct + det

    if model in (1, 2):
        noun_score: float = pair(i1)
        verb_score: float = pair(iv)
    else:
        noun_score = triple(i1)
        verb_score = triple(iv)
    if model in (2, 4):
        noun_marginal = provider.count(CountQuery.of(i1))
        verb_marginal = provider.count(CountQuery.of(iv))
        if noun_marginal == 0 or verb_marginal == 0:
            return abstain(name, "zero marginal")
        noun_score /= noun_marginal
        verb_score /= verb_marginal
    return compare(noun_score, verb_score, NOUN, VERB, name)


def pp_paraphrase_decision(
    provider: CountProvider,
    lex: MorphLexicon,
    quad: PPQuad,
    pattern: int,
) -> Decision:
    """Unambiguous rewriting patterns 1-6; one corpus match decides.

    (1) ``v DET n2 n1`` noun; (2) ``v p n2 DET n1`` verb; (3)
    ``p n2 ... v n1`` verb; (4) ``n1 p n2 v`` noun; (5)
    ``v him/her p n2`` verb; (6) ``is/are n1 p n2`` noun.
    """
    if pattern not in range(1, 7):
        raise ValueError("pattern must be 1..6")
    name = f"paraphrase-{pattern}"
    iv = inflections(lex, quad.v)
    i1 = inflections(lex, quad.n1)
    i2 = inflections(lex, quad.n2)
    p = quad.p

    count = 0
    label = NOUN
    if pattern == 1:
        if p == "to" or not _noun_like(quad.n1) or not _noun_like(quad.n2):
            return abstain(name, "guard")
        count = provider.count(CountQuery.of(iv, DETERMINERS, i2, i1))
    elif pattern == 2:
        label = VERB
        count = provider.count(CountQuery.of(iv, p, i2, DETERMINERS, i1))
    elif pattern == 3:
        label = VERB
        count = provider.count(CountQuery.of(p, i2, iv, i1))
        count += provider.count(CountQuery.gapped([p, i2], [iv, i1], 1, 3))
    elif pattern == 4:
        count = provider.count(CountQuery.of(i1, p, i2, iv))
        count += provider.count(CountQuery.of(i1, p, DETERMINERS, i2, iv))
    elif pattern == 5:
        label = VERB
        count = provider.count(CountQuery.of(iv, {"him", "her"}, p, i2))
    else:
        count = provider.count(CountQuery.of({"is", "are"}, i1, p, i2))
    if count >= 1:
        side = (count, 0) if label == NOUN else (0, count)
        return Decision(label, *side, name)
    return abstain(name)


def pp_heuristic(quad: PPQuad, kind: str) -> Decision:
    """Closed-class shortcuts: pronoun n1, copular verb, the of-rule."""
    if kind == "pronoun-n1":
        if quad.n1.lower() in PRONOUNS:
            return Decision(VERB, model=kind)
        return abstain(kind)
    if kind == "verb-be":
        if quad.v.lower() in BE_FORMS:
            return Decision(NOUN, model=kind)
        return abstain(kind)
    if kind == "of-rule":
        if quad.p == "of":
            return Decision(NOUN, model=kind)
        return abstain(kind)
    raise ValueError(f"unknown heuristic {kind!r}")


def normalize_quad(quad: PPQuad, lex: MorphLexicon) -> PPQuad:
    """Collapse word classes for count-table training.

    Four-digit numbers (optionally with a trailing s) become YEAR,
    other numbers and percentages NUM, pronouns PRO, articles ART,
    other determiners DET; remaining nouns and the verb are
    lemmatized.
    """

    def norm_noun(word: str) -> str:
        w = word.lower()
        if _YEAR_RE.match(w):
            return "YEAR"
        if _NUM_RE.match(w):
            return "NUM"
        if w in PRONOUNS:
            return "PRO"
        if w in ARTICLES:
            return "ART"
        if w in OTHER_DETERMINERS:
            return "DET"
        return lemma(lex, w)

    return PPQuad(lemma(lex, quad.v.lower()), norm_noun(quad.n1), quad.p, norm_noun(quad.n2))


@dataclass
class BackoffModel:
    """Noun-attachment rate tables over normalized tuples.

    The first-stage ratio R1 pools the (v,p), (n1,p), (p,n2) tables;
    when its denominator is too small the model backs off to the
    preposition-only ratio R2.
    """

    tables: dict[tuple, list[int]] = field(default_factory=dict)
    trained: int = 0

    def _bump(self, key: tuple, is_noun: bool) -> None:
        cell = self.tables.setdefault(key, [0, 0])
        cell[0] += int(is_noun)
        cell[1] += 1

    def _lookup(self, key: tuple) -> tuple[int, int]:
        noun, total = self.tables.get(key, (0, 0))
        return noun, total


def backoff_train(
    examples: list[tuple[PPQuad, str]], lex: MorphLexicon
) -> BackoffModel:
    """Count attachment outcomes per normalized tuple."""
    if not examples:
        raise ValueError("empty training set")
    model = BackoffModel()
    for quad, label in examples:
        if label not in (NOUN, VERB):
            raise ValueError(f"bad training label {label!r}")
        q = normalize_quad(quad, lex)
        is_noun = label == NOUN
        model._bump(("vp", q.v, q.p), is_noun)
        model._bump(("n1p", q.n1, q.p), is_noun)
        model._bump(("pn2", q.p, q.n2), is_noun)
        model._bump(("p", q.p), is_noun)
        model.trained += 1
    return model


def backoff_predict(model: BackoffModel, quad: PPQuad, lex: MorphLexicon) -> Decision:
    """Predict from R1 when supported, else R2; exact 0.5 abstains."""
    q = normalize_quad(quad, lex)
    keys = [("vp", q.v, q.p), ("n1p", q.n1, q.p), ("pn2", q.p, q.n2)]
    noun = sum(model._lookup(k)[0] for k in keys)
    total = sum(model._lookup(k)[1] for k in keys)
    if total > 3:
        r1 = noun / total
        if r1 != 0.5:
            label = NOUN if r1 > 0.5 else VERB
            return Decision(label, r1, 1 - r1, "backoff")
    p_noun, p_total = model._lookup(("p", q.p))
    if p_total == 0:
        return abstain("backoff", "unseen preposition")
    r2 = p_noun / p_total
    if r2 == 0.5:
        return abstain("backoff", "tie")
    label = NOUN if r2 > 0.5 else VERB
    return Decision(label, r2, 1 - r2, "backoff")


def pp_surface_vote(
    snippets: list[str], quad: PPQuad, lex: MorphLexicon
) -> Decision:
    """Orthographic cues in raw text.

    Punctuation or a bracket separating the verb from n1 keeps
    ``n1 p n2`` together (noun attachment); separation between n1 and
    the preposition groups the verb with n1 (verb attachment).
    """

    def alt(word: str) -> str:
        forms = sorted(inflections(lex, word), key=len, reverse=True)
        return "(?:" + "|".join(re.escape(f) for f in forms) + ")"

    v, n1, p, n2 = alt(quad.v), alt(quad.n1), re.escape(quad.p), alt(quad.n2)
    punct = r"[-,/;:.?!]"
    flags = re.IGNORECASE
    noun_votes = verb_votes = 0
    for text in snippets:
        noun_votes += len(re.findall(rf"\(\s*{v}\s*\)\s+{n1}\s+{p}\s+{n2}", text, flags))
        noun_votes += len(re.findall(rf"\b{v}\s+\(\s*{n1}\s+{p}\s+{n2}\s*\)", text, flags))
        noun_votes += len(re.findall(rf"\b{v}{punct}\s+{n1}\s+{p}\s+{n2}\b", text, flags))
        verb_votes += len(re.findall(rf"\(\s*{v}\s+{n1}\s*\)\s+{p}\s+{n2}\b", text, flags))
        verb_votes += len(re.findall(rf"\b{v}\s+{n1}\s+\(\s*{p}\s+{n2}\s*\)", text, flags))
        verb_votes += len(re.findall(rf"\b{v}\s+{n1}{punct}\s+{p}\s+{n2}\b", text, flags))
        for m in re.finditer(rf"\b({v})\s+({n1})\s+({p})\s+({n2})\b", text, flags):
            t1, tp = m.group(2), m.group(3)
            if t1[0].isupper():
                noun_votes += 1
            elif tp[0].isupper():
                verb_votes += 1
    return compare(noun_votes, verb_votes, NOUN, VERB, "surface")


DEFAULT_PP_VOTERS = (
    "ngram-2",
    "ngram-4",
    "paraphrase-1", "paraphrase-2", "paraphrase-3",
    "paraphrase-4", "paraphrase-5", "paraphrase-6",
    "pronoun-n1",
    "verb-be",
    "surface",
)


@dataclass(frozen=True)
class PPVoteConfig:
    """Voter set and defaulting for the attachment vote."""

    voters: tuple[str, ...] = DEFAULT_PP_VOTERS
    default: str | None = VERB
    snippet_limit: int = 1000


def quad_snippets(
    provider: CountProvider, lex: MorphLexicon, quad: PPQuad, limit: int
) -> list[str]:
    """Raw sentences containing ``v n1 p n2``, nearby variants included."""
    iv = inflections(lex, quad.v)
    i1 = inflections(lex, quad.n1)
    i2 = inflections(lex, quad.n2)
    query = CountQuery.of(iv, i1, quad.p, i2)
    return provider.snippets(query, limit)


def run_pp_voter(
    name: str,
    quad: PPQuad,
    provider: CountProvider,
    lex: MorphLexicon,
    config: PPVoteConfig,
    backoff: BackoffModel | None = None,
) -> Decision:
    if name.startswith("ngram-"):
        return pp_ngram_decision(provider, lex, quad, int(name.split("-")[1]))
    if name.startswith("paraphrase-"):
        return pp_paraphrase_decision(provider, lex, quad, int(name.split("-")[1]))
    if name in ("pronoun-n1", "verb-be", "of-rule"):
        return pp_heuristic(quad, name)
    if name == "surface":
        snippets = quad_snippets(provider, lex, quad, config.snippet_limit)
        return pp_surface_vote(snippets, quad, lex)
    if name == "backoff":
        if backoff is None:
            return abstain(name, "no trained model")
        return backoff_predict(backoff, quad, lex)
    raise ValueError(f"unknown voter {name!r}")


@dataclass
class PPResult:
    quad: PPQuad
    votes: dict[str, Decision] = field(default_factory=dict)
    final: Decision = field(default_factory=lambda: Decision(ABSTAIN))


def pp_pipeline(
    quad: PPQuad,
    provider: CountProvider,
    lex: MorphLexicon,
    config: PPVoteConfig = PPVoteConfig(),
    backoff: BackoffModel | None = None,
) -> PPResult:
    """Vote the enabled voters; the of-rule fires first and short-circuits."""
    result = PPResult(quad)
    of_rule = pp_heuristic(quad, "of-rule")
    if not of_rule.abstained:
        result.votes["of-rule"] = of_rule
        result.final = of_rule
        return result
    for name in config.voters:
        result.votes[name] = run_pp_voter(name, quad, provider, lex, config, backoff)
    result.final = majority_vote(list(result.votes.values()), config.default)
    return result


def pp_bootstrap(
    quads: list[PPQuad],
    provider: CountProvider,
    lex: MorphLexicon,
    config: PPVoteConfig = PPVoteConfig(),
) -> tuple[list[PPResult], BackoffModel]:
    """Two-stage run: vote, train the backoff on the vote's own labels, revote."""
    first = [pp_pipeline(q, provider, lex, config) for q in quads]
    training = [
        (r.quad, r.final.label) for r in first if r.final.label in (NOUN, VERB)
    ]
    if not training:
        return first, BackoffModel()
    model = backoff_train(training, lex)
    second_config = PPVoteConfig(
        voters=config.voters + ("backoff",),
        default=config.default,
        snippet_limit=config.snippet_limit,
    )
    second = [pp_pipeline(q, provider, lex, second_config, model) for q in quads]
    return second, model


def load_pp_dataset(path: str | Path) -> list[tuple[PPQuad, str]]:
    """Read a TSV of ``v n1 p n2 label`` rows with label N or V."""
    rows = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 5 or parts[4] not in ("N", "V"):
            raise ValueError(f"bad dataset row on line {lineno}")
        v, n1, p, n2, label = parts
        rows.append((PPQuad(v, n1, p, n2), NOUN if label == "N" else VERB))
    return rows
