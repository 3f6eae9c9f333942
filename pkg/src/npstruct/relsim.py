"""Relational similarity between noun pairs via connecting lexical features.

The relation holding inside a noun pair is characterized by the verbs,
prepositions, and coordinating conjunctions that join the two nouns in
corpus sentences, each kept with the direction it was seen in.  Pairs
are compared with TF.IDF-weighted generalized Dice similarity and
classified by one nearest neighbor, which covers verbal analogy
problems, head-modifier relation labeling, and binary relation
checking between entity mentions.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from . import porter
from .corpus import CorpusIndex
from .morphology import MorphLexicon, inflections, lemma

DIR_12 = "1->2"
DIR_21 = "2->1"

BE_FORMS = frozenset("be is are was were am been being".split())
HAVE_FORMS = frozenset("have has had having".split())
DO_FORMS = frozenset("do does did".split())
MODALS = frozenset("can could may might must shall should will would".split())

RAISING_VERBS = frozenset("seem appear happen tend turn prove".split())

ADVERBS = frozenset(
    """not also only usually often always never eventually typically
    really just sometimes generally mainly mostly frequently""".split()
)

IRREGULAR_PARTICIPLES = frozenset(
    """made given taken done found known seen born borne built caught held
    kept written sold bought brought put set sent told shown grown drawn
    driven eaten chosen worn thrown broken spoken stolen hidden frozen
    woven begun sung won left lost meant felt said paid laid built""".split()
)

PREPOSITION_WORDS = frozenset(
    """of in on at by for with from to into onto about over under between
    among through during against across behind beyond near toward towards
    without within along around off up down out upon per via like as""".split()
)


@dataclass(frozen=True)
class PairFeature:
    """One joining lexeme with its part of speech and direction."""

    lexeme: str
    kind: str
    direction: str

    def __post_init__(self) -> None:
        if self.kind not in ("V", "P", "C"):
            raise ValueError("kind must be V, P, or C")
        if self.direction not in (DIR_12, DIR_21):
            raise ValueError("bad direction")


def _noun_runs(tags: tuple[str, ...]) -> list[tuple[int, int]]:
    """Maximal [start, end] spans of noun-tagged tokens."""
    runs = []
    start = None
    for i, tag in enumerate(tags):
        if tag == "N":
            if start is None:
                start = i
        elif start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(tags) - 1))
    return runs


def _verb_group(
    segment: list[tuple[str, str]], lex: MorphLexicon
) -> tuple[str, str | None] | None:
    """Reduce a connector segment to (verb lexeme, optional preposition).

    The segment must be one verb phrase: optional complementizer,
    modals and auxiliaries, one main verb, an optional preposition,
    then only determiners or adjectives before the object.  Modals and
    auxiliaries are dropped, the passive ``be`` is retained with its
    unlemmatized participle, and the main verb is lemmatized.
    """
    toks = list(segment)
    if toks and toks[0][1] == "W":
        toks = toks[1:]
    while toks and toks[-1][1] in ("D", "J"):
        toks.pop()
    toks = [t for t in toks if t[1] != "R" and t[0] not in ADVERBS]
    if not toks:
        return None
    prep: str | None = None
    if toks[-1][1] == "P":
        prep = toks[-1][0]
        toks = toks[:-1]
    if not toks or any(t[1] not in ("M", "A", "V") for t in toks):
        return None
    words = [t[0] for t in toks if t[1] != "M" and t[0] not in MODALS]
    if not words:
        return None
    if words[0] in HAVE_FORMS and len(words) > 1:
        words = words[1:]
    if words[0] in DO_FORMS and len(words) > 1:
        words = words[1:]
    if words[0] in BE_FORMS:
        if len(words) == 1:
            return ("be", prep)
        main = words[-1]
        if main.endswith("ing"):
            return (lemma(lex, main), prep)
        return ("be " + main, prep)
    if len(words) != 1:
        return None
    return (lemma(lex, words[0]), prep)


def extract_pair_features(
    index: CorpusIndex,
    noun1: str,
    noun2: str,
    lex: MorphLexicon,
) -> Counter[PairFeature]:
    """Mine directed joining features for an ordered noun pair.

    Scans every tagged sentence containing both nouns; whenever two
    adjacent noun-phrase heads realize the two targets, the material
    between them is classified as a verb (with optional preposition),
    a bare preposition, or a coordinating conjunction.
    """
    if not index.tagged:
        raise ValueError("tags required")
    i1 = inflections(lex, noun1)
    i2 = inflections(lex, noun2)
    features: Counter[PairFeature] = Counter()
    for sent in index.sentences():
        tags = sent.tags
        assert tags is not None
        runs = _noun_runs(tags)
        heads = [sent.tokens[end] for _start, end in runs]
        for (run_a, head_a), (run_b, head_b) in zip(
            zip(runs, heads), zip(runs[1:], heads[1:])
        ):
            if head_a in i1 and head_b in i2:
                direction = DIR_12
            elif head_a in i2 and head_b in i1:
                direction = DIR_21
            else:
                continue
            between = [
                (sent.tokens[i], tags[i])
                for i in range(run_a[1] + 1, run_b[0])
            ]
            if not between or len(between) > 8:
                continue
            if any(tag == "S" for _w, tag in between):
                continue
            feat = _classify_connector(between, lex)
            if feat is not None:
                lexeme, kind = feat
                features[PairFeature(lexeme, kind, direction)] += 1
    return features


def _classify_connector(
    between: list[tuple[str, str]], lex: MorphLexicon
) -> tuple[str, str] | None:
    trailing = list(between)
    core = list(trailing)
    while core and core[-1][1] in ("D", "J", "R"):
        core.pop()
    if len(core) == 1 and core[0][1] == "P":
        return (core[0][0], "P")
    if len(core) == 1 and core[0][1] == "C":
        return (core[0][0], "C")
    if any(tag in ("M", "A", "V") for _w, tag in core):
        group = _verb_group(between, lex)
        if group is not None:
            verb, prep = group
            lexeme = f"{verb} {prep}" if prep else verb
            return (lexeme, "V")
    return None


def extract_paraphrase_verbs(
    index: CorpusIndex,
    modifier: str,
    head: str,
    lex: MorphLexicon,
) -> Counter[str]:
    """Verbs paraphrasing a head-modifier compound via a relative clause.

    Looks for ``head that/which/who ... modifier`` with up to eight
    words between; keeps clauses that are a single verb phrase with no
    intervening nouns, drops modals and auxiliaries but retains the
    passive ``be``, attaches a following preposition, and lemmatizes
    the main verb.  The modifier must not end its noun phrase early:
    something non-nominal has to follow it.
    """
    if not index.tagged:
        raise ValueError("tags required")
    ih = inflections(lex, head)
    im = inflections(lex, modifier)
    verbs: Counter[str] = Counter()
    for sent in index.sentences():
        tags = sent.tags
        assert tags is not None
        toks = sent.tokens
        for i, tok in enumerate(toks[:-2]):
            if tok not in ih or toks[i + 1] not in ("that", "which", "who"):
                continue
            for j in range(i + 2, min(i + 2 + 9, len(toks))):
                if toks[j] not in im:
                    continue
                clause = [(toks[k], tags[k]) for k in range(i + 2, j)]
                tail_tags = tags[j + 1 :]
                if not tail_tags or all(t == "N" for t in tail_tags):
                    continue
                if any(tag == "N" for _w, tag in clause):
                    continue
                groups = _vp_count(clause)
                if groups != 1:
                    continue
                group = _verb_group(clause, lex)
                if group is None:
                    continue
                verb, prep = group
                verbs[f"{verb} {prep}" if prep else verb] += 1
                break
    return verbs


def _vp_count(clause: list[tuple[str, str]]) -> int:
    """Number of contiguous verb-ish runs in a clause."""
    count = 0
    in_run = False
    for _w, tag in clause:
        if tag in ("M", "A", "V"):
            if not in_run:
                count += 1
                in_run = True
        else:
            in_run = False
    return count


@dataclass
class TfidfWeights:
    """Document frequencies over a training collection of pairs."""

    df: dict = field(default_factory=dict)
    n: int = 1

    @classmethod
    def fit(cls, vectors: list[dict]) -> "TfidfWeights":
        if not vectors:
            raise ValueError("need at least one vector")
        df: dict = {}
        for vec in vectors:
            for feat in vec:
                df[feat] = df.get(feat, 0) + 1
        return cls(df, len(vectors))

    def weight(self, vec: dict) -> dict:
        """w(x) = TF(x) * log(N / DF(x)); unseen features get DF = 1."""
        out = {}
        for feat, tf in vec.items():
            df = self.df.get(feat, 1)
            out[feat] = tf * math.log(self.n / df)
        return out


def tfidf_weight(vectors: list[dict]) -> list[dict]:
    """Weight a training collection against itself."""
    weights = TfidfWeights.fit(vectors)
    return [weights.weight(v) for v in vectors]


def dice(a: dict, b: dict) -> float:
    """Generalized Dice: 2 Σ min(a_i, b_i) / (Σ a_i + Σ b_i)."""
    total = sum(a.values()) + sum(b.values())
    if total == 0:
        raise ValueError("undefined similarity")
    shared = sum(min(a[k], b[k]) for k in a.keys() & b.keys())
    return 2 * shared / total


def cosine(a: dict, b: dict) -> float:
    """Cosine of two frequency vectors; zero vectors are orthogonal to all."""
    na = math.sqrt(sum(v * v for v in a.values()))
    nb = math.sqrt(sum(v * v for v in b.values()))
    if na == 0 or nb == 0:
        return 0.0
    dot = sum(a[k] * b[k] for k in a.keys() & b.keys())
    return dot / (na * nb)


def _safe_dice(a: dict, b: dict) -> float:
    try:
        return dice(a, b)
    except ValueError:
        return 0.0


def knn_classify(train: list[tuple[dict, str]], query: dict) -> str | None:
    """Label of the nearest neighbor by Dice similarity.

    Ties at the maximum fall to the majority label among the tied
    neighbors; without a strict majority the classifier abstains
    (returns None).
    """
    if not train:
        raise ValueError("train must be nonempty")
    sims = [(_safe_dice(vec, query), label) for vec, label in train]
    best = max(s for s, _ in sims)
    tied = [label for s, label in sims if s == best]
    if len(tied) == 1:
        return tied[0]
    counts = Counter(tied).most_common()
    if len(counts) == 1 or counts[0][1] > counts[1][1]:
        return counts[0][0]
    return None


def pair_vector(
    index: CorpusIndex, pair: tuple[str, str], lex: MorphLexicon
) -> dict:
    return dict(extract_pair_features(index, pair[0], pair[1], lex))


def solve_sat(
    stem_pair: tuple[str, str],
    candidates: list[tuple[str, str]],
    index: CorpusIndex,
    lex: MorphLexicon,
) -> int | None:
    """Pick the candidate pair most relationally similar to the stem.

    Returns the index of the unique highest-Dice candidate, or None
    when two or more candidates tie at the maximum.
    """
    if not 1 <= len(candidates) <= 5:
        raise ValueError("need 1..5 candidate pairs")
    vectors = [pair_vector(index, p, lex) for p in [stem_pair, *candidates]]
    weights = TfidfWeights.fit(vectors)
    weighted = [weights.weight(v) for v in vectors]
    stem_vec, cand_vecs = weighted[0], weighted[1:]
    scores = [_safe_dice(stem_vec, v) for v in cand_vecs]
    best = max(scores)
    winners = [i for i, s in enumerate(scores) if s == best]
    if len(winners) == 1:
        return winners[0]
    return None


DEFAULT_STOPWORDS = frozenset(
    """a an the of in on at by for with from to into about over under and
    or but nor is are was were be been being am do does did have has had
    this that these those it its his her their our your my i you he she
    we they them him us as not no yes if then than so such there here what
    when who whom which while very can could may might must shall should
    will would""".split()
)


@dataclass(frozen=True)
class SemevalExample:
    """A sentence with two entity spans and a candidate relation."""

    tokens: tuple[str, ...]
    e1: tuple[int, int]
    e2: tuple[int, int]
    relation: str
    query: str = ""

    def entity_head(self, which: int) -> str:
        start, end = self.e1 if which == 1 else self.e2
        return self.tokens[end].lower()


def semeval_vector(
    example: SemevalExample,
    lex: MorphLexicon,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
    pair_features: dict | None = None,
) -> dict:
    """Feature vector: stemmed context words, entity lemmas, query words."""
    vec: Counter = Counter()
    spans = set(range(*example.e1)) | {example.e1[1]}
    spans |= set(range(*example.e2)) | {example.e2[1]}
    for i, tok in enumerate(example.tokens):
        w = tok.lower()
        if i in spans:
            vec[("ent", lemma(lex, w))] += 1
        elif w not in stopwords:
            vec[("ctx", porter.stem(w))] += 1
    for w in example.query.lower().split():
        vec[("query", w)] += 1
    if pair_features:
        for feat, tf in pair_features.items():
            vec[("pair", feat)] += tf
    return dict(vec)


def semeval_classify(
    example: SemevalExample,
    train: list[tuple[SemevalExample, bool]],
    lex: MorphLexicon,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
    index: CorpusIndex | None = None,
) -> bool:
    """Binary relation check by 1-NN over weighted example vectors.

    An abstaining neighbor vote falls back to the training majority
    class; entity heads sharing a lemma force a negative, last.
    """
    if not train:
        raise ValueError("train must be nonempty")

    def features(ex: SemevalExample) -> dict:
        pair = None
        if index is not None and index.tagged:
            pair = dict(
                extract_pair_features(index, ex.entity_head(1), ex.entity_head(2), lex)
            )
        return semeval_vector(ex, lex, stopwords, pair)

    train_vecs = [(features(ex), label) for ex, label in train]
    weights = TfidfWeights.fit([v for v, _ in train_vecs])
    weighted_train = [
        (weights.weight(v), "true" if label else "false") for v, label in train_vecs
    ]
    query = weights.weight(features(example))
    label = knn_classify(weighted_train, query)
    if label is None:
        trues = sum(1 for _, lab in train if lab)
        label = "true" if trues >= len(train) - trues else "false"
    result = label == "true"
    if lemma(lex, example.entity_head(1)) == lemma(lex, example.entity_head(2)):
        result = False
    return result


@dataclass(frozen=True)
class BinaryScores:
    """Precision, recall, F-measure, and accuracy for boolean labels."""

    precision: float
    recall: float
    f1: float
    accuracy: float


def score_binary(predictions: list[bool], gold: list[bool]) -> BinaryScores:
    if len(predictions) != len(gold):
        raise ValueError("predictions and gold must align")
    tp = sum(1 for p, g in zip(predictions, gold) if p and g)
    fp = sum(1 for p, g in zip(predictions, gold) if p and not g)
    fn = sum(1 for p, g in zip(predictions, gold) if not p and g)
    tn = sum(1 for p, g in zip(predictions, gold) if not p and not g)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    accuracy = (tp + tn) / len(gold) if gold else 0.0
    return BinaryScores(precision, recall, f1, accuracy)


def normalize_human_verb(
    phrase: str,
    lex: MorphLexicon,
    known_verbs: frozenset[str] | None = None,
) -> str | None:
    """Canonicalize a free-text verbal paraphrase, or reject it.

    Strips adverbs and leading modals, removes perfect have and
    continuous be, collapses raising verbs over ``to be`` to ``be``,
    restores the passive ``be`` before a bare participle, rejects
    phrases with non-verb content or an infinitive other than ``be``,
    and lemmatizes the main verb of active phrases.
    """
    tokens = [t for t in phrase.lower().split() if t]
    tokens = [t for t in tokens if t not in ADVERBS]
    while tokens and tokens[0] in MODALS:
        tokens = tokens[1:]
    if not tokens:
        return None

    if (
        len(tokens) >= 3
        and lemma(lex, tokens[0]) in RAISING_VERBS
        and tokens[1] == "to"
        and tokens[2] == "be"
    ):
        tokens = ["be"] + tokens[3:]

    if "to" in tokens:
        at = tokens.index("to")
        if at + 1 >= len(tokens) or tokens[at + 1] != "be":
            return None

    perfect = False
    if tokens[0] in HAVE_FORMS and len(tokens) > 1:
        tokens = tokens[1:]
        perfect = True

    if tokens[0] in BE_FORMS:
        rest = tokens[1:]
        if rest and rest[0].endswith("ing"):
            tokens = rest
        else:
            tokens = ["be"] + rest
    elif not perfect and _is_participle(tokens[0], lex):
        tokens = ["be"] + tokens

    passive = tokens[0] == "be"
    main_at = 1 if passive and len(tokens) > 1 else 0
    for i, tok in enumerate(tokens):
        if i <= main_at or tok == "be":
            continue
        if tok not in PREPOSITION_WORDS:
            return None
    if known_verbs is not None:
        main = tokens[main_at] if main_at < len(tokens) else tokens[0]
        if main != "be" and lemma(lex, main) not in known_verbs:
            return None
    if not passive:
        tokens[0] = lemma(lex, tokens[0])
    return " ".join(tokens)


def _is_participle(word: str, lex: MorphLexicon) -> bool:
    if word in IRREGULAR_PARTICIPLES:
        return True
    return word.endswith("ed") and len(word) > 3


def dump_pair_features(
    rows: list[tuple[str, str, Counter[PairFeature]]], path: str | Path
) -> None:
    """Write pair features as TSV: noun1 noun2 lexeme kind direction freq."""
    lines = []
    for noun1, noun2, feats in rows:
        for feat, freq in sorted(
            feats.items(), key=lambda kv: (-kv[1], kv[0].lexeme)
        ):
            lines.append(
                f"{noun1}\t{noun2}\t{feat.lexeme}\t{feat.kind}\t{feat.direction}\t{freq}"
            )
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
