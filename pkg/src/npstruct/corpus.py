"""Sentence-level corpus index answering phrase, gap, and snippet queries.

The index is the local stand-in for a search engine: it reports exact
occurrence counts (not page hits) for phrases whose positions may carry
alternative word forms, counts with a bounded wildcard gap, and returns
the raw sentences containing a match for surface-feature scanning.

Counting runs on a normalized layer (lowercase, punctuation stripped,
hyphenated words split); snippets come from the untouched raw layer.
Queries never cross sentence boundaries.
"""

from __future__ import annotations

import hashlib
import pickle
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Protocol, Sequence

_MAGIC = b"NPSX"
_FORMAT_VERSION = 1
_WORD_RE = re.compile(r"[A-Za-z0-9]+")

MAX_GAP = 8


class CorpusError(ValueError):
    """Raised for malformed corpus files or queries."""


@dataclass(frozen=True)
class CountQuery:
    """An exact-phrase query, optionally split by a wildcard gap.

    ``phrase`` is one token-alternative set per position.  When ``gap``
    is set, ``split`` positions precede the gap and the rest follow it;
    the gap admits between ``gap[0]`` and ``gap[1]`` intervening tokens.
    """

    phrase: tuple[frozenset[str], ...]
    gap: tuple[int, int] | None = None
    split: int | None = None

    def __post_init__(self) -> None:
        if not self.phrase or any(not alts for alts in self.phrase):
            raise CorpusError("phrase must be nonempty with nonempty positions")
        if self.gap is not None:
            lo, hi = self.gap
            if not (0 <= lo <= hi <= MAX_GAP):
                raise CorpusError(f"gap range must satisfy 0 <= min <= max <= {MAX_GAP}")
            if self.split is None or not (0 < self.split < len(self.phrase)):
                raise CorpusError("gap queries need a split strictly inside the phrase")

    @classmethod
    def of(cls, *positions: str | Iterable[str]) -> "CountQuery":
        """Build a gapless query; each argument is a token or alternative set."""
        return cls(phrase=_normalize_positions(positions))

    @classmethod
    def gapped(
        cls,
        left: Sequence[str | Iterable[str]],
        right: Sequence[str | Iterable[str]],
        min_gap: int,
        max_gap: int,
    ) -> "CountQuery":
        """Build a query matching ``left``, a gap of min..max tokens, then ``right``."""
        phrase = _normalize_positions(list(left) + list(right))
        return cls(phrase=phrase, gap=(min_gap, max_gap), split=len(tuple(left)))

    def canonical(self) -> str:
        """Stable cache-key text: alternatives joined by '|', gap as '*{min,max}'."""
        parts = ["|".join(sorted(alts)) for alts in self.phrase]
        if self.gap is not None:
            lo, hi = self.gap
            parts.insert(self.split, "*{%d,%d}" % (lo, hi))
        return " ".join(parts)


def _normalize_positions(
    positions: Iterable[str | Iterable[str]],
) -> tuple[frozenset[str], ...]:
    out = []
    for pos in positions:
        if isinstance(pos, str):
            alts = [pos]
        else:
            alts = list(pos)
        out.append(frozenset(a.lower() for a in alts))
    return tuple(out)


@dataclass(frozen=True)
class _Sentence:
    raw: str
    tokens: tuple[str, ...]
    spans: tuple[tuple[int, int], ...]
    tags: tuple[str, ...] | None = None


class CorpusIndex:
    """Immutable token index over a one-sentence-per-line corpus."""

    def __init__(self, sentences: list[_Sentence], provenance: str):
        self._sentences = sentences
        self._total = sum(len(s.tokens) for s in sentences)
        self._provenance = provenance
        self._postings: dict[str, list[tuple[int, int]]] = {}
        for sid, sent in enumerate(sentences):
            for pos, tok in enumerate(sent.tokens):
                self._postings.setdefault(tok, []).append((sid, pos))

    @property
    def tagged(self) -> bool:
        return bool(self._sentences) and self._sentences[0].tags is not None

    @property
    def provenance(self) -> str:
        return self._provenance

    def sentences(self) -> list[_Sentence]:
        return self._sentences

    def total_tokens(self) -> int:
        return self._total

    def _shifts(self, query: CountQuery, i: int) -> list[int]:
        """Possible offsets of position ``i`` from the match start."""
        if query.gap is None or i < query.split:
            return [i]
        lo, hi = query.gap
        return [i + g for g in range(lo, hi + 1)]

    def _candidates(self, query: CountQuery) -> list[tuple[int, int]]:
        """Sentence/offset start candidates from the rarest query position."""
        best: list[tuple[int, int]] | None = None
        best_index = 0
        for i, alts in enumerate(query.phrase):
            posting = []
            for alt in alts:
                posting.extend(self._postings.get(alt, ()))
            if best is None or len(posting) < len(best):
                best, best_index = posting, i
            if not posting:
                return []
        assert best is not None
        starts = {
            (sid, pos - shift)
            for sid, pos in best
            for shift in self._shifts(query, best_index)
        }
        return sorted(starts)

    def count(self, query: CountQuery) -> int:
        """Number of occurrences; overlapping matches all count."""
        total = 0
        for sid, start in self._candidates(query):
            total += self._matches_at(sid, start, query)
        return total

    def _matches_at(self, sid: int, start: int, query: CountQuery) -> int:
        """Count matches of ``query`` beginning at token ``start``."""
        tokens = self._sentences[sid].tokens
        if start < 0:
            return 0
        if query.gap is None:
            end = start + len(query.phrase)
            if end > len(tokens):
                return 0
            for alts, tok in zip(query.phrase, tokens[start:end]):
                if tok not in alts:
                    return 0
            return 1
        left = query.phrase[: query.split]
        right = query.phrase[query.split :]
        if start + len(left) > len(tokens):
            return 0
        for alts, tok in zip(left, tokens[start : start + len(left)]):
            if tok not in alts:
                return 0
        hits = 0
        lo, hi = query.gap
        for g in range(lo, hi + 1):
            rstart = start + len(left) + g
            rend = rstart + len(right)
            if rend > len(tokens):
                break
            if all(t in alts for alts, t in zip(right, tokens[rstart:rend])):
                hits += 1
        return hits

    def snippets(self, query: CountQuery, limit: int) -> list[str]:
        """Raw text of up to ``limit`` matching sentences, in corpus order."""
        if limit < 1:
            raise CorpusError("limit must be >= 1")
        out = []
        seen: set[int] = set()
        for sid, start in self._candidates(query):
            if sid in seen:
                continue
            if self._matches_at(sid, start, query):
                seen.add(sid)
                out.append((sid, self._sentences[sid].raw))
        out.sort()
        return [raw for _, raw in out[:limit]]

    def save(self, path: str | Path) -> None:
        """Persist to a single binary file with a leading format-version byte."""
        payload = [
            (s.raw, s.tokens, s.spans, s.tags) for s in self._sentences
        ]
        blob = pickle.dumps((payload, self._provenance), protocol=4)
        Path(path).write_bytes(_MAGIC + bytes([_FORMAT_VERSION]) + blob)

    @classmethod
    def load(cls, path: str | Path) -> "CorpusIndex":
        data = Path(path).read_bytes()
        if data[: len(_MAGIC)] != _MAGIC:
            raise CorpusError("not an index file")
        version = data[len(_MAGIC)]
        if version != _FORMAT_VERSION:
            raise CorpusError(f"unsupported index format version {version}")
        payload, provenance = pickle.loads(data[len(_MAGIC) + 1 :])
        sentences = [_Sentence(raw, tokens, spans, tags) for raw, tokens, spans, tags in payload]
        return cls(sentences, provenance)


@dataclass(frozen=True)
class IngestConfig:
    """Corpus ingestion options."""

    tagged: bool = False


def _normalize_raw(raw: str) -> tuple[tuple[str, ...], tuple[tuple[int, int], ...]]:
    toks, spans = [], []
    for m in _WORD_RE.finditer(raw):
        toks.append(m.group().lower())
        spans.append(m.span())
    return tuple(toks), tuple(spans)


def build_index(corpus_file: str | Path, config: IngestConfig = IngestConfig()) -> CorpusIndex:
    """Index a UTF-8, one-sentence-per-line corpus file.

    With ``config.tagged`` each whitespace token must look like
    ``word_TAG``; normalized sub-tokens inherit the raw token's tag.
    """
    path = Path(corpus_file)
    text = path.read_text(encoding="utf-8")
    digest = hashlib.sha256(
        text.encode("utf-8") + repr(config).encode("utf-8")
    ).hexdigest()[:16]
    sentences: list[_Sentence] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if config.tagged:
            words, tags = [], []
            for raw_tok in line.split():
                word, sep, tag = raw_tok.rpartition("_")
                if not sep or not word or not tag:
                    raise CorpusError(f"malformed tagged token {raw_tok!r} on line {lineno}")
                words.append(word)
                tags.append(tag)
            raw = " ".join(words)
            toks: list[str] = []
            spans: list[tuple[int, int]] = []
            tok_tags: list[str] = []
            offset = 0
            for word, tag in zip(words, tags):
                for m in _WORD_RE.finditer(word):
                    toks.append(m.group().lower())
                    spans.append((offset + m.start(), offset + m.end()))
                    tok_tags.append(tag)
                offset += len(word) + 1
            if toks:
                sentences.append(_Sentence(raw, tuple(toks), tuple(spans), tuple(tok_tags)))
        else:
            toks2, spans2 = _normalize_raw(line)
            if toks2:
                sentences.append(_Sentence(line, toks2, spans2, None))
    index = CorpusIndex(sentences, provenance=f"{path}:{digest}")
    if index.total_tokens() == 0:
        raise CorpusError("empty corpus")
    return index


def count_phrase(index: CorpusIndex, query: CountQuery) -> int:
    """Exact-phrase occurrence count on the normalized layer."""
    return index.count(query)


def count_gap(
    index: CorpusIndex,
    left: CountQuery,
    right: CountQuery,
    min_gap: int,
    max_gap: int,
) -> int:
    """Occurrences of ``left``, a gap of min..max tokens, then ``right``."""
    if not (1 <= min_gap <= max_gap <= MAX_GAP):
        raise CorpusError(f"gap range must satisfy 1 <= min <= max <= {MAX_GAP}")
    query = CountQuery(
        phrase=left.phrase + right.phrase,
        gap=(min_gap, max_gap),
        split=len(left.phrase),
    )
    return index.count(query)


def fetch_snippets(index: CorpusIndex, query: CountQuery, limit: int) -> list[str]:
    """Raw sentences containing a match, truncated to ``limit``."""
    return index.snippets(query, limit)


def total_ngrams(index: CorpusIndex) -> int:
    """Total normalized-token count of the corpus (the N of the scores)."""
    return index.total_tokens()


class CountProvider(Protocol):
    """Anything that can answer counts for the decision models."""

    def count(self, query: CountQuery) -> int: ...

    def total(self) -> int: ...

    def snippets(self, query: CountQuery, limit: int) -> list[str]: ...


@dataclass
class IndexProvider:
    """CountProvider view over a CorpusIndex."""

    index: CorpusIndex

    def count(self, query: CountQuery) -> int:
        return self.index.count(query)

    def total(self) -> int:
        return self.index.total_tokens()

    def snippets(self, query: CountQuery, limit: int) -> list[str]:
        return self.index.snippets(query, limit)


@dataclass
class MappingProvider:
    """CountProvider backed by a fixed canonical-key -> count table.

    Useful for feeding decision models externally reported counts.
    Unknown queries count 0; snippet lookups return a fixed list.
    """

    counts: dict[str, int]
    total_tokens: int = 1
    snippet_table: dict[str, list[str]] = field(default_factory=dict)

    def count(self, query: CountQuery) -> int:
        return self.counts.get(query.canonical(), 0)

    def total(self) -> int:
        return self.total_tokens

    def snippets(self, query: CountQuery, limit: int) -> list[str]:
        return self.snippet_table.get(query.canonical(), [])[:limit]


class CountsCache:
    """Persistent canonical-query -> count table.

    Replaying a cache against the index that produced it returns
    identical counts; lookups are transparent.
    """

    def __init__(self, entries: dict[str, int] | None = None):
        self.entries: dict[str, int] = dict(entries or {})
        self.dirty = False

    @classmethod
    def load(cls, path: str | Path) -> "CountsCache":
        entries: dict[str, int] = {}
        p = Path(path)
        if p.exists():
            for line in p.read_text(encoding="utf-8").splitlines():
                if not line:
                    continue
                key, _, val = line.rpartition("\t")
                entries[key] = int(val)
        return cls(entries)

    def save(self, path: str | Path) -> None:
        lines = [f"{key}\t{count}" for key, count in sorted(self.entries.items())]
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
        self.dirty = False

    def get(self, key: str) -> int | None:
        return self.entries.get(key)

    def put(self, key: str, count: int) -> None:
        self.entries[key] = count
        self.dirty = True


@dataclass
class CachedProvider:
    """Memoizes counts from an inner provider in a CountsCache."""

    inner: CountProvider
    cache: CountsCache

    def count(self, query: CountQuery) -> int:
        key = query.canonical()
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        value = self.inner.count(query)
        self.cache.put(key, value)
        return value

    def total(self) -> int:
        return self.inner.total()

    def snippets(self, query: CountQuery, limit: int) -> list[str]:
        return self.inner.snippets(query, limit)
