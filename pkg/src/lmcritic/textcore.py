"""Tokenization, sentence records, and token-level edit scripts.

Everything here is pure and deterministic; the other modules build on these
primitives for perturbation, scoring, and evaluation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

# Fixed ASCII set split off word boundaries; see config override in cli.
SPLIT_PUNCT = set(".,!?;:\"'()")


@dataclass(frozen=True)
class Sentence:
    """A tokenized utterance. `tokens` is the canonical unit of work."""

    raw: str
    tokens: tuple[str, ...]
    id: Optional[str] = None

    def canonical(self) -> str:
        return detokenize(self.tokens)


@dataclass(frozen=True)
class SentencePair:
    bad: Sentence
    good: Sentence
    source: str = "labeled"  # labeled | synthetic | bifi_fixer | bifi_breaker


@dataclass(frozen=True)
class EditOp:
    position: int  # token index for delete/substitute, gap index for insert
    kind: str  # insert | delete | substitute
    before: Optional[str] = None
    after: Optional[str] = None


@dataclass(frozen=True)
class EditScript:
    ops: tuple[EditOp, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.ops)


def tokenize(raw: str, punct: Optional[set[str]] = None) -> Sentence:
    """Split on whitespace, then peel leading/trailing punctuation into
    separate tokens. Case and internal punctuation are preserved.
    """
    punct = SPLIT_PUNCT if punct is None else punct
    tokens: list[str] = []
    for chunk in raw.split():
        i, j = 0, len(chunk)
        lead: list[str] = []
        trail: list[str] = []
        while i < j and chunk[i] in punct:
            lead.append(chunk[i])
            i += 1
        while j > i and chunk[j - 1] in punct:
            trail.append(chunk[j - 1])
            j -= 1
        tokens.extend(lead)
        if j > i:
            tokens.append(chunk[i:j])
        tokens.extend(reversed(trail))
    return Sentence(raw=raw, tokens=tuple(tokens))


def detokenize(tokens: Iterable[str], punct: Optional[set[str]] = None) -> str:
    """Join with single spaces; punctuation-only tokens attach to the
    preceding token with no space. Inverse of tokenize on canonical text.
    """
    punct = SPLIT_PUNCT if punct is None else punct
    parts: list[str] = []
    for tok in tokens:
        if parts and tok and all(c in punct for c in tok):
            parts[-1] += tok
        else:
            parts.append(tok)
    return " ".join(parts)


def canonicalize(raw: str) -> str:
    """Canonical surface form: tokenize then detokenize."""
    return detokenize(tokenize(raw).tokens)


def sentence_from_tokens(tokens: Iterable[str], id: Optional[str] = None) -> Sentence:
    toks = tuple(tokens)
    return Sentence(raw=detokenize(toks), tokens=toks, id=id)


def extract_edits(src: Sentence, tgt: Sentence) -> EditScript:
    """Minimal token-level edit script mapping src to tgt.

    Unit costs with substitution allowed. Ties during backtrace prefer
    substitute over delete over insert, which pins a single canonical script
    for any (src, tgt) pair.
    """
    a, b = src.tokens, tgt.tokens
    n, m = len(a), len(b)
    # d[i][j] = distance between a[:i] and b[:j]
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        d[i][0] = i
    for j in range(1, m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        ai = a[i - 1]
        row, prev = d[i], d[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            row[j] = min(prev[j - 1] + cost, prev[j] + 1, row[j - 1] + 1)

    ops: list[EditOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and a[i - 1] == b[j - 1] and d[i][j] == d[i - 1][j - 1]:
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and d[i][j] == d[i - 1][j - 1] + 1:
            ops.append(EditOp(i - 1, "substitute", before=a[i - 1], after=b[j - 1]))
            i -= 1
            j -= 1
        elif i > 0 and d[i][j] == d[i - 1][j] + 1:
            ops.append(EditOp(i - 1, "delete", before=a[i - 1]))
            i -= 1
        else:
            ops.append(EditOp(i, "insert", after=b[j - 1]))
            j -= 1
    ops.reverse()
    return EditScript(ops=tuple(ops))


def apply_edits(script: EditScript, tokens: Iterable[str]) -> tuple[str, ...]:
    """Apply a position-sorted script to a token list."""
    out = list(tokens)
    offset = 0
    for op in script.ops:
        pos = op.position + offset
        if op.kind == "insert":
            out.insert(pos, op.after)
            offset += 1
        elif op.kind == "delete":
            del out[pos]
            offset -= 1
        elif op.kind == "substitute":
            out[pos] = op.after
        else:
            raise ValueError(f"unknown edit kind: {op.kind}")
    return tuple(out)


# --- JSON Lines file formats -------------------------------------------------
# Sentence file: {"id": str, "text": str} per line.
# Pair file: {"bad": str, "good": str, "source": str} per line.


def read_sentences(path: str) -> list[Sentence]:
    out: list[Sentence] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            sent = tokenize(rec["text"])
            out.append(Sentence(raw=sent.raw, tokens=sent.tokens, id=rec.get("id", str(lineno))))
    return out


def write_sentences(path: str, sentences: Iterable[Sentence]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i, s in enumerate(sentences):
            rec = {"id": s.id if s.id is not None else str(i), "text": s.raw}
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")


def read_pairs(path: str, drop_identity: bool = True) -> list[SentencePair]:
    out: list[SentencePair] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if drop_identity and rec["bad"] == rec["good"]:
                continue
            bad = tokenize(rec["bad"])
            good = tokenize(rec["good"])
            out.append(
                SentencePair(
                    bad=Sentence(bad.raw, bad.tokens, id=f"{lineno}:bad"),
                    good=Sentence(good.raw, good.tokens, id=f"{lineno}:good"),
                    source=rec.get("source", "labeled"),
                )
            )
    return out


def write_pairs(path: str, pairs: Iterable[SentencePair]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for p in pairs:
            rec = {"bad": p.bad.raw, "good": p.good.raw, "source": p.source}
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")


def iter_jsonl(path: str) -> Iterator[dict]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)
