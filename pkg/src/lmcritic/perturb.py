"""Local neighborhood generation.

Two perturbation families approximate the meaning-preserving neighborhood of
a sentence: character-level edit-distance-1 variants and word-level
insert/delete/replace/morphology variants driven by small dictionaries.
Sampling is uniform without replacement over the union space and fully
deterministic given (sentence, seed).
"""

from __future__ import annotations

import hashlib
import json
import random
import string
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .textcore import Sentence, canonicalize, detokenize, tokenize

MODES = ("ed1", "ed1_word_all", "ed1_word")

LOWERCASE = tuple(string.ascii_lowercase)

MORPH_SUFFIXES = ("ed", "ing")
MIN_STEM = 3


def derive_seed(global_seed: int, text: str) -> int:
    """Stable 64-bit per-sentence seed; independent of process and schedule."""
    h = hashlib.blake2b(digest_size=8)
    h.update(str(global_seed).encode("utf-8"))
    h.update(b"\x00")
    h.update(text.encode("utf-8"))
    return int.from_bytes(h.digest(), "little")


@dataclass(frozen=True)
class WordDicts:
    insertable: tuple[str, ...]
    deletable: tuple[str, ...]
    replaceable: dict[str, tuple[str, ...]]
    meaning_altering: tuple[str, ...]

    @classmethod
    def from_json(cls, path: str) -> "WordDicts":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def from_dict(cls, obj: dict) -> "WordDicts":
        return cls(
            insertable=tuple(obj.get("insertable", ())),
            deletable=tuple(obj.get("deletable", ())),
            replaceable={k: tuple(v) for k, v in obj.get("replaceable", {}).items()},
            meaning_altering=tuple(obj.get("meaning_altering", ())),
        )

    @classmethod
    def default(cls) -> "WordDicts":
        data = resources.files("lmcritic.data").joinpath("word_dicts.json").read_text("utf-8")
        return cls.from_dict(json.loads(data))

    def effective(self, include_meaning_altering: bool) -> "WordDicts":
        """Dictionaries as seen by one perturbation mode.

        With meaning-altering words included the full lists apply; without,
        those words are stripped from every operation so no variant can add
        or drop one.
        """
        if include_meaning_altering:
            return self
        ma = set(self.meaning_altering)
        return WordDicts(
            insertable=tuple(w for w in self.insertable if w not in ma),
            deletable=tuple(w for w in self.deletable if w not in ma),
            replaceable={
                k: kept
                for k, v in self.replaceable.items()
                if k not in ma and (kept := tuple(c for c in v if c not in ma))
            },
            meaning_altering=self.meaning_altering,
        )


@dataclass(frozen=True)
class PerturberConfig:
    mode: str = "ed1_word"
    sample_size: int = 100
    seed: int = 0
    dicts: WordDicts = field(default_factory=WordDicts.default)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown perturbation mode: {self.mode}")
        if self.sample_size < 1:
            raise ValueError("sample_size must be >= 1")


@dataclass(frozen=True)
class Neighborhood:
    center: Sentence
    variants: tuple[str, ...]  # deduplicated, excludes the center


def ed1_enumerate(s: str, alphabet: Optional[tuple[str, ...]] = None) -> set[str]:
    """All strings exactly one character edit away from s.

    Edits: insert an alphabet letter anywhere, delete any character, replace
    any character with a different alphabet letter, swap two adjacent
    distinct characters. s itself is never included.
    """
    letters = LOWERCASE if alphabet is None else tuple(alphabet)
    out: set[str] = set()
    n = len(s)
    for i in range(n + 1):
        head, tail = s[:i], s[i:]
        for c in letters:
            out.add(head + c + tail)
    for i in range(n):
        out.add(s[:i] + s[i + 1 :])
        head, tail = s[:i], s[i + 1 :]
        ci = s[i]
        for c in letters:
            if c != ci:
                out.add(head + c + tail)
    for i in range(n - 1):
        if s[i] != s[i + 1]:
            out.add(s[:i] + s[i + 1] + s[i] + s[i + 2 :])
    out.discard(s)
    return out


def _morph_variants(token: str) -> set[str]:
    """Suffix toggles: plural s on/off and base/ed/ing swaps."""
    out: set[str] = set()
    if not token.isalpha():
        return out
    if token.endswith("s"):
        if len(token) > 1:
            out.add(token[:-1])
    else:
        out.add(token + "s")
    stem, suffix = token, ""
    for sfx in MORPH_SUFFIXES:
        if token.endswith(sfx) and len(token) - len(sfx) >= MIN_STEM:
            stem, suffix = token[: -len(sfx)], sfx
            break
    if len(stem) >= MIN_STEM:
        for sfx in ("",) + MORPH_SUFFIXES:
            if sfx != suffix:
                out.add(stem + sfx)
    out.discard(token)
    return out


def word_perturb_enumerate(
    x: Sentence, dicts: WordDicts, include_meaning_altering: bool
) -> set[str]:
    """All single word-level perturbations of x, as detokenized strings."""
    eff = dicts.effective(include_meaning_altering)
    ma = set() if include_meaning_altering else set(dicts.meaning_altering)
    toks = list(x.tokens)
    variants: set[str] = set()

    for gap in range(len(toks) + 1):
        for w in eff.insertable:
            variants.add(detokenize(toks[:gap] + [w] + toks[gap:]))

    deletable = set(eff.deletable)
    for i, t in enumerate(toks):
        if t in deletable:
            variants.add(detokenize(toks[:i] + toks[i + 1 :]))

    for i, t in enumerate(toks):
        for cand in eff.replaceable.get(t, ()):
            variants.add(detokenize(toks[:i] + [cand] + toks[i + 1 :]))

    for i, t in enumerate(toks):
        if t in ma:
            continue
        for form in _morph_variants(t):
            if form in ma:
                continue
            variants.add(detokenize(toks[:i] + [form] + toks[i + 1 :]))

    variants.discard(detokenize(toks))
    variants.discard(x.raw)
    return variants


def enumerate_space(x: Sentence, cfg: PerturberConfig) -> set[str]:
    """The full perturbation space implied by cfg.mode."""
    space = ed1_enumerate(x.raw)
    if cfg.mode != "ed1":
        space |= word_perturb_enumerate(x, cfg.dicts, cfg.mode == "ed1_word_all")
    space.discard(x.raw)
    return space


def sample_neighborhood(x: Sentence, cfg: PerturberConfig) -> Neighborhood:
    """Uniform sample without replacement from the perturbation space.

    Deterministic given (x, cfg.seed); an exhausted space returns every
    variant.
    """
    space = sorted(enumerate_space(x, cfg))
    k = min(cfg.sample_size, len(space))
    rng = random.Random(derive_seed(cfg.seed, x.raw))
    picked = space if k == len(space) else rng.sample(space, k)
    return Neighborhood(center=x, variants=tuple(picked))


def perturb_once(x: Sentence, cfg: PerturberConfig, rng: random.Random) -> Sentence:
    """Draw one uniform variant from the space; x unchanged if space empty."""
    space = sorted(enumerate_space(x, cfg))
    if not space:
        return x
    return tokenize(rng.choice(space))
