import random

import pytest

from lmcritic.textcore import (
    EditOp,
    Sentence,
    apply_edits,
    canonicalize,
    detokenize,
    extract_edits,
    read_pairs,
    read_sentences,
    sentence_from_tokens,
    tokenize,
    write_pairs,
    write_sentences,
    SentencePair,
)


def lev_tokens(a, b):
    """Independent DP oracle for token Levenshtein distance (unit costs)."""
    n, m = len(a), len(b)
    d = list(range(m + 1))
    for i in range(1, n + 1):
        prev = d[0]
        d[0] = i
        for j in range(1, m + 1):
            cur = d[j]
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[j] = min(prev + cost, d[j] + 1, d[j - 1] + 1)
            prev = cur
    return d[m]


def all_minimal_scripts(a, b):
    """Enumerate every minimal edit script as op tuples (for tie checks)."""
    dist = lev_tokens(a, b)

    def rec(i, j, budget):
        if i == len(a) and j == len(b):
            yield ()
            return
        if budget < 0:
            return
        if i < len(a) and j < len(b) and a[i] == b[j] and lev_tokens(a[i + 1 :], b[j + 1 :]) <= budget:
            yield from rec(i + 1, j + 1, budget)
        if i < len(a) and j < len(b) and lev_tokens(a[i + 1 :], b[j + 1 :]) <= budget - 1:
            for rest in rec(i + 1, j + 1, budget - 1):
                yield (("substitute", i, a[i], b[j]),) + rest
        if i < len(a) and lev_tokens(a[i + 1 :], b[j:]) <= budget - 1:
            for rest in rec(i + 1, j, budget - 1):
                yield (("delete", i, a[i], None),) + rest
        if j < len(b) and lev_tokens(a[i:], b[j + 1 :]) <= budget - 1:
            for rest in rec(i, j + 1, budget - 1):
                yield (("insert", i, None, b[j]),) + rest

    return set(rec(0, 0, dist))


class TestTokenize:
    def test_trailing_period(self):
        assert tokenize("Alice likes cats.").tokens == ("Alice", "likes", "cats", ".")

    def test_empty(self):
        assert tokenize("").tokens == ()

    def test_quotes_and_contraction(self):
        # Hand trace of the punctuation-splitting rule: internal apostrophe
        # stays, quote characters peel off both ends.
        assert tokenize('it\'s "fine"').tokens == ("it's", '"', "fine", '"')

    def test_no_lowercasing(self):
        assert tokenize("The CAT").tokens == ("The", "CAT")

    def test_multiple_punct(self):
        assert tokenize("(really?!)").tokens == ("(", "really", "?", "!", ")")

    def test_unicode_passthrough(self):
        assert tokenize("café rocks").tokens == ("café", "rocks")


class TestDetokenize:
    def test_inverse_of_tokenize(self):
        assert detokenize(["Alice", "likes", "cats", "."]) == "Alice likes cats."

    def test_empty(self):
        assert detokenize([]) == ""

    def test_comma_attachment(self):
        assert detokenize(["a", ",", "b"]) == "a, b"

    def test_round_trip_tokens(self):
        for raw in [
            "Alice likes cats.",
            'it\'s "fine"',
            "a, b, and c!",
            "(one) two; three:",
            "",
            "don't stop.",
        ]:
            toks = tokenize(raw).tokens
            assert tokenize(detokenize(toks)).tokens == toks

    def test_round_trip_canonical_strings(self):
        rng = random.Random(7)
        pieces = ["cat", "dog,", "it's", '"x"', "(y)", "z.", "!", "w;"]
        for _ in range(200):
            raw = " ".join(rng.choice(pieces) for _ in range(rng.randint(0, 6)))
            canon = canonicalize(raw)
            assert canonicalize(canon) == canon
            assert detokenize(tokenize(canon).tokens) == canon


class TestExtractEdits:
    def test_identity(self):
        s = sentence_from_tokens(["a", "cat"])
        assert extract_edits(s, s).ops == ()

    def test_single_substitution(self):
        src = sentence_from_tokens(["a", "cat"])
        tgt = sentence_from_tokens(["an", "cat"])
        assert extract_edits(src, tgt).ops == (
            EditOp(0, "substitute", before="a", after="an"),
        )

    def test_two_op_script_matches_dp_minimum(self):
        src = sentence_from_tokens(["the", "cats", "sleep"])
        tgt = sentence_from_tokens(["the", "cat", "sleeps"])
        script = extract_edits(src, tgt)
        assert len(script) == 2
        assert len(script) == lev_tokens(src.tokens, tgt.tokens)
        assert apply_edits(script, src.tokens) == tgt.tokens

    def test_soundness_and_minimality_random(self):
        rng = random.Random(1234)
        vocab = ["a", "b", "c", "d"]
        for _ in range(400):
            a = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            b = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            script = extract_edits(sentence_from_tokens(a), sentence_from_tokens(b))
            assert apply_edits(script, a) == tuple(b)
            assert len(script) == lev_tokens(a, b)

    def test_script_is_among_all_minimal_scripts(self):
        rng = random.Random(99)
        vocab = ["x", "y", "z"]
        for _ in range(40):
            a = [rng.choice(vocab) for _ in range(rng.randint(0, 5))]
            b = [rng.choice(vocab) for _ in range(rng.randint(0, 5))]
            script = extract_edits(sentence_from_tokens(a), sentence_from_tokens(b))
            key = tuple(
                (op.kind, op.position, op.before, op.after) for op in script.ops
            )
            assert key in all_minimal_scripts(tuple(a), tuple(b))

    def test_insert_positions_are_gap_indices(self):
        src = sentence_from_tokens(["b"])
        tgt = sentence_from_tokens(["a", "b", "c"])
        script = extract_edits(src, tgt)
        kinds = [(op.kind, op.position, op.after) for op in script.ops]
        assert kinds == [("insert", 0, "a"), ("insert", 1, "c")]


class TestFiles:
    def test_sentence_round_trip(self, tmp_path):
        path = str(tmp_path / "sents.jsonl")
        sents = [tokenize("a cat."), tokenize("the dog!")]
        write_sentences(path, sents)
        back = read_sentences(path)
        assert [s.raw for s in back] == [s.raw for s in sents]
        assert [s.tokens for s in back] == [s.tokens for s in sents]
        assert all(s.id is not None for s in back)

    def test_pair_round_trip_drops_identity(self, tmp_path):
        path = str(tmp_path / "pairs.jsonl")
        pairs = [
            SentencePair(bad=tokenize("a catt."), good=tokenize("a cat."), source="synthetic"),
            SentencePair(bad=tokenize("same."), good=tokenize("same."), source="synthetic"),
        ]
        write_pairs(path, pairs)
        back = read_pairs(path)
        assert len(back) == 1
        assert back[0].bad.raw == "a catt."
        assert back[0].source == "synthetic"
