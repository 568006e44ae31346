from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moodbench.errors import DictUnavailable
from moodbench.textpipe import (
    Document,
    Normalizer,
    Pipeline,
    PipelineConfig,
    PosTag,
    default_stopwords,
    lemmatize,
    load_lemma_dictionary,
    pos_tag,
    preprocess,
    remove_stopwords,
    tokenize,
)


@pytest.fixture(scope="module")
def lemmas():
    return load_lemma_dictionary()


class TestTokenize:
    def test_lost_and_unhappy_sentence(self):
        assert tokenize("I feel lost. I'm unhappy") == ["i", "feel", "lost", "i'm", "unhappy"]

    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_runs(self):
        assert tokenize("Well--done!!") == ["well", "done"]

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("'quoted'", ["quoted"]),
            ("rock 'n' roll", ["rock", "n", "roll"]),
            ("don't", ["don't"]),
            ("I’m fine", ["i'm", "fine"]),
            ("abc123 4ever", ["abc123", "4ever"]),
            ("90's", ["90", "s"]),
            ("Café NAÏVE", ["café", "naïve"]),
            ("snake_case", ["snake", "case"]),
        ],
    )
    def test_apostrophes_digits_unicode(self, text, expected):
        assert tokenize(text) == expected

    @given(st.text())
    def test_tokens_are_lowercase_and_nonempty(self, text):
        for tok in tokenize(text):
            assert tok
            assert tok == tok.lower()
            assert not tok.startswith("'") and not tok.endswith("'")
            assert all(ch.isalpha() or ch.isdecimal() or ch == "'" for ch in tok)


class TestPosTag:
    def test_suffix_rules(self):
        assert pos_tag(["running"]) == [("running", PosTag.VERB)]
        assert pos_tag(["hopeless"]) == [("hopeless", PosTag.ADJ)]
        assert pos_tag(["quickly", "sadness"]) == [("quickly", PosTag.ADV), ("sadness", PosTag.NOUN)]

    def test_closed_class_before_suffixes(self):
        tags = dict(pos_tag(["the", "was", "feel", "only", "table"]))
        assert tags["the"] is PosTag.OTHER
        assert tags["was"] is PosTag.VERB
        assert tags["feel"] is PosTag.VERB
        # "only" ends in -ly but is a closed-class word
        assert tags["only"] is PosTag.OTHER
        assert tags["table"] is PosTag.ADJ  # -able rule; the tagger is deliberately coarse

    def test_fallback_is_noun(self):
        assert pos_tag(["zebra"]) == [("zebra", PosTag.NOUN)]

    @given(st.lists(st.text(alphabet="abcdefghijklmnopqrstuvwxyz'", min_size=1)))
    def test_preserves_length_and_order(self, tokens):
        tagged = pos_tag(tokens)
        assert [t for t, _ in tagged] == tokens


class TestStopwords:
    def test_default_list(self):
        words = default_stopwords()
        assert len(words) == 127
        assert {"a", "an", "the", "in", "of", "i'm", "don't", "that's"} <= words

    def test_examples(self):
        sw = default_stopwords()
        tagged = pos_tag(["a", "sad", "day"])
        assert [t for t, _ in remove_stopwords(tagged, sw)] == ["sad", "day"]
        assert remove_stopwords([], sw) == []
        assert remove_stopwords(pos_tag(["the"] * 3), sw) == []


class TestLemmatize:
    @pytest.mark.parametrize(
        "token, tag, expected",
        [
            ("running", PosTag.VERB, "run"),
            ("was", PosTag.VERB, "be"),
            ("sad", PosTag.ADJ, "sad"),
            ("hoping", PosTag.VERB, "hope"),
            ("loved", PosTag.VERB, "love"),
            ("stopped", PosTag.VERB, "stop"),
            ("walked", PosTag.VERB, "walk"),
            ("missing", PosTag.VERB, "miss"),
            ("feels", PosTag.VERB, "feel"),
            ("watches", PosTag.VERB, "watch"),
            ("passes", PosTag.VERB, "pass"),
            ("opening", PosTag.VERB, "open"),
            ("troubled", PosTag.VERB, "trouble"),
            ("realized", PosTag.VERB, "realize"),
            ("worried", PosTag.VERB, "worry"),
            ("sing", PosTag.VERB, "sing"),
            ("need", PosTag.VERB, "need"),
            ("ponies", PosTag.NOUN, "pony"),
            ("cats", PosTag.NOUN, "cat"),
            ("boxes", PosTag.NOUN, "box"),
            ("sadness", PosTag.NOUN, "sadness"),
            ("bus", PosTag.NOUN, "bus"),
            ("children", PosTag.NOUN, "child"),
            ("bigger", PosTag.ADJ, "big"),
            ("happier", PosTag.ADJ, "happy"),
            ("better", PosTag.ADJ, "good"),
            ("quickly", PosTag.ADV, "quickly"),
            ("the", PosTag.OTHER, "the"),
        ],
    )
    def test_examples(self, lemmas, token, tag, expected):
        assert lemmatize(token, tag, lemmas) == expected

    def test_irregular_table_is_authoritative(self, lemmas):
        assert len(lemmas.irregular) > 50
        for (surface, tag), lemma in lemmas.irregular.items():
            assert lemmatize(surface, tag, lemmas) == lemma

    def test_bad_dictionary_path(self, tmp_path):
        with pytest.raises(DictUnavailable):
            Pipeline(PipelineConfig(lemma_dict_path=str(tmp_path / "missing.tsv")))

    def test_malformed_dictionary(self, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("running\tVERB\n", encoding="utf-8")
        with pytest.raises(DictUnavailable):
            load_lemma_dictionary(bad)

    def test_custom_dictionary(self, tmp_path):
        custom = tmp_path / "lemmas.tsv"
        custom.write_text("# comment\nfeels\tNOUN\tfeeling\n[irregular]\ngeese\tNOUN\tgoose\n", encoding="utf-8")
        d = load_lemma_dictionary(custom)
        assert d.get("feels", PosTag.NOUN) == "feeling"
        assert d.irregular == {("geese", PosTag.NOUN): "goose"}


class TestPreprocess:
    def test_worthless_and_hopeless(self):
        assert preprocess("I feel worthless and hopeless").tokens == ("feel", "worthless", "hopeless")

    def test_empty(self):
        assert preprocess("").tokens == ()

    def test_all_stopwords_any_case(self):
        assert preprocess("The THE the").tokens == ()

    def test_stage_order(self, pipeline):
        # "running" is not a stopword, so it reaches the normaliser;
        # "being" is tagged VERB and maps to "be" only after stopword removal.
        assert preprocess("Running being", pipeline).tokens == ("run",)

    def test_stem_mode(self):
        doc = preprocess("The ponies were running", PipelineConfig(normalizer=Normalizer.STEM))
        assert doc.tokens == ("poni", "run")

    def test_none_mode(self):
        doc = preprocess("The ponies were running", PipelineConfig(normalizer="none"))
        assert doc.tokens == ("ponies", "running")

    def test_custom_stopwords(self):
        cfg = PipelineConfig(stopword_set=frozenset({"feel"}))
        assert preprocess("I feel sad", cfg).tokens == ("i", "sad")

    def test_uppercase_stopwords_rejected(self):
        with pytest.raises(ValueError):
            PipelineConfig(stopword_set=frozenset({"The"}))

    def test_source_id_and_document(self, pipeline):
        doc = pipeline("sad day", source_id="p1")
        assert isinstance(doc, Document)
        assert doc.source_id == "p1"
        assert list(doc) == ["sad", "day"]

    @given(st.text(alphabet=st.characters(codec="ascii"), max_size=200))
    def test_idempotent_without_normaliser(self, text):
        cfg = PipelineConfig(normalizer=Normalizer.NONE)
        once = preprocess(text, cfg).tokens
        assert preprocess(" ".join(once), cfg).tokens == once

    @given(st.text(max_size=200))
    def test_output_tokens_survive_stopword_filter(self, text):
        sw = default_stopwords()
        doc = preprocess(text, PipelineConfig(normalizer=Normalizer.NONE))
        assert not any(tok in sw for tok in doc.tokens)


def test_bundled_data_files_exist():
    import moodbench

    data = Path(moodbench.__file__).parent / "data"
    for name in ("stopwords.txt", "lemmas.tsv", "lexicon_core.txt", "lexicon_extended.txt"):
        assert (data / name).is_file()
