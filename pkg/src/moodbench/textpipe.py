"""Text preprocessing: tokenize, POS-tag, drop stopwords, then stem or lemmatize.

The stages run in that fixed order (see :func:`preprocess`). Everything here is
pure; a :class:`Pipeline` holds the loaded stopword set and lemma dictionary
and is safe to share between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DictUnavailable
from .porter import stem

__all__ = [
    "Document",
    "LemmaDictionary",
    "Normalizer",
    "Pipeline",
    "PipelineConfig",
    "PosTag",
    "default_stopwords",
    "lemmatize",
    "load_lemma_dictionary",
    "load_stopwords",
    "pos_tag",
    "preprocess",
    "remove_stopwords",
    "stem",
    "tokenize",
]

_APOSTROPHES = frozenset("'’")


class PosTag(enum.Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    OTHER = "OTHER"


class Normalizer(enum.Enum):
    LEMMATIZE = "lemmatize"
    STEM = "stem"
    NONE = "none"


def _is_word_char(ch):
    return ch.isalpha() or ch.isdecimal()


def tokenize(text: str) -> list[str]:
    """Split ``text`` into lowercase word tokens.

    Any character that is not a letter, digit or apostrophe separates tokens.
    An apostrophe survives only between two letters ("i'm" stays whole,
    "'quoted'" loses its quotes). Curly apostrophes are folded to ``'``.
    """
    text = text.lower()
    tokens = []
    current = []
    n = len(text)
    for i, ch in enumerate(text):
        if _is_word_char(ch):
            current.append(ch)
        elif (
            ch in _APOSTROPHES
            and current
            and current[-1].isalpha()
            and i + 1 < n
            and text[i + 1].isalpha()
        ):
            current.append("'")
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


# Closed-class lookup used before the suffix rules.
_OTHER_WORDS = frozenset(
    """
    i me my mine myself we us our ours ourselves you your yours yourself
    yourselves he him his himself she her hers herself it its itself they them
    their theirs themselves this that these those who whom whose which what
    a an the some any no every each either neither both all few many much
    several such another other
    in on at by for with about against between into through during before
    after above below to from up down out off over under again further upon
    within without across along around among behind beyond near since toward
    towards via of as than like
    and but or nor so yet if because while until although though unless
    whether then once here there when where why how not only very too also
    just now always never often sometimes still even really almost already
    ever again maybe perhaps
    i'm i've i'll i'd you're you've we're they're it's that's there's
    don't doesn't didn't can't won't isn't aren't wasn't weren't
    nothing something anything everything someone anyone everyone nobody
    """.split()
)

_COMMON_VERBS = frozenset(
    """
    am is are was were be been being have has had having do does did done
    go goes went gone get gets got gotten make makes made feel feels felt
    know knows knew known think thinks thought want wants say says said
    see sees saw seen seem seems take takes took taken come comes came
    give gives gave given tell tells told try tries can could will would
    shall should may might must need needs keep keeps kept let lets put
    leave leaves left find finds found become becomes became ran run runs
    sleep sleeps slept begin began begun bring brought buy bought hurt
    """.split()
)

_COMMON_ADJECTIVES = frozenset(
    """
    good better best bad worse worst happy happier happiest sad sadder
    saddest tired lonely lonelier loneliest unhappy glad great nice new old
    big small little long short high low right wrong sure able free full
    """.split()
)

_SUFFIX_RULES = (
    (("ly",), PosTag.ADV),
    (("ing", "ed", "ize", "ise"), PosTag.VERB),
    (("ness", "ment", "tion", "ity", "er", "or"), PosTag.NOUN),
    (("ous", "ful", "less", "able", "ive", "al"), PosTag.ADJ),
)


def _tag_one(token):
    if token in _OTHER_WORDS:
        return PosTag.OTHER
    if token in _COMMON_VERBS:
        return PosTag.VERB
    if token in _COMMON_ADJECTIVES:
        return PosTag.ADJ
    for suffixes, tag in _SUFFIX_RULES:
        if token.endswith(suffixes):
            return tag
    return PosTag.NOUN


def pos_tag(tokens: Sequence[str]) -> list[tuple[str, PosTag]]:
    """Coarse deterministic tagger: closed-class lookup, then suffix rules."""
    return [(tok, _tag_one(tok)) for tok in tokens]


def remove_stopwords(tagged, stopwords):
    return [(tok, tag) for tok, tag in tagged if tok not in stopwords]


@dataclass(frozen=True)
class LemmaDictionary:
    """Exact ``(surface, tag) -> lemma`` lookups.

    ``irregular`` holds the subset of entries listed under the ``[irregular]``
    section of the dictionary file.
    """

    entries: Mapping[tuple[str, PosTag], str]
    irregular: Mapping[tuple[str, PosTag], str] = field(default_factory=dict)

    def get(self, surface, tag):
        return self.entries.get((surface, tag))


def _parse_lemma_lines(lines, source):
    entries = {}
    irregular = {}
    in_irregular = False
    for line_no, raw in enumerate(lines, 1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line.strip() == "[irregular]":
            in_irregular = True
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DictUnavailable(f"{source}:{line_no}: expected surface<TAB>tag<TAB>lemma")
        surface, tag_name, lemma = (p.strip() for p in parts)
        try:
            tag = PosTag(tag_name.upper())
        except ValueError:
            raise DictUnavailable(f"{source}:{line_no}: unknown tag {tag_name!r}") from None
        key = (surface.lower(), tag)
        entries[key] = lemma.lower()
        if in_irregular:
            irregular[key] = lemma.lower()
    return LemmaDictionary(entries, irregular)


def load_lemma_dictionary(path: str | Path | None = None) -> LemmaDictionary:
    """Load a lemma dictionary file, or the bundled one when ``path`` is None."""
    try:
        if path is None:
            text = resources.files("moodbench").joinpath("data/lemmas.tsv").read_text("utf-8")
            source = "<bundled lemmas.tsv>"
        else:
            text = Path(path).read_text(encoding="utf-8")
            source = str(path)
    except (OSError, UnicodeDecodeError) as exc:
        raise DictUnavailable(f"cannot load lemma dictionary: {exc}") from exc
    return _parse_lemma_lines(text.splitlines(), source)


def load_stopwords(path: str | Path) -> frozenset[str]:
    words = Path(path).read_text(encoding="utf-8").split("\n")
    return frozenset(w.strip().lower() for w in words if w.strip())


def default_stopwords() -> frozenset[str]:
    text = resources.files("moodbench").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def _has_vowel(s):
    return any(ch in "aeiouy" for ch in s)


def _undouble(stem):
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "aeiouylsz":
        return stem[:-1]
    return None


def _restore_verb_stem(stem):
    if stem.endswith(("bl", "iz")):
        return stem + "e"
    if len(stem) >= 4 and stem.endswith("at") and stem[-3] not in "aeiou":
        return stem + "e"
    undoubled = _undouble(stem)
    if undoubled is not None:
        return undoubled
    # Silent-e restoration for short consonant-vowel-consonant stems: hop(e), lov(e).
    if len(stem) >= 3:
        c1, v, c2 = stem[-3], stem[-2], stem[-1]
        if c1 not in "aeiou" and v in "aeiou" and c2 not in "aeiouwxy":
            body = stem[:-3]
            if not _has_vowel(body):
                return stem + "e"
    return stem


def _lemmatize_verb(word):
    if word.endswith("ied") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("ing"):
        stem = word[:-3]
    elif word.endswith("ed") and not word.endswith("eed"):
        stem = word[:-2]
    elif word.endswith("s"):
        # third person singular follows the plural-noun rules
        return _lemmatize_noun(word)
    else:
        return word
    if len(stem) < 2 or not _has_vowel(stem):
        return word
    return _restore_verb_stem(stem)


def _lemmatize_noun(word):
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("sses", "xes", "zes", "ches", "shes")) and len(word) > 4:
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) > 3:
        return word[:-1]
    return word


def _lemmatize_adj(word):
    for suffix in ("iest", "ier"):
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            return word[: -len(suffix)] + "y"
    for suffix in ("est", "er"):
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            if len(stem) >= 3 and _has_vowel(stem):
                return _undouble(stem) or stem
    return word


def lemmatize(token: str, tag: PosTag, dictionary: LemmaDictionary) -> str:
    """Reduce ``token`` to its base form given its coarse POS tag.

    Exact dictionary lookup first; otherwise a tag-specific suffix rule; tokens
    no rule touches come back unchanged.
    """
    hit = dictionary.get(token, tag)
    if hit is not None:
        return hit
    if tag is PosTag.VERB:
        return _lemmatize_verb(token)
    if tag is PosTag.NOUN:
        return _lemmatize_noun(token)
    if tag is PosTag.ADJ:
        return _lemmatize_adj(token)
    return token


@dataclass(frozen=True)
class PipelineConfig:
    normalizer: Normalizer = Normalizer.LEMMATIZE
    stopword_set: frozenset[str] | None = None
    lemma_dict_path: str | None = None

    def __post_init__(self):
        if isinstance(self.normalizer, str):
            object.__setattr__(self, "normalizer", Normalizer(self.normalizer))
        if self.stopword_set is not None:
            words = frozenset(self.stopword_set)
            if any(w != w.lower() for w in words):
                raise ValueError("stopword_set entries must be lowercase")
            object.__setattr__(self, "stopword_set", words)


@dataclass(frozen=True)
class Document:
    tokens: tuple[str, ...]
    source_id: str = ""

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


class Pipeline:
    """A configured preprocessing pipeline with its resources loaded."""

    def __init__(self, config: PipelineConfig | None = None):
        self.config = config or PipelineConfig()
        stopwords = self.config.stopword_set
        self.stopwords = default_stopwords() if stopwords is None else stopwords
        self.lemmas = load_lemma_dictionary(self.config.lemma_dict_path)

    @property
    def normalizer(self) -> Normalizer:
        return self.config.normalizer

    def normalize(self, token, tag):
        if self.normalizer is Normalizer.LEMMATIZE:
            return lemmatize(token, tag, self.lemmas)
        if self.normalizer is Normalizer.STEM:
            return stem(token)
        return token

    def normalize_token(self, token: str) -> str:
        """Tag and normalize a single token, skipping stopword removal."""
        return self.normalize(token, _tag_one(token))

    def __call__(self, text: str, source_id: str = "") -> Document:
        return preprocess(text, self, source_id=source_id)


def preprocess(
    text: str, config: PipelineConfig | Pipeline | None = None, source_id: str = ""
) -> Document:
    """Run tokenize -> pos_tag -> remove_stopwords -> normalize, in that order."""
    pipeline = config if isinstance(config, Pipeline) else Pipeline(config)
    tagged = pos_tag(tokenize(text))
    kept = remove_stopwords(tagged, pipeline.stopwords)
    return Document(tuple(pipeline.normalize(tok, tag) for tok, tag in kept), source_id)


def preprocess_many(texts: Iterable[str], pipeline: Pipeline) -> list[Document]:
    return [preprocess(t, pipeline) for t in texts]
