"""Seeded synthetic corpora shaped like the Reddit depression / r/Happy data.

Each post mixes a shared neutral vocabulary with a class-leaning topic pool.
Depressive posts additionally carry 1-4 lexicon keywords. With probability
``noise`` a post is written with the *other* class's content while keeping its
own label, which caps achievable accuracy at roughly ``1 - noise``.
"""

from __future__ import annotations

import numpy as np

from .corpus import Label, LabeledPost, LabelSource, Lexicon, Post, _as_pipeline

NEUTRAL_WORDS = tuple(
    """
    day today week weekend time home work family friend mom dad brother sister
    school class morning night coffee phone car city year month music movie
    book dinner lunch food walk talk house room job boss office weather
    street bus train kitchen window door table chair shirt shoes game show
    picture video message text call plan idea question answer story reason
    thing place name number money price store market park river lake road
    tree dog cat bird summer winter spring autumn minute hour cousin uncle
    aunt neighbor teacher student doctor nurse driver computer laptop screen
    paper letter card gift box bag bottle water tea bread rice pizza
    """.split()
)

# Topic words that lean towards depression-forum posts without being keywords.
DEPRESSIVE_TOPIC_WORDS = tuple(
    """
    therapist therapy medication meds diagnosis counselor psychiatrist
    appointment prescription dose antidepressant bed ceiling blanket
    darkness silence rain funeral hospital breakup divorce debt rent bills
    eviction unemployment layoff deadline exam grades nightmare headache
    fatigue appetite weight routine shower dishes laundry mess curtains
    """.split()
)

# Topic words that lean towards r/Happy posts.
HAPPY_TOPIC_WORDS = tuple(
    """
    sunshine beach hike puppy kitten birthday wedding vacation garden smile
    laugh celebration promotion graduation concert festival picnic sunset
    sunrise rainbow flowers adventure trip holiday party dance hug cake
    cookies pancakes kayak camping fireworks proposal engagement baby
    milestone achievement award scholarship marathon recovery gratitude
    """.split()
)

_EPOCH_2022 = 1640995200
_YEAR_SECONDS = 365 * 86400


def _keyword_pool(lexicon, pipeline):
    # Only keywords that survive preprocessing as themselves (or another
    # lexicon lemma) guarantee a lexicon hit in the generated text.
    pool = []
    for entry in sorted(lexicon.entries):
        if entry in pipeline.stopwords:
            continue
        if pipeline.normalize_token(entry) in lexicon:
            pool.append(entry)
    if not pool:
        raise ValueError("lexicon has no entries usable as synthetic keywords")
    return pool


def _words(rng, n, own, other, p_own=0.3, p_other=0.12):
    out = []
    draws = rng.random(n)
    for u in draws:
        if u < p_own:
            pool = own
        elif u < p_own + p_other:
            pool = other
        else:
            pool = NEUTRAL_WORDS
        out.append(pool[rng.integers(len(pool))])
    return out


def _render(words, rng):
    sentences = []
    i = 0
    while i < len(words):
        size = int(rng.integers(5, 11))
        chunk = words[i : i + size]
        sentences.append(" ".join(chunk).capitalize() + ".")
        i += size
    return " ".join(sentences)


def _make_text(rng, depressive_content, keywords):
    if depressive_content:
        words = _words(rng, int(rng.integers(12, 40)), DEPRESSIVE_TOPIC_WORDS, HAPPY_TOPIC_WORDS)
        for _ in range(int(rng.integers(1, 5))):
            pos = int(rng.integers(len(words) + 1))
            words.insert(pos, keywords[rng.integers(len(keywords))])
    else:
        words = _words(rng, int(rng.integers(12, 40)), HAPPY_TOPIC_WORDS, DEPRESSIVE_TOPIC_WORDS)
    n_title = int(rng.integers(3, 7))
    return _render(words[:n_title], rng), _render(words[n_title:], rng)


def generate_synthetic(
    n_dep: int,
    n_nondep: int,
    noise: float = 0.05,
    seed: int = 42,
    lexicon: Lexicon | None = None,
    pipeline=None,
) -> list[LabeledPost]:
    """Generate ``n_dep + n_nondep`` labelled posts in a seeded random order."""
    if n_dep < 1 or n_nondep < 1:
        raise ValueError("both class counts must be >= 1")
    if not 0.0 <= noise <= 1.0:
        raise ValueError("noise must be in [0, 1]")
    pipeline = _as_pipeline(pipeline)
    if lexicon is None:
        from .corpus import bundled_lexicon

        lexicon = bundled_lexicon(pipeline)
    keywords = _keyword_pool(lexicon, pipeline)
    rng = np.random.default_rng(seed)

    labels = [Label.DEPRESSIVE] * n_dep + [Label.NON_DEPRESSIVE] * n_nondep
    order = rng.permutation(len(labels))
    corpus = []
    for i, j in enumerate(order):
        label = labels[j]
        flipped = rng.random() < noise
        depressive_content = (label is Label.DEPRESSIVE) != flipped
        title, body = _make_text(rng, depressive_content, keywords)
        post = Post(
            id=f"syn{i:06d}",
            subreddit="depression" if label is Label.DEPRESSIVE else "Happy",
            title=title,
            body=body,
            created_utc=_EPOCH_2022 + int(rng.integers(_YEAR_SECONDS)),
            score=int(rng.integers(1, 5000)),
        )
        corpus.append(LabeledPost(post, label, LabelSource.MANUAL))
    return corpus


# Reference corpus: class counts of the original weakly labelled dump.
BUNDLED_COUNTS = (1441, 1165)
BUNDLED_NOISE = 0.05
BUNDLED_SEED = 42


def bundled_synthetic_corpus(pipeline=None) -> list[LabeledPost]:
    """The reference benchmark corpus, regenerated (it is not stored on disk)."""
    return generate_synthetic(*BUNDLED_COUNTS, BUNDLED_NOISE, BUNDLED_SEED, pipeline=pipeline)
