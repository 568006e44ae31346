"""
Preprocessing a post
====================

Tokenize, tag, drop stopwords, then lemmatize or stem.
"""

from moodbench import Normalizer, Pipeline, PipelineConfig, pos_tag, tokenize

text = "I feel lost. I'm unhappy it feels like that's never gonna change."

tokens = tokenize(text)
print(tokens)

# coarse tags drive the lemmatizer
for token, tag in pos_tag(tokens):
    print(f"{token:>8}  {tag.value}")

lemmas = Pipeline()(text)
print("lemmatized:", lemmas.tokens)

stems = Pipeline(PipelineConfig(normalizer=Normalizer.STEM))(text)
print("stemmed:   ", stems.tokens)

# both normalizers agree on the textbook case
stemmer = Pipeline(PipelineConfig(normalizer=Normalizer.STEM))
print(Pipeline()("running").tokens, stemmer("running").tokens)
