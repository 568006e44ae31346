"""
Weak labels from a keyword lexicon
==================================

A post counts as depressive when at least one lexicon lemma appears in it.
"""

from moodbench import Pipeline, Post, bundled_lexicon, label_post

pipeline = Pipeline()
lexicon = bundled_lexicon(pipeline)
print(lexicon.name, len(lexicon.entries), "entries")

posts = [
    "I feel worthless and hopeless and lonely and just miserable.",
    "I feel lost. I'm unhappy it feels like that's never gonna change.",
    "what a wonderful sunny day",
]
for i, body in enumerate(posts):
    post = Post(id=str(i), subreddit="depression", title="", body=body, created_utc=0)
    label, matched = label_post(post, lexicon, pipeline)
    print(f"{label.value:<15} {matched}")

# a stricter rule: two distinct keywords
post = Post(id="x", subreddit="depression", title="", body=posts[1], created_utc=0)
print(label_post(post, lexicon, pipeline, threshold=2)[0])
