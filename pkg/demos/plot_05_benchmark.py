"""
The four-model benchmark
========================

Runs on the synthetic reference corpus. Takes about ten seconds, most of it
spent growing the forest.
"""

from moodbench import bundled_synthetic_corpus, render_report, run_benchmark
from moodbench.models import save_model

corpus = bundled_synthetic_corpus()
print(len(corpus), "posts")

result = run_benchmark(corpus, seed=42)
print(f"train={result.n_train} test={result.n_test} vocabulary={result.vocab_size}")
print(render_report(result.rows, "table"))
print(render_report(result.rows, "csv"))

for kind, report in result:
    cm = report.confusion
    print(f"{kind.display_name:<20} tp={cm.tp} fp={cm.fp} tn={cm.tn} fn={cm.fn}")

# models carry their vocabulary, so a saved file is enough to predict later
save_model(result.models[next(iter(result.models))], "lr.mdb")
