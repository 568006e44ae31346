"""Depression screening of social-media posts with bag-of-words classifiers.

Posts are weakly labelled by lexicon keyword matches, preprocessed
(tokenize, POS-tag, stopwords, lemmatize or stem), turned into word-count
vectors and fed to four from-scratch classifiers: naive Bayes, logistic
regression, a linear SVM and a random forest.
"""

from .corpus import (
    Label,
    LabeledPost,
    LabelSource,
    Lexicon,
    Post,
    SplitSpec,
    bundled_lexicon,
    label_corpus,
    label_post,
    load_lexicon,
    parse_labeled,
    parse_posts,
    stratified_split,
)
from .evaluation import (
    BenchConfig,
    ConfusionMatrix,
    MetricsReport,
    evaluate,
    render_report,
    run_benchmark,
)
from .features import SparseVector, Vocabulary, build_vocabulary, vectorize, vectorize_corpus
from .models import (
    Hyperparams,
    ModelKind,
    TrainedModel,
    load_model,
    predict,
    predict_score,
    save_model,
    train,
)
from .synthetic import bundled_synthetic_corpus, generate_synthetic
from .textpipe import (
    Document,
    Normalizer,
    Pipeline,
    PipelineConfig,
    PosTag,
    lemmatize,
    pos_tag,
    preprocess,
    remove_stopwords,
    stem,
    tokenize,
)

__version__ = "0.1.0"
