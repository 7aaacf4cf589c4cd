"""Text analysis: feature extraction, emotion scoring, sentence and line division."""
from .features import Tweet, TweetMeta, extract_features, emoji_name, load_corpus
from .sentences import split_sentences, load_abbreviations
from .lines import LinePlan, divide_lines
from .scoring import (
    EmotionScorer,
    HttpScorer,
    IdentityTranslator,
    LexiconScorer,
    ScorerFailure,
    Translator,
    classify,
    tokenize,
)

__all__ = [
    "Tweet",
    "TweetMeta",
    "extract_features",
    "emoji_name",
    "load_corpus",
    "split_sentences",
    "load_abbreviations",
    "LinePlan",
    "divide_lines",
    "EmotionScorer",
    "LexiconScorer",
    "HttpScorer",
    "ScorerFailure",
    "Translator",
    "IdentityTranslator",
    "classify",
    "tokenize",
]
