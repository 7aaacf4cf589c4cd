"""How texts become emotion profiles.

The bundled lexicon maps words to eight emotion associations. A text's
score per emotion is the mean over its lexicon hits; emotions scoring at
or above the predominance threshold (0.30 by default) become predominant,
strongest first. A text with no predominant emotion is neutral, which
later forces the black-on-white poster and the calm music row.

Run: python demos/02_emotion_profiles.py
"""
from affiche.analysis import LexiconScorer, classify, extract_features
from affiche.config import load_config

cfg = load_config(None)
scorer = LexiconScorer.bundled()

SAMPLES = [
    "I love this beautiful gift, thank you my friend!",
    "The rotten smell made everyone sick with disgust.",
    "Terrified and alone, she heard the floorboards creak.",
    "The committee reviewed the quarterly budget figures.",
    "Tears and laughter mixed at the farewell party.",
]

for text in SAMPLES:
    meta, cleaned = extract_features(text)
    profile = classify(cleaned, scorer, threshold=cfg.predominance_threshold)
    label = " + ".join(profile.predominant) if profile.predominant else "neutral"
    top3 = sorted(profile.scores.items(), key=lambda kv: -kv[1])[:3]
    print(f"{label:28s} {text}")
    print(f"{'':28s} top scores: "
          + ", ".join(f"{e}={s:.2f}" for e, s in top3 if s > 0))

# extraction separates sigils from prose before scoring
meta, cleaned = extract_features(
    "Celebrating #victory with @team https://example.org 🎉")
print()
print(f"cleaned   : {cleaned!r}")
print(f"hashtags  : {meta.hashtags}")
print(f"mentions  : {meta.mentions}")
print(f"urls      : {meta.urls}")
print(f"emojis    : {meta.emojis}")
