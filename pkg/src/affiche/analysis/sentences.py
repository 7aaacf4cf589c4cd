"""Sentence splitting with an abbreviation guard list."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

_TERMINATORS = ".!?…"
# characters allowed to trail a terminator before the boundary
_TRAILERS = _TERMINATORS + "\"')]’”"


@lru_cache(maxsize=1)
def load_abbreviations() -> frozenset[str]:
    """Bundled abbreviation list, lowercase, no trailing dot."""
    src = resources.files("affiche") / "data" / "abbreviations.txt"
    entries = (line.strip().lower() for line in
               src.read_text(encoding="utf-8").splitlines())
    return frozenset(e.rstrip(".") for e in entries if e and not e.startswith("#"))


def _protected_dot(text: str, start: int, i: int, abbreviations: frozenset[str]) -> bool:
    """True when the dot at ``i`` ends an abbreviation or an initial."""
    k = i - 1
    while k >= start and (text[k].isalnum() or text[k] == "."):
        k -= 1
    word = text[k + 1:i]
    if not word or "." in word:
        # "e.g." style: the inner dots make it here as one chunk
        word = word.replace(".", "")
    if not word:
        return False
    if word.lower() in abbreviations:
        return True
    # single capital reads as an initial ("J. Smith")
    return len(word) == 1 and word.isalpha() and word.isupper()


def split_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[str]:
    """Split ``text`` into sentences on ., !, ? and ellipsis.

    Dots inside known abbreviations, initials and numbers do not end a
    sentence. A trailing segment without a terminator is kept as its own
    sentence. Sentences are stripped; their word sequence is preserved.
    """
    if abbreviations is None:
        abbreviations = load_abbreviations()

    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in _TERMINATORS:
            j = i + 1
            while j < n and text[j] in _TRAILERS:
                j += 1
            if text[i] == "." and j == i + 1 \
                    and _protected_dot(text, start, i, abbreviations):
                i += 1
                continue
            if j >= n or text[j].isspace():
                segment = text[start:j].strip()
                if segment:
                    sentences.append(segment)
                start = j
                i = j
                continue
        i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
