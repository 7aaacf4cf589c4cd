"""Feature extraction from raw tweet text.

URLs are stripped from the text; hashtags and mentions stay in as plain
words (sigil removed) so line division sees them. Emoji keep their place
in the cleaned text and are additionally listed with resolved names.
"""
from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from importlib import resources
from pathlib import Path

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_HASHTAG_RE = re.compile(r"(?<!\w)#(\w+)")
_MENTION_RE = re.compile(r"(?<!\w)@(\w+)")

# codepoint ranges scanned for emoji
_EMOJI_RANGES = (
    (0x1F000, 0x1F0FF),
    (0x1F300, 0x1FAFF),
    (0x2600, 0x27BF),
    (0x1F1E6, 0x1F1FF),
)


def _is_emoji(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


@lru_cache(maxsize=1)
def _emoji_table() -> dict[str, str]:
    src = resources.files("affiche") / "data" / "emoji_names.json"
    return json.loads(src.read_text(encoding="utf-8"))


def emoji_name(ch: str) -> str:
    """Human-readable name for one emoji character."""
    table = _emoji_table()
    if ch in table:
        return table[ch]
    name = unicodedata.name(ch, "")
    if name:
        return name.lower()
    return f"emoji {ord(ch):04x}"


@dataclass(frozen=True)
class TweetMeta:
    hashtags: tuple[str, ...] = ()
    mentions: tuple[str, ...] = ()
    urls: tuple[str, ...] = ()
    emojis: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class Tweet:
    id: str
    text: str
    created_at: datetime
    lang: str | None = None
    meta: TweetMeta = field(default_factory=TweetMeta)


def extract_features(text: str) -> tuple[TweetMeta, str]:
    """Pull URLs, hashtags, mentions and emoji out of ``text``.

    Returns the metadata plus a cleaned copy: URLs dropped, hashtag and
    mention sigils stripped, whitespace collapsed. Total function.
    """
    urls = tuple(_URL_RE.findall(text))
    without_urls = _URL_RE.sub(" ", text)

    hashtags = tuple(_HASHTAG_RE.findall(without_urls))
    mentions = tuple(_MENTION_RE.findall(without_urls))
    cleaned = _HASHTAG_RE.sub(r"\1", without_urls)
    cleaned = _MENTION_RE.sub(r"\1", cleaned)
    cleaned = " ".join(cleaned.split())

    emojis = tuple((ch, emoji_name(ch)) for ch in text if _is_emoji(ch))
    meta = TweetMeta(hashtags=hashtags, mentions=mentions, urls=urls,
                     emojis=emojis)
    return meta, cleaned


def _parse_timestamp(value: str) -> datetime:
    ts = datetime.fromisoformat(value.replace("Z", "+00:00"))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts


def load_corpus(path: str | Path) -> list[Tweet]:
    """Read a JSONL corpus: one {id, text, created_at, lang?} object per line."""
    tweets = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid JSON: {exc}") from None
            for key in ("id", "text", "created_at"):
                if key not in obj:
                    raise ValueError(f"{path}:{lineno}: missing key {key!r}")
            meta, _ = extract_features(obj["text"])
            tweets.append(Tweet(
                id=str(obj["id"]),
                text=obj["text"],
                created_at=_parse_timestamp(obj["created_at"]),
                lang=obj.get("lang"),
                meta=meta,
            ))
    return tweets
