"""Shared helpers: an independent brute-force oracle and text/pattern
generators used across the suite."""

import random

import pytest


def naive_suffix_array(symbols):
    """Independent oracle: sort suffixes directly (byte-slice keys)."""
    raw = bytes(v - 1 for v in symbols)
    return sorted(range(1, len(symbols) + 1), key=lambda i: raw[i - 1:])


def naive_occurrences(data, pattern):
    """All 1-based starts of pattern in data, by direct comparison."""
    out = []
    m = len(pattern)
    if m == 0:
        return out
    for i in range(len(data) - m + 1):
        if data[i:i + m] == pattern:
            out.append(i + 1)
    return out


def random_text(rng, n, sigma):
    alpha = bytes(97 + i for i in range(sigma))
    return bytes(rng.choice(alpha) for _ in range(n))


def sample_patterns(rng, data, count, min_len=1, max_len=8,
                    extra_alphabet=b"ZY"):
    """Mix of occurring substrings and random (often absent) strings."""
    alpha = bytes(sorted(set(data))) + extra_alphabet
    out = []
    for _ in range(count):
        m = rng.randrange(min_len, max_len + 1)
        if rng.random() < 0.6 and len(data) > m:
            i = rng.randrange(len(data) - m)
            out.append(data[i:i + m])
        else:
            out.append(bytes(rng.choice(alpha) for _ in range(m)))
    return out


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
