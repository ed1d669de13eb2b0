"""Color-sequence properties: proper, strongly proper, nonrepetitive.

A :class:`SequenceProperty` bundles a validity predicate with an
incremental ``extends`` check (used to prune path searches), the alphabet
size ``m`` needed for arbitrarily long valid sequences, and a generator of
such sequences.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "SequenceProperty",
    "HonestyReport",
    "is_proper",
    "is_strongly_proper",
    "is_nonrepetitive",
    "is_nonrepetitive_naive",
    "ends_with_square",
    "canonical_sequence",
    "thue_sequence",
    "check_honesty",
    "PROPER",
    "STRONG",
    "NONREP",
    "PROPERTIES",
    "get_property",
]


def is_proper(s: Sequence[int]) -> bool:
    return all(a != b for a, b in zip(s, s[1:]))


def is_strongly_proper(s: Sequence[int]) -> bool:
    """No equal symbols at index distance 1 or 2."""
    return all(s[i] != s[i + 1] for i in range(len(s) - 1)) and all(
        s[i] != s[i + 2] for i in range(len(s) - 2)
    )


def ends_with_square(s: Sequence[int]) -> bool:
    """True iff some suffix of ``s`` has the form XX."""
    n = len(s)
    for h in range(1, n // 2 + 1):
        if s[n - 2 * h : n - h] == s[n - h : n]:
            return True
    return False


def is_nonrepetitive(s: Sequence[int]) -> bool:
    """No block XX with X nonempty.

    For each half-length h, a square exists iff ``s[i] == s[i + h]`` holds
    for h consecutive positions i. Long inputs are scanned with numpy.
    """
    n = len(s)
    if n >= 256:
        return _nonrep_numpy(np.asarray(s))
    for h in range(1, n // 2 + 1):
        run = 0
        for i in range(n - h):
            if s[i] == s[i + h]:
                run += 1
                if run >= h:
                    return False
            else:
                run = 0
    return True


def _nonrep_numpy(a: np.ndarray) -> bool:
    n = len(a)
    for h in range(1, n // 2 + 1):
        eq = a[:-h] == a[h:]
        if not eq.any():
            continue
        breaks = np.flatnonzero(np.concatenate(([True], ~eq, [True])))
        if (np.diff(breaks) - 1).max() >= h:
            return False
    return True


def is_nonrepetitive_naive(s: Sequence[int]) -> bool:
    """Reference O(n^3) scan over every block."""
    s = list(s)
    n = len(s)
    for i in range(n):
        for h in range(1, (n - i) // 2 + 1):
            if s[i : i + h] == s[i + h : i + 2 * h]:
                return False
    return True


def canonical_sequence(n: int, start: int = 1) -> tuple[int, ...]:
    """Length-n block of 1,2,3,1,2,3,... beginning with ``start``."""
    if start not in (1, 2, 3):
        raise ValueError(f"start must be 1, 2 or 3, got {start}")
    if n < 0:
        raise ValueError("length must be non-negative")
    return tuple((start - 1 + i) % 3 + 1 for i in range(n))


_THUE_MORPHISM = {1: (1, 2, 3), 2: (1, 3), 3: (2,)}


@lru_cache(maxsize=None)
def _thue_prefix(n: int) -> tuple[int, ...]:
    word = (1,)
    while len(word) < n:
        word = tuple(x for c in word for x in _THUE_MORPHISM[c])
    return word


def thue_sequence(n: int) -> tuple[int, ...]:
    """Prefix of the fixed point of 1->123, 2->13, 3->2 (squarefree, ternary)."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if n == 0:
        return ()
    # cache on the next power of two so growing prefixes share work
    size = 1
    while size < n:
        size *= 2
    return _thue_prefix(size)[:n]


def _alternating(n: int) -> tuple[int, ...]:
    return tuple(i % 2 + 1 for i in range(n))


def _extends_proper(s: Sequence[int]) -> bool:
    return len(s) < 2 or s[-1] != s[-2]


def _extends_strong(s: Sequence[int]) -> bool:
    n = len(s)
    if n >= 2 and s[-1] == s[-2]:
        return False
    return not (n >= 3 and s[-1] == s[-3])


@dataclass(frozen=True)
class SequenceProperty:
    """A word property usable by the path searches and coloring engines.

    ``extends(s)`` must answer ``is_valid(s)`` under the assumption that
    ``s[:-1]`` is valid; the default just calls ``is_valid``.
    """

    name: str
    is_valid: Callable[[Sequence[int]], bool]
    m: int
    generator: Callable[[int], tuple[int, ...]]
    reversal_closed: bool
    extends: Callable[[Sequence[int]], bool] | None = field(default=None)
    code: int = -1  # kernel id for the built-ins, -1 for custom properties

    def __post_init__(self):
        if self.extends is None:
            object.__setattr__(self, "extends", self.is_valid)

    def __call__(self, s: Sequence[int]) -> bool:
        return self.is_valid(s)


PROPER = SequenceProperty("proper", is_proper, 2, _alternating, True, _extends_proper, 0)
STRONG = SequenceProperty(
    "strong", is_strongly_proper, 3, lambda n: canonical_sequence(n, 1), True, _extends_strong, 1
)
NONREP = SequenceProperty(
    "nonrep", is_nonrepetitive, 3, thue_sequence, True, lambda s: not ends_with_square(s), 2
)

PROPERTIES = {p.name: p for p in (PROPER, STRONG, NONREP)}


def get_property(name: str) -> SequenceProperty:
    try:
        return PROPERTIES[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; choose from {sorted(PROPERTIES)}") from None


@dataclass
class HonestyReport:
    blocks: bool = True
    concatenation: bool = True
    generator: bool = True
    reversal: bool = True
    witnesses: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.blocks and self.concatenation and self.generator and self.reversal


def _valid_samples(p: SequenceProperty, sample_len: int, trials: int, rng: random.Random):
    base = p.generator(sample_len)
    samples = []
    for _ in range(trials):
        perm = list(range(1, p.m + 1))
        rng.shuffle(perm)
        relabel = tuple(perm[c - 1] if c <= p.m else c for c in base)
        i = rng.randrange(len(base) + 1) if base else 0
        j = rng.randrange(i, len(base) + 1) if base else 0
        for cand in (base, relabel, base[i:j]):
            if cand and p.is_valid(cand):
                samples.append(tuple(cand))
        # short random words reach valid sequences the generator never emits
        short = tuple(rng.randint(1, p.m) for _ in range(rng.randint(1, 8)))
        if p.is_valid(short):
            samples.append(short)
    return samples


def check_honesty(p: SequenceProperty, sample_len: int = 60, trials: int = 200, seed: int = 0) -> HonestyReport:
    """Spot-check block closure, disjoint-alphabet concatenation, the
    generator and (if claimed) reversal closure on sampled valid words.

    At most one witness is recorded per violated condition.
    """
    rng = random.Random(seed)
    report = HonestyReport()
    for n in range(1, sample_len + 1):
        word = p.generator(n)
        if len(word) != n or not p.is_valid(word) or any(not 1 <= c <= p.m for c in word):
            report.generator = False
            report.witnesses.append(("generator", tuple(word)))
            break
    samples = _valid_samples(p, sample_len, trials, rng)
    for s in samples:
        i = rng.randrange(len(s))
        j = rng.randrange(i + 1, len(s) + 1)
        blocks = [s[i:j]]
        if len(s) <= 8:
            blocks += [s[a:b] for a in range(len(s)) for b in range(a + 1, len(s) + 1)]
        bad = next((b for b in blocks if not p.is_valid(b)), None)
        if bad is not None and report.blocks:
            report.blocks = False
            report.witnesses.append(("block", bad))
        if p.reversal_closed and report.reversal and not p.is_valid(s[::-1]):
            report.reversal = False
            report.witnesses.append(("reversal", s))
    for _ in range(trials if samples else 0):
        s = rng.choice(samples)
        t = rng.choice(samples)
        st = s + tuple(c + max(s) for c in t)
        if not p.is_valid(st):
            report.concatenation = False
            report.witnesses.append(("concatenation", st))
            break
    return report
