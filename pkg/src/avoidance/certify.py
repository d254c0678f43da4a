"""The ten-entry morphism corpus, bounded avoidance verification over
(5/4+)-free preimages, and brute-force factor-complexity counting.

Each corpus entry pairs a sporadic doubled pattern with a 5-letter-to-binary
uniform morphism; the claim behind it is that images of (5/4+)-free words
avoid the pattern. verify_entry checks a bounded slice of that claim and
reports nothing stronger: no occurrence with total image length up to the
cap inside the image of any free preimage up to the length bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .patterns import Occurrence, Pattern, find_occurrence
from .series import certify_threeavoidable, check_bound_against_counts
from .words import DISPLAY, Word, generate_free_words

FREE_EXPONENT = Fraction(5, 4)
DEFAULT_PREIMAGE_LEN = 6


@dataclass(frozen=True)
class Morphism:
    images: tuple[str, ...]  # binary words, one per domain letter

    def __post_init__(self) -> None:
        if not self.images:
            raise ValueError("morphism needs at least one image")
        q = len(self.images[0])
        if q == 0 or any(len(img) != q for img in self.images):
            raise ValueError("images must share one positive length")
        if any(set(img) - {"0", "1"} for img in self.images):
            raise ValueError("images must be binary")

    @property
    def domain_size(self) -> int:
        return len(self.images)

    @property
    def uniform_len(self) -> int:
        return len(self.images[0])


@dataclass(frozen=True)
class CorpusEntry:
    pattern: Pattern
    morphism: Morphism
    ae: float

    @property
    def morphism_id(self) -> str:
        return self.pattern.lower()


@dataclass(frozen=True)
class VerificationReport:
    pattern: Pattern
    morphism_id: str
    max_preimage_len: int
    image_cap: int
    preimages_checked: int
    passed: bool
    counterexample: Optional[tuple[Word, Occurrence]]


def parse_morphism(text: str) -> Morphism:
    """Parse lines "d -> bits" (d a domain letter, '#' starts a comment);
    all images must share one length."""
    images: dict[int, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            left, right = line.split("->")
            d = int(left.strip())
            img = right.strip()
        except ValueError as e:
            raise ValueError(f"line {lineno}: expected 'd -> bits'") from e
        if d in images:
            raise ValueError(f"line {lineno}: duplicate image for {d}")
        images[d] = img
    if sorted(images) != list(range(len(images))):
        raise ValueError(f"domain letters must be 0..k-1, got {sorted(images)}")
    return Morphism(tuple(images[i] for i in range(len(images))))


def load_morphism(path) -> Morphism:
    with open(path) as fh:
        return parse_morphism(fh.read())


# (pattern, avoidability exponent) for the shipped corpus, in file order
# matching data/morphisms/<pattern lowercased>.txt
_CORPUS_SPECS = (
    ("ABACBDCD", 1.381966011),
    ("ABACDBDC", 1.333333333),
    ("ABACDCBD", 1.340090632),
    ("ABCADBDC", 1.292893219),
    ("ABCADCBD", 1.295597743),
    ("ABCADCDB", 1.327621756),
    ("ABCBDADC", 1.302775638),
    ("ABACBDCEDE", 1.366025404),
    ("ABACDBCEDE", 1.302775638),
    ("ABACDBDECE", 1.320416579),
)


def corpus() -> list[CorpusEntry]:
    """The ten shipped entries, uniform lengths 17,33,28,21,22,26,33,15,18,22."""
    root = resources.files("avoidance").joinpath("data/morphisms")
    entries = []
    for name, ae in _CORPUS_SPECS:
        text = root.joinpath(f"{name.lower()}.txt").read_text()
        entries.append(CorpusEntry(Pattern(name), parse_morphism(text), ae))
    return entries


def apply_morphism(m: Morphism, w: str) -> Word:
    """Concatenate images; |result| = uniform_len * |w|."""
    codes = Word(str(w)).codes
    if codes and max(codes) >= m.domain_size:
        raise ValueError(f"{w!r} has letters outside domain of size {m.domain_size}")
    return Word("".join(m.images[d] for d in codes), alphabet_size=2)


def _window_blocks(image_cap: int, q: int) -> int:
    # an occurrence of total length <= cap ending inside the last block
    # spans at most ceil(cap/q) + 1 consecutive blocks
    return -(-image_cap // q) + 1


def verify_entry(entry: CorpusEntry, max_preimage_len: int = DEFAULT_PREIMAGE_LEN,
                 image_cap: int | None = None, workers: int = 1
                 ) -> VerificationReport:
    """Stream every (5/4+)-free preimage up to the length bound and search
    its image for an occurrence of the entry's pattern with total image
    length <= image_cap (default twice the uniform length).

    Only the suffix of the image contributed by the newly appended letter
    needs searching at each step: the stream is prefix-closed, so earlier
    positions were covered when the shorter preimage was visited. Search
    results are cached per trailing letter group, which the window size
    makes sound.
    """
    q = entry.morphism.uniform_len
    cap = 2 * q if image_cap is None else image_cap
    if max_preimage_len < 1 or cap < 1:
        raise ValueError("caps must be positive")
    if workers > 1:
        return _verify_parallel(entry, max_preimage_len, cap, workers)
    checked = 0
    memo: dict[str, Optional[Occurrence]] = {}
    tail = _window_blocks(cap, q)
    for w in generate_free_words(5, FREE_EXPONENT, max_preimage_len):
        checked += 1
        key = w[-tail:]
        if key in memo:
            rel = memo[key]
        else:
            window = apply_morphism(entry.morphism, key)
            rel = find_occurrence(entry.pattern, window, cap,
                                  min_end=(len(key) - 1) * q + 1)
            memo[key] = rel
        if rel is not None:
            offset = (len(w) - len(key)) * q
            occ = Occurrence(rel.start + offset, rel.images)
            return VerificationReport(entry.pattern, entry.morphism_id,
                                      max_preimage_len, cap, checked,
                                      False, (w, occ))
    return VerificationReport(entry.pattern, entry.morphism_id,
                              max_preimage_len, cap, checked, True, None)


def _verify_shard(args) -> tuple[int, Optional[tuple[str, Occurrence]]]:
    first, images, pattern, max_len, cap = args
    entry = CorpusEntry(Pattern(pattern), Morphism(images), 0.0)
    q = entry.morphism.uniform_len
    tail = _window_blocks(cap, q)
    memo: dict[str, Optional[Occurrence]] = {}
    checked = 0
    for w in generate_free_words(5, FREE_EXPONENT, max_len):
        if w[0] != first:
            continue
        checked += 1
        key = w[-tail:]
        if key not in memo:
            window = apply_morphism(entry.morphism, key)
            memo[key] = find_occurrence(entry.pattern, window, cap,
                                        min_end=(len(key) - 1) * q + 1)
        rel = memo[key]
        if rel is not None:
            occ = Occurrence(rel.start + (len(w) - len(key)) * q, rel.images)
            return checked, (str(w), occ)
    return checked, None


def _verify_parallel(entry: CorpusEntry, max_len: int, cap: int,
                     workers: int) -> VerificationReport:
    # shards are the 5 first-letter subtrees of the preimage stream; the
    # merged report is identical to the sequential one because the stream
    # visits shards in letter order
    jobs = [("01234"[i], entry.morphism.images, str(entry.pattern),
             max_len, cap) for i in range(5)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_verify_shard, jobs))
    checked = 0
    for count, hit in results:
        checked += count
        if hit is not None:
            w, occ = hit
            return VerificationReport(entry.pattern, entry.morphism_id,
                                      max_len, cap, checked, False,
                                      (Word(w, alphabet_size=5), occ))
    return VerificationReport(entry.pattern, entry.morphism_id,
                              max_len, cap, checked, True, None)


def count_avoiding(p: str, m: int, up_to: int, workers: int = 1) -> list[int]:
    """n_i = number of words of length i over Sigma_m with no occurrence of
    p, for i = 0..up_to, by DFS over the prefix tree.

    After each appended letter only occurrences ending at the new position
    are tested: the avoiding language is factorial, so any other occurrence
    was already caught when its own end position was appended.
    """
    pat = Pattern(p)
    counts = [0] * (up_to + 1)
    counts[0] = 1
    if up_to == 0:
        return counts
    jobs = [(first, str(pat), m, up_to) for first in range(m)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(_count_shard, jobs))
    else:
        shards = [_count_shard(job) for job in jobs]
    for sub in shards:
        for i, c in enumerate(sub):
            counts[i] += c
    return counts


def _count_shard(args) -> list[int]:
    first, p, m, up_to = args
    counts = [0] * (up_to + 1)
    plen = len(p)
    letters = DISPLAY[:m]

    def rec(w: str) -> None:
        counts[len(w)] += 1
        if len(w) == up_to:
            return
        for a in letters:
            w2 = w + a
            if len(w2) >= plen and \
                    find_occurrence(p, w2, min_end=len(w2)) is not None:
                continue
            rec(w2)

    root = DISPLAY[first]
    if len(root) < plen or find_occurrence(p, root, min_end=1) is None:
        rec(root)
    return counts


def cross_check(p: str, m: int, up_to: int) -> bool:
    """Certify p by series over a ternary alphabet, count avoiders by DFS,
    and confirm n_i >= x0^{-i} at every tested length."""
    report = certify_threeavoidable(p)
    if not report.conclusive:
        raise ValueError(f"series method is inconclusive for {p}")
    best = report.best
    if m != best.spec.m:
        raise ValueError(f"certificate is for alphabet size {best.spec.m}, not {m}")
    counts = count_avoiding(p, m, up_to)
    return check_bound_against_counts(best.spec, counts)
