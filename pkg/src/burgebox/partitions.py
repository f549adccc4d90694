"""Integer partitions and their frequency-sequence representation.

A partition is a tuple of weakly decreasing positive parts; the empty tuple
is the empty partition.  Its frequency sequence is the tuple
``(f_1, f_2, ...)`` where ``f_i`` counts the parts equal to ``i``.  Frequency
tuples are 0-indexed in storage but 1-indexed in meaning: ``f[0]`` is the
multiplicity of part 1.  Trailing zeros are always stripped so that equality
of tuples is equality of sequences; the fictional entry ``f_0 = 0`` is never
stored.

Both representations are plain tuples, so values are hashable, immutable and
safe to share between threads.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple

Partition = tuple
FreqSeq = tuple

# Parts above this are almost certainly malformed input (ids, timestamps, ...).
PART_CAP = 10**6


class Spread(NamedTuple):
    """A maximal interval [lo, hi] of the support of a frequency sequence."""

    lo: int
    hi: int

    @property
    def trivial(self) -> bool:
        return self.lo == self.hi


def as_partition(parts: Iterable[int], cap: int = PART_CAP) -> Partition:
    """Validate and return a partition as a tuple.

    Raises ValueError unless the parts are weakly decreasing positive
    integers no greater than ``cap``.
    """
    p = tuple(parts)
    for i, x in enumerate(p):
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"part {x!r} is not an integer")
        if x < 1:
            raise ValueError(f"part {x} is not positive")
        if x > cap:
            raise ValueError(f"part {x} exceeds the part cap {cap}")
        if i and p[i - 1] < x:
            raise ValueError(f"parts not weakly decreasing at index {i}: {p}")
    return p


def as_frequency(freq: Iterable[int]) -> FreqSeq:
    """Validate a frequency sequence and strip trailing zeros."""
    f = list(freq)
    for x in f:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"frequency {x!r} is not a nonnegative integer")
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def to_frequency(parts: Iterable[int]) -> FreqSeq:
    """Frequency sequence of a partition: f_i = multiplicity of part i."""
    p = as_partition(parts)
    if not p:
        return ()
    f = [0] * p[0]
    for x in p:
        f[x - 1] += 1
    return tuple(f)


def to_partition(freq: Iterable[int]) -> Partition:
    """Partition corresponding to a frequency sequence (inverse of to_frequency)."""
    f = as_frequency(freq)
    parts = []
    for i in range(len(f), 0, -1):
        parts.extend([i] * f[i - 1])
    return tuple(parts)


def size(freq: Iterable[int]) -> int:
    """|f| = sum of i * f_i, the size of the underlying partition."""
    f = as_frequency(freq)
    return sum(i * m for i, m in enumerate(f, 1))


def length(freq: Iterable[int]) -> int:
    """l(f) = sum of f_i, the number of parts."""
    return sum(as_frequency(freq))


def support(freq: Iterable[int]) -> tuple:
    """Indices i >= 1 with f_i != 0, ascending."""
    f = as_frequency(freq)
    return tuple(i for i, m in enumerate(f, 1) if m)


def spreads(freq: Iterable[int]) -> list:
    """Maximal intervals of the support, as Spread(lo, hi), sorted by lo."""
    out = []
    run_lo = None
    prev = None
    for i in support(freq):
        if run_lo is None:
            run_lo = i
        elif i != prev + 1:
            out.append(Spread(run_lo, prev))
            run_lo = i
        prev = i
    if run_lo is not None:
        out.append(Spread(run_lo, prev))
    return out


def left_set(freq: Iterable[int]) -> frozenset:
    """L(f): every other support index of each spread, starting at its low end."""
    return frozenset(
        i for s in spreads(freq) for i in range(s.lo, s.hi + 1, 2)
    )


def right_set(freq: Iterable[int]) -> frozenset:
    """R(f): every other support index of each spread, starting at its high end."""
    return frozenset(
        j for s in spreads(freq) for j in range(s.hi, s.lo - 1, -2)
    )


def two_measure(freq: Iterable[int]) -> int:
    """Maximum length of a super-distinct subpartition.

    Equals the largest subset of the support with no two consecutive
    indices, which is ceil(len/2) summed over the spreads.
    """
    return sum((s.hi - s.lo + 2) // 2 for s in spreads(freq))


def is_super_distinct(parts: Iterable[int]) -> bool:
    """True when successive parts differ by at least two."""
    p = as_partition(parts)
    return all(p[i] - p[i + 1] >= 2 for i in range(len(p) - 1))


def reduced(parts: Iterable[int]) -> Partition:
    """P - 1: subtract one from every part and drop the zeros."""
    p = as_partition(parts)
    return tuple(x - 1 for x in p if x > 1)


def dominates(parts: Iterable[int], other: Iterable[int]) -> bool:
    """Dominance order: every prefix sum of ``parts`` >= that of ``other``.

    Only partitions of equal size are comparable; anything else raises
    ValueError rather than silently returning False.
    """
    p = as_partition(parts)
    r = as_partition(other)
    if sum(p) != sum(r):
        raise ValueError(
            f"dominance is defined within a size class: |{p}| != |{r}|"
        )
    acc_p = acc_r = 0
    for i in range(max(len(p), len(r))):
        acc_p += p[i] if i < len(p) else 0
        acc_r += r[i] if i < len(r) else 0
        if acc_p < acc_r:
            return False
    return True


def partitions_of(n: int) -> Iterator[tuple]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


# ---------------------------------------------------------------------------
# Text forms.  Accepted everywhere a partition is read:
#   comma list          10,7,3
#   bracket list        [10,7,3]
#   multiset form       [4^2,3,2^2]      (caret = multiplicity)
#   empty               e   or   []
#   frequency form      f:(0,2,1,2)      (parens optional)
# ---------------------------------------------------------------------------

_ENTRY_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str, cap: int = PART_CAP) -> Partition:
    """Parse one of the accepted partition text forms.

    Raises ValueError with the offending position on malformed input.
    """
    s = text.strip()
    if s in ("e", "[]", "ε"):
        return ()
    if not s:
        raise ValueError("empty partition text (use 'e' or '[]' for the empty partition)")
    if s.startswith(("f:", "F:")):
        body = s[2:].strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if not body:
            return ()
        freq = []
        for col, entry in enumerate(body.split(",")):
            e = entry.strip()
            if not e.isdigit():
                raise ValueError(f"bad frequency entry {entry!r} at position {col + 1} of {text!r}")
            freq.append(int(e))
        return to_partition(freq)
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
        if not s:
            return ()
    parts = []
    for col, entry in enumerate(s.split(",")):
        m = _ENTRY_RE.match(entry.strip())
        if not m:
            raise ValueError(f"bad part entry {entry!r} at position {col + 1} of {text!r}")
        part = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        if part < 1:
            raise ValueError(f"part must be positive, got {entry!r} in {text!r}")
        parts.extend([part] * mult)
    return as_partition(sorted(parts, reverse=True), cap=cap)


def format_partition(parts: Iterable[int]) -> str:
    """Multiset bracket form: (9,5,1,1,1,1,1,1) -> \"[9,5,1^6]\"."""
    p = as_partition(parts)
    if not p:
        return "[]"
    pieces = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        mult = j - i
        pieces.append(f"{p[i]}^{mult}" if mult > 1 else str(p[i]))
        i = j
    return "[" + ",".join(pieces) + "]"


def format_frequency(freq: Iterable[int]) -> str:
    f = as_frequency(freq)
    return "(" + ",".join(str(x) for x in f) + ")"
