"""The Burge correspondence between partitions and binary words.

Frequency sequences split into two classes: ``f`` is *backward-closed*
(class B) when index 1 lies in the right set R(f), i.e. when 1 sits in a
spread of odd size; otherwise ``f`` is in class A.  Three operators act on
frequency sequences:

* ``apply_a`` promotes every forward pair ``(f_i, f_{i+1})``, for i in L(f),
  to ``(f_i - 1, f_{i+1} + 1)``; its image is class A.
* ``apply_b`` adds one to ``f_1`` and applies ``apply_a`` to the tail
  ``(f_2, f_3, ...)``; its image is class B.
* ``apply_del`` demotes every backward pair ``(f_{j-1}, f_j)``, for j in
  R(f), to ``(f_{j-1} + 1, f_j - 1)``; for j = 1 this just decrements
  ``f_1``.  It inverts both of the above on their respective images.

Iterating ``apply_del`` down to the empty sequence and recording the class
at each step yields the code word: a bijection onto the language
``(a*b)*a`` of words that end with a single ``a``.  The descents of the
code word (positions of ``ba``) read as a super-distinct partition give the
descent map, the combinatorial form of the dominant Jordan type in the
nilpotent commutator.

All pairs touched by one operator application are disjoint, so the
transfers are applied simultaneously from index sets computed up front;
the index sets are never recomputed mid-update.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .partitions import (
    Partition,
    FreqSeq,
    as_frequency,
    as_partition,
    is_super_distinct,
    left_set,
    length,
    reduced,
    right_set,
    to_frequency,
    to_partition,
    two_measure,
)

_WORD_OK_RE = re.compile(r"^[ab]*$")
_CODE_RE = re.compile(r"^(a*b)*a$")


def check_word(word: str) -> str:
    """Normalize a word over {a, b}.

    Parsing is case-insensitive and also accepts digits, 0 meaning a and
    1 meaning b.
    """
    w = word.strip().lower().replace("0", "a").replace("1", "b")
    if not _WORD_OK_RE.match(w):
        raise ValueError(f"word {word!r} contains letters outside {{a, b}}")
    return w


def is_code_word(word: str) -> bool:
    """True when the word lies in (a*b)*a: it ends with a single a."""
    return bool(_CODE_RE.match(check_word(word)))


def in_class_b(freq: Iterable[int]) -> bool:
    """True when 1 is in R(f), i.e. 1 sits in a spread of odd size."""
    return 1 in right_set(freq)


def apply_a(freq: Iterable[int]) -> FreqSeq:
    f = as_frequency(freq)
    out = list(f) + [0]  # a transfer may land one past the stored end
    for i in left_set(f):
        out[i - 1] -= 1
        out[i] += 1
    return as_frequency(out)


def apply_b(freq: Iterable[int]) -> FreqSeq:
    f = as_frequency(freq)
    head = (f[0] if f else 0) + 1
    return as_frequency((head,) + apply_a(f[1:]))


def apply_del(freq: Iterable[int]) -> FreqSeq:
    f = as_frequency(freq)
    out = list(f)
    for j in right_set(f):
        out[j - 1] -= 1
        if j >= 2:
            out[j - 2] += 1
    return as_frequency(out)


@dataclass(frozen=True)
class BurgeChain:
    """The iterated apply_del states of f, and the class letters along them.

    ``states[i]`` is the i-th iterate, ending with the empty sequence;
    ``word[i]`` is 'a' or 'b' according to the class of ``states[i]``.
    """

    states: tuple
    word: str


def burge_chain(freq: Iterable[int]) -> BurgeChain:
    state = as_frequency(freq)
    states = []
    letters = []
    while True:
        states.append(state)
        letters.append("b" if in_class_b(state) else "a")
        if not state:
            return BurgeChain(tuple(states), "".join(letters))
        state = apply_del(state)


def encode(freq: Iterable[int]) -> str:
    """Code word of a frequency sequence."""
    return burge_chain(freq).word


def decode(word: str) -> FreqSeq:
    """Inverse of encode: rebuild f by applying the letters right to left.

    Rejects words outside (a*b)*a; a leading run of a's is fine ("aaba"),
    but a trailing "aa" is not.
    """
    w = check_word(word)
    if not _CODE_RE.match(w):
        raise ValueError(f"word {word!r} does not end with a single trailing 'a'")
    state: FreqSeq = ()
    for ch in reversed(w):
        state = apply_b(state) if ch == "b" else apply_a(state)
    return state


def descent_set(word: str) -> tuple:
    """Positions i with word[i] = b and word[i+1] = a, ascending, 1-based."""
    w = check_word(word)
    return tuple(
        i + 1 for i in range(len(w) - 1) if w[i] == "b" and w[i + 1] == "a"
    )


def des(word: str) -> int:
    return len(descent_set(word))


def maj(word: str) -> int:
    return sum(descent_set(word))


def descent_map(parts: Iterable[int]) -> Partition:
    """Descent positions of the code word of P, read as a partition.

    The result is super-distinct, of the same size as P, and is the
    dominance-maximum Jordan type occurring in the nilpotent commutator of
    a nilpotent matrix of Jordan type P.
    """
    p = as_partition(parts)
    return tuple(sorted(descent_set(encode(to_frequency(p))), reverse=True))


@dataclass(frozen=True)
class SuperDistinctReport:
    """Seven equivalent tests of super-distinctness, evaluated independently."""

    super_distinct: bool          # parts differ pairwise by >= 2
    length_equals_two_measure: bool
    code_has_no_bb: bool
    freq_is_right_set_indicator: bool  # f_i = 1 on R(f), 0 elsewhere
    del_is_shift: bool            # apply_del(f) = (f_2, f_3, ...)
    del_is_reduction: bool        # partition of apply_del(f) = P - 1
    descent_map_fixes: bool       # descent_map(P) = P

    def values(self) -> tuple:
        return (
            self.super_distinct,
            self.length_equals_two_measure,
            self.code_has_no_bb,
            self.freq_is_right_set_indicator,
            self.del_is_shift,
            self.del_is_reduction,
            self.descent_map_fixes,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.values())) == 1


def characterize_superdistinct(parts: Iterable[int]) -> SuperDistinctReport:
    p = as_partition(parts)
    f = to_frequency(p)
    rset = right_set(f)
    df = apply_del(f)
    return SuperDistinctReport(
        super_distinct=is_super_distinct(p),
        length_equals_two_measure=length(f) == two_measure(f),
        code_has_no_bb="bb" not in encode(f),
        freq_is_right_set_indicator=all(
            m == (1 if i in rset else 0) for i, m in enumerate(f, 1)
        ),
        del_is_shift=df == as_frequency(f[1:]),
        del_is_reduction=to_partition(df) == reduced(p),
        descent_map_fixes=descent_map(p) == p,
    )
