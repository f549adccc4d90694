"""The Oblak process on frequency sequences.

Evaluation at i scores the pair ``(f_i, f_{i+1})`` together with twice
everything above it; annihilation at i splices that pair out:

    evaluate(f, i)   = i*f_i + (i+1)*f_{i+1} + 2 * sum(f_j for j > i+1)
    annihilate(f, i) = (f_1, ..., f_{i-1}, f_{i+2}, f_{i+3}, ...)

Index 0 is an alias for index 1 in both.  The process greedily picks an
index of maximum nonzero evaluation, records the evaluation, annihilates,
and repeats until the sequence is empty.  The recorded values form a
partition that is independent of the choices made and coincides with the
descent map of the corresponding partition; this module computes it
without touching the code-word machinery, so the two routes can be checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .burge import apply_del
from .errors import BudgetError
from .partitions import FreqSeq, Partition, as_frequency, size

DEFAULT_CHAIN_LIMIT = 10**5


def evaluate(freq: Iterable[int], i: int) -> int:
    """Evaluation of f at index i >= 0 (index 0 evaluates as index 1)."""
    f = as_frequency(freq)
    if i < 0:
        raise ValueError("evaluation index must be nonnegative")
    if i == 0:
        i = 1
    fi = f[i - 1] if i <= len(f) else 0
    fi1 = f[i] if i + 1 <= len(f) else 0
    return i * fi + (i + 1) * fi1 + 2 * sum(f[i + 1:])


def annihilate(freq: Iterable[int], i: int) -> FreqSeq:
    """Annihilation of f at index i >= 0: entries i and i+1 spliced out."""
    f = as_frequency(freq)
    if i < 0:
        raise ValueError("annihilation index must be nonnegative")
    if i == 0:
        i = 1
    return as_frequency(f[: i - 1] + f[i + 1:])


def maximal_indices(freq: Iterable[int]) -> tuple:
    """All indices achieving the maximum nonzero evaluation, ascending.

    Beyond the support window [0, max support] every evaluation is zero,
    so only that window is searched.  Empty input has no maximal index.
    """
    f = as_frequency(freq)
    if not f:
        return ()
    vals = [evaluate(f, i) for i in range(len(f) + 1)]
    m = max(vals)
    return tuple(i for i, v in enumerate(vals) if v == m)


def right_admissible(freq: Iterable[int]) -> frozenset:
    """Indices i >= 1 with f_i > 0 that are not the right end of a nontrivial spread."""
    f = as_frequency(freq)

    def at(i):
        return f[i - 1] if 1 <= i <= len(f) else 0

    return frozenset(
        i
        for i in range(1, len(f) + 1)
        if at(i) > 0 and (at(i + 1) > 0 or (at(i - 1) == 0 and at(i + 1) == 0))
    )


def left_admissible(freq: Iterable[int]) -> frozenset:
    """Indices i >= 0 with f_{i+1} > 0 such that i+1 is not the left end of a nontrivial spread."""
    f = as_frequency(freq)

    def at(i):
        return f[i - 1] if 1 <= i <= len(f) else 0

    return frozenset(
        i
        for i in range(0, len(f))
        if at(i + 1) > 0 and (at(i) > 0 or (at(i) == 0 and at(i + 2) == 0))
    )


def equivalent_indices(freq: Iterable[int]) -> list:
    """Partition of the index range [0, max support + 1] by equal annihilation.

    Equal annihilations force equal evaluations, so classes agree on both.
    The returned classes are sorted lists ordered by smallest member; the
    last class is unbounded (it stands for everything from its smallest
    member on, where annihilation no longer changes f).
    """
    f = as_frequency(freq)
    groups: dict = {}
    for i in range(0, len(f) + 2):
        groups.setdefault(annihilate(f, i), []).append(i)
    return sorted(groups.values())


def _maximal_class_representatives(f: FreqSeq) -> list:
    """Smallest member of each annihilation-equivalence class of maximal indices."""
    reps: dict = {}
    for i in maximal_indices(f):
        key = annihilate(f, i)
        if key not in reps:
            reps[key] = i
    return sorted(reps.values())


@dataclass(frozen=True)
class OblakChain:
    """One run of the process: states from f down to empty, and the chosen indices.

    ``states[r] == annihilate(states[r-1], indices[r-1])`` with each chosen
    index maximal for the state it acts on.
    """

    states: tuple
    indices: tuple

    @property
    def valuation(self) -> Partition:
        """Recorded evaluations, recomputed from size drops as a self-check."""
        vals = []
        for r, i in enumerate(self.indices):
            drop = size(self.states[r]) - size(self.states[r + 1])
            ev = evaluate(self.states[r], i)
            if drop != ev:
                raise ValueError(
                    f"corrupt chain: size drop {drop} != evaluation {ev} at step {r}"
                )
            vals.append(ev)
        return tuple(vals)


def is_valid_chain(chain: OblakChain) -> bool:
    """Recompute every step of a chain: maximal choices, matching states."""
    if len(chain.states) != len(chain.indices) + 1:
        return False
    if not chain.states or chain.states[-1] != ():
        return False
    for r, i in enumerate(chain.indices):
        state = chain.states[r]
        if i not in maximal_indices(state):
            return False
        if annihilate(state, i) != chain.states[r + 1]:
            return False
    return True


def is_valid_index_sequence(freq: Iterable[int], indices: Iterable[int]) -> bool:
    """True when the given indices drive f to empty via maximal choices."""
    state = as_frequency(freq)
    for i in indices:
        if i not in maximal_indices(state):
            return False
        state = annihilate(state, i)
    return state == ()


def oblak_chain(freq: Iterable[int]) -> OblakChain:
    """Deterministic run: always the smallest maximal index."""
    state = as_frequency(freq)
    states = [state]
    indices = []
    while state:
        i = maximal_indices(state)[0]
        indices.append(i)
        state = annihilate(state, i)
        states.append(state)
    return OblakChain(tuple(states), tuple(indices))


def oblak(freq: Iterable[int]) -> Partition:
    """Output of the process: the valuation of any chain, sorted decreasing.

    The successive values decrease by at least two, so no sort is needed;
    choice independence makes the deterministic chain representative.
    """
    return oblak_chain(freq).valuation


def oblak_all_chains(freq: Iterable[int], limit: int = DEFAULT_CHAIN_LIMIT) -> list:
    """Every chain for f, branching over inequivalent maximal indices.

    Equivalent indices give identical successor states, so one
    representative (the smallest) is explored per equivalence class.
    Chains come back sorted by index sequence.  Raises BudgetError when
    more than ``limit`` chains would be produced.
    """
    f = as_frequency(freq)
    out: list = []

    def rec(state, states, indices):
        if not state:
            if len(out) >= limit:
                raise BudgetError(
                    f"chain enumeration for {f} exceeds limit {limit}"
                )
            out.append(OblakChain(tuple(states), tuple(indices)))
            return
        for i in _maximal_class_representatives(state):
            nxt = annihilate(state, i)
            rec(nxt, states + [nxt], indices + [i])

    rec(f, [f], [])
    return out


def del_chain(chain: OblakChain) -> OblakChain:
    """Image of a chain under apply_del, state by state.

    When the penultimate state is (1) the final step collapses (its
    evaluation was 1), so that state is dropped; otherwise every state maps
    across.  The returned chain carries a freshly derived valid index
    sequence for the new states.
    """
    states = chain.states
    if len(states) >= 2 and states[-2] == (1,):
        new_states = tuple(apply_del(s) for s in states[:-1])
    else:
        new_states = tuple(apply_del(s) for s in states)
    return OblakChain(new_states, _indices_for_states(new_states))


def _indices_for_states(states: tuple) -> tuple:
    indices = []
    for r in range(len(states) - 1):
        here, nxt = states[r], states[r + 1]
        for i in maximal_indices(here):
            if annihilate(here, i) == nxt:
                indices.append(i)
                break
        else:
            raise ValueError(
                f"no maximal index carries {here} to {nxt}; not a chain"
            )
    return tuple(indices)


def check_commuting_square(freq: Iterable[int], i: int) -> bool:
    """Does annihilation at i commute with apply_del, evaluation dropping by 1?

    Guaranteed when i is left admissible for f or right admissible for
    apply_del(f); may hold or fail otherwise.
    """
    f = as_frequency(freq)
    df = apply_del(f)
    return (
        evaluate(df, i) == evaluate(f, i) - 1
        and annihilate(df, i) == apply_del(annihilate(f, i))
    )
