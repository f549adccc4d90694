"""Finite-field verification of the combinatorics against actual matrices.

For a nilpotent Jordan matrix B of type P, any commuting matrix splits into
blocks indexed by pairs of Jordan chains: the block coupling a chain of
length i to a chain of length j is upper-triangular Toeplitz with
min(i, j) free coefficients a_1, a_2, ..., right-aligned when i < j
(leading zero columns) and top-aligned when i > j (trailing zero rows).
``a_1`` of each square same-size block sits in the leading-coefficient
matrix of that size; a commuting matrix is nilpotent exactly when every
leading-coefficient matrix is nilpotent, and forcing them strictly lower
triangular carves out a maximal nilpotent subalgebra in which every
nilpotent commuting Jordan type is realized up to similarity.

This module builds those matrices explicitly over GF(p), constructs the
all-ones-on-pivots witness whose image certifies the restriction type, and
exhaustively scans small commutators for the dominance-maximum Jordan type.

Jordan chains are laid out with sizes descending and equal sizes adjacent.
A chain is addressed as (i, k): length i, k-th chain of that length
(1-based), matching the a_h^{kl} parameter naming used throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .burge import apply_del, descent_map
from .errors import BudgetError
from .gfp import MatrixGFp, check_prime, row_echelon_basis
from .partitions import (
    Partition,
    as_partition,
    dominates,
    to_frequency,
    to_partition,
)

DEFAULT_SCAN_BUDGET = 2**24
GENERIC_PRIME = 10007


# ---------------------------------------------------------------------------
# Layout and construction
# ---------------------------------------------------------------------------

def chain_layout(parts: Iterable[int]) -> dict:
    """Offsets of the Jordan chains of P: maps (i, k) -> first row index."""
    p = as_partition(parts)
    f = to_frequency(p)
    layout = {}
    off = 0
    for i in range(len(f), 0, -1):
        for k in range(1, f[i - 1] + 1):
            layout[(i, k)] = off
            off += i
    return layout


def jordan_matrix(parts: Iterable[int], p: int) -> MatrixGFp:
    """Block-diagonal nilpotent matrix with superdiagonal ones, sizes descending."""
    pt = as_partition(parts)
    n = sum(pt)
    rows = [[0] * n for _ in range(n)]
    for (i, _k), off in chain_layout(pt).items():
        for h in range(i - 1):
            rows[off + h][off + h + 1] = 1
    return MatrixGFp(rows, p)


@dataclass(frozen=True, order=True)
class ParamSlot:
    """One free Toeplitz coefficient a_h of the block coupling chains (i,k) -> (j,l)."""

    i: int
    k: int
    j: int
    l: int
    h: int

    @property
    def forced_zero(self) -> bool:
        """Slots pinned to zero inside the maximal nilpotent subalgebra.

        These are the upper-and-diagonal entries of the same-size
        leading-coefficient matrices.
        """
        return self.i == self.j and self.h == 1 and self.k <= self.l


def param_slots(parts: Iterable[int], reduced: bool = True) -> list:
    """All Toeplitz coefficient slots of the commutator of B.

    ``reduced=True`` drops the slots forced to zero in the maximal
    nilpotent subalgebra; ``reduced=False`` parameterizes the full
    commutator algebra.
    """
    pt = as_partition(parts)
    f = to_frequency(pt)
    supp = [i for i in range(1, len(f) + 1) if f[i - 1]]
    slots = []
    for i in supp:
        for k in range(1, f[i - 1] + 1):
            for j in supp:
                for l in range(1, f[j - 1] + 1):
                    for h in range(1, min(i, j) + 1):
                        slot = ParamSlot(i, k, j, l, h)
                        if reduced and slot.forced_zero:
                            continue
                        slots.append(slot)
    return slots


def _slot_entries(slot: ParamSlot, layout: dict) -> list:
    """Matrix positions carrying the coefficient a_h of a block.

    Within the block, a_h lives on the diagonal at column offset
    h - 1 + max(0, j - i) from the row position.
    """
    r0 = layout[(slot.i, slot.k)]
    c0 = layout[(slot.j, slot.l)]
    shift = slot.h - 1 + max(0, slot.j - slot.i)
    return [
        (r0 + r, c0 + r + shift)
        for r in range(slot.i)
        if r + shift < slot.j
    ]


def build_commuting(parts: Iterable[int], p: int, values: dict) -> MatrixGFp:
    """Assemble a commuting matrix from slot -> coefficient assignments."""
    pt = as_partition(parts)
    check_prime(p)
    n = sum(pt)
    layout = chain_layout(pt)
    rows = [[0] * n for _ in range(n)]
    for slot, v in values.items():
        if v % p == 0:
            continue
        for r, c in _slot_entries(slot, layout):
            rows[r][c] = v % p
    return MatrixGFp(rows, p)


def leading_coefficient_block(a: MatrixGFp, parts: Iterable[int], i: int) -> MatrixGFp:
    """The f_i x f_i matrix of a_1 coefficients of the same-size blocks for size i."""
    pt = as_partition(parts)
    f = to_frequency(pt)
    if not (1 <= i <= len(f)) or f[i - 1] == 0:
        raise ValueError(f"{i} is not a part size of {pt}")
    layout = chain_layout(pt)
    m = f[i - 1]
    return MatrixGFp(
        [[a.rows[layout[(i, k)]][layout[(i, l)]] for l in range(1, m + 1)] for k in range(1, m + 1)],
        a.p,
    )


# ---------------------------------------------------------------------------
# Pivots and the witness matrix
# ---------------------------------------------------------------------------

def pivots(parts: Iterable[int]) -> list:
    """Blocks (i, j, k, l) of generically maximal rank in their row of blocks.

    With z the largest part size:
      (a) same-size blocks one step below the diagonal, (i, i, k, k-1);
      (b) the (z, z-1) blocks of the first z-chain, if z-1 occurs;
      (c) the (z, z) block coupling the first z-chain to the last;
      (d) every block coupling a shorter chain to a strictly longer one.
    """
    pt = as_partition(parts)
    f = to_frequency(pt)
    if not pt:
        return []
    supp = [i for i in range(1, len(f) + 1) if f[i - 1]]
    z = supp[-1]
    out = []
    for i in supp:
        if f[i - 1] >= 2:
            out.extend((i, i, k, k - 1) for k in range(2, f[i - 1] + 1))
    if z >= 2 and f[z - 2]:
        out.extend((z, z - 1, 1, l) for l in range(1, f[z - 2] + 1))
    out.append((z, z, 1, f[z - 1]))
    for i in supp:
        for j in supp:
            if j > i:
                out.extend(
                    (i, j, k, l)
                    for k in range(1, f[i - 1] + 1)
                    for l in range(1, f[j - 1] + 1)
                )
    return out


def witness_matrix(parts: Iterable[int], p: int) -> MatrixGFp:
    """One pivot block per row of blocks, set to ones on its leading diagonal.

    Pivots are selected recursively, two sizes per window, so that every
    column chain is targeted by at most one row of blocks (overlapping
    targets would collapse the rank).  With z the window maximum:

      * rows (z, k), k >= 2, couple to (z, k-1) with a_1 = 1;
      * if z-1 occurs: row (z, 1) couples to (z-1, f_{z-1}) and row
        (z-1, 1) couples to (z, f_z), both with a_1 = 1, and rows
        (z-1, k), k >= 2, couple to (z-1, k-1);
      * otherwise row (z, 1) couples to (z, f_z) with a_2 = 1, the
        nilpotent Jordan form of the block (a 1 x 1 block stays zero);

    then the window drops to sizes <= z-2.  The result lies in the maximal
    nilpotent subalgebra and its image realizes the restriction type given
    by one demotion step of P, over any field.
    """
    pt = as_partition(parts)
    f = to_frequency(pt)
    values = {}
    z = len(f)
    while z > 0:
        if f[z - 1] == 0:
            z -= 1
            continue
        fz = f[z - 1]
        fz1 = f[z - 2] if z >= 2 else 0
        for k in range(2, fz + 1):
            values[ParamSlot(z, k, z, k - 1, 1)] = 1
        if fz1 > 0:
            values[ParamSlot(z, 1, z - 1, fz1, 1)] = 1
            for k in range(2, fz1 + 1):
                values[ParamSlot(z - 1, k, z - 1, k - 1, 1)] = 1
            values[ParamSlot(z - 1, 1, z, fz, 1)] = 1
        elif z >= 2:
            values[ParamSlot(z, 1, z, fz, 2)] = 1
        z -= 2
    return build_commuting(pt, p, values)


def random_commuting(
    parts: Iterable[int],
    p: int,
    rng: random.Random | int,
    reduced: bool = True,
) -> MatrixGFp:
    """Uniformly random coefficients on every free slot.

    ``reduced=True`` samples the maximal nilpotent subalgebra (always a
    nilpotent commuting matrix); ``reduced=False`` samples the full
    commutator algebra.  ``rng`` may be a Random instance or a bare seed;
    there is no hidden global randomness.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    values = {slot: rng.randrange(p) for slot in param_slots(parts, reduced=reduced)}
    return build_commuting(parts, p, values)


# ---------------------------------------------------------------------------
# Jordan types
# ---------------------------------------------------------------------------

def jordan_type(m: MatrixGFp) -> Partition:
    """Jordan type of a nilpotent matrix from its rank sequence.

    With r_k = rank(M^k) and r_0 = n, the multiplicity of block size k is
    r_{k-1} - 2 r_k + r_{k+1}.  Rejects non-nilpotent input.
    """
    if m.nrows != m.ncols:
        raise ValueError("Jordan type of a non-square matrix")
    n = m.nrows
    ranks = [n]
    power = m
    while ranks[-1] > 0:
        if len(ranks) > n:
            raise ValueError("matrix is not nilpotent")
        ranks.append(power.rank())
        power = power @ m
    ranks.append(0)
    freq = [
        ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        for k in range(1, len(ranks) - 1)
    ]
    return to_partition(freq)


def restriction_type(b: MatrixGFp, a: MatrixGFp) -> Partition:
    """Jordan type of B restricted to the column space W of A.

    Works from the dimension sequence d_k = dim(B^k W): the number of
    blocks of size >= k is d_{k-1} - d_k.  Requires AB = BA (so W is
    B-invariant) and B nilpotent.
    """
    if a @ b != b @ a:
        raise ValueError("matrices do not commute")
    if not b.is_nilpotent():
        raise ValueError("restriction requires a nilpotent base matrix")
    basis = row_echelon_basis(a.columns(), a.p)
    dims = [len(basis)]
    while dims[-1] > 0:
        basis = row_echelon_basis([b.mat_vec(v) for v in basis], b.p)
        dims.append(len(basis))
    at_least = [dims[k - 1] - dims[k] for k in range(1, len(dims))]
    freq = [
        at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
        for k in range(len(at_least))
    ]
    return to_partition(freq)


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------

@dataclass
class RestrictionReport:
    partition: Partition
    field: int
    expected: Partition            # one demotion step of the input type
    witness_observed: Partition
    witness_ok: bool
    trials: int
    misses: list = field(default_factory=list)  # (trial index, observed type)

    @property
    def ok(self) -> bool:
        return self.witness_ok and not self.misses

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition),
            "field": self.field,
            "expected": list(self.expected),
            "observed": list(self.witness_observed),
            "witness_ok": self.witness_ok,
            "trials": self.trials,
            "misses": [[t, list(obs)] for t, obs in self.misses],
            "status": "ok" if self.ok else "fail",
        }


def verify_restriction(
    parts: Iterable[int],
    p: int = GENERIC_PRIME,
    trials: int = 5,
    seed: int = 0,
    witness_only: bool = False,
) -> RestrictionReport:
    """Check that images of commuting nilpotent matrices realize the demoted type.

    The witness must match exactly; random draws from the maximal
    nilpotent subalgebra miss only on a thin non-generic locus, so misses
    are recorded rather than raised.
    """
    pt = as_partition(parts)
    expected = to_partition(apply_del(to_frequency(pt)))
    b = jordan_matrix(pt, p)
    observed = restriction_type(b, witness_matrix(pt, p))
    report = RestrictionReport(
        partition=pt,
        field=p,
        expected=expected,
        witness_observed=observed,
        witness_ok=observed == expected,
        trials=0 if witness_only else trials,
    )
    if not witness_only:
        rng = random.Random(seed)
        for t in range(trials):
            got = restriction_type(b, random_commuting(pt, p, rng))
            if got != expected:
                report.misses.append((t, got))
    return report


@dataclass
class ScanReport:
    partition: Partition
    field: int
    mode: str                      # "full" or "reduced"
    scanned: int
    types: list                    # every occurring Jordan type, sorted
    max_type: Partition | None     # dominance maximum, when one exists
    expected: Partition

    @property
    def ok(self) -> bool:
        return self.max_type is not None and self.max_type == self.expected

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition),
            "field": self.field,
            "mode": self.mode,
            "scanned": self.scanned,
            "types": [list(t) for t in self.types],
            "max_type": list(self.max_type) if self.max_type is not None else None,
            "expected": list(self.expected),
            "status": "ok" if self.ok else "fail",
        }


def scan_max_type(
    parts: Iterable[int],
    p: int = 2,
    budget: int = DEFAULT_SCAN_BUDGET,
    mode: str = "auto",
) -> ScanReport:
    """Enumerate nilpotent commuting matrices and find the dominant Jordan type.

    ``full`` walks the whole commutator algebra and filters by A^n = 0;
    ``reduced`` walks the maximal nilpotent subalgebra, which realizes the
    same set of Jordan types since every nilpotent commuting matrix is
    similar to one of its members.  ``auto`` picks ``full`` when it fits
    the budget and falls back to ``reduced``; if even that exceeds the
    budget, BudgetError is raised.
    """
    pt = as_partition(parts)
    check_prime(p)
    n = sum(pt)
    expected = descent_map(pt)

    full_count = len(param_slots(pt, reduced=False))
    reduced_count = len(param_slots(pt, reduced=True))
    if mode == "auto":
        mode = "full" if p**full_count <= budget else "reduced"
    if mode not in ("full", "reduced"):
        raise ValueError(f"unknown scan mode {mode!r}")
    slots = param_slots(pt, reduced=(mode == "reduced"))
    count = reduced_count if mode == "reduced" else full_count
    if p**count > budget:
        raise BudgetError(
            f"scan of {pt} needs {p}^{count} matrices, over budget {budget}"
        )

    layout = chain_layout(pt)
    entries = [_slot_entries(s, layout) for s in slots]
    b = jordan_matrix(pt, p)
    if n:
        probe = build_commuting(pt, p, {s: 1 for s in slots})
        if probe @ b != b @ probe:
            raise AssertionError("slot placement does not commute with the base matrix")
    types = set()
    scanned = 0

    def assign(idx: int, rows: list) -> None:
        nonlocal scanned
        if idx == len(slots):
            scanned += 1
            a = MatrixGFp(rows, p)
            if not a.power(n).is_zero():
                if mode == "reduced":
                    raise AssertionError("reduced-mode matrix is not nilpotent")
                return
            types.add(jordan_type(a))
            return
        for v in range(p):
            for r, c in entries[idx]:
                rows[r][c] = v
            assign(idx + 1, rows)
        for r, c in entries[idx]:
            rows[r][c] = 0

    if n == 0:
        types.add(())
        scanned = 1
    else:
        assign(0, [[0] * n for _ in range(n)])

    ordered = sorted(types, reverse=True)
    max_type = None
    for t in ordered:
        if all(dominates(t, s) for s in ordered):
            max_type = t
            break
    return ScanReport(
        partition=pt,
        field=p,
        mode=mode,
        scanned=scanned,
        types=ordered,
        max_type=max_type,
        expected=expected,
    )
