"""Linear codes over finite fields and brute-force partition enumeration.

Provides Reed-Solomon evaluation codes, first-order Reed-Muller codes,
codes from arbitrary generator matrices, dualization via null-space
computation, and the exhaustive partition weight enumerator that serves
as the ground truth for every closed form in the package.

The exhaustive enumerator iterates all q^k codewords once (vectorized
with numpy where the field allows it), records a histogram of coordinate
support masks, and derives any partition profile count from that
histogram.  The histogram is cached per code, so enumerating many
partitions of the same code costs one pass over the codeword set.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .gf import Field

DEFAULT_ENUMERATION_BUDGET = 1 << 26

# rows per numpy chunk during enumeration (memory cap, not a semantics knob)
_CHUNK_ROWS = 1 << 21


class LengthExceedsFieldError(ValueError):
    """Requested RS length exceeds q - 1."""


class RankDeficientError(ValueError):
    """Generator rows are linearly dependent."""


class BudgetExceededError(RuntimeError):
    """q^k exceeds the configured enumeration budget."""


def _row_reduce(field: Field, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over `field`; returns (rref, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    n = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def _detect_systematic(rows: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Columns forming an identity submatrix (one per row), if any."""
    if not rows:
        return None
    k, n = len(rows), len(rows[0])
    cols: list[Optional[int]] = [None] * k
    for j in range(n):
        column = [rows[i][j] for i in range(k)]
        nz = [i for i, v in enumerate(column) if v]
        if len(nz) == 1 and column[nz[0]] == 1 and cols[nz[0]] is None:
            cols[nz[0]] = j
    if any(c is None for c in cols):
        return None
    return tuple(cols)  # type: ignore[arg-type]


class LinearCode:
    """An (n, k) linear code given by a full-rank generator matrix.

    `generator` is a k x n tuple-of-tuples of raw field element values;
    `systematic_columns`, when set, lists k coordinates whose submatrix is
    the identity (column for row i at position i).  Codes are immutable.
    """

    def __init__(self, field: Field, generator: Sequence[Sequence[int]], *,
                 systematic_columns: Optional[Sequence[int]] = None,
                 n: Optional[int] = None, _skip_rank_check: bool = False):
        rows = tuple(tuple(int(v) for v in row) for row in generator)
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("ragged generator matrix")
        elif n is None:
            raise ValueError("zero-dimensional code needs an explicit length")
        q = field.order
        for row in rows:
            for v in row:
                if not 0 <= v < q:
                    raise ValueError(f"entry {v} is not an element of {field!r}")
        if rows and not _skip_rank_check:
            _, pivots = _row_reduce(field, [list(r) for r in rows])
            if len(pivots) != len(rows):
                raise RankDeficientError(
                    f"generator has rank {len(pivots)} < {len(rows)} rows")
        self.field = field
        self.generator = rows
        self.n = n
        self.k = len(rows)
        if systematic_columns is None:
            systematic_columns = _detect_systematic(rows)
        self.systematic_columns = tuple(systematic_columns) if systematic_columns else None

    @property
    def size(self) -> int:
        return self.field.order**self.k

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """All codewords, message vectors in lexicographic order."""
        field, G = self.field, self.generator
        if self.k == 0:
            yield (0,) * self.n
            return
        if field.order <= 1 << 16:
            field.build_tables()
        for msg in itertools.product(range(field.order), repeat=self.k):
            word = [0] * self.n
            for m_i, row in zip(msg, G):
                if m_i:
                    for j, g in enumerate(row):
                        if g:
                            word[j] = field.add(word[j], field.mul(m_i, g))
            yield tuple(word)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode)
                and self.field == other.field
                and self.n == other.n
                and self.generator == other.generator)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.generator))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k}, field={self.field!r})"


@dataclass(frozen=True)
class Partition:
    """A partition of the n coordinates into p blocks.

    `sizes[i]` is the size of block i; `assignment[j]` is the block index
    of coordinate j.
    """

    sizes: tuple[int, ...]
    assignment: tuple[int, ...]

    def __post_init__(self):
        if any(s <= 0 for s in self.sizes):
            raise ValueError(f"block sizes must be positive: {self.sizes}")
        counts = Counter(self.assignment)
        expect = {i: s for i, s in enumerate(self.sizes)}
        if counts != expect:
            raise ValueError("assignment does not match block sizes")

    @classmethod
    def contiguous(cls, sizes: Sequence[int]) -> "Partition":
        assignment = []
        for i, s in enumerate(sizes):
            assignment.extend([i] * s)
        return cls(tuple(sizes), tuple(assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def p(self) -> int:
        return len(self.sizes)

    def block_masks(self) -> tuple[int, ...]:
        masks = [0] * self.p
        for j, b in enumerate(self.assignment):
            masks[b] |= 1 << j
        return tuple(masks)


@dataclass(frozen=True)
class PweTable:
    """Exact partition weight enumerator: profile tuple -> codeword count."""

    sizes: tuple[int, ...]
    counts: dict[tuple[int, ...], int]

    def __post_init__(self):
        clean = {}
        for profile, c in self.counts.items():
            profile = tuple(profile)
            if len(profile) != len(self.sizes) or any(
                    not 0 <= w <= s for w, s in zip(profile, self.sizes)):
                raise ValueError(f"profile {profile} out of range for sizes {self.sizes}")
            if c:
                clean[profile] = c
        object.__setattr__(self, "counts", clean)

    def total(self) -> int:
        return sum(self.counts.values())

    def to_poly(self):
        from .poly import SparsePoly

        return SparsePoly(len(self.sizes), self.counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, PweTable):
            return self.sizes == other.sizes and self.counts == other.counts
        return NotImplemented


# -- exhaustive enumeration -------------------------------------------------


def _check_budget(code: LinearCode, budget: Optional[int]) -> None:
    limit = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
    if code.size > limit:
        raise BudgetExceededError(
            f"q^k = {code.size} exceeds enumeration budget {limit}")


@functools.lru_cache(maxsize=128)
def _support_histogram_cached(code: LinearCode) -> dict[int, int]:
    field = code.field
    q, k, n = field.order, code.k, code.n
    if k == 0:
        return {0: 1}
    p, m = field.characteristic, field.extension_degree
    if p != 2 and m > 1:
        return _support_histogram_python(code)

    if q <= 256:
        dtype = np.uint8
    elif q <= 1 << 16:
        dtype = np.uint16
    else:
        dtype = np.uint32
    if p != 2:
        dtype = np.int64  # mod-p additions need headroom

    if q <= 1 << 16:
        field.build_tables()
    mult = [
        np.array([[field.mul(v, g) for g in row] for v in range(q)], dtype=dtype)
        for row in code.generator
    ]

    def combine(a, b):
        return a ^ b if p == 2 else (a + b) % p

    base = np.zeros((1, n), dtype=dtype)
    i = 0
    while i < k and base.shape[0] * q <= _CHUNK_ROWS:
        base = combine(base[None, :, :], mult[i][:, None, :]).reshape(-1, n)
        i += 1

    pow2 = (1 << np.arange(n)).astype(np.int64)
    hist: dict[int, int] = {}

    def tally(arr):
        masks = (arr != 0).astype(np.int64) @ pow2
        vals, cnts = np.unique(masks, return_counts=True)
        for v, c in zip(vals.tolist(), cnts.tolist()):
            hist[v] = hist.get(v, 0) + c

    if i == k:
        tally(base)
    else:
        for combo in itertools.product(range(q), repeat=k - i):
            offset = np.zeros(n, dtype=dtype)
            for row_idx, v in enumerate(combo, start=i):
                offset = combine(offset, mult[row_idx][v])
            tally(combine(base, offset))
    return hist


def _support_histogram_python(code: LinearCode) -> dict[int, int]:
    hist: dict[int, int] = {}
    for word in code.codewords():
        mask = 0
        for j, v in enumerate(word):
            if v:
                mask |= 1 << j
        hist[mask] = hist.get(mask, 0) + 1
    return hist


def support_histogram(code: LinearCode, budget: Optional[int] = None) -> dict[int, int]:
    """Map from coordinate-support bitmask to codeword count (exact)."""
    _check_budget(code, budget)
    return _support_histogram_cached(code)


def brute_force_pwe(code: LinearCode, partition: Partition,
                    budget: Optional[int] = None) -> PweTable:
    """Exact partition weight enumerator by exhaustive codeword tally."""
    if partition.n != code.n:
        raise ValueError(f"partition covers {partition.n} coordinates, code has {code.n}")
    hist = support_histogram(code, budget)
    masks = partition.block_masks()
    counts: dict[tuple[int, ...], int] = {}
    for mask, c in hist.items():
        profile = tuple((mask & bm).bit_count() for bm in masks)
        counts[profile] = counts.get(profile, 0) + c
    return PweTable(partition.sizes, counts)


def brute_force_weights(code: LinearCode, budget: Optional[int] = None) -> list[int]:
    """Exact weight distribution E(0..n) by exhaustive tally."""
    hist = support_histogram(code, budget)
    E = [0] * (code.n + 1)
    for mask, c in hist.items():
        E[mask.bit_count()] += c
    return E


def min_distance(code: LinearCode, budget: Optional[int] = None) -> int:
    E = brute_force_weights(code, budget)
    return next(h for h in range(1, code.n + 1) if E[h])


# -- constructions ------------------------------------------------------------


def rs_code(field: Field, n: int, k: int,
            eval_points: Optional[Sequence[int]] = None) -> LinearCode:
    """Systematic Reed-Solomon evaluation code of length n, dimension k.

    Codewords are (f(a_1), ..., f(a_n)) for polynomials of degree < k over
    the n distinct nonzero evaluation points; by default the points are
    g^0, g^1, ... for a multiplicative generator g, which makes the code
    cyclic when n = q - 1.  The generator matrix is row-reduced so the
    first k coordinates are systematic.  The enumerators of the result do
    not depend on the choice or order of the points.
    """
    q = field.order
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > q - 1:
        raise LengthExceedsFieldError(f"length {n} exceeds q-1 = {q - 1}")
    if eval_points is None:
        g = field.generator()
        eval_points = []
        v = 1
        for _ in range(n):
            eval_points.append(v)
            v = field.mul(v, g)
    else:
        eval_points = [int(v) for v in eval_points]
        if len(eval_points) != n or len(set(eval_points)) != n or 0 in eval_points:
            raise ValueError("evaluation points must be n distinct nonzero elements")
    rows = [[field.pow(a, i) for a in eval_points] for i in range(k)]
    rref, pivots = _row_reduce(field, rows)
    # any k columns of an RS generator are independent, so the first k are pivots
    assert pivots == list(range(k))
    return LinearCode(field, rref, systematic_columns=range(k), _skip_rank_check=True)


def rm1_code(m: int) -> LinearCode:
    """First-order Reed-Muller code: binary (2^m, m+1).

    Rows are the all-ones vector followed by the m coordinate-indicator
    rows (bit b of the coordinate index).
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    field = Field(2, 1)
    n = 1 << m
    rows = [[1] * n]
    for b in range(m):
        rows.append([(j >> b) & 1 for j in range(n)])
    return LinearCode(field, rows)


def code_from_generator(field: Field, rows: Sequence[Sequence[int]]) -> LinearCode:
    """Code spanned by the given rows; raises RankDeficientError if dependent."""
    if not rows:
        raise ValueError("generator must have at least one row")
    return LinearCode(field, rows)


def dual(code: LinearCode) -> LinearCode:
    """The (n, n-k) dual code: generator spans the null space of `code`'s."""
    field, n, k = code.field, code.n, code.k
    if k == 0:
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return LinearCode(field, ident, systematic_columns=range(n),
                          _skip_rank_check=True)
    rref, pivots = _row_reduce(field, [list(r) for r in code.generator])
    pivot_set = set(pivots)
    free_cols = [j for j in range(n) if j not in pivot_set]
    rows = []
    for f in free_cols:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(rref[i][f])
        rows.append(v)
    return LinearCode(field, rows, n=n, _skip_rank_check=True)
