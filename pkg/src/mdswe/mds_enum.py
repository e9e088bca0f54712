"""Closed-form partition weight enumerators of MDS codes.

Everything here is exact big-integer combinatorics; no floating point.

For an (n, k) MDS code over GF(q) with d = n - k + 1, the weight
distribution is

    E(0) = 1,  E(i) = 0 for 0 < i < d,
    E(i) = C(n,i) * sum_{j=d}^{i} C(i,j) (-1)^(i-j) (q^(j-d+1) - 1)

and the partition weight enumerator for blocks of sizes (n_1..n_p) and a
weight profile (w_1..w_p) admits two independent evaluations:

  * `pwe_direct`  - the nested alternating sum over indices j_1..j_p,
    where the innermost index runs from max(0, d - sum of the earlier
    indices) so that the power of q is always positive;
  * `pwe_product` - E(w) * prod C(n_i, w_i) / C(n, w) with w = sum w_i,
    an exact integer division.

Both must agree with each other and with exhaustive enumeration
(`linear_code.brute_force_pwe`); the test suite checks this coefficient
for coefficient.  The conventions E(0) = 1 and E(h) = 0 below d let the
product form cover every profile, not only those of weight >= d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iter_product
from typing import NamedTuple, Sequence

from .poly import SparsePoly


class ProfileOutOfRangeError(ValueError):
    """A weight profile, size list, or index is outside its valid range."""


class InternalError(ArithmeticError):
    """An exact division guaranteed by theory failed (implementation bug)."""


def binom(n: int, r: int) -> int:
    """C(n, r) with out-of-range indices giving 0."""
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            while q % f == 0:
                q //= f
            return q == 1
        f += 1
    return True  # q itself prime


@dataclass(frozen=True)
class MdsParams:
    """Parameters (n, k, q) of an MDS code; d = n - k + 1."""

    n: int
    k: int
    q: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if not _is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @classmethod
    def from_code(cls, code) -> "MdsParams":
        return cls(code.n, code.k, code.field.order)


def weight_at(params: MdsParams, w: int) -> int:
    """E(w): number of codewords of Hamming weight w."""
    if not 0 <= w <= params.n:
        raise ProfileOutOfRangeError(f"weight {w} not in [0, {params.n}]")
    d, q = params.d, params.q
    if w == 0:
        return 1
    if w < d:
        return 0
    s = sum(binom(w, j) * (-1) ** (w - j) * (q ** (j - d + 1) - 1)
            for j in range(d, w + 1))
    return binom(params.n, w) * s


def weight_distribution(params: MdsParams) -> list[int]:
    """The full weight distribution vector E(0..n)."""
    return [weight_at(params, w) for w in range(params.n + 1)]


def _validate_profile(params: MdsParams, sizes: Sequence[int],
                      profile: Sequence[int]) -> None:
    if any(s <= 0 for s in sizes):
        raise ProfileOutOfRangeError(f"block sizes must be positive: {tuple(sizes)}")
    if sum(sizes) != params.n:
        raise ProfileOutOfRangeError(
            f"block sizes {tuple(sizes)} sum to {sum(sizes)}, expected n={params.n}")
    if len(profile) != len(sizes):
        raise ProfileOutOfRangeError("profile length differs from block count")
    if any(not 0 <= w <= s for w, s in zip(profile, sizes)):
        raise ProfileOutOfRangeError(f"profile {tuple(profile)} exceeds {tuple(sizes)}")


def pwe_direct(params: MdsParams, sizes: Sequence[int],
               profile: Sequence[int]) -> int:
    """Partition weight enumerator via the nested alternating sum.

    Retained as an implementation independent of `pwe_product` for
    cross-validation.  The recursion shares partial sums over the running
    index total, which leaves the summation structure intact while
    avoiding the exponential blowup in the number of blocks.
    """
    _validate_profile(params, sizes, profile)
    if not any(profile):
        return 1
    n, k, q, d = params.n, params.k, params.q, params.d
    p = len(sizes)
    last_w = profile[-1]
    memo: dict[tuple[int, int], int] = {}

    def tail(idx: int, acc: int) -> int:
        key = (idx, acc)
        if key in memo:
            return memo[key]
        if idx == p - 1:
            total = 0
            for j in range(max(0, d - acc), last_w + 1):
                total += (binom(last_w, j) * (-1) ** (last_w - j)
                          * (q ** (k - n + acc + j) - 1))
        else:
            w = profile[idx]
            total = 0
            for j in range(w + 1):
                total += binom(w, j) * (-1) ** (w - j) * tail(idx + 1, acc + j)
        memo[key] = total
        return total

    scale = math.prod(binom(s, w) for s, w in zip(sizes, profile))
    return scale * tail(0, 0)


def _product_count(e_w: int, n: int, w: int, sizes: Sequence[int],
                   profile: Sequence[int]) -> int:
    num = e_w * math.prod(binom(s, x) for s, x in zip(sizes, profile))
    den = binom(n, w)
    count, rem = divmod(num, den)
    if rem:
        raise InternalError(
            f"E({w}) * prod C(n_i,w_i) = {num} not divisible by C({n},{w}) = {den}")
    return count


def pwe_product(params: MdsParams, sizes: Sequence[int],
                profile: Sequence[int]) -> int:
    """Partition weight enumerator via E(w) * prod C(n_i,w_i) / C(n,w)."""
    _validate_profile(params, sizes, profile)
    w = sum(profile)
    return _product_count(weight_at(params, w), params.n, w, sizes, profile)


def pwgf(params: MdsParams, sizes: Sequence[int]) -> SparsePoly:
    """The full partition weight generating polynomial.

    Coefficient of X_1^w_1 ... X_p^w_p is the number of codewords with
    that weight profile; the coefficients sum to q^k.
    """
    _validate_profile(params, sizes, [0] * len(sizes))
    weights = weight_distribution(params)
    terms: dict[tuple[int, ...], int] = {}
    for profile in iter_product(*[range(s + 1) for s in sizes]):
        w = sum(profile)
        if weights[w] == 0:
            continue
        terms[profile] = _product_count(weights[w], params.n, w, sizes, profile)
    return SparsePoly(len(sizes), terms)


def split_we(params: MdsParams, n1: int, n2: int, w1: int, w2: int) -> int:
    """Two-block partition weight enumerator (the p = 2 case)."""
    return pwe_product(params, (n1, n2), (w1, w2))


def iowe(params: MdsParams, s: int, w: int, h: int) -> int:
    """Input-output weight enumerator for an (s, n-s) coordinate split.

    Counts codewords of total weight h carrying weight w on a fixed set
    of s coordinates: E(h) * C(s,w) * C(n-s,h-w) / C(n,h).  Profiles that
    are in range but unrealizable (w > h or h - w > n - s) count zero.
    """
    n = params.n
    if not 0 <= s <= n:
        raise ProfileOutOfRangeError(f"s={s} not in [0, {n}]")
    if not 0 <= w <= s or not 0 <= h <= n:
        raise ProfileOutOfRangeError(f"(w, h) = ({w}, {h}) out of range")
    if w > h or h - w > n - s:
        return 0
    e = weight_at(params, h)
    num = e * binom(s, w) * binom(n - s, h - w)
    count, rem = divmod(num, binom(n, h))
    if rem:
        raise InternalError(f"IOWE division not exact at s={s}, w={w}, h={h}")
    return count


def fixed_support_count(params: MdsParams, h: int) -> int:
    """Codewords nonzero exactly on one fixed h-subset of coordinates.

    Equals E(h) / C(n,h); zero for 0 < h < d, one for h = 0.
    """
    if not 0 <= h <= params.n:
        raise ProfileOutOfRangeError(f"h={h} not in [0, {params.n}]")
    e = weight_at(params, h)
    if e == 0:
        return 0
    count, rem = divmod(e, binom(params.n, h))
    if rem:
        raise InternalError(f"E({h}) = {e} not divisible by C({params.n},{h})")
    return count


def coordinate_weight_sum(params: MdsParams, h: int) -> int:
    """Total weight of any one coordinate over the weight-h subcode.

    Equals h * E(h) / n, an exact integer for MDS codes.
    """
    if not 0 <= h <= params.n:
        raise ProfileOutOfRangeError(f"h={h} not in [0, {params.n}]")
    num = h * weight_at(params, h)
    count, rem = divmod(num, params.n)
    if rem:
        raise InternalError(f"h*E(h) = {num} not divisible by n = {params.n}")
    return count


def psi(params: MdsParams, h: int, w: int) -> int:
    """Alternating-sum kernel of the split enumerator.

    psi(h, w) is the split weight enumerator at profile (w, h-w) divided
    by its two binomial factors; psi(h, 0) = E(h) / C(n,h).
    """
    q, d = params.q, params.d
    total = 0
    for j in range(w + 1):
        inner = 0
        for i in range(max(0, d - j), h - w + 1):
            inner += binom(h - w, i) * (-1) ** (h - w - i) * (q ** (i + j - d + 1) - 1)
        total += binom(w, j) * (-1) ** (w - j) * inner
    return total


class IdentityCheck(NamedTuple):
    holds: bool
    lhs: int
    rhs: int


def check_convolution_identity(params: MdsParams, h: int) -> IdentityCheck:
    """Binomial convolution of psi against the (k, n-k) split is flat:

        sum_w C(k,w) C(n-k,h-w) psi(h,w)  ==  psi(h,0) * sum_w C(k,w) C(n-k,h-w)

    for d <= h <= n.  Both sides are returned for inspection.
    """
    n, k = params.n, params.k
    if not params.d <= h <= n:
        raise ProfileOutOfRangeError(f"h={h} not in [{params.d}, {n}]")
    lhs = sum(binom(k, w) * binom(n - k, h - w) * psi(params, h, w)
              for w in range(k + 1))
    rhs = psi(params, h, 0) * sum(binom(k, w) * binom(n - k, h - w)
                                  for w in range(k + 1))
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_subset_identity(params: MdsParams, s: int, h: int) -> IdentityCheck:
    """The weighted form of the flatness identity, for any s coordinates:

        sum_{w>=1} C(s-1,w-1) C(n-s,h-w) psi(h,w)
            ==  psi(h,0) * sum_{w>=1} C(s-1,w-1) C(n-s,h-w).
    """
    n = params.n
    if not 1 <= s <= n:
        raise ProfileOutOfRangeError(f"s={s} not in [1, {n}]")
    if not params.d <= h <= n:
        raise ProfileOutOfRangeError(f"h={h} not in [{params.d}, {n}]")
    lhs = sum(binom(s - 1, w - 1) * binom(n - s, h - w) * psi(params, h, w)
              for w in range(1, s + 1))
    rhs = psi(params, h, 0) * sum(binom(s - 1, w - 1) * binom(n - s, h - w)
                                  for w in range(1, s + 1))
    return IdentityCheck(lhs == rhs, lhs, rhs)
