"""Average binary-image enumerators for codes over GF(2^m).

When each symbol of a code over GF(2^m) is written as m bits, the bit
pattern of a nonzero symbol is modeled as uniform over the 2^m - 1
nonzero patterns.  Averaged over that model, every symbol-level
generating function turns into a bit-level one through the substitution

    F(Z) = ((1 + Z)^m - 1) / (2^m - 1),

applied per variable.  All arithmetic here is exact `Fraction`; the
(2^m - 1)^h denominators cancel in the identities under test, which keeps
every check a strict pass/fail.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .mds_enum import MdsParams, ProfileOutOfRangeError, binom, iowe, weight_distribution
from .poly import SparsePoly


class NotCharTwoError(ValueError):
    """The operation needs a field of characteristic two."""


def bits_per_symbol(q: int) -> int:
    """m with q = 2^m, or NotCharTwoError."""
    m = q.bit_length() - 1
    if q < 2 or (1 << m) != q:
        raise NotCharTwoError(f"q={q} is not a power of two")
    return m


def bit_substitution_poly(m: int) -> SparsePoly:
    """The univariate substitution polynomial F(Z).

    F(Z) = ((1+Z)^m - 1)/(2^m - 1): the bit-weight generating function of
    a uniformly random nonzero m-bit pattern.  F(0) = 0 and F(1) = 1.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    den = (1 << m) - 1
    return SparsePoly(1, {(i,): Fraction(binom(m, i), den) for i in range(1, m + 1)})


def avg_binary_weights_from_distribution(weights: Sequence[int], m: int) -> list[Fraction]:
    """Averaged binary weight distribution from a symbol weight distribution.

    Expands sum_h E(h)/(2^m-1)^h * ((1+X)^m - 1)^h; returns the
    coefficient vector over binary weights 0..m*n.
    """
    n = len(weights) - 1
    den = (1 << m) - 1
    g = [0] + [binom(m, i) for i in range(1, m + 1)]  # (1+X)^m - 1
    out = [Fraction(0)] * (m * n + 1)
    power = [1]  # g^0
    for h in range(n + 1):
        if weights[h]:
            scale = Fraction(weights[h], den**h)
            for i, c in enumerate(power):
                if c:
                    out[i] += scale * c
        if h < n:
            nxt = [0] * (len(power) + m)
            for i, a in enumerate(power):
                if a:
                    for j, b in enumerate(g):
                        if b:
                            nxt[i + j] += a * b
            power = nxt
    return out


def avg_binary_wgf(params: MdsParams) -> list[Fraction]:
    """Averaged binary weight distribution of an MDS code over GF(2^m)."""
    m = bits_per_symbol(params.q)
    return avg_binary_weights_from_distribution(weight_distribution(params), m)


def avg_binary_pwgf(symbol_pwgf: SparsePoly, m: int) -> SparsePoly:
    """Averaged binary partition weight generating function.

    Substitutes X_i -> F(Z_i) in a symbol-level PWGF; the result tracks
    binary weights per block, with per-variable degree m times the symbol
    degree.
    """
    f = bit_substitution_poly(m)
    nvars = symbol_pwgf.nvars
    replacements = []
    for i in range(nvars):
        terms = {}
        for (e,), c in f.terms.items():
            exps = [0] * nvars
            exps[i] = e
            terms[tuple(exps)] = c
        replacements.append(SparsePoly(nvars, terms))
    return symbol_pwgf.substitute(replacements)


def avg_binary_iowe(params: MdsParams, s: int, w_b: int, h_b: int) -> Fraction:
    """Averaged binary input-output weight enumerator, closed form.

    For an (s, n-s) symbol split, the average number of binary-image
    codewords with w_b input bits and h_b total bits:

        sum_{w,h} O(w,h)/(2^m-1)^h
          * [ sum_j (-1)^(h-w-j) C(h-w,j) C(jm, h_b - w_b) ]
          * [ sum_j (-1)^(w-j)   C(w,j)   C(jm, w_b) ].
    """
    m = bits_per_symbol(params.q)
    n = params.n
    if not 0 <= s <= n:
        raise ProfileOutOfRangeError(f"s={s} not in [0, {n}]")
    if not 0 <= w_b <= m * s or not 0 <= h_b <= m * n:
        raise ProfileOutOfRangeError(f"(w_b, h_b) = ({w_b}, {h_b}) out of range")
    den = (1 << m) - 1
    total = Fraction(0)
    for w in range(s + 1):
        input_sum = sum((-1) ** (w - j) * binom(w, j) * binom(j * m, w_b)
                        for j in range(w + 1))
        if input_sum == 0:
            continue
        for h in range(w, n + 1):
            o = iowe(params, s, w, h)
            if o == 0:
                continue
            rest_sum = sum((-1) ** (h - w - j) * binom(h - w, j) * binom(j * m, h_b - w_b)
                           for j in range(h - w + 1))
            if rest_sum:
                total += Fraction(o * rest_sum * input_sum, den**h)
    return total


def binomial_approx(params: MdsParams, h_b: int) -> Fraction:
    """Normalized-binomial reference value q^-(n-k) * C(mn, h_b).

    The averaged binary weight distribution approaches this for weights
    above the averaged binary minimum distance; exposed for comparison,
    never used in exact identities.
    """
    m = bits_per_symbol(params.q)
    if not 0 <= h_b <= m * params.n:
        raise ProfileOutOfRangeError(f"h_b={h_b} not in [0, {m * params.n}]")
    return Fraction(binom(m * params.n, h_b), params.q ** (params.n - params.k))
