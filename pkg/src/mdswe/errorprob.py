"""Decoder error-probability curves from exact enumerators.

Channel model
-------------
The binary image of the code is BPSK-modulated over AWGN at rate k/n, so
a bit is received in error with probability p_bit = Q(sqrt(2 (k/n) g))
at linear SNR g, and a q-ary symbol (m bits) is in error with
probability p = 1 - (1 - p_bit)^m.  Symbol errors are then treated as a
q-ary symmetric channel: a wrong symbol is uniform over the q - 1 wrong
values.  The nonuniformity that bit-level errors induce between wrong
symbol values is deliberately ignored (the standard model; it shifts
absolute curve positions, never the exact identities under test here).

Bounded-minimum-distance (BM) decoding corrects up to
tau = floor((d-1)/2) symbol errors.  A decoder *error* is the received
word landing inside the radius-tau sphere of a wrong codeword; since the
spheres are disjoint, the codeword error probability is the exact sum

    CEP(p) = sum_{h=d}^{n} E(h) sum_{t=0}^{tau} P_t^h(p)

with P_t^h the probability that the received word is exactly distance t
from a fixed codeword of weight h.  The symbol error probability
substitutes E(h) -> (h/n) E(h), which is exact for codes with the
uniform-coordinate-weight property (all MDS codes).

For maximum-likelihood decoding of the binary image only per-weight
bound terms F(g, h) are used: probabilities have the shape
sum_h coeff(h) F(g, h) with a pluggable F.  The shipped F is the union
bound Q(sqrt(2 h (k/n) g)); tighter per-weight terms plug in without
interface changes.

Multiuser conditioning restricts the enumerator to codewords that are
all-zero on some blocks and full-weight on others, exactly as the
conditional quantities are defined; no Bayes renormalization is applied,
so conditional curves are joint-style quantities.

Floating point enters only at the last step: enumerator coefficients are
exact integers or rationals until each term is converted to binary64,
and term sums are accumulated smallest-first.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .binary_avg import avg_binary_wgf, bit_substitution_poly, bits_per_symbol
from .mds_enum import MdsParams, binom, pwgf, weight_distribution
from .poly import SparsePoly


class ParamOutOfRangeError(ValueError):
    """Channel or distance parameters outside their domain."""


class ConditionCountMismatchError(ValueError):
    """Number of per-block conditions differs from the number of blocks."""


# -- channel -------------------------------------------------------------


def q_function(x: float) -> float:
    """Gaussian tail probability Q(x)."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


@dataclass(frozen=True)
class ChannelPoint:
    """Bit and symbol error rates at one SNR point."""

    gamma_db: float
    p_bit: float
    p_symbol: float
    q: int
    m: int


def channel_map(gamma_db: float, n: int, k: int, m: int) -> ChannelPoint:
    """Map Eb/N0 in dB to bit/symbol error probabilities (rate-k/n BPSK)."""
    gamma = 10.0 ** (gamma_db / 10.0)
    p_bit = q_function(math.sqrt(2.0 * (k / n) * gamma))
    p_symbol = p_bit if m == 1 else 1.0 - (1.0 - p_bit) ** m
    return ChannelPoint(gamma_db, p_bit, p_symbol, 1 << m, m)


# -- bounded-minimum-distance decoding ------------------------------------


def sphere_distance_prob(n: int, q: int, h: int, t: int, p: float) -> float:
    """P_t^h: probability the received word is exactly distance t from a
    fixed codeword of weight h, when the zero word crosses a q-ary
    symmetric channel with symbol error probability p.

    Splits over a = number of support coordinates where the error equals
    the codeword symbol (probability p/(q-1) each); the off-support part
    must then contribute exactly t - h + a errors.
    """
    if not 0 <= h <= n or not 0 <= t <= n:
        raise ParamOutOfRangeError(f"need 0 <= t, h <= n; got t={t}, h={h}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfRangeError(f"need 0 <= p <= 1, got {p}")
    p1 = p / (q - 1)
    terms = []
    for a in range(max(0, h - t), h + 1):
        e = t - h + a
        if e < 0 or e > n - h:
            continue
        terms.append(binom(h, a) * p1**a * (1.0 - p1) ** (h - a)
                     * binom(n - h, e) * p**e * (1.0 - p) ** (n - h - e))
    return math.fsum(sorted(terms))


def _bm_sum(coeffs: dict[int, float], n: int, q: int, tau: int, p: float) -> float:
    terms = []
    for h, c in coeffs.items():
        if c:
            inner = math.fsum(sorted(sphere_distance_prob(n, q, h, t, p)
                                     for t in range(tau + 1)))
            terms.append(c * inner)
    return math.fsum(sorted(terms))


def cep_bm(weights: Sequence[int], n: int, d: int, p: float, q: int) -> float:
    """BM decoder codeword error probability (exact under the model)."""
    tau = (d - 1) // 2
    coeffs = {h: float(weights[h]) for h in range(d, n + 1)}
    return _bm_sum(coeffs, n, q, tau, p)


def sep_bm(weights: Sequence[int], n: int, d: int, p: float, q: int) -> float:
    """BM decoder symbol error probability: E(h) -> (h/n) E(h)."""
    tau = (d - 1) // 2
    coeffs = {h: float(Fraction(h * weights[h], n)) for h in range(d, n + 1)}
    return _bm_sum(coeffs, n, q, tau, p)


# -- maximum-likelihood bounds on the binary image --------------------------

# A per-weight bound term: F(gamma_db, h) -> probability-like float.
BoundTerm = Callable[[float, int], float]


def make_union_bound(rate: float) -> BoundTerm:
    """Union-bound term F(g, h) = Q(sqrt(2 h rate g)) for BPSK/AWGN."""

    def term(gamma_db: float, h: int) -> float:
        gamma = 10.0 ** (gamma_db / 10.0)
        return q_function(math.sqrt(2.0 * h * rate * gamma))

    return term


def cep_ml_union(avg_weights: Sequence[Fraction], n: int, m: int, k: int,
                 gamma_db: float, term: Optional[BoundTerm] = None) -> float:
    """Bound on ML codeword error probability: sum_h E~(h) F(g, h)."""
    if term is None:
        term = make_union_bound(k / n)
    terms = [float(avg_weights[h]) * term(gamma_db, h)
             for h in range(1, m * n + 1) if avg_weights[h]]
    return min(1.0, max(0.0, math.fsum(sorted(terms))))


def bep_ml_union(avg_weights: Sequence[Fraction], n: int, m: int, k: int,
                 gamma_db: float, term: Optional[BoundTerm] = None) -> float:
    """Bound on average bit error probability: E~(h) -> (h/(mn)) E~(h)."""
    if term is None:
        term = make_union_bound(k / n)
    terms = [float(Fraction(h, m * n) * avg_weights[h]) * term(gamma_db, h)
             for h in range(1, m * n + 1) if avg_weights[h]]
    return min(1.0, max(0.0, math.fsum(sorted(terms))))


# -- multiuser conditioning -------------------------------------------------


@dataclass(frozen=True)
class Condition:
    """Per-block constraint on codeword weight: free / zero / full, or at
    most a fraction of the block ('atmost')."""

    kind: str
    fraction: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("free", "zero", "full", "atmost"):
            raise ValueError(f"unknown condition kind {self.kind!r}")
        if (self.kind == "atmost") != (self.fraction is not None):
            raise ValueError("exactly the 'atmost' condition carries a fraction")
        if self.fraction is not None and not 0 <= self.fraction <= 1:
            raise ValueError(f"fraction {self.fraction} not in [0, 1]")

    def __str__(self) -> str:
        return f"atmost:{self.fraction}" if self.kind == "atmost" else self.kind


FREE = Condition("free")
ZERO = Condition("zero")
FULL = Condition("full")


def at_most(fraction: Union[Fraction, float, str, int]) -> Condition:
    return Condition("atmost", Fraction(fraction))


def parse_condition(token: str) -> Condition:
    token = token.strip().lower()
    if token in ("free", "zero", "full"):
        return Condition(token)
    if token.startswith("atmost:"):
        return at_most(token[len("atmost:"):])
    raise ValueError(f"bad condition token {token!r}; "
                     "expected free, zero, full, or atmost:<fraction>")


def _cap(cond: Condition, block_total: int) -> tuple[int, int]:
    """Inclusive weight range [lo, hi] a block exponent must satisfy."""
    if cond.kind == "free":
        return 0, block_total
    if cond.kind == "zero":
        return 0, 0
    if cond.kind == "full":
        return block_total, block_total
    return 0, math.floor(cond.fraction * block_total)


def conditional_pwgf(poly: SparsePoly, sizes: Sequence[int],
                     conditions: Sequence[Condition], *,
                     binary: bool = False, m: int = 1) -> SparsePoly:
    """Restrict a (symbol or averaged-binary) PWGF to the terms allowed by
    per-block conditions.

    Block i of `sizes` has total weight sizes[i] symbols, or m*sizes[i]
    bits when `binary` is set; 'full' means that total, 'atmost' caps the
    exponent at floor(fraction * total).  No renormalization happens.
    """
    if len(conditions) != poly.nvars or len(sizes) != poly.nvars:
        raise ConditionCountMismatchError(
            f"{poly.nvars} blocks but {len(conditions)} conditions / {len(sizes)} sizes")
    scale = m if binary else 1
    ranges = [_cap(c, scale * s) for c, s in zip(conditions, sizes)]
    return poly.filter_terms(
        lambda exps: all(lo <= e <= hi for e, (lo, hi) in zip(exps, ranges)))


def user_iowe(poly: SparsePoly, user: int) -> dict[tuple[int, int], Fraction]:
    """Collapse a PWGF to one block's input-output enumerator.

    Substitutes X_i -> Y for i != user and X_user -> X*Y; the result maps
    (w, h) = (block weight, total weight) to the enumerator coefficient.
    """
    if not 0 <= user < poly.nvars:
        raise ValueError(f"user index {user} out of range for {poly.nvars} blocks")
    out: dict[tuple[int, int], Fraction] = {}
    for exps, c in poly.terms.items():
        key = (exps[user], sum(exps))
        out[key] = out.get(key, 0) + c
    return out


def _check_user_conditions(sizes, user, conditions):
    if len(conditions) != len(sizes):
        raise ConditionCountMismatchError(
            f"{len(sizes)} blocks but {len(conditions)} conditions")
    if not 0 <= user < len(sizes):
        raise ValueError(f"user index {user} out of range for {len(sizes)} blocks")
    if conditions[user].kind in ("zero", "full"):
        raise ValueError("the user under study must have a free or atmost condition")


@functools.lru_cache(maxsize=256)
def _user_symbol_profile(params: MdsParams, sizes: tuple[int, ...], user: int,
                         conditions: tuple[Condition, ...]) -> dict[int, Fraction]:
    """O_h for one user: sum_w (w/n_user) O_user(w, h), conditioned."""
    poly = conditional_pwgf(pwgf(params, sizes), sizes, conditions)
    ow = user_iowe(poly, user)
    n_user = sizes[user]
    out: dict[int, Fraction] = {}
    for (w, h), c in ow.items():
        if w:
            out[h] = out.get(h, Fraction(0)) + Fraction(w, n_user) * c
    return out


@functools.lru_cache(maxsize=256)
def _user_bit_profile(params: MdsParams, sizes: tuple[int, ...], user: int,
                      conditions: tuple[Condition, ...]) -> dict[int, Fraction]:
    """O~_h for one user at bit level, conditioned.

    Pipeline: symbol PWGF -> per-variable substitution X_i -> F(Z_i) ->
    binary-level condition filter -> collapse to (user bits, total bits).
    The collapse is applied per block before expanding, which is exact:
    zero blocks contribute 1, full blocks keep only the top coefficient
    of F^n_i (namely (2^m-1)^-n_i at bit weight m*n_i), 'atmost' blocks
    truncate their own F power before merging, and every remaining block
    folds into the total-bits variable directly.
    """
    m = bits_per_symbol(params.q)
    sym = conditional_pwgf(pwgf(params, sizes), sizes, conditions)
    f = bit_substitution_poly(m)
    f_y = SparsePoly(2, {(0, e): c for (e,), c in f.terms.items()})
    f_xy = SparsePoly(2, {(e, e): c for (e,), c in f.terms.items()})
    one = SparsePoly.one(2)
    den = (1 << m) - 1

    y_powers: dict[int, SparsePoly] = {0: one}
    xy_powers: dict[int, SparsePoly] = {0: one}

    def power(cache, base, e):
        if e not in cache:
            top = max(cache)
            acc = cache[top]
            for i in range(top + 1, e + 1):
                acc = acc * base
                cache[i] = acc
        return cache[e]

    def truncated(poly2: SparsePoly, var: int, hi: int) -> SparsePoly:
        return poly2.filter_terms(lambda exps: exps[var] <= hi)

    total = SparsePoly.zero(2)
    for exps, c in sym.terms.items():
        prod = SparsePoly(2, {(0, 0): Fraction(c)})
        for i, w in enumerate(exps):
            cond = conditions[i]
            if i == user:
                factor = power(xy_powers, f_xy, w)
                if cond.kind == "atmost":
                    factor = truncated(factor, 0, math.floor(cond.fraction * m * sizes[i]))
            elif cond.kind == "full":
                # only the all-bits-set pattern of a full block survives
                factor = SparsePoly(2, {(0, m * sizes[i]): Fraction(1, den ** sizes[i])})
            else:
                factor = power(y_powers, f_y, w)
                if cond.kind == "atmost":
                    factor = truncated(factor, 1, math.floor(cond.fraction * m * sizes[i]))
            prod = prod * factor
        total = total + prod

    n_user_bits = m * sizes[user]
    out: dict[int, Fraction] = {}
    for (w_b, h_b), coeff in total.terms.items():
        if w_b:
            out[h_b] = out.get(h_b, Fraction(0)) + Fraction(w_b, n_user_bits) * coeff
    return out


def multiuser_sep(params: MdsParams, sizes: Sequence[int], user: int,
                  conditions: Sequence[Condition], p: float) -> float:
    """Symbol error probability of one user's block under BM decoding,
    restricted to codewords satisfying the per-block conditions."""
    sizes, conditions = tuple(sizes), tuple(conditions)
    _check_user_conditions(sizes, user, conditions)
    profile = _user_symbol_profile(params, sizes, user, conditions)
    tau = (params.d - 1) // 2
    coeffs = {h: float(c) for h, c in profile.items()}
    return _bm_sum(coeffs, params.n, params.q, tau, p)


def multiuser_bep(params: MdsParams, sizes: Sequence[int], user: int,
                  conditions: Sequence[Condition], gamma_db: float,
                  term: Optional[BoundTerm] = None) -> float:
    """Average bit error probability of one user's block (ML bound form),
    restricted to codewords satisfying the per-block conditions."""
    sizes, conditions = tuple(sizes), tuple(conditions)
    _check_user_conditions(sizes, user, conditions)
    if term is None:
        term = make_union_bound(params.k / params.n)
    profile = _user_bit_profile(params, sizes, user, conditions)
    terms = [float(c) * term(gamma_db, h) for h, c in profile.items() if c]
    return min(1.0, max(0.0, math.fsum(sorted(terms))))


# -- SNR sweeps ----------------------------------------------------------------


@dataclass(frozen=True)
class ErrorCurve:
    """A decoder error-probability curve over an SNR grid."""

    decoder: str                       # "bm" or "ml-union"
    metric: str                        # "cep", "sep", or "bep"
    user: Optional[int]                # block index, or None for code-level
    conditions: Optional[tuple[Condition, ...]]
    points: tuple[tuple[float, float], ...]  # (gamma_db, probability)


def snr_grid(start: float, stop: float, step: float) -> list[float]:
    count = int(round((stop - start) / step)) + 1
    return [start + i * step for i in range(count)]


def bm_curve(params: MdsParams, gammas: Sequence[float], metric: str) -> ErrorCurve:
    """Unconditional BM CEP or SEP over an SNR grid (closed-form weights)."""
    if metric not in ("cep", "sep"):
        raise ValueError(f"BM decoder computes cep or sep, not {metric!r}")
    m = bits_per_symbol(params.q)
    weights = weight_distribution(params)
    fn = cep_bm if metric == "cep" else sep_bm
    pts = []
    for g in gammas:
        ch = channel_map(g, params.n, params.k, m)
        pts.append((g, fn(weights, params.n, params.d, ch.p_symbol, params.q)))
    return ErrorCurve("bm", metric, None, None, tuple(pts))


def bep_curve(params: MdsParams, gammas: Sequence[float],
              term: Optional[BoundTerm] = None) -> ErrorCurve:
    """Unconditional average-binary BEP bound over an SNR grid."""
    m = bits_per_symbol(params.q)
    avg = avg_binary_wgf(params)
    pts = tuple((g, bep_ml_union(avg, params.n, m, params.k, g, term)) for g in gammas)
    return ErrorCurve("ml-union", "bep", None, None, pts)


def multiuser_curve(params: MdsParams, sizes: Sequence[int], user: int,
                    conditions: Sequence[Condition], gammas: Sequence[float],
                    metric: str, term: Optional[BoundTerm] = None) -> ErrorCurve:
    """Conditional per-user SEP (BM) or BEP (ML bound) over an SNR grid."""
    sizes, conditions = tuple(sizes), tuple(conditions)
    m = bits_per_symbol(params.q)
    pts = []
    for g in gammas:
        if metric == "sep":
            ch = channel_map(g, params.n, params.k, m)
            pts.append((g, multiuser_sep(params, sizes, user, conditions, ch.p_symbol)))
        elif metric == "bep":
            pts.append((g, multiuser_bep(params, sizes, user, conditions, g, term)))
        else:
            raise ValueError(f"per-user metrics are sep and bep, not {metric!r}")
    return ErrorCurve("bm" if metric == "sep" else "ml-union", metric, user,
                      conditions, tuple(pts))
