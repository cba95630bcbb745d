"""Composition multiplicities from characters alone.

Simple characters are triangular for the dominance order, so any module
character can be peeled into simple characters from the top down.  This
gives ``[L(lam) (x) wedge^2 V* : L(mu)]`` without any of the rank formulas,
and, on GL(n-2), the multiplicities of the level subspaces of ``L(lam)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .gram_oracle import DEFAULT_BUDGET, Character, dim_dominant, simple_character
from .weights import (
    Weight,
    add,
    as_weight,
    check_odd_prime,
    cont,
    dominance_leq,
    dominant_sort,
    dominant_weights_below,
    is_dominant,
    shift,
    sub,
    unit,
)


class NotAModuleCharacter(ValueError):
    """Peeling produced a negative multiplicity."""


@dataclass
class Decomposition:
    input: Character
    parts: dict[Weight, int] = field(default_factory=dict)


def wedge2_dual_character(n: int) -> Character:
    if n < 2:
        raise ValueError("wedge^2 V* needs n >= 2")
    mults = {}
    for a, b in combinations(range(1, n + 1), 2):
        mults[sub(sub((0,) * n, unit(n, a)), unit(n, b))] = 1
    return Character(n, mults)


def multiply_characters(a: Character, b: Character) -> Character:
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    out: dict[Weight, int] = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = add(w1, w2)
            out[w] = out.get(w, 0) + m1 * m2
    return Character(a.n, out)


def _peel_order(weights) -> list[Weight]:
    # partial sums decrease along any chain nu > nu', so lexicographic order
    # on partial sums (descending) is a linear extension of dominance;
    # ties are broken reverse-lexicographically on the weight itself
    def key(w):
        run, sums = 0, []
        for a in w:
            run += a
            sums.append(run)
        return tuple(sums), w

    return sorted(weights, key=key, reverse=True)


def decompose(ch: Character, p: int, budget: int = DEFAULT_BUDGET, lower: Sequence[int] | None = None) -> Decomposition:
    """Write ``ch`` as a sum of simple characters.

    With ``lower`` set, only dominant weights ``>= lower`` are peeled (enough to
    get the multiplicity of any simple with highest weight in that range);
    otherwise the full reconstruction is asserted.
    """
    p = check_odd_prime(p)
    remainder = {w: m for w, m in ch.dominant_part().items() if lower is None or dominance_leq(lower, w)}
    parts: dict[Weight, int] = {}
    while remainder:
        nu = _peel_order(remainder)[0]
        c = remainder[nu]
        if c < 0:
            raise NotAModuleCharacter(f"negative multiplicity {c} at {nu}")
        parts[nu] = c
        for w, m in simple_character(nu, p, budget, lower=lower).dominant_part().items():
            remainder[w] = remainder.get(w, 0) - c * m
        remainder = {w: m for w, m in remainder.items() if m}
    dec = Decomposition(ch, parts)
    if lower is None:
        rebuilt = Character(ch.n, {})
        for nu, c in parts.items():
            rebuilt = rebuilt + simple_character(nu, p, budget).scaled(c)
        if rebuilt != ch:
            raise NotAModuleCharacter("reconstruction failed: input is not a module character")
    return dec


def tensor_character_dominant(lam: Sequence[int], p: int, lower: Sequence[int], budget: int = DEFAULT_BUDGET) -> Character:
    """Dominant part of ``ch L(lam) * ch wedge^2 V*`` at weights ``>= lower``."""
    lam = as_weight(lam)
    n = len(lam)
    top = sub(sub(lam, unit(n, n - 1)), unit(n, n))
    shifts = list(wedge2_dual_character(n))
    mults = {}
    for nu in dominant_weights_below(top, lower):
        total = 0
        for w in shifts:
            kappa = dominant_sort(sub(nu, w))
            if dominance_leq(kappa, lam):
                total += dim_dominant(lam, kappa, p, budget)
        if total:
            mults[nu] = total
    return Character(n, mults)


def tensor_multiplicity(lam: Sequence[int], mu: Sequence[int], p: int, budget: int = DEFAULT_BUDGET) -> int:
    """``[L(lam) (x) wedge^2 V* : L(mu)]`` by character peeling."""
    lam, mu = as_weight(lam), as_weight(mu)
    p = check_odd_prime(p)
    if len(lam) != len(mu):
        raise ValueError("weights of different lengths")
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("lam and mu must be dominant")
    if sum(mu) != sum(lam) - 2:
        return 0
    # determinant twist: work with lam_n = 0 so the product is polynomial up to a shift by 2
    c = lam[-1]
    lam0, mu0 = shift(lam, -c), shift(mu, -c)
    ch = tensor_character_dominant(lam0, p, mu0, budget)
    ch2 = ch.shifted(2)
    dec = decompose(ch2, p, budget, lower=shift(mu0, 2))
    return dec.parts.get(shift(mu0, 2), 0)


def truncate(w: Sequence[int]) -> Weight:
    """Drop the last two entries."""
    return tuple(w[:-2])


def level_gl_character(lam: Sequence[int], p: int, slice_only: bool, budget: int = DEFAULT_BUDGET) -> Character:
    """GL(n-2) character of the (1,1)-level of ``L(lam)`` (or of its E_{n-1,n}-kernel)."""
    lam = as_weight(lam)
    n = len(lam)
    if n < 3 or lam[-1] != 0 or lam[-2] != 0 or not is_dominant(lam):
        raise ValueError("need dominant lam with lam_{n-1} = lam_n = 0")
    full = simple_character(lam, p, budget)
    mults = {}
    for w, m in full.items():
        if w[-2] == 1 and w[-1] == 1:
            if slice_only:
                m -= full[w[:-2] + (2, 0)]
            if m:
                mults[truncate(w)] = m
    return Character(n - 2, mults)


def level_multiplicity(lam: Sequence[int], mu: Sequence[int], p: int, slice_only: bool = True, budget: int = DEFAULT_BUDGET) -> int:
    """``[L(lam)^{(1,1)x} : L_{n-2}(mu truncated)]`` (or the full (1,1)-level if not slice_only)."""
    lam, mu = as_weight(lam), as_weight(mu)
    p = check_odd_prime(p)
    ch = level_gl_character(lam, p, slice_only, budget)
    target = truncate(mu)
    if not is_dominant(target) or not ch.weight_mults:
        return 0
    return decompose(ch, p, budget).parts.get(target, 0)


def key_theorem_conditions(lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    """Degree, vanishing and non-linkage conditions relating the tensor product to the (1,1)x slice."""
    lam, mu = as_weight(lam), as_weight(mu)
    n = len(lam)
    if n < 3 or not (is_dominant(lam) and is_dominant(mu)):
        return False
    if sum(mu) != sum(lam) - 2:
        return False
    if not (mu[n - 3] == 0 and mu[n - 1] == 0 and lam[n - 1] == 0 and lam[n - 2] == 0):
        return False
    for i in range(1, n):
        nu = sub(sub(lam, unit(n, i)), unit(n, n))
        if is_dominant(nu) and cont(nu, p) == cont(mu, p):
            return False
    return True
