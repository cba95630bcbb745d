"""Weight combinatorics for GL(n).

Weights are plain tuples of integers ``(a_1, ..., a_n)``.  Indices in the
public API are 1-based, matching the usual ``epsilon_i`` / ``alpha_i``
conventions; internally everything is converted to 0-based offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

Weight = tuple[int, ...]


def as_weight(w: Sequence[int]) -> Weight:
    t = tuple(int(a) for a in w)
    if len(t) < 1:
        raise ValueError("a weight needs at least one entry")
    return t


def check_odd_prime(p: int) -> int:
    p = int(p)
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"{p} is not an odd prime")
    return p


def unit(n: int, i: int) -> Weight:
    """``epsilon_i`` in X(n)."""
    return tuple(1 if a == i - 1 else 0 for a in range(n))


def add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def shift(w: Sequence[int], c: int) -> Weight:
    """Twist by the c-th power of the determinant."""
    return tuple(a + c for a in w)


def degree(w: Sequence[int]) -> int:
    return sum(w)


def alpha(n: int, a: int, b: int) -> Weight:
    """``alpha(a, b) = alpha_a + ... + alpha_{b-1} = epsilon_a - epsilon_b``."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"alpha({a},{b}) undefined for n={n}")
    return sub(unit(n, a), unit(n, b)) if a < b else (0,) * n


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[k] >= w[k + 1] for k in range(len(w) - 1))


def root_coordinates(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, ...] | None:
    """Coefficients ``(c_1, ..., c_{n-1})`` with ``lam - mu = sum c_k alpha_k``.

    Returns None when ``lam - mu`` is not in the root lattice (different
    degree).  Coefficients may be negative.
    """
    if len(lam) != len(mu):
        raise ValueError("weights of different lengths")
    if sum(lam) != sum(mu):
        return None
    coords = []
    run = 0
    for x, y in zip(lam[:-1], mu[:-1]):
        run += x - y
        coords.append(run)
    return tuple(coords)


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu <= lam``, i.e. ``lam - mu`` is a sum of simple roots."""
    coords = root_coordinates(lam, mu)
    return coords is not None and all(c >= 0 for c in coords)


@dataclass(frozen=True)
class LinkageClass:
    """Residue contents ``cont_alpha`` of a weight, alpha in Z/p."""

    p: int
    residue_contents: tuple[int, ...]

    def __getitem__(self, residue: int) -> int:
        return self.residue_contents[residue % self.p]

    def as_dict(self) -> dict[int, int]:
        return {a: c for a, c in enumerate(self.residue_contents)}


def cont(lam: Sequence[int], p: int) -> LinkageClass:
    """Signed count of cells ``(a, b)`` with ``b - a = alpha mod p``."""
    p = check_odd_prime(p)
    counts = [0] * p
    for a, la in enumerate(lam, start=1):
        if la > 0:
            for b in range(1, la + 1):
                counts[(b - a) % p] += 1
        else:
            # cells la < b <= 0 count negatively
            for b in range(la + 1, 1):
                counts[(b - a) % p] -= 1
    return LinkageClass(p, tuple(counts))


def linked(lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    if len(lam) != len(mu):
        raise ValueError("weights of different lengths")
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("linkage is only defined for dominant weights")
    return cont(lam, p) == cont(mu, p)


def removable_indices(lam: Sequence[int]) -> list[int]:
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    n = len(lam)
    return [j for j in range(1, n + 1) if j == n or lam[j - 1] > lam[j]]


def pair_key(pair: tuple[int, int]) -> tuple[int, int]:
    """Sort key for index pairs: ``(i,j) < (a,b)`` iff ``j < b`` or ``j == b and i < a``."""
    return pair[1], pair[0]


def removable_pairs(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs ``i < j`` with j lam-removable and i (lam - eps_j)-removable."""
    pairs = []
    for j in removable_indices(lam):
        rest = sub(lam, unit(len(lam), j))
        pairs.extend((i, j) for i in removable_indices(rest) if i < j)
    return sorted(pairs, key=pair_key)


def last_nonzero(lam: Sequence[int]) -> int:
    """1-based index of the last nonzero entry (0 if lam is zero)."""
    for k in range(len(lam), 0, -1):
        if lam[k - 1] != 0:
            return k
    return 0


@dataclass(frozen=True)
class DistinguishedWeights:
    lam: Weight
    i: int
    s: int
    mu_i: Weight
    omega_i: Weight
    mu_up_i: Weight
    omega_up_i: Weight


def check_tail_zero(lam: Sequence[int]) -> int:
    """Validate ``lam`` dominant, nonzero, last two entries zero; return s."""
    n = len(lam)
    if n < 3:
        raise ValueError("need n >= 3")
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    if lam[-1] != 0 or lam[-2] != 0:
        raise ValueError("the last two entries of lambda must vanish")
    s = last_nonzero(lam)
    if s == 0:
        raise ValueError("lambda must be nonzero")
    return s


def distinguished(lam: Sequence[int], i: int) -> DistinguishedWeights:
    lam = as_weight(lam)
    n = len(lam)
    s = check_tail_zero(lam)
    if not 1 <= i <= s - 1:
        raise ValueError(f"need 1 <= i <= s-1 = {s - 1}, got i={i}")
    base = sub(lam, alpha(n, i, n - 1))
    up = sub(lam, alpha(n, i, s + 1))
    return DistinguishedWeights(
        lam=lam,
        i=i,
        s=s,
        mu_i=sub(base, alpha(n, s, n)),
        omega_i=sub(base, alpha(n, s, n - 1)),
        mu_up_i=sub(up, alpha(n, s, s + 2)),
        omega_up_i=sub(up, alpha(n, s, s + 1)),
    )


def dominant_sort(w: Sequence[int]) -> Weight:
    return tuple(sorted(w, reverse=True))


def orbit(w: Sequence[int]) -> set[Weight]:
    """Distinct permutations of ``w`` (its Weyl group orbit)."""
    return set(permutations(w))


def dominant_weights_below(lam: Sequence[int], lower: Sequence[int] | None = None) -> list[Weight]:
    """All dominant ``mu <= lam``, optionally restricted to ``mu >= lower``.

    Output is a linear extension of the dominance order, highest first.
    """
    lam = as_weight(lam)
    n = len(lam)
    total = sum(lam)
    out: list[Weight] = []

    def rec(prefix: list[int], run_lam: int, run_mu: int, cap: int) -> None:
        k = len(prefix)
        if k == n - 1:
            last = total - run_mu
            if last <= cap and last >= lam[-1]:
                out.append(tuple(prefix) + (last,))
            return
        run_lam += lam[k]
        remaining = n - k
        for a in range(min(cap, run_lam - run_mu), lam[-1] - 1, -1):
            # remaining entries are <= a, so they must be able to absorb the rest
            if run_mu + a * remaining < total:
                break
            prefix.append(a)
            rec(prefix, run_lam, run_mu + a, a)
            prefix.pop()

    rec([], 0, 0, lam[0])
    if lower is not None:
        out = [mu for mu in out if dominance_leq(lower, mu)]
    return out


def iter_tail_zero_weights(n: int, max_degree: int, min_degree: int = 1) -> Iterator[Weight]:
    """Dominant ``lam`` with ``lam_{n-1} = lam_n = 0`` and ``min_degree <= |lam| <= max_degree``."""
    for d in range(min_degree, max_degree + 1):
        for part in partitions(d, n - 2):
            yield part + (0,) * (n - len(part))


def partitions(d: int, max_parts: int, max_part: int | None = None) -> Iterator[Weight]:
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, max_parts - 1, first):
            yield (first,) + rest
