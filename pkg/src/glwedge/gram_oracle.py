"""Brute-force weight multiplicities of simple GL(n)-modules.

``dim L_n(lam)_mu`` is the rank over F_p of the contravariant form on the
divided-power PBW basis of the Verma weight space ``lam - mu``.  Over Q the
same Gram matrix has rank equal to the Kostka number, which gives an
independent check through tableau counting (:func:`kostka_number`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .hyperalgebra import VermaModule, enumerate_pbw
from .linalg import BudgetExceeded, IntMatrix, int_array
from .weights import (
    Weight,
    as_weight,
    check_odd_prime,
    dominance_leq,
    dominant_sort,
    dominant_weights_below,
    is_dominant,
    orbit,
    root_coordinates,
    shift,
)

DEFAULT_BUDGET = 2000

# optional persistent store for full simple characters, see glwedge.cache
_store = None


def set_character_store(store) -> None:
    """Route :func:`simple_character` through ``store`` (``get(lam, p)`` / ``put(lam, p, ch)``); None disables."""
    global _store
    _store = store


@dataclass
class Character:
    """Formal character: weight -> positive multiplicity."""

    n: int
    weight_mults: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for w, m in self.weight_mults.items():
            w = as_weight(w)
            if len(w) != self.n:
                raise ValueError(f"weight {w} does not have length {self.n}")
            if m:
                clean[w] = int(m)
        self.weight_mults = clean

    def __getitem__(self, w: Sequence[int]) -> int:
        return self.weight_mults.get(tuple(w), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.weight_mults)

    def __len__(self) -> int:
        return len(self.weight_mults)

    def items(self):
        return self.weight_mults.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.n == other.n and self.weight_mults == other.weight_mults

    def dim(self) -> int:
        return sum(self.weight_mults.values())

    def shifted(self, c: int) -> "Character":
        return Character(self.n, {shift(w, c): m for w, m in self.weight_mults.items()})

    def scaled(self, c: int) -> "Character":
        return Character(self.n, {w: c * m for w, m in self.weight_mults.items()})

    def __add__(self, other: "Character") -> "Character":
        _same_rank(self, other)
        out = dict(self.weight_mults)
        for w, m in other.weight_mults.items():
            out[w] = out.get(w, 0) + m
        return Character(self.n, out)

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scaled(-1)

    def dominant_part(self) -> dict[Weight, int]:
        return {w: m for w, m in self.weight_mults.items() if is_dominant(w)}

    def is_weyl_symmetric(self) -> bool:
        return all(self[dominant_sort(w)] == m for w, m in self.weight_mults.items())

    def to_json(self) -> dict:
        return {"n": self.n, "weights": [[list(w), m] for w, m in sorted(self.weight_mults.items(), reverse=True)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Character":
        return cls(int(data["n"]), {tuple(w): int(m) for w, m in data["weights"]})


def _same_rank(a: Character, b: Character) -> None:
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")


@lru_cache(maxsize=64)
def _verma(diffs: tuple[int, ...]) -> VermaModule:
    # pairings only see differences lam_i - lam_j, so normalise lam_n = 0
    return VermaModule(diffs)


def _normalise(lam: Weight) -> Weight:
    return shift(lam, -lam[-1])


def gram_matrix(lam: Sequence[int], mu: Sequence[int], budget: int = DEFAULT_BUDGET) -> IntMatrix:
    """Contravariant form on the divided-power PBW basis of weight ``mu``."""
    lam, mu = as_weight(lam), as_weight(mu)
    coords = root_coordinates(lam, mu)
    if coords is None or any(c < 0 for c in coords):
        return IntMatrix.empty()
    basis = enumerate_pbw(coords)
    if len(basis) > budget:
        raise BudgetExceeded(f"Gram matrix of size {len(basis)} exceeds budget {budget}")
    vm = _verma(_normalise(lam))
    memo: dict = {}
    rows = []
    for y in basis:
        memo.clear()
        rows.append([vm.pair(x, y, memo) for x in basis])
    # rows were built per column y; transpose to entry (x, y)
    entries = int_array(rows).T.copy()
    return IntMatrix(entries, row_labels=list(basis), col_labels=list(basis))


def dim_simple_weight_space(lam: Sequence[int], mu: Sequence[int], p: int, budget: int = DEFAULT_BUDGET) -> int:
    """``dim L_n(lam)_mu`` as the mod-p rank of the Gram matrix at mu itself."""
    lam, mu = as_weight(lam), as_weight(mu)
    p = check_odd_prime(p)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return gram_matrix(lam, mu, budget).rank_mod(p)


def dim_dominant(lam: Sequence[int], mu: Sequence[int], p: int, budget: int = DEFAULT_BUDGET) -> int:
    """``dim L_n(lam)_mu`` read off at the dominant conjugate of mu (memoised)."""
    lam, mu = as_weight(lam), dominant_sort(mu)
    c = lam[-1]
    return _dim_dominant_cached(shift(lam, -c), shift(mu, -c), p, budget)


@lru_cache(maxsize=None)
def _dim_dominant_cached(lam: Weight, mu: Weight, p: int, budget: int) -> int:
    if not dominance_leq(mu, lam):
        return 0
    return gram_matrix(lam, mu, budget).rank_mod(p)


def simple_character(lam: Sequence[int], p: int, budget: int = DEFAULT_BUDGET, lower: Sequence[int] | None = None) -> Character:
    """Character of ``L_n(lam)``; with ``lower`` only weights whose dominant conjugate is >= lower."""
    lam = as_weight(lam)
    p = check_odd_prime(p)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if _store is not None:
        full = _store.get(lam, p)
        if full is None:
            full = _compute_character(lam, p, budget, None)
            _store.put(lam, p, full)
        if lower is None:
            return full
        return Character(len(lam), {w: m for w, m in full.items() if dominance_leq(lower, dominant_sort(w))})
    return _compute_character(lam, p, budget, lower)


def _compute_character(lam: Weight, p: int, budget: int, lower) -> Character:
    mults: dict[Weight, int] = {}
    for mu in dominant_weights_below(lam, lower):
        d = dim_dominant(lam, mu, p, budget)
        if d:
            for w in orbit(mu):
                mults[w] = d
    return Character(len(lam), mults)


def weyl_weight_dim(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Characteristic-zero weight multiplicity: rank over Q of the Gram matrix."""
    return gram_matrix(lam, mu).rank_q()


def kostka_number(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Fills the entries 1, 2, ... one horizontal strip at a time.
    """
    shape = tuple(shape)
    content = tuple(content)
    if any(a < 0 for a in shape) or any(a < 0 for a in content) or sum(shape) != sum(content):
        return 0
    if not is_dominant(shape):
        raise ValueError("shape must be a partition")

    @lru_cache(maxsize=None)
    def count(inner: tuple[int, ...], k: int) -> int:
        if k == len(content):
            return int(inner == shape)
        return sum(count(nxt, k + 1) for nxt in _horizontal_strips(inner, shape, content[k]))

    return count((0,) * len(shape), 0)


def _horizontal_strips(inner: tuple[int, ...], outer: tuple[int, ...], size: int) -> Iterable[tuple[int, ...]]:
    rows = len(outer)

    def rec(r: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if r == rows:
            if left == 0:
                yield tuple(acc)
            return
        # a horizontal strip may not extend row r past the old row r-1
        cap = outer[r] if r == 0 else min(outer[r], inner[r - 1])
        for new in range(inner[r], cap + 1):
            if new - inner[r] > left:
                break
            acc.append(new)
            yield from rec(r + 1, left - (new - inner[r]), acc)
            acc.pop()

    yield from rec(0, size, [])


def _check_level_weight(lam: Weight) -> None:
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if len(lam) < 3 or lam[-1] != 0 or lam[-2] != 0:
        raise ValueError("need n >= 3 and lam_{n-1} = lam_n = 0")


def slice_dim_11x(lam: Sequence[int], mu: Sequence[int], p: int, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the E_{n-1,n}-kernel inside ``L(lam)_mu`` for mu in the (1,1)-level.

    Computed as ``dim L_mu - dim L_omega`` with ``omega = (mu_1, ..., mu_{n-2}, 2, 0)``.
    """
    lam, mu = as_weight(lam), as_weight(mu)
    p = check_odd_prime(p)
    _check_level_weight(lam)
    if len(mu) != len(lam) or mu[-2] != 1 or mu[-1] != 1:
        raise ValueError(f"{mu} is not in the (1,1)-level")
    omega = mu[:-2] + (2, 0)
    return dim_dominant(lam, mu, p, budget) - dim_dominant(lam, omega, p, budget)


def level_character(lam: Sequence[int], i: int, j: int, p: int, budget: int = DEFAULT_BUDGET) -> dict[Weight, int]:
    """Weights (and dims) of ``L(lam)`` whose last two entries are ``(i, j)``."""
    lam = as_weight(lam)
    _check_level_weight(lam)
    if i < 0 or j < 0:
        return {}
    ch = simple_character(lam, p, budget)
    return {w: m for w, m in ch.items() if w[-2] == i and w[-1] == j}


def level_dim(lam: Sequence[int], i: int, j: int, p: int, budget: int = DEFAULT_BUDGET) -> int:
    """Total dimension of the (i,j)-level of ``L(lam)``."""
    return sum(level_character(lam, i, j, p, budget).values())
