"""Exact integer matrices and their ranks over F_p and Q."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured resource budget."""


def int_array(rows: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    """Object-dtype 2d array of Python ints (no overflow)."""
    a = np.array(rows, dtype=object)
    if a.ndim != 2:
        a = a.reshape((len(rows), -1)) if len(rows) else np.empty((0, 0), dtype=object)
    return a


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination on residues."""
    if a.size == 0:
        return 0
    m = (np.asarray(a, dtype=object) % p).astype(np.int64)
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        below = np.nonzero(m[r + 1 :, c])[0] + r + 1
        if below.size:
            m[below] = (m[below] - np.outer(m[below, c], m[r])) % p
        r += 1
        if r == rows:
            break
    return r


def rank_rational(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    dm = DomainMatrix.from_list([[int(x) for x in row] for row in a], ZZ)
    return dm.convert_to(QQ).rank()


@dataclass
class IntMatrix:
    """Dense exact integer matrix with optional row/column labels."""

    entries: np.ndarray
    row_labels: list[Any] = field(default_factory=list)
    col_labels: list[Any] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.entries = int_array(self.entries) if not isinstance(self.entries, np.ndarray) else self.entries
        if self.entries.ndim != 2:
            raise ValueError("entries must be two dimensional")

    @classmethod
    def empty(cls) -> "IntMatrix":
        return cls(np.empty((0, 0), dtype=object))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rank_mod(self, p: int) -> int:
        return rank_mod_p(self.entries, p)

    def rank_q(self) -> int:
        return rank_rational(self.entries)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and bool(np.all(self.entries == self.entries.T))

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMatrix):
            other = other.entries
        other = np.asarray(other, dtype=object)
        return self.shape == other.shape and bool(np.all(self.entries == other))
