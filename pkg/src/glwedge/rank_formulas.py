"""Recursive block matrices whose mod-p ranks give weight multiplicities.

For ``lam`` with ``lam_{n-1} = lam_n = 0`` and last nonzero entry at s, the
matrices ``X_u^{i,j}(k)``, ``Y_u^{i,j}(k)``, ``M^i`` and ``W^i`` are built
recursively from the entries of lam alone.  Their ranks mod p are the
dimensions of ``L(lam)`` at ``lam - alpha(i,j)``, ``mu^i`` and ``omega^i``,
and feed the downward recursion for ``t_s^i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .linalg import IntMatrix, rank_mod_p
from .weights import Weight, as_weight, check_odd_prime, check_tail_zero, sub, unit


def _scalar(x: int) -> np.ndarray:
    return np.array([[int(x)]], dtype=object)


def _check_xy(i: int, j: int, u: int, k: int, lam: Weight) -> None:
    n = len(lam)
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if not i <= u <= j - 1:
        raise ValueError(f"need i <= u <= j-1, got u={u}")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range")


def u_star(i: int, j: int, u: int) -> int:
    return j - 1 - u + i


@lru_cache(maxsize=None)
def _x(i: int, j: int, u: int, k: int, lam: Weight) -> np.ndarray:
    if u == j - 1:
        return _scalar(lam[k - 1] - lam[j - 1])
    us = u_star(i, j, u)
    x1 = _x(i, j, u + 1, k, lam)
    y1 = _y(i, j, u + 1, us, lam)
    s = x1 + y1
    return np.block([[x1, y1], [s, (lam[us - 1] - lam[j - 1]) * s]])


@lru_cache(maxsize=None)
def _y(i: int, j: int, u: int, k: int, lam: Weight) -> np.ndarray:
    if u == j - 1:
        return _scalar(-(lam[k - 1] - lam[j - 1]))
    us = u_star(i, j, u)
    y1 = _y(i, j, u + 1, k, lam)
    corner = -(lam[k - 1] - lam[j - 1]) * (_x(i, j, u + 1, i, lam) + _y(i, j, u + 1, us, lam))
    zero = np.zeros(y1.shape, dtype=object)
    return np.block([[y1, -y1], [zero, corner]])


def build_X(i: int, j: int, u: int, k: int, lam: Sequence[int]) -> IntMatrix:
    lam = as_weight(lam)
    _check_xy(i, j, u, k, lam)
    if k < i:
        raise ValueError("need i <= k")
    return IntMatrix(_x(i, j, u, k, lam).copy())


def build_Y(i: int, j: int, u: int, k: int, lam: Sequence[int]) -> IntMatrix:
    lam = as_weight(lam)
    _check_xy(i, j, u, k, lam)
    return IntMatrix(_y(i, j, u, k, lam).copy())


def _blocks(i: int, lam: Weight) -> tuple[int, int, np.ndarray, np.ndarray]:
    s = check_tail_zero(lam)
    if not 1 <= i <= s - 1:
        raise ValueError(f"need 1 <= i <= s-1 = {s - 1}, got i={i}")
    x = _x(i, s + 1, i + 1, i, lam)
    y = _y(i, s + 1, i + 1, s, lam)
    return s, lam[s - 1], x, y


def build_M(i: int, lam: Sequence[int]) -> IntMatrix:
    lam = as_weight(lam)
    _, ls, x, y = _blocks(i, lam)
    xy = x + y
    return IntMatrix(
        np.block(
            [
                [ls * x, y, (ls - 1) * y],
                [y, ls * x, (ls - 1) * y],
                [ls * xy, ls * xy, ls * (ls - 1) * xy],
            ]
        )
    )


def build_W(i: int, lam: Sequence[int]) -> IntMatrix:
    lam = as_weight(lam)
    _, ls, x, y = _blocks(i, lam)
    xy = x + y
    half = ls * (ls - 1) // 2  # product of consecutive integers, always even
    return IntMatrix(np.block([[ls * x + y, (ls - 1) * y], [ls * xy, half * xy]]))


def x_rank(i: int, j: int, lam: Sequence[int], p: int) -> int:
    """``rank(X_i^{i,j}(i) mod p)`` = ``dim L(lam)_{lam - alpha(i,j)}``."""
    lam = as_weight(lam)
    return rank_mod_p(_x(i, j, i, i, lam), p)


def ranks(lam: Sequence[int], p: int, i: int) -> tuple[dict[tuple[int, int], int], int, int]:
    """``x_{i,r}`` for ``i < r <= s-1`` together with ``m_s^i`` and ``w_s^i``."""
    lam = as_weight(lam)
    p = check_odd_prime(p)
    s = check_tail_zero(lam)
    if not 1 <= i <= s - 1:
        raise ValueError(f"need 1 <= i <= s-1 = {s - 1}, got i={i}")
    xs = {(i, r): x_rank(i, r, lam, p) for r in range(i + 1, s)}
    return xs, build_M(i, lam).rank_mod(p), build_W(i, lam).rank_mod(p)


def branching_x_rank(a: int, r: int, lam: Weight, p: int) -> int:
    """``dim L_{n-2}(nu_r)`` at ``nu_r - alpha(a, r)`` where ``nu_r = lam - eps_r - eps_s``.

    This is the multiplicity that the t-recursion subtracts: the weight of
    the GL(n-2) factor indexed by r is ``lam - eps_r - eps_s`` (truncated),
    not lam itself.
    """
    n = len(lam)
    s = check_tail_zero(lam)
    nu = sub(sub(lam, unit(n, r)), unit(n, s))
    return rank_mod_p(_x(a, r, a, a, nu), p)


def t_values(lam: Sequence[int], p: int, i: int, x_source: str = "shifted") -> dict[int, int]:
    """``t_s^r`` for ``i <= r <= s-1`` by downward recursion from r = s-1.

    ``x_source="lambda"`` uses ``x_{a,r} = rank X_a^{a,r}(a)`` built from lam
    verbatim; ``"shifted"`` (default) builds it from ``lam - eps_r - eps_s``,
    see :func:`branching_x_rank`.
    """
    lam = as_weight(lam)
    p = check_odd_prime(p)
    s = check_tail_zero(lam)
    if not 1 <= i <= s - 1:
        raise ValueError(f"need 1 <= i <= s-1 = {s - 1}, got i={i}")
    if x_source not in ("shifted", "lambda"):
        raise ValueError(f"unknown x_source {x_source!r}")
    t: dict[int, int] = {}
    for a in range(s - 1, i - 1, -1):
        diff = build_M(a, lam).rank_mod(p) - build_W(a, lam).rank_mod(p)
        for r in range(a + 1, s):
            x = x_rank(a, r, lam, p) if x_source == "lambda" else branching_x_rank(a, r, lam, p)
            diff -= t[r] * x
        t[a] = diff
    return dict(sorted(t.items()))


def closed_form_s_minus_1(lam: Sequence[int], p: int) -> int:
    """Multiplicity for ``i = s-1``: 0 if p divides lam_s or lam_{s-1}+1, else 1."""
    lam = as_weight(lam)
    p = check_odd_prime(p)
    s = check_tail_zero(lam)
    if s < 2:
        raise ValueError("need s >= 2")
    ls, ls1 = lam[s - 1], lam[s - 2]
    return 0 if ls % p == 0 or (ls1 + 1) % p == 0 else 1


@dataclass
class MultiplicityReport:
    lam: Weight
    i: int
    s: int
    p: int
    x_ranks: dict[tuple[int, int], int]
    m: int
    w: int
    t: dict[int, int]
    hypotheses: dict[str, bool] = field(default_factory=dict)
    multiplicity: int | None = None

    @property
    def applicable(self) -> bool:
        return all(self.hypotheses.values())

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "p": self.p,
            "i": self.i,
            "s": self.s,
            "x": {f"{a},{b}": v for (a, b), v in sorted(self.x_ranks.items())},
            "m": self.m,
            "w": self.w,
            "t": {str(r): v for r, v in sorted(self.t.items())},
            "hypotheses": dict(self.hypotheses),
            "multiplicity": self.multiplicity,
            "applicable": self.applicable,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiplicityReport":
        return cls(
            lam=tuple(data["lambda"]),
            i=data["i"],
            s=data["s"],
            p=data["p"],
            x_ranks={tuple(int(v) for v in k.split(",")): x for k, x in data["x"].items()},
            m=data["m"],
            w=data["w"],
            t={int(k): v for k, v in data["t"].items()},
            hypotheses=dict(data["hypotheses"]),
            multiplicity=data["multiplicity"],
        )


def hypotheses(lam: Weight, i: int, p: int) -> dict[str, bool]:
    n = len(lam)
    s = check_tail_zero(lam)
    return {
        "p>2": p > 2,
        "s<n-1": s < n - 1,
        "lam_s=1 or s<n-2": lam[s - 1] == 1 or s < n - 2,
        "s-lam_s!=n mod p": (s - lam[s - 1] - n) % p != 0,
        "i-lam_i!=n mod p": (i - lam[i - 1] - n) % p != 0,
    }


def multiplicity_main(lam: Sequence[int], i: int, p: int) -> MultiplicityReport:
    """Predicted ``[L(lam) (x) wedge^2 V* : L(lam - eps_i - eps_s)]`` with its hypothesis checklist."""
    lam = as_weight(lam)
    p = check_odd_prime(p)
    s = check_tail_zero(lam)
    xs, m, w = ranks(lam, p, i)
    t = t_values(lam, p, i)
    report = MultiplicityReport(lam, i, s, p, xs, m, w, t, hypotheses(lam, i, p))
    if report.applicable:
        report.multiplicity = t[i]
    return report
