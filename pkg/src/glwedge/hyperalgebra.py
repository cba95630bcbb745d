"""Exact computation in the enveloping algebra of gl(n) and its divided-power form.

Two routes are provided:

* :func:`normal_order` straightens an arbitrary word in the generators
  ``E_ij^(r)``, ``F_ij^(r)``, ``H_i^(r)`` into F.H.E normal order over Q, using
  only the defining commutator ``[y_ab, y_cd] = d_bc y_ad - d_da y_cb``.
* :class:`VermaModule` acts with single root vectors on PBW monomials applied
  to a highest weight vector, which is all that the contravariant pairing
  needs.  This is the fast path used by the Gram oracle.

Divided powers are handled as ``X^(r) = X^r / r!``; integrality of pairings is
checked at the end.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, NamedTuple, Sequence

from .linalg import BudgetExceeded

Root = tuple[int, int]

DEFAULT_STEP_BUDGET = 2_000_000


def root_key(root: Root) -> tuple[int, int]:
    """``(i,j) < (a,b)`` iff ``j < b`` or ``j == b and i < a``."""
    return root[1], root[0]


def positive_roots(n: int) -> list[Root]:
    return sorted(((i, j) for j in range(1, n + 1) for i in range(1, j)), key=root_key)


class Gen(NamedTuple):
    """One generator ``E_ij^(r)``, ``F_ij^(r)`` or ``H_i^(r)`` (for H, j is unused)."""

    kind: str
    i: int
    j: int = 0
    r: int = 1

    def __repr__(self) -> str:
        idx = f"{self.i}" if self.kind == "H" else f"{self.i}{self.j}"
        return f"{self.kind}{idx}" + (f"^({self.r})" if self.r != 1 else "")


def E(i: int, j: int, r: int = 1) -> Gen:
    if not i < j:
        raise ValueError("E_ij needs i < j")
    return Gen("E", i, j, r)


def F(i: int, j: int, r: int = 1) -> Gen:
    if not i < j:
        raise ValueError("F_ij needs i < j")
    return Gen("F", i, j, r)


def H(i: int, r: int = 1) -> Gen:
    return Gen("H", i, 0, r)


@dataclass(frozen=True)
class PBWMonomial:
    """Ordered product of divided powers ``F_root^(r)`` (or, transposed, E's)."""

    factors: tuple[tuple[Root, int], ...] = ()

    def __post_init__(self) -> None:
        keys = [root_key(rt) for rt, _ in self.factors]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("PBW factors must be strictly increasing in root order")
        if any(r < 1 for _, r in self.factors):
            raise ValueError("exponents must be positive")

    @classmethod
    def from_exponents(cls, exps: dict[Root, int]) -> "PBWMonomial":
        return cls(tuple((rt, r) for rt, r in sorted(exps.items(), key=lambda kv: root_key(kv[0])) if r))

    def weight(self, n: int) -> tuple[int, ...]:
        """Weight ``sum r (eps_i - eps_j)`` of the underlying E-monomial."""
        w = [0] * n
        for (i, j), r in self.factors:
            w[i - 1] += r
            w[j - 1] -= r
        return tuple(w)

    def ordinary(self) -> tuple[Root, ...]:
        """Factors expanded with repetition, e.g. F12^(2) -> ((1,2),(1,2))."""
        return tuple(rt for rt, r in self.factors for _ in range(r))

    def factorial(self) -> int:
        return prod(factorial(r) for _, r in self.factors)

    def as_f_word(self) -> tuple[Gen, ...]:
        return tuple(Gen("F", i, j, r) for (i, j), r in self.factors)

    def as_e_word(self) -> tuple[Gen, ...]:
        return tuple(Gen("E", i, j, r) for (i, j), r in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __repr__(self) -> str:
        if not self.factors:
            return "1"
        return "".join(f"F{i}{j}" + (f"^({r})" if r > 1 else "") for (i, j), r in self.factors)


def transpose(m: PBWMonomial) -> tuple[Gen, ...]:
    """Anti-automorphism image: ``F_x1 ... F_xk -> E_xk ... E_x1``."""
    return tuple(Gen("E", i, j, r) for (i, j), r in reversed(m.factors))


def enumerate_pbw(target: Sequence[int]) -> list[PBWMonomial]:
    """All PBW monomials of weight ``sum target[k] alpha_{k+1}``."""
    if any(a < 0 for a in target):
        raise ValueError("target coefficients must be nonnegative")
    n = len(target) + 1
    roots = positive_roots(n)
    out: list[PBWMonomial] = []
    remaining = list(target)

    def rec(idx: int, chosen: list[tuple[Root, int]]) -> None:
        if idx == len(roots):
            if not any(remaining):
                out.append(PBWMonomial(tuple(chosen)))
            return
        i, j = roots[idx]
        span = range(i - 1, j - 1)
        # roots later in the order cannot touch coefficients left of the
        # smallest remaining start, so prune on the covered prefix
        top = min(remaining[k] for k in span)
        for r in range(top, -1, -1):
            for k in span:
                remaining[k] -= r
            if r:
                chosen.append(((i, j), r))
            rec(idx + 1, chosen)
            if r:
                chosen.pop()
            for k in span:
                remaining[k] += r

    rec(0, [])
    return out


# ---------------------------------------------------------------------------
# general straightening over Q

Y = tuple[int, int]  # y_ab, the matrix unit


def _y_order(y: Y) -> tuple[int, int, int]:
    a, b = y
    if a > b:
        return (0, a, b)  # F_ba, root (b, a): key (a, b)
    if a == b:
        return (1, a, 0)
    return (2, b, a)


def _bracket(x: Y, y: Y) -> list[tuple[int, Y]]:
    (a, b), (c, d) = x, y
    out = []
    if b == c:
        out.append((1, (a, d)))
    if d == a:
        out.append((-1, (c, b)))
    return out


def _expand_gen(g: Gen) -> dict[tuple[Y, ...], Fraction]:
    if g.r < 0:
        raise ValueError("negative divided power")
    if g.kind == "E":
        y = (g.i, g.j)
    elif g.kind == "F":
        y = (g.j, g.i)
    elif g.kind == "H":
        # binom(H, r) = H (H-1) ... (H-r+1) / r!
        poly = {0: Fraction(1)}
        for t in range(g.r):
            nxt: dict[int, Fraction] = defaultdict(Fraction)
            for k, c in poly.items():
                nxt[k + 1] += c
                nxt[k] -= t * c
            poly = nxt
        y = (g.i, g.i)
        return {(y,) * k: c / factorial(g.r) for k, c in poly.items() if c}
    else:
        raise ValueError(f"unknown generator kind {g.kind!r}")
    return {(y,) * g.r: Fraction(1, factorial(g.r))}


class HyperElement:
    """Element of U(gl_n) over Q, stored in F.H.E normal form.

    Keys are ``(F-part, H-exponents, E-part)``; F and E parts are
    :class:`PBWMonomial` (divided powers), the H part holds ordinary powers.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms: dict[tuple[PBWMonomial, tuple[int, ...], PBWMonomial], Fraction] = {
            k: Fraction(v) for k, v in (terms or {}).items() if v
        }

    @classmethod
    def from_normal_words(cls, n: int, words: dict[tuple[Y, ...], Fraction]) -> "HyperElement":
        terms: dict = defaultdict(Fraction)
        for w, c in words.items():
            f_exp: dict[Root, int] = defaultdict(int)
            e_exp: dict[Root, int] = defaultdict(int)
            h = [0] * n
            for a, b in w:
                if a > b:
                    f_exp[(b, a)] += 1
                elif a < b:
                    e_exp[(a, b)] += 1
                else:
                    h[a - 1] += 1
            scale = prod(factorial(r) for r in f_exp.values()) * prod(factorial(r) for r in e_exp.values())
            key = (PBWMonomial.from_exponents(f_exp), tuple(h), PBWMonomial.from_exponents(e_exp))
            terms[key] += c * scale
        return cls(n, terms)

    def __add__(self, other: "HyperElement") -> "HyperElement":
        out = defaultdict(Fraction, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return HyperElement(self.n, out)

    def __neg__(self) -> "HyperElement":
        return HyperElement(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "HyperElement") -> "HyperElement":
        return self + (-other)

    def __rmul__(self, c) -> "HyperElement":
        return HyperElement(self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HyperElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (f, h, e), c in sorted(self.terms.items(), key=repr):
            hs = "".join(f"H{a + 1}" + (f"^{k}" if k > 1 else "") for a, k in enumerate(h) if k)
            es = repr(e).replace("F", "E") if e.factors else ""
            fs = repr(f) if f.factors else ""
            parts.append(f"{c}*{fs}{hs}{es}" if (fs or hs or es) else f"{c}")
        return " + ".join(parts)

    def net_weights(self) -> set[tuple[int, ...]]:
        """Weights ``wt(E-part) - wt(F-part)`` occurring among the terms."""
        return {tuple(x - y for x, y in zip(e.weight(self.n), f.weight(self.n))) for f, _, e in self.terms}

    def vacuum_coefficient(self, lam: Sequence[int]) -> Fraction:
        """Coefficient of v+ in ``self . v+`` for a highest weight vector of weight lam."""
        total = Fraction(0)
        for (f, h, e), c in self.terms.items():
            if f.factors or e.factors:
                continue
            total += c * prod(Fraction(lam[a]) ** k for a, k in enumerate(h))
        return total


def normal_order(word: Iterable[Gen], n: int | None = None, max_steps: int = DEFAULT_STEP_BUDGET) -> HyperElement:
    """Rewrite a product of generators into F.H.E normal order over Q."""
    word = list(word)
    if n is None:
        n = max([max(g.i, g.j) for g in word], default=1)
    for g in word:
        if not (1 <= g.i <= n and (g.kind == "H" or 1 <= g.j <= n)):
            raise ValueError(f"generator {g!r} out of range for n={n}")
    pending: dict[tuple[Y, ...], Fraction] = {(): Fraction(1)}
    for g in word:
        nxt: dict[tuple[Y, ...], Fraction] = defaultdict(Fraction)
        for w, c in pending.items():
            for w2, c2 in _expand_gen(g).items():
                nxt[w + w2] += c * c2
        pending = {w: c for w, c in nxt.items() if c}

    done: dict[tuple[Y, ...], Fraction] = defaultdict(Fraction)
    steps = 0
    while pending:
        w, c = pending.popitem()
        if not c:
            continue
        keys = [_y_order(y) for y in w]
        k = next((t for t in range(len(w) - 1) if keys[t] > keys[t + 1]), None)
        if k is None:
            done[w] += c
            continue
        steps += 1
        if steps > max_steps:
            raise BudgetExceeded(f"normal ordering exceeded {max_steps} rewrite steps")
        x, y = w[k], w[k + 1]
        swapped = w[:k] + (y, x) + w[k + 2 :]
        pending[swapped] = pending.get(swapped, Fraction(0)) + c
        for s, z in _bracket(x, y):
            shorter = w[:k] + (z,) + w[k + 2 :]
            pending[shorter] = pending.get(shorter, Fraction(0)) + s * c
    return HyperElement.from_normal_words(n, {w: c for w, c in done.items() if c})


def pairing_by_normal_order(e_word: Sequence[Gen], f_word: Sequence[Gen], lam: Sequence[int]) -> int:
    """``E F v+ = n v+`` computed by full straightening of the product E.F."""
    elt = normal_order(list(e_word) + list(f_word), n=len(lam))
    value = elt.vacuum_coefficient(lam)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral pairing {value}")
    return int(value)


# ---------------------------------------------------------------------------
# Verma module action (fast path)

Mono = tuple[Root, ...]  # ordinary PBW monomial in F's, sorted by root_key, repeats allowed


def _classify(a: int, b: int) -> tuple[str, int, int]:
    if a < b:
        return "E", a, b
    if a > b:
        return "F", b, a
    return "H", a, a


@lru_cache(maxsize=None)
def _mul_F(beta: Root, mono: Mono) -> tuple[tuple[Mono, int], ...]:
    """Normal form of ``F_beta . F_mono`` inside U^-, integer coefficients."""
    if not mono or root_key(beta) <= root_key(mono[0]):
        return (((beta,) + mono, 1),)
    gamma, rest = mono[0], mono[1:]
    out: dict[Mono, int] = defaultdict(int)
    # F_beta F_gamma = F_gamma F_beta + [F_beta, F_gamma]
    for m, c in _mul_F(beta, rest):
        for m2, c2 in _mul_F(gamma, m):
            out[m2] += c * c2
    (b1, b2), (g1, g2) = beta, gamma
    for s, (x, y) in _bracket((b2, b1), (g2, g1)):
        kind, i, j = _classify(x, y)
        assert kind == "F"
        for m, c in _mul_F((i, j), rest):
            out[m] += s * c
    return tuple((m, c) for m, c in out.items() if c)


class VermaModule:
    """Highest weight module ``U^- v+`` for an arbitrary integral weight lam.

    Vectors are dicts ``{ordinary F-monomial: int}``.
    """

    def __init__(self, lam: Sequence[int]):
        self.lam = tuple(int(a) for a in lam)
        self.n = len(self.lam)
        self._act_cache: dict[tuple[Root, Mono], tuple[tuple[Mono, int], ...]] = {}

    def weight_of(self, mono: Mono) -> list[int]:
        w = list(self.lam)
        for i, j in mono:
            w[i - 1] -= 1
            w[j - 1] += 1
        return w

    def apply_F(self, beta: Root, vec: dict[Mono, int]) -> dict[Mono, int]:
        out: dict[Mono, int] = defaultdict(int)
        for m, c in vec.items():
            for m2, c2 in _mul_F(beta, m):
                out[m2] += c * c2
        return {m: c for m, c in out.items() if c}

    def apply_E(self, alpha: Root, vec: dict[Mono, int]) -> dict[Mono, int]:
        out: dict[Mono, int] = defaultdict(int)
        for m, c in vec.items():
            for m2, c2 in self._act_E(alpha, m):
                out[m2] += c * c2
        return {m: c for m, c in out.items() if c}

    def _act_E(self, alpha: Root, mono: Mono) -> tuple[tuple[Mono, int], ...]:
        key = (alpha, mono)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        if not mono:
            res: tuple = ()
        else:
            gamma, rest = mono[0], mono[1:]
            out: dict[Mono, int] = defaultdict(int)
            # E F_gamma rest = F_gamma (E rest) + [E, F_gamma] rest
            for m, c in self._act_E(alpha, rest):
                for m2, c2 in _mul_F(gamma, m):
                    out[m2] += c * c2
            (a, b), (g1, g2) = alpha, gamma
            wt = None
            for s, (x, y) in _bracket((a, b), (g2, g1)):
                kind, i, j = _classify(x, y)
                if kind == "H":
                    if wt is None:
                        wt = self.weight_of(rest)
                    if wt[i - 1]:
                        out[rest] += s * wt[i - 1]
                elif kind == "E":
                    for m, c in self._act_E((i, j), rest):
                        out[m] += s * c
                else:
                    for m, c in _mul_F((i, j), rest):
                        out[m] += s * c
            res = tuple((m, c) for m, c in out.items() if c)
        self._act_cache[key] = res
        return res

    def vector(self, f_word: Sequence[Gen]) -> dict[Mono, Fraction]:
        """``f_word . v+`` (divided powers allowed) as a vector with rational coefficients."""
        vec: dict[Mono, Fraction] = {(): Fraction(1)}
        for g in reversed(list(f_word)):
            if g.kind != "F":
                raise ValueError("expected an F-word")
            for _ in range(g.r):
                vec = self.apply_F((g.i, g.j), vec)
            vec = {m: Fraction(c, factorial(g.r)) for m, c in vec.items()}
        return vec

    def pair_ordinary(self, x: Mono, y: Mono, memo: dict | None = None) -> int:
        """``<F_x v+, F_y v+>`` for ordinary (non-divided) monomials."""
        vec: dict[Mono, int] = {y: 1}
        for k, rt in enumerate(x):
            if memo is not None and x[: k + 1] in memo:
                vec = memo[x[: k + 1]]
                continue
            vec = self.apply_E(rt, vec)
            if memo is not None:
                memo[x[: k + 1]] = vec
            if not vec:
                return 0
        return vec.get((), 0)

    def pair(self, x: PBWMonomial, y: PBWMonomial, memo: dict | None = None) -> int:
        """Contravariant form ``<F^(x) v+, F^(y) v+>`` on divided PBW monomials."""
        raw = self.pair_ordinary(x.ordinary(), y.ordinary(), memo)
        den = x.factorial() * y.factorial()
        q, r = divmod(raw, den)
        if r:
            raise ArithmeticError(f"non-integral pairing {raw}/{den} for {x}, {y}")
        return q


def pairing(e_word: Sequence[Gen] | PBWMonomial, f_word: Sequence[Gen] | PBWMonomial, lam: Sequence[int]) -> int:
    """Integer n with ``E_word F_word v+ = n v+`` for v+ of highest weight lam.

    ``e_word`` is read as an operator product (rightmost factor acts first).
    A :class:`PBWMonomial` passed as ``e_word`` is read with E's in place of F's.
    """
    if isinstance(e_word, PBWMonomial):
        e_word = e_word.as_e_word()
    if isinstance(f_word, PBWMonomial):
        f_word = f_word.as_f_word()
    vm = VermaModule(lam)
    n = vm.n
    for g in list(e_word) + list(f_word):
        if not (1 <= g.i < g.j <= n):
            raise ValueError(f"generator {g!r} out of range for n={n}")
    vec = vm.vector(f_word)
    for g in reversed(list(e_word)):
        if g.kind != "E":
            raise ValueError("expected an E-word")
        for _ in range(g.r):
            vec = _apply_E_frac(vm, (g.i, g.j), vec)
        vec = {m: c / factorial(g.r) for m, c in vec.items()}
    value = vec.get((), Fraction(0))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral pairing {value}")
    return int(value)


def _apply_E_frac(vm: VermaModule, alpha: Root, vec: dict[Mono, Fraction]) -> dict[Mono, Fraction]:
    out: dict[Mono, Fraction] = defaultdict(Fraction)
    for m, c in vec.items():
        for m2, c2 in vm._act_E(alpha, m):
            out[m2] += c * c2
    return {m: c for m, c in out.items() if c}
