"""Exhaustive comparisons between the rank formulas and the brute-force oracles.

Each ``check_*`` function walks all dominant ``lam`` with
``lam_{n-1} = lam_n = 0``, ``3 <= n <= n_max`` and ``|lam| <= deg_max`` and
returns one :class:`Check` per comparison made.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from .gram_oracle import dim_simple_weight_space
from .rank_formulas import closed_form_s_minus_1, hypotheses, multiplicity_main, ranks, t_values, x_rank
from .tensor_oracle import key_theorem_conditions, level_multiplicity, tensor_multiplicity
from .weights import alpha, distinguished, is_dominant, last_nonzero, iter_tail_zero_weights, partitions, sub, unit

DEFAULT_PRIMES = (3, 5, 7)
COUNTEREXAMPLE = ((4, 0, 0, 0, 0), (2, 0, 0, 0, 0), 7)


@dataclass
class Check:
    kind: str
    lam: tuple
    p: int
    detail: dict
    expected: int
    got: int

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def to_json(self) -> dict:
        d = asdict(self)
        d["lam"] = list(self.lam)
        d["ok"] = self.ok
        return d


def sweep_weights(n_max: int, deg_max: int, n_min: int = 3) -> Iterator[tuple[int, ...]]:
    for n in range(n_min, n_max + 1):
        yield from iter_tail_zero_weights(n, deg_max)


def check_rank_formulas(n_max=5, deg_max=6, primes: Sequence[int] = DEFAULT_PRIMES) -> list[Check]:
    """x, m and w from the block matrices against Gram ranks at the same weights."""
    out = []
    for lam in sweep_weights(n_max, deg_max):
        n, s = len(lam), last_nonzero(lam)
        for p in primes:
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    mu = sub(lam, alpha(n, i, j))
                    out.append(Check("x", lam, p, {"i": i, "j": j}, dim_simple_weight_space(lam, mu, p), x_rank(i, j, lam, p)))
            for i in range(1, s):
                d = distinguished(lam, i)
                _, m, w = ranks(lam, p, i)
                out.append(Check("m", lam, p, {"i": i}, dim_simple_weight_space(lam, d.mu_up_i, p), m))
                out.append(Check("w", lam, p, {"i": i}, dim_simple_weight_space(lam, d.omega_up_i, p), w))
    return out


def check_closed_form(n_max=5, deg_max=6, primes: Sequence[int] = DEFAULT_PRIMES) -> list[Check]:
    out = []
    for lam in sweep_weights(n_max, deg_max):
        s = last_nonzero(lam)
        if s < 2:
            continue
        for p in primes:
            t = t_values(lam, p, s - 1)[s - 1]
            out.append(Check("closed-form", lam, p, {"i": s - 1}, closed_form_s_minus_1(lam, p), t))
    return out


def main_theorem_instances(n_max=5, deg_max=6, primes: Sequence[int] = DEFAULT_PRIMES) -> Iterator[tuple]:
    for lam in sweep_weights(n_max, deg_max):
        s = last_nonzero(lam)
        for p in primes:
            for i in range(1, s):
                if all(hypotheses(lam, i, p).values()):
                    yield lam, i, p


def check_main_theorem(n_max=5, deg_max=6, primes: Sequence[int] = DEFAULT_PRIMES) -> list[Check]:
    """Predicted multiplicity of ``L(lam - eps_i - eps_s)`` against character peeling.

    When ``lam - eps_i - eps_s`` is not dominant there is no such composition
    factor, so the oracle value is 0.
    """
    out = []
    for lam, i, p in main_theorem_instances(n_max, deg_max, primes):
        n, s = len(lam), last_nonzero(lam)
        mu = sub(sub(lam, unit(n, i)), unit(n, s))
        expected = tensor_multiplicity(lam, mu, p) if is_dominant(mu) else 0
        out.append(Check("main", lam, p, {"i": i, "mu": list(mu)}, expected, multiplicity_main(lam, i, p).multiplicity))
    return out


def key_theorem_instances(n_max=5, deg_max=6, primes: Sequence[int] = DEFAULT_PRIMES) -> Iterator[tuple]:
    for lam in sweep_weights(n_max, deg_max):
        n, d = len(lam), sum(lam) - 2
        if d < 0:
            continue
        for part in partitions(d, n - 3):
            mu = part + (0,) * (n - len(part))
            for p in primes:
                if key_theorem_conditions(lam, mu, p):
                    yield lam, mu, p


def check_key_theorem(n_max=5, deg_max=6, primes: Sequence[int] = DEFAULT_PRIMES) -> list[Check]:
    """Tensor-product multiplicity against the multiplicity in the E_{n-1,n}-kernel of the (1,1)-level."""
    return [
        Check("key", lam, p, {"mu": list(mu)}, tensor_multiplicity(lam, mu, p), level_multiplicity(lam, mu, p))
        for lam, mu, p in key_theorem_instances(n_max, deg_max, primes)
    ]


def counterexample_values(lam=COUNTEREXAMPLE[0], mu=COUNTEREXAMPLE[1], p=COUNTEREXAMPLE[2]) -> dict:
    return {
        "lambda": list(lam),
        "mu": list(mu),
        "p": p,
        "tensor": tensor_multiplicity(lam, mu, p),
        "level": level_multiplicity(lam, mu, p, slice_only=False),
        "slice": level_multiplicity(lam, mu, p, slice_only=True),
    }


def summarize(checks: Iterable[Check]) -> dict:
    checks = list(checks)
    bad = [c for c in checks if not c.ok]
    return {"checked": len(checks), "passed": len(checks) - len(bad), "failed": [c.to_json() for c in bad]}
