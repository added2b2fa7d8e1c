"""Sidon sets, Singer perfect difference sets and maximum Sidon subsets of [n].

Two collision rules are supported:

``diff``
    all differences ``a_j - a_i`` (i < j) are distinct.  This is the classical
    B2 condition and the one the chorded-cycle construction needs.
``strict``
    all sums ``a_i + a_j`` with i < j strictly are distinct.  Three-term
    progressions are allowed here, so maxima can only be larger.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import BudgetExceeded, InvalidInput
from .field import CubicExtension, FiniteField, factor_prime_power


class Convention(str, Enum):
    STRICT_SUMS = "strict"
    DISTINCT_DIFFERENCES = "diff"

    @classmethod
    def parse(cls, value) -> "Convention":
        if isinstance(value, cls):
            return value
        aliases = {
            "strict": cls.STRICT_SUMS,
            "strict-sums": cls.STRICT_SUMS,
            "diff": cls.DISTINCT_DIFFERENCES,
            "distinct-differences": cls.DISTINCT_DIFFERENCES,
        }
        try:
            return aliases[value]
        except KeyError:
            raise InvalidInput(f"unknown convention {value!r}") from None


DIFF = Convention.DISTINCT_DIFFERENCES
STRICT = Convention.STRICT_SUMS

MAX_EXACT_N = 48


@dataclass(frozen=True)
class DifferenceSet:
    q: int
    v: int
    elements: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"v": self.v, "q": self.q, "elements": list(self.elements)}


@dataclass(frozen=True)
class SidonSet:
    n: int
    elements: tuple[int, ...]
    convention: Convention = DIFF

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "witness": list(self.elements),
            "convention": self.convention.value,
        }


def is_sidon(elements, convention=DIFF) -> bool:
    convention = Convention.parse(convention)
    xs = list(elements)
    if len(set(xs)) != len(xs):
        raise InvalidInput("duplicate elements")
    seen = set()
    for a, b in combinations(sorted(xs), 2):
        key = b - a if convention is DIFF else a + b
        if key in seen:
            return False
        seen.add(key)
    return True


def is_perfect_difference_set(elements, v: int) -> bool:
    """Every nonzero residue mod v is ``x - y`` for exactly one ordered pair."""
    hits = [0] * v
    for x in elements:
        for y in elements:
            if x != y:
                hits[(x - y) % v] += 1
    return hits[0] == 0 and all(h == 1 for h in hits[1:])


def least_rotation(elements, v: int) -> tuple[int, ...]:
    """Lexicographically least sorted translate of a residue set mod v."""
    return min(tuple(sorted((x - t) % v for x in elements)) for t in range(v))


def singer_difference_set(q: int) -> DifferenceSet:
    """Singer's (q^2+q+1, q+1, 1) difference set for a prime power q.

    With theta a primitive element of GF(q^3) over GF(q), the exponents
    ``i mod v`` for which ``theta^i`` lies in span{1, theta} form the set.
    Output is normalised to its least rotation.
    """
    factor_prime_power(q)
    base = FiniteField.of(q)
    ext = CubicExtension(base)
    v = q * q + q + 1
    theta = (0, 1, 0)
    power = (1, 0, 0)
    picked = []
    for i in range(v):
        if power[2] == 0:
            picked.append(i)
        power = ext.mul(power, theta)
    if len(picked) != q + 1:
        raise AssertionError(f"Singer construction produced {len(picked)} residues for q={q}")
    return DifferenceSet(q=q, v=v, elements=least_rotation(picked, v))


def _branch_and_bound(n, convention, best, lower):
    """Lexicographically least maximum Sidon subset of [1, n].

    ``best[m]`` must already hold the exact maximum for every m < n, and
    ``lower`` must not exceed the true maximum for n.  Sequences are visited
    in lexicographic (preorder) order and the record only moves on a strict
    improvement, so the first set reaching the final size is the least one.
    """
    diff = convention is DIFF
    record: tuple[int, ...] = ()
    record_size = lower - 1
    chosen: list[int] = []

    def counting_cap(first):
        # k elements spanning at most n - first need C(k, 2) distinct differences
        span = n - first
        k = 1
        while (k + 1) * k // 2 <= span:
            k += 1
        return k

    def rec(last, used):
        nonlocal record, record_size
        size = len(chosen)
        if size > record_size:
            record_size = size
            record = tuple(chosen)
        cap = counting_cap(chosen[0]) if diff and chosen else None
        for x in range(last + 1, n + 1):
            # later picks lie in (x, n], an interval of length n - x
            bound = size + 1 + best[n - x]
            if cap is not None and cap < bound:
                bound = cap
            if bound <= record_size:
                continue
            keys = 0
            for a in chosen:
                bit = 1 << (x - a if diff else x + a)
                if (used | keys) & bit:
                    break
                keys |= bit
            else:
                chosen.append(x)
                rec(x, used | keys)
                chosen.pop()

    rec(0, 0)
    return record


def max_sidon_exact(n: int, convention=DIFF, max_n: int | None = None) -> SidonSet:
    """Maximum Sidon subset of [1, n], lexicographically least among maxima.

    Branch and bound over increasing sequences.  Extending a prefix by x is
    bounded by ``|prefix| + 1 + b(n - x)`` with b solved bottom-up for every
    smaller n; for ``diff`` the counting bound ``C(k, 2) <= n - a_1`` is
    applied as well.
    """
    convention = Convention.parse(convention)
    if max_n is None:
        env = os.environ.get("CYCLELENS_BUDGET")
        max_n = int(env) if env else MAX_EXACT_N
    if not isinstance(n, int) or n < 1:
        raise InvalidInput("n must be a positive integer")
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds the exact-search bound {max_n}")
    return _solve_upto(n, convention)[-1]


def max_sidon_table(n: int, convention=DIFF) -> list[int]:
    """``[b(1), ..., b(n)]``, the exact maxima for every prefix [1, m]."""
    return [s.size for s in _solve_upto(n, Convention.parse(convention))]


def _solve_upto(n, convention) -> list[SidonSet]:
    best = [0] * (n + 1)
    out = []
    for m in range(1, n + 1):
        witness = _branch_and_bound(m, convention, best, lower=best[m - 1])
        best[m] = len(witness)
        out.append(SidonSet(n=m, elements=witness, convention=convention))
    return out


def greedy_sidon(n: int, convention=DIFF) -> SidonSet:
    """Mian-Chowla greedy: scan 1..n, keep x whenever the set stays Sidon."""
    convention = Convention.parse(convention)
    if n < 1:
        raise InvalidInput("n must be positive")
    chosen: list[int] = []
    used: set[int] = set()
    for x in range(1, n + 1):
        keys = [x - a for a in chosen] if convention is DIFF else [x + a for a in chosen]
        if len(set(keys)) == len(keys) and not used.intersection(keys):
            chosen.append(x)
            used.update(keys)
    return SidonSet(n=n, elements=tuple(chosen), convention=convention)
